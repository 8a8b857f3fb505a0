//! Structural properties checked exhaustively on small words and by
//! random sampling on larger ones.

use palper::bwt::{bwt, is_perfectly_clustered};
use palper::classes::{is_rich, is_standard_sturmian, is_trapezoidal};
use palper::periodicity::{
    conjugates, is_pal_periodicity, is_palindrome, is_pp, is_symmetric, periods, reverse,
    symmetric_word_periods,
};
use palper::search::{canonical_form, pp_factor_count};
use palper::sequences::{builtin, rudin_shapiro_at, thue_morse_at};
use palper::word::all_words;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[test]
fn symmetric_iff_conjugate_of_reverse() {
    for (k, max) in [(2u8, 14usize), (3, 9)] {
        for n in 1..=max {
            for x in all_words(k, n) {
                let r = reverse(&x);
                let conj = (0..n).any(|i| x[i..].iter().chain(&x[..i]).eq(r.iter()));
                assert_eq!(is_symmetric(&x).is_some(), conj, "{x:?}");
            }
        }
    }
}

#[test]
fn powers_of_symmetric_words_are_symmetric() {
    for n in 1..=8 {
        for x in all_words(3, n).filter(|x| is_symmetric(x).is_some()) {
            for e in 2..=4 {
                assert!(is_symmetric(&x.repeat(e)).is_some(), "{x:?}^{e}");
            }
        }
    }
}

#[test]
fn fine_and_wilf() {
    for n in 1..=14 {
        for x in all_words(2, n) {
            let ps = periods(&x).unwrap();
            for &p in &ps {
                for &q in &ps {
                    if p + q - gcd(p, q) <= n {
                        assert!(ps.contains(&gcd(p, q)), "{x:?} {p} {q}");
                    }
                }
            }
        }
    }
}

#[test]
fn pp_iff_some_symmetric_word_period() {
    for n in 1..=9 {
        for x in all_words(3, n) {
            assert_eq!(is_pp(&x), !symmetric_word_periods(&x).unwrap().is_empty());
        }
    }
}

#[test]
fn witnesses_certify_and_boolean_form_agrees() {
    for n in 1..=12 {
        for x in all_words(2, n) {
            let wit = is_pal_periodicity(&x);
            assert_eq!(wit.is_some(), is_pp(&x));
            if let Some(t) = wit {
                assert!(t.certifies(&x) && !t.p.is_empty(), "{x:?}");
            }
        }
    }
}

#[test]
fn random_palindrome_pairs_generate_pp_words() {
    // Pick palindromes p, s and a length >= |ps|; the prefix of (ps)^ω must
    // be accepted and any reported witness must certify it.
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let pal = |rng: &mut rand::rngs::StdRng, k: u8| -> Vec<u8> {
        let half: Vec<u8> = (0..rng.gen_range(0..6)).map(|_| rng.gen_range(0..k)).collect();
        let mut p = half.clone();
        if rng.gen_bool(0.5) {
            p.push(rng.gen_range(0..k));
        }
        p.extend(half.iter().rev());
        p
    };
    for _ in 0..10_000 {
        let k = rng.gen_range(2..=4);
        let (p, s) = (pal(&mut rng, k), pal(&mut rng, k));
        if p.is_empty() && s.is_empty() {
            continue;
        }
        let root: Vec<u8> = p.iter().chain(&s).copied().collect();
        let len = root.len() + rng.gen_range(0..3 * root.len());
        let x: Vec<u8> = root.iter().copied().cycle().take(len).collect();
        let wit = is_pal_periodicity(&x).expect("prefix of (ps)^ω");
        assert!(wit.certifies(&x));
        assert!(wit.period() <= root.len());
    }
}

#[test]
fn trapezoidal_words_are_rich() {
    for n in 1..=16 {
        for x in all_words(2, n) {
            if is_trapezoidal(&x).unwrap() {
                assert!(is_rich(&x), "{x:?}");
            }
        }
    }
}

#[test]
fn bwt_is_invariant_under_conjugacy() {
    for n in 1..=9 {
        for x in all_words(3, n) {
            let b = bwt(&x).unwrap();
            for c in conjugates(&x).unwrap() {
                assert_eq!(bwt(&c).unwrap(), b);
            }
        }
    }
}

#[test]
fn binary_clustered_iff_conjugate_of_standard_power() {
    // Standard words and their powers, up to length 12.
    let mut standard_powers = std::collections::HashSet::new();
    for n in 2..=12 {
        for x in all_words(2, n) {
            if is_standard_sturmian(&x).unwrap() {
                let mut y = x.clone();
                while y.len() <= 12 {
                    for c in conjugates(&y).unwrap() {
                        standard_powers.insert(c.into_symbols());
                    }
                    y.extend_from_slice(&x);
                }
            }
        }
    }
    for n in 2..=12 {
        for x in all_words(2, n) {
            if !x.contains(&0) || !x.contains(&1) {
                assert!(is_perfectly_clustered(&x, 2).unwrap());
                continue;
            }
            assert_eq!(
                is_perfectly_clustered(&x, 2).unwrap(),
                standard_powers.contains(&x),
                "{x:?}"
            );
        }
    }
}

#[test]
fn prefixes_are_stable() {
    for name in palper::sequences::BUILTIN_NAMES {
        let spec = builtin(name).unwrap();
        let long = spec.prefix(3000).unwrap();
        for len in [0, 1, 7, 100, 1234] {
            assert_eq!(spec.prefix(len).unwrap()[..], long[..len], "{name}");
        }
    }
}

#[test]
fn period_doubling_avoids_00_and_1111() {
    let x = builtin("period_doubling").unwrap().prefix(1 << 14).unwrap();
    assert!(!x.windows(2).any(|f| f == [0, 0]));
    assert!(!x.windows(4).any(|f| f == [1, 1, 1, 1]));
}

#[test]
fn thue_morse_and_rudin_shapiro_match_direct_rules() {
    let tm = builtin("thue_morse").unwrap().prefix(1 << 14).unwrap();
    let rs = builtin("rudin_shapiro").unwrap().prefix(1 << 14).unwrap();
    for i in 0..1u64 << 14 {
        assert_eq!(tm[i as usize], (i.count_ones() % 2) as u8);
        assert_eq!(tm[i as usize], thue_morse_at(i));
        // Count overlapping 11 blocks by scanning bits.
        let blocks = (0..63).filter(|b| (i >> b) & 3 == 3).count();
        assert_eq!(rs[i as usize], (blocks % 2) as u8);
        assert_eq!(rs[i as usize], rudin_shapiro_at(i));
    }
}

#[test]
fn symmetric_words_are_palindromic_periodicities() {
    for n in 1..=8 {
        for x in all_words(3, n) {
            if is_symmetric(&x).is_some() {
                assert!(is_pp(&x));
            }
            if is_palindrome(&x) {
                assert_eq!(is_symmetric(&x), Some(0));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn extension_never_lowers_pp_count(v in prop::collection::vec(0u8..4, 0..24), a in 0u8..4) {
        let mut ext = v.clone();
        ext.push(a);
        prop_assert!(pp_factor_count(&v) <= pp_factor_count(&ext));
    }

    #[test]
    fn canonical_form_is_idempotent_and_count_preserving(v in prop::collection::vec(0u8..5, 0..20)) {
        let c = canonical_form(&v);
        prop_assert_eq!(canonical_form(&c), c.clone());
        prop_assert_eq!(pp_factor_count(&c), pp_factor_count(&v));
    }

    #[test]
    fn pp_is_invariant_under_reversal_and_renaming(v in prop::collection::vec(0u8..3, 1..30)) {
        let renamed: Vec<u8> = v.iter().map(|&c| 2 - c).collect();
        prop_assert_eq!(is_pp(&v), is_pp(&renamed));
        prop_assert_eq!(is_symmetric(&v).is_some(), is_symmetric(&reverse(&v)).is_some());
    }
}
