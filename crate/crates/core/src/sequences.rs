//! Prefix generators for the infinite words studied here: morphic fixed
//! points, morphic images of fixed points, direct index rules and
//! eventually periodic words.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Word, MAX_ALPHABET};

/// A letter-to-word substitution on the digit alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Morphism {
    images: Vec<Option<Word>>,
}

impl Morphism {
    /// Builds a morphism from `(letter, image)` pairs. Letters without an
    /// image are left undefined.
    pub fn new<I>(rules: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u8, Word)>,
    {
        let mut images = vec![None; MAX_ALPHABET as usize];
        for (letter, image) in rules {
            if letter >= MAX_ALPHABET {
                return Err(Error::SymbolOutOfRange(letter));
            }
            images[letter as usize] = Some(image);
        }
        Ok(Morphism { images })
    }

    /// Shorthand for morphisms written as digit strings, `"01"` meaning the
    /// image of the letter at that index.
    pub fn from_images(images: &[&str]) -> Result<Self> {
        Morphism::new(
            images
                .iter()
                .enumerate()
                .map(|(i, s)| Ok((i as u8, s.parse::<Word>()?)))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn identity(alphabet: u8) -> Self {
        let mut images = vec![None; MAX_ALPHABET as usize];
        for a in 0..alphabet.min(MAX_ALPHABET) {
            images[a as usize] = Some(Word::from_vec_unchecked(vec![a]));
        }
        Morphism { images }
    }

    pub fn image(&self, letter: u8) -> Option<&Word> {
        self.images.get(letter as usize).and_then(Option::as_ref)
    }

    pub fn apply(&self, w: &[u8]) -> Result<Word> {
        let mut out = Vec::with_capacity(w.len() * 2);
        for &c in w {
            let img = self.image(c).ok_or(Error::MissingImage(c))?;
            out.extend_from_slice(img);
        }
        Ok(Word::from_vec_unchecked(out))
    }
}

pub fn apply_morphism(m: &Morphism, w: &[u8]) -> Result<Word> {
    m.apply(w)
}

/// Recipe for an infinite word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SequenceSpec {
    /// The fixed point of `morphism` starting with `seed`.
    FixedPoint { morphism: Morphism, seed: u8 },
    /// `outer` applied letterwise to another infinite word.
    Image { outer: Morphism, inner: Box<SequenceSpec> },
    /// Parity of the number of (overlapping) `11` blocks in base 2.
    RudinShapiro,
    /// Limit of `p_0 = 0`, `p_{k+1} = p_k 0 reverse(complement(p_k))`.
    Paperfolding,
    /// `preperiod · period^ω`.
    EventuallyPeriodic { preperiod: Word, period: Word },
}

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 8] = [
    "thue_morse",
    "period_doubling",
    "rudin_shapiro",
    "paperfolding",
    "fibonacci",
    "tribonacci",
    "tau_f",
    "phi_f",
];

pub fn builtin(name: &str) -> Result<SequenceSpec> {
    let fixed = |images: &[&str], seed: u8| -> Result<SequenceSpec> {
        Ok(SequenceSpec::FixedPoint {
            morphism: Morphism::from_images(images)?,
            seed,
        })
    };
    match name {
        "thue_morse" => fixed(&["01", "10"], 0),
        "period_doubling" => fixed(&["11", "10"], 1),
        "rudin_shapiro" => Ok(SequenceSpec::RudinShapiro),
        "paperfolding" => Ok(SequenceSpec::Paperfolding),
        "fibonacci" => fixed(&["01", "0"], 0),
        "tribonacci" => fixed(&["01", "02", "0"], 0),
        "tau_f" => Ok(SequenceSpec::Image {
            outer: Morphism::from_images(&["0", "12"])?,
            inner: Box::new(builtin("fibonacci")?),
        }),
        "phi_f" => Ok(SequenceSpec::Image {
            outer: Morphism::from_images(&["0", "01101"])?,
            inner: Box::new(builtin("fibonacci")?),
        }),
        _ => Err(Error::UnknownSequence {
            name: name.to_string(),
            valid: BUILTIN_NAMES.join(", "),
        }),
    }
}

impl SequenceSpec {
    pub fn eventually_periodic(preperiod: Word, period: Word) -> Self {
        SequenceSpec::EventuallyPeriodic { preperiod, period }
    }

    /// The first `len` symbols of the infinite word.
    pub fn prefix(&self, len: usize) -> Result<Word> {
        let symbols = match self {
            SequenceSpec::FixedPoint { morphism, seed } => fixed_point_prefix(morphism, *seed, len)?,
            SequenceSpec::Image { outer, inner } => image_prefix(outer, inner, len)?,
            SequenceSpec::RudinShapiro => (0..len as u64).map(rudin_shapiro_at).collect(),
            SequenceSpec::Paperfolding => paperfolding_prefix(len),
            SequenceSpec::EventuallyPeriodic { preperiod, period } => {
                if period.is_empty() {
                    return Err(Error::InvalidSpec("empty period word".into()));
                }
                preperiod
                    .iter()
                    .chain(period.iter().cycle())
                    .take(len)
                    .copied()
                    .collect()
            }
        };
        Ok(Word::from_vec_unchecked(symbols))
    }

    /// Symbols `i..i+n` of the infinite word.
    pub fn factor(&self, i: usize, n: usize) -> Result<Word> {
        if n == 0 {
            return Ok(Word::empty());
        }
        let p = self.prefix(i + n)?;
        Ok(Word::from_vec_unchecked(p[i..].to_vec()))
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::FixedPoint { seed, .. } => write!(f, "fixed point from {seed}"),
            SequenceSpec::Image { inner, .. } => write!(f, "morphic image of ({inner})"),
            SequenceSpec::RudinShapiro => f.write_str("Rudin-Shapiro"),
            SequenceSpec::Paperfolding => f.write_str("regular paperfolding"),
            SequenceSpec::EventuallyPeriodic { preperiod, period } => {
                write!(f, "{preperiod}({period})^ω")
            }
        }
    }
}

pub fn prefix(spec: &SequenceSpec, len: usize) -> Result<Word> {
    spec.prefix(len)
}

pub fn factor(spec: &SequenceSpec, i: usize, n: usize) -> Result<Word> {
    spec.factor(i, n)
}

fn fixed_point_prefix(m: &Morphism, seed: u8, len: usize) -> Result<Vec<u8>> {
    let seed_image = m.image(seed).ok_or(Error::MissingImage(seed))?;
    if seed_image.first() != Some(&seed) {
        return Err(Error::InvalidSpec(format!(
            "image of seed {seed} does not start with {seed}"
        )));
    }
    let mut cur = vec![seed];
    while cur.len() < len {
        let next = m.apply(&cur)?.into_symbols();
        if next.len() <= cur.len() {
            return Err(Error::InvalidSpec(format!(
                "fixed point from {seed} does not grow"
            )));
        }
        cur = next;
    }
    cur.truncate(len);
    Ok(cur)
}

fn image_prefix(outer: &Morphism, inner: &SequenceSpec, len: usize) -> Result<Vec<u8>> {
    // Nonempty images mean `len` inner letters always suffice; usually far
    // fewer do, so grow geometrically.
    let mut inner_len = (len / 2).max(1);
    loop {
        let src = inner.prefix(inner_len)?;
        let mut out = outer.apply(&src)?.into_symbols();
        if out.len() >= len {
            out.truncate(len);
            return Ok(out);
        }
        if inner_len >= len.max(1) {
            return Err(Error::InvalidSpec("outer morphism erases letters".into()));
        }
        inner_len = (inner_len * 2).min(len);
    }
}

/// Rudin–Shapiro symbol at index `n`.
pub fn rudin_shapiro_at(n: u64) -> u8 {
    ((n & (n >> 1)).count_ones() % 2) as u8
}

/// Thue–Morse symbol at index `n`: parity of the binary digit sum.
pub fn thue_morse_at(n: u64) -> u8 {
    (n.count_ones() % 2) as u8
}

fn paperfolding_prefix(len: usize) -> Vec<u8> {
    let mut p = vec![0u8];
    while p.len() < len {
        let tail: Vec<u8> = p.iter().rev().map(|&c| 1 - c).collect();
        p.push(0);
        p.extend(tail);
    }
    p.truncate(len);
    p
}

/// Whether the first `prefix_len` symbols contain a `k`-th power `u^k`,
/// `u` nonempty; returns `true` when none does.
pub fn check_no_kth_power(spec: &SequenceSpec, k: usize, prefix_len: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidArgument("k must be at least 2".into()));
    }
    let x = spec.prefix(prefix_len)?;
    Ok(!has_kth_power(&x, k))
}

/// A factor of length `k·p` with period `p` exists iff some run of
/// `x[t] == x[t+p]` reaches length `(k-1)·p`.
pub(crate) fn has_kth_power(x: &[u8], k: usize) -> bool {
    let n = x.len();
    for p in 1..=n / k {
        let need = (k - 1) * p;
        let mut run = 0usize;
        for t in 0..n - p {
            if x[t] == x[t + p] {
                run += 1;
                if run >= need {
                    return true;
                }
            } else {
                run = 0;
            }
        }
    }
    false
}
