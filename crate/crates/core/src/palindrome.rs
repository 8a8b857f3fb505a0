//! Palindrome machinery: constant-time range queries via Manacher radii and
//! distinct palindromic factor counting via a palindromic tree (eertree).

/// Answers "is `w[start..end)` a palindrome" in O(1) after O(n) setup.
#[derive(Debug, Clone)]
pub struct PalindromeOracle {
    /// `radius[c]` is the length of the longest palindrome `w[l..r)` with
    /// `l + r == c`, for `c` in `0..=2n`.
    radius: Vec<usize>,
}

impl PalindromeOracle {
    pub fn new(w: &[u8]) -> Self {
        let m = 2 * w.len() + 1;
        // Interleaved view: even indices are separators, odd index 2i+1 is w[i].
        let at = |j: usize| if j % 2 == 1 { Some(w[j / 2]) } else { None };
        let mut radius = vec![0usize; m];
        let (mut center, mut right) = (0usize, 0usize);
        for i in 0..m {
            let mut k = if i < right {
                (right - i).min(radius[2 * center - i])
            } else {
                0
            };
            while k < i && i + k + 1 < m && at(i - k - 1) == at(i + k + 1) {
                k += 1;
            }
            radius[i] = k;
            if i + k > right {
                center = i;
                right = i + k;
            }
        }
        PalindromeOracle { radius }
    }

    /// Length of the underlying word.
    pub fn len(&self) -> usize {
        self.radius.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.radius.len() == 1
    }

    /// Whether the half-open range `w[start..end)` is a palindrome.
    /// Empty ranges are palindromes.
    #[inline]
    pub fn is_pal(&self, start: usize, end: usize) -> bool {
        debug_assert!(start <= end && end <= self.len());
        self.radius[start + end] >= end - start
    }

    /// Smallest `m` in `[0, end - start]` such that `w[start..start+m)` and
    /// `w[start+m..end)` are both palindromes.
    pub fn symmetric_split(&self, start: usize, end: usize) -> Option<usize> {
        (start..=end)
            .find(|&mid| self.is_pal(start, mid) && self.is_pal(mid, end))
            .map(|mid| mid - start)
    }
}

/// Number of distinct nonempty palindromic factors of `w`.
pub fn distinct_palindromes(w: &[u8]) -> usize {
    Eertree::build(w).node_count()
}

/// Palindromic tree over a word. Node 0 is the imaginary root of length
/// -1, node 1 the empty palindrome; every other node is one distinct
/// nonempty palindromic factor.
#[derive(Debug, Clone)]
pub struct Eertree {
    len: Vec<isize>,
    link: Vec<usize>,
    next: Vec<[u32; 10]>,
}

const NONE: u32 = u32::MAX;

impl Eertree {
    pub fn build(w: &[u8]) -> Self {
        let mut tree = Eertree {
            len: vec![-1, 0],
            link: vec![0, 0],
            next: vec![[NONE; 10], [NONE; 10]],
        };
        let mut last = 1usize;
        for (i, &c) in w.iter().enumerate() {
            let fits = |node: usize, len: &[isize]| {
                let l = len[node];
                let j = i as isize - l - 1;
                j >= 0 && w[j as usize] == c
            };
            let mut cur = last;
            while !fits(cur, &tree.len) {
                cur = tree.link[cur];
            }
            if tree.next[cur][c as usize] != NONE {
                last = tree.next[cur][c as usize] as usize;
                continue;
            }
            let node = tree.len.len();
            let node_len = tree.len[cur] + 2;
            let suffix_link = if node_len == 1 {
                1
            } else {
                let mut up = tree.link[cur];
                while !fits(up, &tree.len) {
                    up = tree.link[up];
                }
                tree.next[up][c as usize] as usize
            };
            tree.len.push(node_len);
            tree.link.push(suffix_link);
            tree.next.push([NONE; 10]);
            tree.next[cur][c as usize] = node as u32;
            last = node;
        }
        tree
    }

    /// Number of distinct nonempty palindromes.
    pub fn node_count(&self) -> usize {
        self.len.len() - 2
    }

    /// Lengths of all distinct nonempty palindromes, in creation order.
    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.len[2..].iter().map(|&l| l as usize)
    }
}
