//! Finite posets on `{1, ..., m}`, chain statistics, relabelings and
//! generators for verification corpora.
//!
//! All labels crossing the public API are 1-indexed.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest element count accepted by [`enumerate_posets`].
pub const MAX_ENUMERATE: usize = 5;

/// Masks of predecessors are stored in a `u64`.
pub const MAX_ELEMENTS: usize = 64;

/// Strict partial order stored as its full relation matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    m: usize,
    // lt[i * m + j] iff (i + 1) <_P (j + 1)
    lt: Vec<bool>,
}

impl Poset {
    /// Builds the transitive closure of `pairs` (each `(x, y)` meaning
    /// `x < y`).
    pub fn from_covers(m: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if m == 0 || m > MAX_ELEMENTS {
            return Err(Error::OutOfRange {
                value: m as i64,
                allowed: format!("1..={MAX_ELEMENTS} elements"),
            });
        }
        let mut lt = vec![false; m * m];
        for &(x, y) in pairs {
            for label in [x, y] {
                if label == 0 || label > m {
                    return Err(Error::Range { label, m });
                }
            }
            lt[(x - 1) * m + (y - 1)] = true;
        }
        // Warshall
        for k in 0..m {
            for i in 0..m {
                if lt[i * m + k] {
                    for j in 0..m {
                        if lt[k * m + j] {
                            lt[i * m + j] = true;
                        }
                    }
                }
            }
        }
        if let Some(i) = (0..m).find(|&i| lt[i * m + i]) {
            return Err(Error::Cycle(i + 1));
        }
        Ok(Self { m, lt })
    }

    pub fn antichain(m: usize) -> Result<Self> {
        Self::from_covers(m, &[])
    }

    /// The chain `1 < 2 < ... < m`.
    pub fn chain(m: usize) -> Result<Self> {
        let covers: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
        Self::from_covers(m, &covers)
    }

    /// Wraps a matrix already known to be a strict partial order.
    fn from_closed_matrix(m: usize, lt: Vec<bool>) -> Self {
        debug_assert_eq!(lt.len(), m * m);
        Self { m, lt }
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    /// `x <_P y` for labels in `1..=m`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.lt[(x - 1) * self.m + (y - 1)]
    }

    pub(crate) fn lt0(&self, i: usize, j: usize) -> bool {
        self.lt[i * self.m + j]
    }

    /// All pairs `(x, y)` with `x <_P y`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.m {
            for j in 0..self.m {
                if self.lt0(i, j) {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    /// Cover relations: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(x, y)| !(1..=self.m).any(|z| self.lt(x, z) && self.lt(z, y)))
            .collect()
    }

    /// Bitmask (bit `i` = label `i + 1`) of the strict predecessors of each
    /// element, indexed by `label - 1`.
    pub fn predecessor_masks(&self) -> Vec<u64> {
        (0..self.m)
            .map(|j| (0..self.m).filter(|&i| self.lt0(i, j)).fold(0u64, |acc, i| acc | (1 << i)))
            .collect()
    }

    pub fn dual(&self) -> Self {
        let m = self.m;
        let mut lt = vec![false; m * m];
        for i in 0..m {
            for j in 0..m {
                lt[j * m + i] = self.lt0(i, j);
            }
        }
        Self::from_closed_matrix(m, lt)
    }

    /// `x <_P y` implies `x < y`.
    pub fn is_naturally_labeled(&self) -> bool {
        self.first_unnatural_pair().is_none()
    }

    pub(crate) fn first_unnatural_pair(&self) -> Option<(usize, usize)> {
        self.relations().into_iter().find(|&(x, y)| x > y)
    }

    pub fn is_chain(&self) -> bool {
        (0..self.m).all(|i| (0..self.m).all(|j| i == j || self.lt0(i, j) || self.lt0(j, i)))
    }

    /// Image of this poset under `r`: `r(x) <' r(y)` iff `x <_P y`.
    pub fn relabel(&self, r: &Relabeling) -> Self {
        let m = self.m;
        let mut lt = vec![false; m * m];
        for i in 0..m {
            for j in 0..m {
                if self.lt0(i, j) {
                    lt[(r.apply(i + 1) - 1) * m + (r.apply(j + 1) - 1)] = true;
                }
            }
        }
        Self::from_closed_matrix(m, lt)
    }

    /// Order-isomorphic, naturally labeled copy of this poset.
    ///
    /// Elements are renumbered along the lexicographically smallest
    /// topological order: at every step the smallest-labeled minimal
    /// element of what remains receives the next label.
    pub fn naturalize(&self) -> (Self, Relabeling) {
        let preds = self.predecessor_masks();
        let mut placed = 0u64;
        let mut perm = vec![0; self.m];
        for next in 1..=self.m {
            let i = (0..self.m)
                .find(|&i| placed & (1 << i) == 0 && preds[i] & !placed == 0)
                .expect("a finite poset always has a minimal element");
            perm[i] = next;
            placed |= 1 << i;
        }
        let r = Relabeling { perm };
        (self.relabel(&r), r)
    }

    pub fn chain_stats(&self) -> ChainStats {
        let mc = self.max_chain_ending();
        let mcbar = self.dual().max_chain_ending();
        let mut b = mc.clone();
        b.sort_unstable();
        let height = b.last().copied().unwrap_or(0);
        let mut levels = vec![Vec::new(); height];
        for (i, &h) in mc.iter().enumerate() {
            levels[h - 1].push(i + 1);
        }
        ChainStats { mc, mcbar, b, levels }
    }

    fn max_chain_ending(&self) -> Vec<usize> {
        // in a transitively closed relation y < x implies pred(y) is a
        // proper subset of pred(x), so predecessor count is a linear extension
        let mut order: Vec<usize> = (0..self.m).collect();
        order.sort_by_key(|&j| (0..self.m).filter(|&i| self.lt0(i, j)).count());
        let mut mc = vec![0; self.m];
        for &j in &order {
            mc[j] = 1 + (0..self.m).filter(|&i| self.lt0(i, j)).map(|i| mc[i]).max().unwrap_or(0);
        }
        mc
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            m: self.m,
            covers: self.covers().into_iter().map(|(x, y)| [x, y]).collect(),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: PosetJson = serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))?;
        Self::try_from(&raw)
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("m", &self.m)
            .field("covers", &self.covers())
            .finish()
    }
}

/// On-disk form: `{"m": 4, "covers": [[1,2],[2,4],[3,4]]}`. Any relation
/// pairs are accepted; the closure is taken on load.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub m: usize,
    #[serde(default)]
    pub covers: Vec<[usize; 2]>,
}

impl TryFrom<&PosetJson> for Poset {
    type Error = Error;

    fn try_from(raw: &PosetJson) -> Result<Self> {
        let pairs: Vec<_> = raw.covers.iter().map(|&[x, y]| (x, y)).collect();
        Poset::from_covers(raw.m, &pairs)
    }
}

/// Bijection on `{1, ..., m}` sending input labels to new labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relabeling {
    perm: Vec<usize>,
}

impl Relabeling {
    pub fn identity(m: usize) -> Self {
        Self {
            perm: (1..=m).collect(),
        }
    }

    pub fn from_images(perm: Vec<usize>) -> Result<Self> {
        let m = perm.len();
        let mut seen = vec![false; m];
        for &v in &perm {
            if v == 0 || v > m || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::Input(format!("{perm:?} is not a permutation of 1..={m}")));
            }
        }
        Ok(Self { perm })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.perm[x - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (i, &v) in self.perm.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { perm: inv }
    }
}

/// Chain statistics of a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStats {
    /// `mc[x - 1]`: maximum size of a chain ending at `x`.
    pub mc: Vec<usize>,
    /// `mcbar[x - 1]`: maximum size of a chain starting at `x`.
    pub mcbar: Vec<usize>,
    /// `mc` sorted ascending.
    pub b: Vec<usize>,
    /// `levels[i - 1] = C_i = { x : mc(x) = i }`, labels ascending.
    pub levels: Vec<Vec<usize>>,
}

impl ChainStats {
    /// `b_1 + ... + b_k`.
    pub fn b_prefix_sum(&self, k: usize) -> usize {
        self.b[..k].iter().sum()
    }

    /// `mcbar` sorted ascending.
    pub fn a(&self) -> Vec<usize> {
        let mut a = self.mcbar.clone();
        a.sort_unstable();
        a
    }
}

/// Rational edge probability `num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeProb {
    num: u32,
    den: u32,
}

impl EdgeProb {
    pub fn new(num: u32, den: u32) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::OutOfRange {
                value: i64::from(num),
                allowed: format!("0..={den} (edge probability numerator)"),
            });
        }
        Ok(Self { num, den })
    }

    pub const HALF: EdgeProb = EdgeProb { num: 1, den: 2 };
}

/// Transitive closure of a random DAG: each pair along a random
/// topological order becomes a relation independently with probability
/// `p`. Deterministic in `seed`.
pub fn random_poset(m: usize, p: EdgeProb, seed: u64) -> Result<Poset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (1..=m).collect();
    order.shuffle(&mut rng);
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if p.num > 0 && rng.gen_ratio(p.num, p.den) {
                pairs.push((order[i], order[j]));
            }
        }
    }
    Poset::from_covers(m, &pairs)
}

/// Every labeled strict partial order on `{1, ..., m}`, each exactly once,
/// found by filtering all irreflexive relations.
pub fn enumerate_posets(m: usize) -> Result<PosetEnumerator> {
    if m == 0 || m > MAX_ENUMERATE {
        return Err(Error::Size(format!(
            "exhaustive enumeration supports 1..={MAX_ENUMERATE} elements, got {m}"
        )));
    }
    let slots: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    Ok(PosetEnumerator {
        m,
        end: 1u64 << slots.len(),
        slots,
        next: 0,
    })
}

pub struct PosetEnumerator {
    m: usize,
    slots: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl PosetEnumerator {
    fn candidate(&self, mask: u64) -> Option<Poset> {
        let m = self.m;
        let mut lt = vec![false; m * m];
        for (bit, &(i, j)) in self.slots.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                if lt[j * m + i] {
                    return None;
                }
                lt[i * m + j] = true;
            }
        }
        for i in 0..m {
            for j in 0..m {
                if !lt[i * m + j] {
                    continue;
                }
                for k in 0..m {
                    if lt[j * m + k] && !lt[i * m + k] {
                        return None;
                    }
                }
            }
        }
        Some(Poset::from_closed_matrix(m, lt))
    }
}

impl Iterator for PosetEnumerator {
    type Item = Poset;

    fn next(&mut self) -> Option<Poset> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if let Some(p) = self.candidate(mask) {
                return Some(p);
            }
        }
        None
    }
}
