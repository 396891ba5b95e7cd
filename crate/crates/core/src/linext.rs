//! Linear extensions, their descent statistics, and the extremal
//! extensions minimizing `maj - k*des`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::Poset;

pub const DEFAULT_MAX_EXTENSIONS: u64 = 10_000_000;

/// A permutation `pi_1 ... pi_m` (1-indexed labels) with its descent data.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinExt {
    pub perm: Vec<usize>,
    /// Positions `i` (1-indexed) with `pi_i > pi_{i+1}`, ascending.
    pub des_set: Vec<usize>,
    pub maj: usize,
    pub des: usize,
}

impl LinExt {
    pub fn from_perm(perm: Vec<usize>) -> Self {
        let des_set: Vec<usize> = perm
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect();
        Self {
            maj: des_set.iter().sum(),
            des: des_set.len(),
            des_set,
            perm,
        }
    }

    pub fn identity(m: usize) -> Self {
        Self::from_perm((1..=m).collect())
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// `pi_i <_P pi_j` implies `i < j`.
    pub fn is_extension_of(&self, p: &Poset) -> bool {
        if self.perm.len() != p.len() {
            return false;
        }
        let mut pos = vec![0; p.len()];
        for (i, &x) in self.perm.iter().enumerate() {
            if x == 0 || x > p.len() {
                return false;
            }
            pos[x - 1] = i;
        }
        p.relations().into_iter().all(|(x, y)| pos[x - 1] < pos[y - 1])
    }

    /// `maj(pi) - k des(pi) + C(k+1, 2)`.
    pub fn shifted_maj(&self, k: usize) -> i64 {
        self.maj as i64 - (k * self.des) as i64 + (k * (k + 1) / 2) as i64
    }

    pub fn descent_blocks(&self) -> DescentBlocks {
        descent_blocks(self)
    }
}

impl fmt::Display for LinExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.perm.len() > 9 { " " } else { "" };
        let s: Vec<String> = self.perm.iter().map(ToString::to_string).collect();
        f.write_str(&s.join(sep))
    }
}

/// Maximal decreasing runs of a permutation, left to right. Each block is
/// stored as a set (labels ascending).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentBlocks {
    pub blocks: Vec<Vec<usize>>,
}

pub fn descent_blocks(pi: &LinExt) -> DescentBlocks {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut prev: Option<usize> = None;
    for &x in &pi.perm {
        match (prev, blocks.last_mut()) {
            (Some(p), Some(block)) if p > x => block.push(x),
            _ => blocks.push(vec![x]),
        }
        prev = Some(x);
    }
    for b in &mut blocks {
        b.sort_unstable();
    }
    DescentBlocks { blocks }
}

/// Streams every linear extension of a poset exactly once.
///
/// Backtracking always places the smallest available minimal element
/// first, so a naturally labeled poset yields the identity first. Yields
/// `Err(Budget)` once and stops if more than `cap` extensions appear.
pub struct LinearExtensions {
    m: usize,
    preds: Vec<u64>,
    prefix: Vec<usize>,
    placed: u64,
    cursor: Vec<usize>,
    emit_pending: bool,
    done: bool,
    count: u64,
    cap: u64,
}

pub fn linear_extensions(p: &Poset) -> LinearExtensions {
    LinearExtensions {
        m: p.len(),
        preds: p.predecessor_masks(),
        prefix: Vec::with_capacity(p.len()),
        placed: 0,
        cursor: vec![0; p.len() + 1],
        emit_pending: false,
        done: p.is_empty(),
        count: 0,
        cap: DEFAULT_MAX_EXTENSIONS,
    }
}

impl LinearExtensions {
    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }
}

impl Iterator for LinearExtensions {
    type Item = Result<LinExt>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        loop {
            let depth = self.prefix.len();
            if depth == self.m {
                if self.emit_pending {
                    self.emit_pending = false;
                    self.count += 1;
                    if self.count > self.cap {
                        self.done = true;
                        return Some(Err(Error::Budget(self.cap)));
                    }
                    return Some(Ok(LinExt::from_perm(self.prefix.iter().map(|i| i + 1).collect())));
                }
                let last = self.prefix.pop().expect("depth is m > 0");
                self.placed &= !(1 << last);
                continue;
            }
            let placed = self.placed;
            let preds = &self.preds;
            let candidate = (self.cursor[depth]..self.m)
                .find(|&i| placed & (1 << i) == 0 && preds[i] & !placed == 0);
            match candidate {
                Some(i) => {
                    self.cursor[depth] = i + 1;
                    self.cursor[depth + 1] = 0;
                    self.prefix.push(i);
                    self.placed |= 1 << i;
                    self.emit_pending = depth + 1 == self.m;
                }
                None => {
                    self.cursor[depth] = 0;
                    match self.prefix.pop() {
                        Some(last) => self.placed &= !(1 << last),
                        None => {
                            self.done = true;
                            return None;
                        }
                    }
                }
            }
        }
    }
}

/// Collects all extensions, failing if more than `cap` exist.
pub fn collect_extensions(p: &Poset, cap: u64) -> Result<Vec<LinExt>> {
    linear_extensions(p).with_cap(cap).collect()
}

fn require_natural(p: &Poset) -> Result<()> {
    match p.first_unnatural_pair() {
        Some((x, y)) => Err(Error::NotNaturallyLabeled(x, y)),
        None => Ok(()),
    }
}

/// Removes the largest descent of `pi` while staying in `L(P)`: the
/// suffix after the second-largest descent (or the whole word, if there
/// is only one) is sorted ascending.
pub fn remove_top_descent(p: &Poset, pi: &LinExt) -> Result<LinExt> {
    require_natural(p)?;
    if !pi.is_extension_of(p) {
        return Err(Error::Input(format!("{pi} is not a linear extension")));
    }
    let Some(&top) = pi.des_set.last() else {
        return Err(Error::EmptyDescent);
    };
    debug_assert!(top >= 1);
    let j = if pi.des >= 2 { pi.des_set[pi.des - 2] } else { 0 };
    let mut perm = pi.perm.clone();
    perm[j..].sort_unstable();
    Ok(LinExt::from_perm(perm))
}

/// The extension minimizing `maj - k des + C(k+1, 2)`, built directly from
/// the chain levels `C_1, C_2, ...`, together with the minimal value.
///
/// With `p` the level where the running size of `C_1 ∪ ... ∪ C_p` first
/// reaches `k`: append `C_1, ..., C_{p-1}` each in decreasing order, then
/// the `k - |C_1| - ... - |C_{p-1}|` smallest elements of `C_p` in
/// decreasing order, then everything else in increasing order.
pub fn min_maj_extension(p: &Poset, k: usize) -> Result<(LinExt, i64)> {
    require_natural(p)?;
    let m = p.len();
    if k > m {
        return Err(Error::OutOfRange {
            value: k as i64,
            allowed: format!("0..={m}"),
        });
    }
    if k == 0 {
        return Ok((LinExt::identity(m), 0));
    }
    let stats = p.chain_stats();
    let mut perm = Vec::with_capacity(m);
    let mut used = vec![false; m];
    for level in &stats.levels {
        let take = (k - perm.len()).min(level.len());
        for &x in level[..take].iter().rev() {
            perm.push(x);
            used[x - 1] = true;
        }
        if perm.len() == k {
            break;
        }
    }
    perm.extend((1..=m).filter(|&x| !used[x - 1]));
    let pi = LinExt::from_perm(perm);
    debug_assert!(pi.is_extension_of(p));
    let value = pi.shifted_maj(k);
    Ok((pi, value))
}

/// Exhaustive minimum of `maj - k des + C(k+1, 2)` over `L(P)`, or over the
/// extensions with `1 <= des <= k` when `require_descents` is set.
pub fn min_stat_bruteforce(p: &Poset, k: usize, require_descents: bool, cap: u64) -> Result<i64> {
    require_natural(p)?;
    if k > p.len() {
        return Err(Error::OutOfRange {
            value: k as i64,
            allowed: format!("0..={}", p.len()),
        });
    }
    let mut best: Option<i64> = None;
    for pi in linear_extensions(p).with_cap(cap) {
        let pi = pi?;
        if require_descents && !(1..=k).contains(&pi.des) {
            continue;
        }
        let v = pi.shifted_maj(k);
        best = Some(best.map_or(v, |b| b.min(v)));
    }
    best.ok_or(Error::EmptySet)
}

/// Whether `pi` attains `maj - k des + C(k+1,2) = b_1 + ... + b_k`, decided
/// structurally from the chain levels `C_i` and the descent blocks of `pi`.
///
/// With `p` the first level at which `|C_1| + ... + |C_p| >= k`, equality
/// holds iff `Des(pi) ⊆ {1..k}`, `DB_i = C_i` for `i < p`, `DB_p ⊆ C_p`, and
/// the first `p` blocks reach position `k`. The last clause excludes e.g.
/// the identity on the fan `1 < 3, 2 < 3` at `k = 2`, which meets the other
/// three.
pub fn is_extremal_for(levels: &[Vec<usize>], pi: &LinExt, k: usize) -> bool {
    extremal_conditions(levels, pi, k).is_some_and(|covered| covered >= k)
}

/// The three block conditions without the coverage clause. Every extension
/// attaining the bound satisfies them.
pub fn meets_block_conditions(levels: &[Vec<usize>], pi: &LinExt, k: usize) -> bool {
    extremal_conditions(levels, pi, k).is_some()
}

/// `Some(|DB_1| + ... + |DB_p|)` when the block conditions hold.
fn extremal_conditions(levels: &[Vec<usize>], pi: &LinExt, k: usize) -> Option<usize> {
    if pi.des_set.iter().any(|&d| d > k) {
        return None;
    }
    if k == 0 {
        return Some(0);
    }
    let mut cumulative = 0;
    let mut p = 0;
    for (i, level) in levels.iter().enumerate() {
        cumulative += level.len();
        if cumulative >= k {
            p = i + 1;
            break;
        }
    }
    if p == 0 {
        return None;
    }
    let blocks = descent_blocks(pi).blocks;
    if (1..p).any(|i| blocks.get(i - 1) != Some(&levels[i - 1])) {
        return None;
    }
    let last = blocks.get(p - 1)?;
    if !last.iter().all(|x| levels[p - 1].binary_search(x).is_ok()) {
        return None;
    }
    Some(blocks[..p].iter().map(Vec::len).sum())
}
