//! The lattice NC(n) of noncrossing partitions and its Möbius function.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest `n` for which NC(n) is enumerated.
pub const MAX_N: usize = 10;

/// A noncrossing partition of `{1, ..., n}`, stored as a restricted growth
/// string: `labels[i]` is the index of the block containing `i + 1`, with
/// blocks numbered in order of their minima.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingPartition {
    labels: Vec<u8>,
}

impl NoncrossingPartition {
    /// `1_n`, the single block.
    pub fn one(n: usize) -> NoncrossingPartition {
        NoncrossingPartition { labels: vec![0; n] }
    }

    /// `0_n`, all singletons.
    pub fn zero(n: usize) -> NoncrossingPartition {
        NoncrossingPartition {
            labels: (0..n as u8).collect(),
        }
    }

    /// Builds a partition from 1-based blocks, checking cover, disjointness
    /// and the noncrossing condition.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<NoncrossingPartition> {
        let mut owner: Vec<Option<usize>> = vec![None; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Precondition("empty block".into()));
            }
            for &x in block {
                if x == 0 || x > n {
                    return Err(Error::Precondition(format!("element {x} outside 1..={n}")));
                }
                if owner[x - 1].replace(b).is_some() {
                    return Err(Error::Precondition(format!("element {x} in two blocks")));
                }
            }
        }
        let owner: Vec<usize> = owner
            .into_iter()
            .enumerate()
            .map(|(i, o)| {
                o.ok_or_else(|| Error::Precondition(format!("element {} uncovered", i + 1)))
            })
            .collect::<Result<_>>()?;
        let p = NoncrossingPartition::from_owner(&owner);
        if !p.is_noncrossing() {
            return Err(Error::Precondition("partition is crossing".into()));
        }
        Ok(p)
    }

    /// Relabels arbitrary block tags into restricted growth form.
    fn from_owner(owner: &[usize]) -> NoncrossingPartition {
        let mut map = HashMap::new();
        let labels = owner
            .iter()
            .map(|o| {
                let next = map.len() as u8;
                *map.entry(*o).or_insert(next)
            })
            .collect();
        NoncrossingPartition { labels }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn block_count(&self) -> usize {
        self.labels
            .iter()
            .map(|&l| l as usize + 1)
            .max()
            .unwrap_or(0)
    }

    /// Block index (0-based, ordered by minimum) of the 0-based position `i`.
    pub fn block_of(&self, i: usize) -> usize {
        self.labels[i] as usize
    }

    /// Blocks as sorted 0-based position lists, ordered by minimum.
    pub fn blocks0(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (i, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(i);
        }
        blocks
    }

    /// Blocks as sorted 1-based element lists, ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.blocks0()
            .into_iter()
            .map(|b| b.into_iter().map(|i| i + 1).collect())
            .collect()
    }

    pub fn is_noncrossing(&self) -> bool {
        let blocks = self.blocks0();
        // a < b < c < d with a, c in one block and b, d in another
        for (x, bx) in blocks.iter().enumerate() {
            for by in blocks.iter().skip(x + 1) {
                for w in bx.windows(2) {
                    let (a, c) = (w[0], w[1]);
                    let inside = by.iter().any(|&t| a < t && t < c);
                    let outside = by.iter().any(|&t| t < a || t > c);
                    if inside && outside {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &NoncrossingPartition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: other.n(),
            });
        }
        Ok(self.leq_unchecked(other))
    }

    fn leq_unchecked(&self, other: &NoncrossingPartition) -> bool {
        let mut rep = [usize::MAX; 256];
        for (i, &l) in self.labels.iter().enumerate() {
            let r = &mut rep[l as usize];
            if *r == usize::MAX {
                *r = i;
            } else if other.labels[*r] != other.labels[i] {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                let xs: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", xs.join(","))
            })
            .collect();
        write!(f, "{{{}}}", blocks.join(","))
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::OrderOutOfBounds {
            order: n,
            min: 1,
            max: MAX_N,
        });
    }
    Ok(())
}

/// All noncrossing partitions of `{1..n}` in lexicographic restricted-growth order.
pub fn enumerate_nc(n: usize) -> Result<Vec<NoncrossingPartition>> {
    check_n(n)?;
    let mut out = Vec::new();
    let mut labels = Vec::with_capacity(n);
    let mut last = Vec::with_capacity(n);
    extend(n, &mut labels, &mut last, &mut out);
    Ok(out)
}

/// Depth-first generation. `last[b]` is the largest position placed in block `b`.
fn extend(
    n: usize,
    labels: &mut Vec<u8>,
    last: &mut Vec<usize>,
    out: &mut Vec<NoncrossingPartition>,
) {
    let i = labels.len();
    if i == n {
        out.push(NoncrossingPartition {
            labels: labels.clone(),
        });
        return;
    }
    let blocks = last.len();
    for b in 0..=blocks {
        if b < blocks {
            // every block touched strictly between last[b] and i must be
            // enclosed by the new arc, i.e. start after last[b]
            let p = last[b];
            let first_pos = |c: u8| labels.iter().position(|&l| l == c).unwrap();
            if (p + 1..i).any(|j| first_pos(labels[j]) < p) {
                continue;
            }
            let saved = last[b];
            last[b] = i;
            labels.push(b as u8);
            extend(n, labels, last, out);
            labels.pop();
            last[b] = saved;
        } else {
            last.push(i);
            labels.push(b as u8);
            extend(n, labels, last, out);
            labels.pop();
            last.pop();
        }
    }
}

/// Möbius function of the interval `[p, q]` by the defining recursion
/// `mu(p, p) = 1`, `mu(p, q) = -sum_{p <= t < q} mu(p, t)`.
pub fn mobius(p: &NoncrossingPartition, q: &NoncrossingPartition) -> Result<i64> {
    if !p.leq(q)? {
        return Err(Error::NotComparable);
    }
    let lattice = NcLattice::get(p.n())?;
    let mut interval: Vec<&NoncrossingPartition> = lattice
        .partitions
        .iter()
        .filter(|t| p.leq_unchecked(t) && t.leq_unchecked(q))
        .collect();
    // finer partitions first, so each t sees every s < t already computed
    interval.sort_by_key(|t| std::cmp::Reverse(t.block_count()));
    let mut mu: Vec<i64> = Vec::with_capacity(interval.len());
    for (k, t) in interval.iter().enumerate() {
        let value = if *t == p {
            1
        } else {
            -(0..k)
                .filter(|&s| interval[s] != *t && interval[s].leq_unchecked(t))
                .map(|s| mu[s])
                .sum::<i64>()
        };
        mu.push(value);
    }
    let idx = interval
        .iter()
        .position(|t| *t == q)
        .expect("q in interval");
    Ok(mu[idx])
}

/// NC(n) together with `mu(pi, 1_n)` for every `pi`, computed once per `n`.
#[derive(Debug)]
pub struct NcLattice {
    n: usize,
    partitions: Vec<NoncrossingPartition>,
    mobius_to_top: Vec<i64>,
}

impl NcLattice {
    pub fn build(n: usize) -> Result<NcLattice> {
        let partitions = enumerate_nc(n)?;
        let mut order: Vec<usize> = (0..partitions.len()).collect();
        order.sort_by_key(|&i| partitions[i].block_count());
        let mut mobius_to_top = vec![0i64; partitions.len()];
        // dual recursion: mu(pi, 1) = -sum_{pi < t <= 1} mu(t, 1), coarse to fine
        for (k, &i) in order.iter().enumerate() {
            let pi = &partitions[i];
            mobius_to_top[i] = if pi.block_count() == 1 {
                1
            } else {
                -order[..k]
                    .iter()
                    .filter(|&&t| t != i && pi.leq_unchecked(&partitions[t]))
                    .map(|&t| mobius_to_top[t])
                    .sum::<i64>()
            };
        }
        Ok(NcLattice {
            n,
            partitions,
            mobius_to_top,
        })
    }

    /// Shared, lazily built lattice for `n`.
    pub fn get(n: usize) -> Result<Arc<NcLattice>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<NcLattice>>>> = OnceLock::new();
        check_n(n)?;
        let cache = CACHE.get_or_init(Default::default);
        if let Some(l) = cache.lock().expect("cache poisoned").get(&n) {
            return Ok(l.clone());
        }
        let built = Arc::new(NcLattice::build(n)?);
        let mut guard = cache.lock().expect("cache poisoned");
        Ok(guard.entry(n).or_insert(built).clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[NoncrossingPartition] {
        &self.partitions
    }

    /// Pairs `(pi, mu(pi, 1_n))`.
    pub fn with_mobius(&self) -> impl Iterator<Item = (&NoncrossingPartition, i64)> {
        self.partitions
            .iter()
            .zip(self.mobius_to_top.iter().copied())
    }

    pub fn mobius_to_top(&self, pi: &NoncrossingPartition) -> i64 {
        let i = self
            .partitions
            .binary_search(pi)
            .expect("partition of matching size");
        self.mobius_to_top[i]
    }
}
