//! Zero-sum partitions of `{1..t}` (t odd) into pairs and triples.
//!
//! Every part sums to 0 mod t. Pairs are forced to the shape `(d, t-d)`,
//! and when triples exist exactly one contains `t` (the zero element) and
//! has the shape `(t, d, t-d)`. The remaining triples come in mirror
//! pairs: if `(a, b, c)` is a triple then so is `(t-a, t-b, t-c)`, with
//! components mirrored positionally. Consumers that turn triple entries
//! into vertex weights rely on that positional alignment.
//!
//! Construction: one symmetric "level" `x <= (t-1)/2` per pair, three
//! levels per mirror-triple-pair. Level triples `(x, y, z)` with
//! `x + y = z` are produced from a pairing of `{1..2u}` into pairs with
//! differences `1..u` (a hooked variant covers the orders where no
//! perfect pairing exists). The pairing search is instant for the orders
//! a desk-scale modulus needs; a search budget guards the rest.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZspError {
    #[error("modulus {0} must be odd and at least 3")]
    BadModulus(u64),
    #[error("triple count {0} must be odd here")]
    TripleCountNotOdd(usize),
    #[error("triple count {0} must be even here")]
    TripleCountNotEven(usize),
    #[error("cannot fit {triples} triples into {available} available values")]
    TooManyTriples { triples: usize, available: u64 },
    #[error("no triple to remove the zero element from")]
    NoTriples,
    #[error("construction search budget exceeded (modulus {0} is beyond the supported range)")]
    SearchBudget(u64),
    #[error("constructed partition failed validation: {0}")]
    Invalid(String),
}

/// Disjoint triples and pairs covering `{1..t}` (or `{1..t-1}` after the
/// zero element is removed), each summing to 0 mod t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSumPartition {
    modulus: u64,
    triples: Vec<[u64; 3]>,
    pairs: Vec<[u64; 2]>,
}

impl ZeroSumPartition {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn triples(&self) -> &[[u64; 3]] {
        &self.triples
    }

    pub fn pairs(&self) -> &[[u64; 2]] {
        &self.pairs
    }

    /// Whether the element `t` (the group zero) is still covered.
    pub fn covers_zero(&self) -> bool {
        3 * self.triples.len() + 2 * self.pairs.len() == self.modulus as usize
    }

    /// Turns the zero-containing triple `(t, d, t-d)` into the extra pair
    /// `(d, t-d)`, leaving a partition of `{1..t-1}`.
    pub fn remove_zero(&self) -> Result<ZeroSumPartition, ZspError> {
        let pos = self
            .triples
            .iter()
            .position(|tr| tr.contains(&self.modulus))
            .ok_or(ZspError::NoTriples)?;
        let tr = self.triples[pos];
        debug_assert_eq!(tr[0], self.modulus);
        let mut triples = self.triples.clone();
        triples.remove(pos);
        let mut pairs = self.pairs.clone();
        pairs.push([tr[1], tr[2]]);
        let out = ZeroSumPartition {
            modulus: self.modulus,
            triples,
            pairs,
        };
        out.validate().map_err(ZspError::Invalid)?;
        Ok(out)
    }

    /// The independent checker: disjointness, coverage, and zero sums.
    /// Deliberately ignorant of how the partition was built.
    pub fn validate(&self) -> Result<(), String> {
        let t = self.modulus;
        if t < 3 || t % 2 == 0 {
            return Err(format!("bad modulus {t}"));
        }
        let mut seen = vec![false; t as usize + 1];
        let mut check_part = |part: &[u64]| -> Result<(), String> {
            if part.iter().sum::<u64>() % t != 0 {
                return Err(format!("part {part:?} does not sum to 0 mod {t}"));
            }
            for &v in part {
                if v < 1 || v > t {
                    return Err(format!("value {v} out of range 1..={t}"));
                }
                if seen[v as usize] {
                    return Err(format!("value {v} used twice"));
                }
                seen[v as usize] = true;
            }
            Ok(())
        };
        for tr in &self.triples {
            check_part(tr)?;
        }
        for p in &self.pairs {
            check_part(p)?;
        }
        let covered = 3 * self.triples.len() + 2 * self.pairs.len();
        let expect_zero = covered == t as usize;
        if !expect_zero && covered != t as usize - 1 {
            return Err(format!("covers {covered} values, expected {t} or {}", t - 1));
        }
        for v in 1..t {
            if !seen[v as usize] {
                return Err(format!("value {v} not covered"));
            }
        }
        if seen[t as usize] != expect_zero {
            return Err(format!("coverage of {t} inconsistent with part sizes"));
        }
        Ok(())
    }
}

const PAIRING_BUDGET: u64 = 4_000_000;
const LEVEL_BUDGET: u64 = 4_000_000;

/// Pairs `(a_r, a_r + r)` for `r = 1..=n` tiling `{1..2n}` (perfect, for
/// n = 0, 1 mod 4) or `{1..2n+1} \ {2n}` (hooked, for n = 2, 3 mod 4).
/// First-fit backtracking on descending differences.
fn difference_pairing(n: usize) -> Result<Vec<(u64, u64)>, ZspError> {
    let hooked = n % 4 == 2 || n % 4 == 3;
    let top = if hooked { 2 * n + 1 } else { 2 * n };
    let mut avail = vec![true; top + 1];
    avail[0] = false;
    if hooked {
        avail[2 * n] = false;
    }
    let mut out = vec![(0u64, 0u64); n + 1];
    let mut steps = 0u64;

    fn place(
        r: usize,
        top: usize,
        avail: &mut [bool],
        out: &mut [(u64, u64)],
        steps: &mut u64,
    ) -> Result<bool, ZspError> {
        *steps += 1;
        if *steps > PAIRING_BUDGET {
            return Err(ZspError::SearchBudget(0));
        }
        if r == 0 {
            return Ok(true);
        }
        for a in 1..=top - r {
            if avail[a] && avail[a + r] {
                avail[a] = false;
                avail[a + r] = false;
                out[r] = (a as u64, (a + r) as u64);
                if place(r - 1, top, avail, out, steps)? {
                    return Ok(true);
                }
                avail[a] = true;
                avail[a + r] = true;
            }
        }
        Ok(false)
    }

    if n == 0 {
        return Ok(Vec::new());
    }
    let found = place(n, top, &mut avail, &mut out, &mut steps)?;
    debug_assert!(found, "difference pairings exist for every order");
    if !found {
        return Err(ZspError::SearchBudget(0));
    }
    Ok(out[1..].to_vec())
}

/// Level triples `(x, y, z)` with `x + y = z` covering `{1..3u}` when
/// u = 0, 1 mod 4, or `{1..3u+1} \ {3u}` when u = 2, 3 mod 4.
fn level_triples(u: usize) -> Result<Vec<(u64, u64, u64)>, ZspError> {
    let pairs = difference_pairing(u)?;
    Ok(pairs
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| ((i + 1) as u64, u as u64 + a, u as u64 + b))
        .collect())
}

/// Expands level triples into mirror-aligned value triples mod t.
/// A level triple with `x + y = z` becomes `(x, y, t-z)` and its mirror
/// `(t-x, t-y, z)`; a direct triple with `x + y + z = t` becomes
/// `(x, y, z)` and `(t-x, t-y, t-z)`.
fn expand(t: u64, kind_a: bool, (x, y, z): (u64, u64, u64), out: &mut Vec<[u64; 3]>) {
    if kind_a {
        out.push([x, y, t - z]);
        out.push([t - x, t - y, z]);
    } else {
        out.push([x, y, z]);
        out.push([t - x, t - y, t - z]);
    }
}

/// Partitions `{1..t}` into `num_triples` triples (odd count) and pairs.
///
/// The zero-containing triple comes first, then mirror pairs of triples,
/// then the symmetric pairs in ascending order. Deterministic.
pub fn zero_sum_partition(t: u64, num_triples: usize) -> Result<ZeroSumPartition, ZspError> {
    if t < 3 || t % 2 == 0 {
        return Err(ZspError::BadModulus(t));
    }
    if num_triples % 2 == 0 || num_triples == 0 {
        return Err(ZspError::TripleCountNotOdd(num_triples));
    }
    if 3 * num_triples as u64 > t {
        return Err(ZspError::TooManyTriples {
            triples: num_triples,
            available: t,
        });
    }
    let s = (t - 1) / 2;
    let u = (num_triples - 1) / 2;
    let (d0, trips) = if u == 0 {
        (1, Vec::new())
    } else {
        let trips = level_triples(u).map_err(|_| ZspError::SearchBudget(t))?;
        let hooked = u % 4 == 2 || u % 4 == 3;
        let d0 = if hooked { 3 * u as u64 } else { 3 * u as u64 + 1 };
        (d0, trips)
    };
    debug_assert!(d0 <= s);
    let mut triples = vec![[t, d0, t - d0]];
    let mut used = vec![false; s as usize + 1];
    used[d0 as usize] = true;
    for &(x, y, z) in &trips {
        expand(t, true, (x, y, z), &mut triples);
        for v in [x, y, z] {
            used[v as usize] = true;
        }
    }
    let pairs: Vec<[u64; 2]> = (1..=s).filter(|&d| !used[d as usize]).map(|d| [d, t - d]).collect();
    let out = ZeroSumPartition {
        modulus: t,
        triples,
        pairs,
    };
    out.validate().map_err(ZspError::Invalid)?;
    Ok(out)
}

/// Partitions `{1..t-1}` into `num_triples` triples (even count) and
/// pairs, skipping the zero element entirely. Companion to
/// [`zero_sum_partition`] for the cases where building one extra triple
/// and removing zero from it would not fit below `t`.
pub fn zero_sum_partition_excluding_zero(
    t: u64,
    num_triples: usize,
) -> Result<ZeroSumPartition, ZspError> {
    if t < 3 || t % 2 == 0 {
        return Err(ZspError::BadModulus(t));
    }
    if num_triples % 2 != 0 {
        return Err(ZspError::TripleCountNotEven(num_triples));
    }
    if 3 * num_triples as u64 > t - 1 {
        return Err(ZspError::TooManyTriples {
            triples: num_triples,
            available: t - 1,
        });
    }
    let s = (t - 1) / 2;
    let u = num_triples / 2;
    let mut triples = Vec::new();
    let mut used = vec![false; s as usize + 1];
    if u > 0 {
        let cls = u % 4;
        let fits_hook = 3 * u as u64 + 1 <= s;
        if cls == 0 || cls == 1 || fits_hook {
            let trips = level_triples(u).map_err(|_| ZspError::SearchBudget(t))?;
            for &(x, y, z) in &trips {
                expand(t, true, (x, y, z), &mut triples);
                for v in [x, y, z] {
                    used[v as usize] = true;
                }
            }
        } else {
            // tight and no hooked pairing fits: mixed search over levels
            let levels: Vec<u64> = (1..=s).collect();
            let skips = levels.len() - 3 * u;
            let sol = level_search(&levels, u, skips, t)?;
            for &(x, y, z, kind_a) in &sol {
                expand(t, kind_a, (x, y, z), &mut triples);
                for v in [x, y, z] {
                    used[v as usize] = true;
                }
            }
        }
    }
    let pairs: Vec<[u64; 2]> = (1..=s).filter(|&d| !used[d as usize]).map(|d| [d, t - d]).collect();
    let out = ZeroSumPartition {
        modulus: t,
        triples,
        pairs,
    };
    out.validate().map_err(ZspError::Invalid)?;
    Ok(out)
}

/// Backtracking over symmetric levels: find `need` disjoint triples, each
/// either `x + y = z` or `x + y + z = t`, anchoring on the largest
/// remaining level. Levels left over become pairs.
fn level_search(
    levels: &[u64],
    need: usize,
    skips: usize,
    t: u64,
) -> Result<Vec<(u64, u64, u64, bool)>, ZspError> {
    fn rec(
        levels: &[u64],
        need: usize,
        skips: usize,
        t: u64,
        steps: &mut u64,
        acc: &mut Vec<(u64, u64, u64, bool)>,
    ) -> Result<bool, ZspError> {
        *steps += 1;
        if *steps > LEVEL_BUDGET {
            return Err(ZspError::SearchBudget(t));
        }
        if need == 0 {
            return Ok(true);
        }
        if 3 * need > levels.len() {
            return Ok(false);
        }
        let z = *levels.last().unwrap();
        let rest = &levels[..levels.len() - 1];
        for (target, kind_a) in [(z, true), (t - z, false)] {
            for &x in rest {
                if 2 * x >= target {
                    break;
                }
                let y = target - x;
                if y != x && rest.binary_search(&y).is_ok() {
                    let next: Vec<u64> = rest.iter().copied().filter(|&l| l != x && l != y).collect();
                    acc.push((x, y, z, kind_a));
                    if rec(&next, need - 1, skips, t, steps, acc)? {
                        return Ok(true);
                    }
                    acc.pop();
                }
            }
        }
        if skips > 0 {
            return rec(rest, need, skips - 1, t, steps, acc);
        }
        Ok(false)
    }

    let mut acc = Vec::new();
    let mut steps = 0u64;
    if rec(levels, need, skips, t, &mut steps, &mut acc)? {
        Ok(acc)
    } else {
        Err(ZspError::Invalid(format!(
            "no level decomposition for {need} triples mod {t}"
        )))
    }
}
