//! Exact arithmetic in finite Abelian groups.
//!
//! A group is kept in primary decomposition: a product of cyclic groups of
//! prime-power order, sorted by (prime, exponent). Two isomorphic inputs
//! therefore canonicalize to the identical factor list, which makes
//! structural queries (involution count, halvability) syntactic.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("cyclic order {0} is below 2")]
    OrderTooSmall(u64),
    #[error("empty list of cyclic orders")]
    Empty,
    #[error("cannot parse group descriptor `{0}`")]
    Parse(String),
}

/// A finite Abelian group as a canonical product of cyclic prime-power factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    factors: Vec<u64>,
    order: u64,
}

/// An element: one residue per factor, always reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    residues: Vec<u64>,
}

impl GroupElement {
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.residues.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn prime_power_split(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl GroupSpec {
    /// Builds the canonical primary decomposition of `Z_{o1} x Z_{o2} x ...`.
    pub fn new(orders: &[u64]) -> Result<GroupSpec, GroupError> {
        if orders.is_empty() {
            return Err(GroupError::Empty);
        }
        let mut parts: Vec<(u64, u32)> = Vec::new();
        for &o in orders {
            if o < 2 {
                return Err(GroupError::OrderTooSmall(o));
            }
            parts.extend(prime_power_split(o));
        }
        parts.sort();
        let factors: Vec<u64> = parts.iter().map(|&(p, e)| p.pow(e)).collect();
        let order = factors.iter().product();
        Ok(GroupSpec { factors, order })
    }

    /// The cyclic group `Z_t`.
    pub fn cyclic(t: u64) -> Result<GroupSpec, GroupError> {
        GroupSpec::new(&[t])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            residues: vec![0; self.factors.len()],
        }
    }

    /// Reduces a residue vector into an element of this group.
    ///
    /// Panics if the vector length does not match the factor count.
    pub fn element(&self, residues: &[u64]) -> GroupElement {
        assert_eq!(
            residues.len(),
            self.factors.len(),
            "residue vector length {} does not match factor count {}",
            residues.len(),
            self.factors.len()
        );
        GroupElement {
            residues: residues
                .iter()
                .zip(&self.factors)
                .map(|(&r, &m)| r % m)
                .collect(),
        }
    }

    fn check_dim(&self, a: &GroupElement) {
        assert_eq!(
            a.residues.len(),
            self.factors.len(),
            "element has {} coordinates, group has {} factors",
            a.residues.len(),
            self.factors.len()
        );
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.check_dim(a);
        self.check_dim(b);
        GroupElement {
            residues: a
                .residues
                .iter()
                .zip(&b.residues)
                .zip(&self.factors)
                .map(|((&x, &y), &m)| (x + y) % m)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.check_dim(a);
        GroupElement {
            residues: a
                .residues
                .iter()
                .zip(&self.factors)
                .map(|(&x, &m)| (m - x) % m)
                .collect(),
        }
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    /// `k * a`, with negative `k` meaning repeated inverse.
    pub fn scalar_mul(&self, k: i64, a: &GroupElement) -> GroupElement {
        self.check_dim(a);
        GroupElement {
            residues: a
                .residues
                .iter()
                .zip(&self.factors)
                .map(|(&x, &m)| {
                    let r = (k.rem_euclid(m as i64) as u64 * x) % m;
                    r
                })
                .collect(),
        }
    }

    /// The lexicographically least `b` with `2b = g`, if any exists.
    ///
    /// Coordinate-wise: an odd factor has the unique half `g * (m+1)/2`;
    /// an even factor `2^e` has halves exactly when the residue is even,
    /// and the least of the two preimages is `g/2`.
    pub fn halve(&self, g: &GroupElement) -> Option<GroupElement> {
        self.check_dim(g);
        let mut out = Vec::with_capacity(g.residues.len());
        for (&x, &m) in g.residues.iter().zip(&self.factors) {
            if m % 2 == 0 {
                if x % 2 != 0 {
                    return None;
                }
                out.push(x / 2);
            } else {
                let inv2 = (m + 1) / 2;
                out.push((x * inv2) % m);
            }
        }
        Some(GroupElement { residues: out })
    }

    /// All elements `i != 0` with `2i = 0`, in lexicographic order.
    pub fn involutions(&self) -> Vec<GroupElement> {
        let choices: Vec<Vec<u64>> = self
            .factors
            .iter()
            .map(|&m| if m % 2 == 0 { vec![0, m / 2] } else { vec![0] })
            .collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; choices.len()];
        loop {
            let elem: Vec<u64> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            if elem.iter().any(|&r| r != 0) {
                out.push(GroupElement { residues: elem });
            }
            let mut pos = choices.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    /// Number of elements that admit a half, by enumeration.
    pub fn halvable_count(&self) -> u64 {
        self.elements().filter(|g| self.halve(g).is_some()).count() as u64
    }

    /// All elements in lexicographic order, starting at 0.
    pub fn elements(&self) -> ElementIter<'_> {
        ElementIter {
            spec: self,
            next: Some(self.zero()),
        }
    }

    /// The element of lexicographic rank `idx` (0 is the identity).
    pub fn element_at(&self, mut idx: u64) -> GroupElement {
        assert!(idx < self.order, "rank {} out of range", idx);
        let mut residues = vec![0u64; self.factors.len()];
        for (i, &m) in self.factors.iter().enumerate().rev() {
            residues[i] = idx % m;
            idx /= m;
        }
        GroupElement { residues }
    }

    /// Lexicographic rank of an element; inverse of `element_at`.
    pub fn rank(&self, g: &GroupElement) -> u64 {
        self.check_dim(g);
        let mut idx = 0u64;
        for (&r, &m) in g.residues.iter().zip(&self.factors) {
            idx = idx * m + r;
        }
        idx
    }
}

pub struct ElementIter<'a> {
    spec: &'a GroupSpec,
    next: Option<GroupElement>,
}

impl Iterator for ElementIter<'_> {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.residues.len();
        loop {
            if pos == 0 {
                self.next = None;
                break;
            }
            pos -= 1;
            succ.residues[pos] += 1;
            if succ.residues[pos] < self.spec.factors[pos] {
                self.next = Some(succ);
                break;
            }
            succ.residues[pos] = 0;
        }
        Some(current)
    }
}

/// Integer partitions of `e` in descending lexicographic order.
fn partitions(e: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, max_part: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        let top = remaining.min(max_part);
        for part in (1..=top).rev() {
            acc.push(part);
            rec(remaining - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(e, e, &mut Vec::new(), &mut out);
    out
}

/// One `GroupSpec` per isomorphism class of Abelian groups of order `t`.
///
/// Classes are built from integer partitions of each prime exponent; the
/// first prime varies slowest and partitions run in descending
/// lexicographic order, so the cyclic group always comes first.
pub fn groups_of_order(t: u64) -> Vec<GroupSpec> {
    if t == 1 {
        return Vec::new();
    }
    let primes = prime_power_split(t);
    let per_prime: Vec<(u64, Vec<Vec<u32>>)> = primes
        .iter()
        .map(|&(p, e)| (p, partitions(e)))
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; per_prime.len()];
    loop {
        let mut orders = Vec::new();
        for (i, (p, parts)) in per_prime.iter().enumerate() {
            for &a in &parts[choice[i]] {
                orders.push(p.pow(a));
            }
        }
        out.push(GroupSpec::new(&orders).expect("prime powers are >= 2"));
        let mut pos = per_prime.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < per_prime[pos].1.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|m| format!("Z{m}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    /// Accepts `Z8xZ3`, `8x3`, or `8,3`; canonicalizes on parse.
    fn from_str(s: &str) -> Result<GroupSpec, GroupError> {
        let cleaned = s.trim();
        if cleaned.is_empty() {
            return Err(GroupError::Parse(s.to_string()));
        }
        let mut orders = Vec::new();
        for token in cleaned.split(|c| c == 'x' || c == 'X' || c == ',') {
            let token = token.trim();
            let digits = token.strip_prefix(['Z', 'z']).unwrap_or(token);
            let order: u64 = digits
                .parse()
                .map_err(|_| GroupError::Parse(s.to_string()))?;
            orders.push(order);
        }
        GroupSpec::new(&orders).map_err(|e| match e {
            GroupError::OrderTooSmall(_) => e,
            _ => GroupError::Parse(s.to_string()),
        })
    }
}
