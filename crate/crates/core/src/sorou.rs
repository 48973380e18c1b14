//! Roots of unity, sorou (finite multisets of roots), and the operations the
//! classification is built on: rotation, orders, parity, subsorou, canonical
//! rotation representatives and the top-prime subsidiary decomposition.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::arith::{gcd, is_squarefree, lcm, mod_inverse, prime_factors};
use crate::error::{Error, Result};

/// Largest weight accepted by [`Sorou::proper_nonempty_subsorous`].
pub const SUBSET_GUARD: usize = 24;

/// The root of unity `e^{2 pi i power / order}` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    order: u64,
    power: u64,
}

impl Root {
    pub const ONE: Root = Root { order: 1, power: 0 };
    pub const MINUS_ONE: Root = Root { order: 2, power: 1 };

    /// Reduces `power` modulo `order` and into lowest terms.
    pub fn new(order: i64, power: i64) -> Result<Root> {
        if order <= 0 {
            return Err(Error::InvalidRoot(order));
        }
        Ok(Root::reduced(order as u64, power.rem_euclid(order) as u64))
    }

    fn reduced(order: u64, power: u64) -> Root {
        let power = power % order;
        if power == 0 {
            return Root::ONE;
        }
        let g = gcd(order, power);
        Root {
            order: order / g,
            power: power / g,
        }
    }

    /// `nu_n^k`, the `k`-th power of the primitive root `e^{2 pi i / n}`.
    pub fn nu(n: u64, k: i64) -> Root {
        Root::reduced(n, k.rem_euclid(n as i64) as u64)
    }

    pub fn order(self) -> u64 {
        self.order
    }

    pub fn power(self) -> u64 {
        self.power
    }

    pub fn mul(self, other: Root) -> Root {
        let l = lcm(self.order, other.order);
        Root::reduced(
            l,
            self.power * (l / self.order) + other.power * (l / other.order),
        )
    }

    pub fn inverse(self) -> Root {
        Root::reduced(self.order, self.order - self.power)
    }

    pub fn pow(self, k: i64) -> Root {
        let o = self.order as i128;
        let e = (self.power as i128 * k as i128).rem_euclid(o);
        Root::reduced(self.order, e as u64)
    }

    pub fn neg(self) -> Root {
        self.mul(Root::MINUS_ONE)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.order, self.power)
    }
}

/// Splits `r = nu_p^a * nu_m^b` where `order(r) | p*m` and `gcd(p, m) = 1`.
pub fn split_root(r: Root, p: u64) -> Result<(Root, Root)> {
    let o = r.order;
    if o % (p * p) == 0 {
        return Err(Error::SplitRoot {
            root: r.to_string(),
            prime: p,
        });
    }
    if o % p != 0 {
        return Ok((Root::ONE, r));
    }
    let m = o / p;
    // a = alpha*m + beta*p (mod p*m)
    let a = r.power;
    let alpha = a % p * mod_inverse(m % p, p).expect("m is coprime to p") % p;
    let beta = if m == 1 {
        0
    } else {
        a % m * mod_inverse(p % m, m).expect("p is coprime to m") % m
    };
    Ok((Root::reduced(p, alpha), Root::reduced(m, beta)))
}

/// A finite multiset of roots of unity, stored as sorted `(root, multiplicity)`
/// pairs with distinct roots and positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Sorou {
    terms: Vec<(Root, u32)>,
}

impl Sorou {
    pub fn empty() -> Sorou {
        Sorou::default()
    }

    pub fn one() -> Sorou {
        Sorou {
            terms: vec![(Root::ONE, 1)],
        }
    }

    /// `1 + nu_p + ... + nu_p^{p-1}`.
    pub fn r_p(p: u64) -> Sorou {
        Sorou::from_roots((0..p as i64).map(|k| Root::nu(p, k)))
    }

    pub fn from_roots<I: IntoIterator<Item = Root>>(roots: I) -> Sorou {
        Sorou::from_terms(roots.into_iter().map(|r| (r, 1)))
    }

    /// Normalizes arbitrary `(root, multiplicity)` pairs.
    pub fn from_terms<I: IntoIterator<Item = (Root, u32)>>(terms: I) -> Sorou {
        let mut v: Vec<(Root, u32)> = terms.into_iter().filter(|t| t.1 > 0).collect();
        v.sort_unstable_by_key(|t| t.0);
        let mut out: Vec<(Root, u32)> = Vec::with_capacity(v.len());
        for (r, m) in v {
            match out.last_mut() {
                Some(last) if last.0 == r => last.1 += m,
                _ => out.push((r, m)),
            }
        }
        Sorou { terms: out }
    }

    /// Distinct roots with multiplicities, ascending.
    pub fn distinct(&self) -> &[(Root, u32)] {
        &self.terms
    }

    /// All terms with repetition, ascending.
    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.terms
            .iter()
            .flat_map(|&(r, m)| std::iter::repeat_n(r, m as usize))
    }

    pub fn first(&self) -> Option<Root> {
        self.terms.first().map(|t| t.0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.terms.iter().map(|t| t.1 as usize).sum()
    }

    pub fn height(&self) -> u32 {
        self.terms.iter().map(|t| t.1).max().unwrap_or(0)
    }

    pub fn multiplicity(&self, r: Root) -> u32 {
        self.terms
            .binary_search_by_key(&r, |t| t.0)
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    pub fn contains(&self, r: Root) -> bool {
        self.multiplicity(r) > 0
    }

    pub fn order(&self) -> Result<u64> {
        if self.is_empty() {
            return Err(Error::EmptySorou);
        }
        Ok(self.terms.iter().fold(1, |acc, t| lcm(acc, t.0.order)))
    }

    pub fn relative_order(&self) -> Result<u64> {
        let first = self.first().ok_or(Error::EmptySorou)?;
        let inv = first.inverse();
        Ok(self
            .terms
            .iter()
            .fold(1, |acc, t| lcm(acc, t.0.mul(inv).order)))
    }

    pub fn rotate(&self, z: Root) -> Sorou {
        Sorou::from_terms(self.terms.iter().map(|&(r, m)| (r.mul(z), m)))
    }

    /// `(-1) * self`.
    pub fn negate(&self) -> Sorou {
        self.rotate(Root::MINUS_ONE)
    }

    /// Multiset union.
    pub fn concat(&self, other: &Sorou) -> Sorou {
        Sorou::from_terms(self.terms.iter().chain(&other.terms).copied())
    }

    /// Multiset difference `self \ other`; `None` unless `other ≺ self`.
    pub fn remove(&self, other: &Sorou) -> Option<Sorou> {
        if !other.is_subsorou_of(self) {
            return None;
        }
        Some(Sorou::from_terms(
            self.terms
                .iter()
                .map(|&(r, m)| (r, m - other.multiplicity(r))),
        ))
    }

    /// `self - other`: common terms cancel, the rest of `other` is negated.
    pub fn subtract(&self, other: &Sorou) -> Sorou {
        let kept = self
            .terms
            .iter()
            .map(|&(r, m)| (r, m.saturating_sub(other.multiplicity(r))));
        let negated = other
            .terms
            .iter()
            .map(|&(r, m)| (r.neg(), m.saturating_sub(self.multiplicity(r))));
        Sorou::from_terms(kept.chain(negated))
    }

    /// `self ≺ other`.
    pub fn is_subsorou_of(&self, other: &Sorou) -> bool {
        self.terms
            .iter()
            .all(|&(r, m)| other.multiplicity(r) >= m)
    }

    /// Parity of a squarefree-order representative, as `(larger, smaller)`.
    pub fn parity(&self) -> Result<(usize, usize)> {
        let first = self.first().ok_or(Error::EmptySorou)?;
        let anchored = self.rotate(first.inverse());
        let n = anchored.order()?;
        if !is_squarefree(n) {
            return Err(Error::ParityUndefined(n));
        }
        let odd: usize = anchored
            .terms
            .iter()
            .filter(|t| t.0.order % 2 == 1)
            .map(|t| t.1 as usize)
            .sum();
        let even = anchored.weight() - odd;
        Ok((odd.max(even), odd.min(even)))
    }

    /// Every proper nonempty sub-multiset, each exactly once.
    pub fn proper_nonempty_subsorous(&self) -> Result<SubMultisets<'_>> {
        let w = self.weight();
        if w > SUBSET_GUARD {
            return Err(Error::SubsetExplosion {
                weight: w,
                limit: SUBSET_GUARD,
            });
        }
        Ok(SubMultisets {
            source: self,
            counts: vec![0; self.terms.len()],
            done: self.terms.is_empty(),
        })
    }

    /// Lexicographically least term-anchored rotation.
    pub fn canonicalize(&self) -> Sorou {
        self.canonical_rotation().0
    }

    /// Canonical form together with the rotation `z` producing it.
    pub fn canonical_rotation(&self) -> (Sorou, Root) {
        let mut best: Option<(Sorou, Root)> = None;
        for &(r, _) in &self.terms {
            let z = r.inverse();
            let cand = self.rotate(z);
            if best.as_ref().is_none_or(|(b, _)| cand < *b) {
                best = Some((cand, z));
            }
        }
        best.unwrap_or((Sorou::empty(), Root::ONE))
    }

    pub fn equivalent(&self, other: &Sorou) -> bool {
        self.weight() == other.weight() && self.canonicalize() == other.canonicalize()
    }

    /// Galois action `nu_n -> nu_n^k` on every term; `k` must be a unit
    /// modulo every term order.
    pub fn galois(&self, k: i64) -> Sorou {
        Sorou::from_terms(self.terms.iter().map(|&(r, m)| (r.pow(k), m)))
    }

    pub fn top_prime(&self) -> Result<u64> {
        let n = self.relative_order()?;
        if n == 1 {
            return Err(Error::NoTopPrime);
        }
        if !is_squarefree(n) {
            return Err(Error::NotSquarefree(n));
        }
        Ok(*prime_factors(n).last().unwrap())
    }

    /// Decomposition `h ~ sum_j nu_p^j f_j` at the top prime, normalized so
    /// that slot 0 holds a minimal-weight nonempty part containing 1.
    pub fn to_subsidiary(&self) -> Result<SubsidiaryDecomposition> {
        let p = self.top_prime()?;
        let anchored = self.canonicalize();
        let mut slots: Vec<Vec<(Root, u32)>> = vec![Vec::new(); p as usize];
        for &(r, m) in &anchored.terms {
            let (a, b) = split_root(r, p)?;
            let j = if a == Root::ONE {
                0
            } else {
                (a.power * (p / a.order)) as usize
            };
            slots[j].push((b, m));
        }
        let parts: Vec<Sorou> = slots.into_iter().map(Sorou::from_terms).collect();
        let shift = (0..p as usize)
            .filter(|&j| !parts[j].is_empty())
            .min_by_key(|&j| (parts[j].weight(), j))
            .expect("nonempty sorou has a nonempty part");
        let (_, z) = parts[shift].canonical_rotation();
        let parts = (0..p as usize)
            .map(|j| parts[(j + shift) % p as usize].rotate(z))
            .collect();
        Ok(SubsidiaryDecomposition { top_prime: p, parts })
    }

    pub fn from_subsidiary(d: &SubsidiaryDecomposition) -> Sorou {
        let p = d.top_prime;
        Sorou::from_terms(d.parts.iter().enumerate().flat_map(|(j, f)| {
            let z = Root::nu(p, j as i64);
            f.terms.iter().map(move |&(r, m)| (r.mul(z), m))
        }))
    }
}

impl Ord for Sorou {
    /// Lexicographic order of the expanded ascending term lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.roots().cmp(other.roots())
    }
}

impl PartialOrd for Sorou {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Sorou {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.roots().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for Sorou {
    type Err = Error;

    fn from_str(text: &str) -> Result<Sorou> {
        parse_sorou(text)
    }
}

pub fn render_sorou(s: &Sorou) -> String {
    s.to_string()
}

/// Parses `order:power(+order:power)*`. Terms are reduced and sorted, so
/// any spelling of a multiset is accepted; canonical text round-trips.
pub fn parse_sorou(text: &str) -> Result<Sorou> {
    parse_sorou_at(text, 0)
}

pub(crate) fn parse_sorou_at(text: &str, offset: usize) -> Result<Sorou> {
    let err = |position: usize, message: &str| Error::Parse {
        position: offset + position,
        message: message.to_string(),
    };
    if text.is_empty() {
        return Err(err(0, "expected a term"));
    }
    let mut roots = Vec::new();
    let mut pos = 0;
    for term in text.split('+') {
        let (o, p) = term
            .split_once(':')
            .ok_or_else(|| err(pos, "expected ORDER:POWER"))?;
        let power_at = pos + o.len() + 1;
        let o: i64 = parse_uint(o).ok_or_else(|| err(pos, "invalid order"))?;
        let p: i64 = parse_uint(p).ok_or_else(|| err(power_at, "invalid power"))?;
        roots.push(Root::new(o, p).map_err(|_| err(pos, "order must be positive"))?);
        pos += term.len() + 1;
    }
    Ok(Sorou::from_roots(roots))
}

fn parse_uint(s: &str) -> Option<i64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Iterator over proper nonempty sub-multisets (see
/// [`Sorou::proper_nonempty_subsorous`]).
pub struct SubMultisets<'a> {
    source: &'a Sorou,
    counts: Vec<u32>,
    done: bool,
}

impl SubMultisets<'_> {
    fn advance(&mut self) -> bool {
        for (c, &(_, m)) in self.counts.iter_mut().zip(&self.source.terms) {
            if *c < m {
                *c += 1;
                return true;
            }
            *c = 0;
        }
        false
    }
}

impl Iterator for SubMultisets<'_> {
    type Item = Sorou;

    fn next(&mut self) -> Option<Sorou> {
        while !self.done {
            if !self.advance() {
                self.done = true;
                return None;
            }
            let full = self
                .counts
                .iter()
                .zip(&self.source.terms)
                .all(|(&c, t)| c == t.1);
            if full {
                continue;
            }
            return Some(Sorou {
                terms: self
                    .counts
                    .iter()
                    .zip(&self.source.terms)
                    .filter(|(&c, _)| c > 0)
                    .map(|(&c, t)| (t.0, c))
                    .collect(),
            });
        }
        None
    }
}

/// `h = sum_j nu_p^j parts[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsidiaryDecomposition {
    pub top_prime: u64,
    pub parts: Vec<Sorou>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nu(n: u64, k: i64) -> Root {
        Root::nu(n, k)
    }

    fn s(text: &str) -> Sorou {
        text.parse().unwrap()
    }

    fn weight_six() -> Sorou {
        Sorou::from_roots([nu(5, 1), nu(5, 2), nu(5, 3), nu(5, 4), nu(6, 1), nu(6, 5)])
    }

    #[test]
    fn make_root_reduces() {
        assert_eq!(Root::new(6, 2).unwrap(), nu(3, 1));
        assert_eq!(Root::new(4, 0).unwrap(), Root::ONE);
        assert_eq!(Root::new(2, 3).unwrap(), Root::MINUS_ONE);
        assert_eq!(Root::new(0, 1), Err(Error::InvalidRoot(0)));
        assert_eq!(Root::new(5, -1).unwrap(), nu(5, 4));
    }

    #[test]
    fn rotation_examples() {
        let r3 = Sorou::r_p(3);
        assert_eq!(r3.rotate(nu(3, 1)), r3);
        assert_eq!(Sorou::r_p(2).rotate(nu(4, 1)), Sorou::from_roots([nu(4, 1), nu(4, 3)]));
        let pair = Sorou::from_roots([nu(6, 1), nu(6, 5)]);
        assert_eq!(pair.rotate(nu(7, 3)).weight(), 2);
    }

    #[test]
    fn orders() {
        assert_eq!(Sorou::from_roots([Root::ONE, nu(3, 1)]).order().unwrap(), 3);
        assert_eq!(Sorou::from_roots([nu(6, 1), nu(6, 5)]).order().unwrap(), 6);
        assert_eq!(weight_six().order().unwrap(), 30);
        assert_eq!(Sorou::empty().order(), Err(Error::EmptySorou));
        let pair = Sorou::from_roots([nu(5, 1), nu(5, 1).mul(nu(3, 1))]);
        assert_eq!(pair.relative_order().unwrap(), 3);
        assert_eq!(Sorou::r_p(2).relative_order().unwrap(), 2);
    }

    #[test]
    fn weight_height() {
        let h = Sorou::from_terms([(nu(3, 1), 2), (nu(3, 2), 1), (Root::MINUS_ONE, 3)]);
        assert_eq!((h.weight(), h.height()), (6, 3));
        assert_eq!((Sorou::r_p(7).weight(), Sorou::r_p(7).height()), (7, 1));
        assert_eq!((Sorou::empty().weight(), Sorou::empty().height()), (0, 0));
    }

    #[test]
    fn parities() {
        assert_eq!(weight_six().parity().unwrap(), (4, 2));
        assert_eq!(Sorou::r_p(3).parity().unwrap(), (3, 0));
        assert_eq!(Sorou::r_p(2).parity().unwrap(), (1, 1));
        let bad = Sorou::from_roots([Root::ONE, nu(4, 1)]);
        assert_eq!(bad.parity(), Err(Error::ParityUndefined(4)));
    }

    #[test]
    fn subtraction() {
        let r5 = Sorou::r_p(5);
        assert_eq!(
            r5.subtract(&Sorou::one()),
            Sorou::from_roots([nu(5, 1), nu(5, 2), nu(5, 3), nu(5, 4)])
        );
        let d = Sorou::one().subtract(&Sorou::from_roots([nu(3, 1), nu(3, 2)]));
        assert_eq!(d, Sorou::from_roots([Root::ONE, nu(6, 1), nu(6, 5)]));
        assert!(r5.subtract(&r5).is_empty());
    }

    #[test]
    fn subsorou_relation() {
        let a = Sorou::from_roots([Root::ONE, nu(3, 1)]);
        assert!(Sorou::one().is_subsorou_of(&a));
        assert!(!Sorou::from_terms([(Root::ONE, 2)]).is_subsorou_of(&a));
        assert!(Sorou::empty().is_subsorou_of(&a));
    }

    #[test]
    fn subset_stream() {
        let a = Sorou::from_roots([Root::ONE, nu(3, 1)]);
        let subs: Vec<Sorou> = a.proper_nonempty_subsorous().unwrap().collect();
        assert_eq!(subs.len(), 2);
        assert!(subs.contains(&Sorou::one()) && subs.contains(&Sorou::from_roots([nu(3, 1)])));
        let two = Sorou::from_terms([(Root::ONE, 2)]);
        let subs: Vec<Sorou> = two.proper_nonempty_subsorous().unwrap().collect();
        assert_eq!(subs, vec![Sorou::one()]);
        assert_eq!(Sorou::r_p(3).proper_nonempty_subsorous().unwrap().count(), 6);
        let big = Sorou::from_terms([(Root::ONE, 25)]);
        assert!(matches!(
            big.proper_nonempty_subsorous(),
            Err(Error::SubsetExplosion { weight: 25, .. })
        ));
    }

    #[test]
    fn canonical_forms() {
        let c = Sorou::from_roots([nu(3, 1), nu(3, 2)]).canonicalize();
        assert_eq!(c, Sorou::from_roots([Root::ONE, nu(3, 1)]));
        assert_eq!(Sorou::r_p(5).canonicalize(), Sorou::r_p(5));
        let h = weight_six();
        assert!(h.equivalent(&h.rotate(nu(7, 3))));
        assert!(!Sorou::r_p(3).equivalent(&Sorou::r_p(5)));
        let a = Sorou::from_roots([Root::ONE, nu(3, 1)]);
        assert!(a.equivalent(&a.rotate(nu(5, 1))));
    }

    #[test]
    fn split_roots() {
        let r = nu(15, 2);
        let (a, b) = split_root(r, 5).unwrap();
        assert_eq!(a.order(), 5);
        assert_eq!(b.order(), 3);
        assert_eq!(a.mul(b), r);
        assert_eq!(split_root(nu(7, 3), 7).unwrap(), (nu(7, 3), Root::ONE));
        assert_eq!(split_root(Root::ONE, 7).unwrap(), (Root::ONE, Root::ONE));
        assert!(split_root(nu(9, 1), 3).is_err());
        for o in [6u64, 10, 30, 42, 105, 210] {
            for k in 0..o as i64 {
                let r = nu(o, k);
                for p in prime_factors(o) {
                    let (a, b) = split_root(r, p).unwrap();
                    assert_eq!(a.mul(b), r);
                    assert_ne!(b.order() % p, 0);
                }
            }
        }
    }

    #[test]
    fn subsidiary_examples() {
        let d = Sorou::r_p(5).to_subsidiary().unwrap();
        assert_eq!(d.top_prime, 5);
        assert!(d.parts.iter().all(|f| *f == Sorou::one()));

        let d = weight_six().to_subsidiary().unwrap();
        assert_eq!(d.top_prime, 5);
        let ones = d.parts.iter().filter(|f| **f == Sorou::one()).count();
        assert_eq!(ones, 4);
        let other = d.parts.iter().find(|f| f.weight() == 2).unwrap();
        assert_eq!(*other, Sorou::from_roots([nu(6, 1), nu(6, 5)]));
        assert_eq!(d.parts[0], Sorou::one());
        assert!(Sorou::from_subsidiary(&d).equivalent(&weight_six()));

        let all_ones = SubsidiaryDecomposition {
            top_prime: 3,
            parts: vec![Sorou::one(); 3],
        };
        assert_eq!(Sorou::from_subsidiary(&all_ones), Sorou::r_p(3));
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(s("1:0+3:1+3:2"), Sorou::r_p(3));
        assert_eq!(s("2:1+2:1"), Sorou::from_terms([(Root::MINUS_ONE, 2)]));
        assert_eq!(Sorou::r_p(3).to_string(), "1:0+3:1+3:2");
        assert_eq!(s("3:2+6:2+1:0"), s("1:0+3:1+3:2"));
        for bad in ["", "1:0+", "x", "1:0+3", "0:1", "3:-1"] {
            assert!(bad.parse::<Sorou>().is_err(), "{bad}");
        }
        match "1:0+3:x".parse::<Sorou>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn expanded_ordering() {
        let a = Sorou::from_terms([(Root::ONE, 2), (nu(3, 1), 1)]);
        let b = Sorou::from_roots([Root::ONE, nu(2, 1)]);
        assert!(a < b);
    }
}
