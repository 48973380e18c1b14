//! Exact arithmetic in `Z[x]/(Phi_N)`: cyclotomic polynomials, residues of
//! sorou values, and the vanishing test.
//!
//! The value of a sorou whose terms all have order dividing `N` is the
//! polynomial `sum_k c_k x^k` evaluated at `x = e^{2 pi i / N}`. Because `Phi_N`
//! is the minimal polynomial of that point and is monic with integer
//! coefficients, the remainder modulo `Phi_N` is an exact, unique
//! representation of the value: the value is zero iff the remainder is the
//! zero vector.
//!
//! Polynomial arithmetic is generic over the coefficient ring. Cyclotomic
//! polynomials are computed and memoized with arbitrary-precision integers;
//! the hot residue path uses `i64` reduction tables derived from them.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{Float, FloatConst, FromPrimitive, Signed, ToPrimitive};

use crate::arith::{divisors, totient};
use crate::error::{Error, Result};
use crate::sorou::Sorou;

/// Integer-like coefficient ring for [`Polynomial`].
pub trait Coefficient:
    Clone + Integer + Signed + FromPrimitive + ToPrimitive + Debug + Hash + Send + Sync + 'static
{
}

impl<T> Coefficient for T where
    T: Clone + Integer + Signed + FromPrimitive + ToPrimitive + Debug + Hash + Send + Sync + 'static
{
}

/// Dense univariate polynomial, lowest degree first. The highest stored
/// coefficient is nonzero unless the polynomial is zero (empty vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coefficients: Vec<T>,
}

impl<T: Coefficient> Polynomial<T> {
    pub fn new(mut coefficients: Vec<T>) -> Self {
        while coefficients.last().is_some_and(|c| c.is_zero()) {
            coefficients.pop();
        }
        Polynomial { coefficients }
    }

    pub fn zero() -> Self {
        Polynomial {
            coefficients: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Polynomial {
            coefficients: vec![T::one()],
        }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![T::zero(); n + 1];
        c[0] = -T::one();
        c[n] = c[n].clone() + T::one();
        Polynomial::new(c)
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Polynomial::new(out)
    }

    /// Quotient and remainder by a divisor whose leading coefficient is a unit
    /// (`±1`). Panics on a zero divisor or a non-unit leading coefficient.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.coefficients[d].clone();
        assert!(lead.is_one() || (-lead.clone()).is_one(), "divisor must be monic up to sign");
        if self.coefficients.len() <= d {
            return (Self::zero(), self.clone());
        }
        let support: Vec<(usize, T)> = divisor.coefficients[..d]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        let mut rem = self.coefficients.clone();
        let mut quot = vec![T::zero(); rem.len() - d];
        for top in (d..rem.len()).rev() {
            let c = std::mem::replace(&mut rem[top], T::zero());
            if c.is_zero() {
                continue;
            }
            let q = c * lead.clone();
            let shift = top - d;
            for (i, dc) in &support {
                rem[shift + i] = rem[shift + i].clone() - q.clone() * dc.clone();
            }
            quot[shift] = q;
        }
        rem.truncate(d);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Converts coefficients into another ring, failing on overflow.
    pub fn try_convert<U: Coefficient>(&self) -> Option<Polynomial<U>> {
        let coefficients = self
            .coefficients
            .iter()
            .map(|c| c.to_i128().and_then(U::from_i128))
            .collect::<Option<Vec<U>>>()?;
        Some(Polynomial { coefficients })
    }

    /// Largest absolute coefficient value, as `i128` when it fits.
    pub fn height(&self) -> Option<i128> {
        self.coefficients
            .iter()
            .map(|c| c.abs().to_i128())
            .try_fold(0i128, |acc, c| c.map(|c| acc.max(c)))
    }
}

/// Cyclotomic polynomial `Phi_n` with arbitrary-precision coefficients,
/// memoized process-wide.
pub fn cyclotomic_poly(n: u64) -> Arc<IntPolynomial> {
    assert!(n >= 1, "cyclotomic_poly: n must be positive");
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<IntPolynomial>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.read().unwrap().get(&n) {
        return hit.clone();
    }
    let mut poly = IntPolynomial::x_pow_minus_one(n as usize);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_poly(d);
        poly = poly
            .exact_div(&phi_d)
            .expect("x^n - 1 is divisible by Phi_d for every d | n");
    }
    let poly = Arc::new(poly);
    cache.write().unwrap().entry(n).or_insert(poly).clone()
}

/// `Phi_n` converted into the coefficient ring `T`.
pub fn cyclotomic_poly_in<T: Coefficient>(n: u64) -> Result<Polynomial<T>> {
    cyclotomic_poly(n)
        .try_convert()
        .ok_or(Error::CoefficientOverflow(n))
}

/// Remainder of a sorou value modulo `Phi_N`, coefficients lowest degree
/// first and of length `phi(N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueOf<T> {
    modulus_order: u64,
    coefficients: Vec<T>,
}

impl<T: Coefficient> ResidueOf<T> {
    pub fn modulus_order(&self) -> u64 {
        self.modulus_order
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_zero())
    }

    /// Componentwise sum; both residues must share a modulus.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.modulus_order, other.modulus_order);
        ResidueOf {
            modulus_order: self.modulus_order,
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.modulus_order, other.modulus_order);
        ResidueOf {
            modulus_order: self.modulus_order,
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

/// Rows `x^a mod Phi_N` for `a` in `0..N`, stored flat.
pub struct ReductionTable {
    order: u64,
    width: usize,
    rows: Vec<i64>,
}

/// Tables above this many entries are not built; residues fall back to
/// polynomial division.
const TABLE_ENTRY_LIMIT: u64 = 1 << 24;

impl ReductionTable {
    fn build(n: u64) -> Result<Self> {
        let phi: Polynomial<i64> = cyclotomic_poly_in(n)?;
        let width = totient(n) as usize;
        let low = &phi.coefficients()[..width];
        let mut rows = vec![0i64; n as usize * width];
        let mut cur = vec![0i64; width];
        cur[0] = 1;
        for a in 0..n as usize {
            rows[a * width..(a + 1) * width].copy_from_slice(&cur);
            let carry = cur[width - 1];
            for i in (1..width).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if carry != 0 {
                for (c, l) in cur.iter_mut().zip(low) {
                    *c -= carry * l;
                }
            }
        }
        Ok(ReductionTable {
            order: n,
            width,
            rows,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// `phi(N)`, the length of every row.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn row(&self, exponent: u64) -> &[i64] {
        let a = (exponent % self.order) as usize;
        &self.rows[a * self.width..(a + 1) * self.width]
    }

    /// `acc += times * x^exponent (mod Phi_N)`.
    pub fn accumulate(&self, acc: &mut [i64], exponent: u64, times: i64) {
        for (a, r) in acc.iter_mut().zip(self.row(exponent)) {
            *a += times * r;
        }
    }
}

/// Memoized reduction table for `N`, or `None` when it would be too large.
pub fn reduction_table(n: u64) -> Option<Arc<ReductionTable>> {
    if n.saturating_mul(totient(n)) > TABLE_ENTRY_LIMIT {
        return None;
    }
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<ReductionTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.read().unwrap().get(&n) {
        return Some(hit.clone());
    }
    let table = Arc::new(ReductionTable::build(n).ok()?);
    Some(cache.write().unwrap().entry(n).or_insert(table).clone())
}

/// Exponent of `x` representing each term of `s` at modulus `n`, with
/// multiplicities. Requires `order(s) | n`.
fn lifted_terms(s: &Sorou, n: u64) -> impl Iterator<Item = (u64, u32)> + '_ {
    s.distinct().iter().map(move |&(root, mult)| {
        debug_assert_eq!(n % root.order(), 0, "order of term must divide the modulus");
        (root.power() * (n / root.order()), mult)
    })
}

/// Residue of `s` at modulus `n` using any coefficient ring, by dense
/// polynomial division. Independent of the table path.
pub fn residue_in<T: Coefficient>(s: &Sorou, n: u64) -> Result<ResidueOf<T>> {
    let mut dense = vec![T::zero(); n as usize];
    for (e, mult) in lifted_terms(s, n) {
        dense[e as usize] = dense[e as usize].clone() + T::from_u32(mult).unwrap();
    }
    let phi = cyclotomic_poly_in::<T>(n)?;
    let (_, rem) = Polynomial::new(dense).div_rem(&phi);
    let width = totient(n) as usize;
    let mut coefficients = rem.coefficients;
    coefficients.resize(width, T::zero());
    Ok(ResidueOf {
        modulus_order: n,
        coefficients,
    })
}

/// Residue of `s` at modulus `n`; every term order must divide `n`.
pub fn residue_at(s: &Sorou, n: u64) -> Residue {
    match reduction_table(n) {
        Some(table) => {
            let mut acc = vec![0i64; table.width()];
            for (e, mult) in lifted_terms(s, n) {
                table.accumulate(&mut acc, e, mult as i64);
            }
            ResidueOf {
                modulus_order: n,
                coefficients: acc,
            }
        }
        None => residue_in::<i64>(s, n).expect("Phi_n coefficients fit in i64"),
    }
}

/// Residue of `s` at `N = order(s)`. The empty sorou maps to the zero residue
/// at `N = 1`.
pub fn residue(s: &Sorou) -> Residue {
    let n = s.order().unwrap_or(1);
    residue_at(s, n)
}

/// Magnitude below which the floating prefilter defers to the exact test.
pub const PREFILTER_THRESHOLD: f64 = 1e-6;

/// Exact vanishing test.
pub fn is_vanishing(s: &Sorou) -> Result<bool> {
    let first = s.first().ok_or(Error::EmptySorou)?;
    // A nonzero float sum with error far below the threshold proves the value
    // is nonzero; the exact test stays authoritative otherwise.
    let approx = numeric_value::<f64>(s).norm();
    if approx >= PREFILTER_THRESHOLD && (s.weight() as f64) * 1e-13 < PREFILTER_THRESHOLD {
        return Ok(false);
    }
    let anchored = s.rotate(first.inverse());
    Ok(residue(&anchored).is_zero())
}

/// Exact equality of values, compared as residues at the common order.
pub fn values_equal(a: &Sorou, b: &Sorou) -> Result<bool> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySorou);
    }
    let n = crate::arith::lcm(a.order()?, b.order()?);
    Ok(residue_at(a, n) == residue_at(b, n))
}

/// Floating-point value of `s`. Only a prefilter; never authoritative.
pub fn numeric_value<F: Float + FloatConst>(s: &Sorou) -> Complex<F> {
    let tau = F::TAU();
    s.distinct()
        .iter()
        .fold(Complex::new(F::zero(), F::zero()), |acc, &(root, mult)| {
            let angle = tau * F::from(root.power()).unwrap() / F::from(root.order()).unwrap();
            let m = F::from(mult).unwrap();
            acc + Complex::new(angle.cos() * m, angle.sin() * m)
        })
}

pub type IntPolynomial = Polynomial<BigInt>;
pub type Residue = ResidueOf<i64>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;
    use crate::sorou::Root;

    fn root(o: i64, p: i64) -> Root {
        Root::new(o, p).unwrap()
    }

    #[test]
    fn small_cyclotomics() {
        let c = |n| cyclotomic_poly_in::<i64>(n).unwrap().coefficients().to_vec();
        assert_eq!(c(1), vec![-1, 1]);
        assert_eq!(c(2), vec![1, 1]);
        assert_eq!(c(3), vec![1, 1, 1]);
        assert_eq!(c(4), vec![1, 0, 1]);
        assert_eq!(c(6), vec![1, -1, 1]);
        assert_eq!(c(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn product_identity_and_degree_up_to_120() {
        for n in 1..=120u64 {
            let mut prod = IntPolynomial::one();
            for d in divisors(n) {
                prod = prod.mul(&cyclotomic_poly(d));
            }
            assert_eq!(prod, IntPolynomial::x_pow_minus_one(n as usize), "n = {n}");
            assert_eq!(cyclotomic_poly(n).degree(), Some(totient(n) as usize));
        }
    }

    #[test]
    fn prime_cyclotomic_is_all_ones() {
        for p in (2..60).filter(|&p| is_prime(p)) {
            let c = cyclotomic_poly_in::<i64>(p).unwrap();
            assert!(c.coefficients().iter().all(|&x| x == 1));
        }
    }

    #[test]
    fn generic_coefficients_agree() {
        let big = cyclotomic_poly(105);
        let small: Polynomial<i64> = cyclotomic_poly_in(105).unwrap();
        let wide: Polynomial<i128> = cyclotomic_poly_in(105).unwrap();
        assert_eq!(small.try_convert::<BigInt>().unwrap(), *big);
        assert_eq!(wide.try_convert::<i64>().unwrap(), small);
    }

    #[test]
    fn table_rows_match_division() {
        for n in [1u64, 2, 6, 12, 30, 105] {
            let table = reduction_table(n).unwrap();
            let phi = cyclotomic_poly_in::<i64>(n).unwrap();
            for a in 0..2 * n {
                let mut dense = vec![0i64; a as usize + 1];
                dense[a as usize] = 1;
                let (_, r) = Polynomial::new(dense).div_rem(&phi);
                let mut expect = r.coefficients().to_vec();
                expect.resize(table.width(), 0);
                assert_eq!(table.row(a), &expect[..], "n={n} a={a}");
            }
        }
    }

    #[test]
    fn residue_examples() {
        let r2 = Sorou::from_roots([Root::ONE, root(2, 1)]);
        let res = residue(&r2);
        assert_eq!(res.modulus_order(), 2);
        assert!(res.is_zero());
        let not = Sorou::from_roots([Root::ONE, root(3, 1)]);
        assert!(!residue(&not).is_zero());
        let h = Sorou::from_roots([
            root(5, 1),
            root(5, 2),
            root(5, 3),
            root(5, 4),
            root(6, 1),
            root(6, 5),
        ]);
        assert!(residue(&h).is_zero());
        assert_eq!(residue(&h), residue_in::<BigInt>(&h, 30).map(|r| ResidueOf {
            modulus_order: r.modulus_order,
            coefficients: r.coefficients.iter().map(|c| c.to_i64().unwrap()).collect(),
        }).unwrap());
    }

    #[test]
    fn vanishing_and_equality() {
        assert_eq!(is_vanishing(&Sorou::empty()), Err(Error::EmptySorou));
        assert!(is_vanishing(&Sorou::r_p(3)).unwrap());
        let v = Sorou::from_roots([Root::ONE, root(2, 1), root(2, 1)]);
        assert!(!is_vanishing(&v).unwrap());
        let one = Sorou::one();
        let minus = Sorou::from_roots([root(6, 1), root(6, 5)]);
        assert!(values_equal(&one, &one).unwrap());
        assert!(values_equal(&one, &minus).unwrap());
        assert!(!values_equal(&one, &Sorou::from_roots([root(3, 1)])).unwrap());
    }

    #[test]
    fn numeric_examples() {
        let z = numeric_value::<f64>(&Sorou::r_p(2));
        assert!(z.norm() < 1e-12);
        let one = numeric_value::<f64>(&Sorou::one());
        assert!((one.re - 1.0).abs() < 1e-15 && one.im.abs() < 1e-15);
        assert!(numeric_value::<f64>(&Sorou::r_p(5)).norm() < 1e-12);
        assert!(numeric_value::<f32>(&Sorou::r_p(5)).norm() < 1e-5);
    }
}
