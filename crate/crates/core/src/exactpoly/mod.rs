//! Multivariate polynomials and Laurent polynomials with exact rational
//! coefficients.
//!
//! [`Poly`] is generic over the exponent type: `u32` gives ordinary
//! polynomials in `x1..xN` ([`ExactPoly`]), `i32` gives Laurent polynomials
//! in `t1..tN` ([`LaurentPoly`]). Terms are kept in graded lexicographic
//! order with no zero coefficients, so structural equality is equality of
//! polynomials.

mod cayley;
mod parse;

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{WeylAction, WeylElement};

pub use cayley::{cayley_rewrite, CayleyDecomposition};
pub use parse::{parse_poly, parse_rational};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent type of a [`Poly`].
pub trait Exponent: Copy + Ord + Eq + Hash + fmt::Debug + Default + Send + Sync + 'static {
    const SIGNED: bool;
    /// Variable letter used by `Display`.
    const VAR: char;
    fn to_i64(self) -> i64;
    fn from_i64(v: i64) -> Option<Self>;
}

impl Exponent for u32 {
    const SIGNED: bool = false;
    const VAR: char = 'x';
    fn to_i64(self) -> i64 {
        self as i64
    }
    fn from_i64(v: i64) -> Option<Self> {
        u32::try_from(v).ok()
    }
}

impl Exponent for i32 {
    const SIGNED: bool = true;
    const VAR: char = 't';
    fn to_i64(self) -> i64 {
        self as i64
    }
    fn from_i64(v: i64) -> Option<Self> {
        i32::try_from(v).ok()
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial<E>(Vec<E>);

impl<E: Exponent> Monomial<E> {
    pub fn new(exps: Vec<E>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[E] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|e| e.to_i64()).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|e| *e == E::default())
    }
}

impl<E: Exponent> PartialOrd for Monomial<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<E: Exponent> Ord for Monomial<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<E: Exponent> {
    nvars: usize,
    terms: BTreeMap<Monomial<E>, Rational>,
}

pub type ExactPoly = Poly<u32>;
pub type LaurentPoly = Poly<i32>;

impl<E: Exponent> Poly<E> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![E::default(); nvars], c);
        p
    }

    /// The variable with 0-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![E::default(); nvars];
        exps[i] = E::from_i64(1).unwrap();
        let mut p = Self::zero(nvars);
        p.add_term(exps, Rational::one());
        p
    }

    pub fn monomial(exps: Vec<E>, c: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<E>, Rational)>,
    {
        let mut acc: HashMap<Vec<E>, Rational> = HashMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), nvars, "exponent vector of wrong length");
            *acc.entry(exps).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, acc: HashMap<Vec<E>, Rational>) -> Self {
        Poly {
            nvars,
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (Monomial(e), c))
                .collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[E], &Rational)> {
        self.terms.iter().map(|(m, c)| (m.exponents(), c))
    }

    pub fn leading_term(&self) -> Option<(&[E], &Rational)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.exponents(), c))
    }

    pub fn coeff(&self, exps: &[E]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![E::default(); self.nvars])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn add_term(&mut self, exps: Vec<E>, c: Rational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(Monomial(exps)) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    fn check_nvars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let mut acc: HashMap<Vec<E>, Rational> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps: Vec<E> = ma
                    .0
                    .iter()
                    .zip(&mb.0)
                    .map(|(a, b)| E::from_i64(a.to_i64() + b.to_i64()).expect("exponent overflow"))
                    .collect();
                *acc.entry(exps).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Ok(Self::from_map(self.nvars, acc))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Rewrites every exponent vector through `f`, merging collisions.
    pub fn map_monomials<F, G>(&self, nvars: usize, mut f: F) -> Poly<G>
    where
        G: Exponent,
        F: FnMut(&[E]) -> (Vec<G>, Rational),
    {
        Poly::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let (e, s) = f(&m.0);
                (e, c * s)
            }),
        )
    }

    /// Sorted list of total degrees that occur.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(|m| m.degree()).collect();
        d.dedup();
        d
    }

    pub fn homogeneous_component(&self, d: i64) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    /// Maps variable `i` to `images[i]`. Negative exponents require the image
    /// to be a monomial.
    pub fn substitute<F: Exponent>(&self, images: &[Poly<F>]) -> Result<Poly<F>> {
        if images.len() != self.nvars {
            return Err(Error::VariableCountMismatch(self.nvars, images.len()));
        }
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::VariableCountMismatch(target, bad.nvars));
        }
        let mut inverses: Vec<Option<Poly<F>>> = vec![None; images.len()];
        let mut power_cache: HashMap<(usize, i64), Poly<F>> = HashMap::new();
        let mut acc: HashMap<Vec<F>, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Poly::<F>::constant(target, c.clone());
            for (i, e) in m.0.iter().enumerate() {
                let e = e.to_i64();
                if e == 0 {
                    continue;
                }
                if e < 0 && inverses[i].is_none() {
                    inverses[i] = Some(images[i].monomial_inverse()?);
                }
                let factor = power_cache.entry((i, e)).or_insert_with(|| {
                    if e > 0 {
                        images[i].pow(e as u32)
                    } else {
                        inverses[i].as_ref().unwrap().pow((-e) as u32)
                    }
                });
                term = &term * &*factor;
            }
            for (mono, v) in term.terms {
                *acc.entry(mono.0).or_insert_with(Rational::zero) += v;
            }
        }
        Ok(Poly::from_map(target, acc))
    }

    fn monomial_inverse(&self) -> Result<Self> {
        if self.len() != 1 || !E::SIGNED {
            return Err(Error::NotInvertible(self.to_string()));
        }
        let (exps, c) = self.leading_term().unwrap();
        let inv: Vec<E> = exps
            .iter()
            .map(|e| E::from_i64(-e.to_i64()).unwrap())
            .collect();
        Ok(Self::monomial(inv, c.recip()))
    }

    /// Same polynomial with `nvars` variables; dropped variables must not occur.
    pub fn with_nvars(&self, nvars: usize) -> Self {
        self.map_monomials(nvars, |e| {
            let mut v = vec![E::default(); nvars];
            for (i, x) in e.iter().enumerate() {
                if i < nvars {
                    v[i] = *x;
                } else {
                    assert!(*x == E::default(), "dropping a variable that occurs");
                }
            }
            (v, Rational::one())
        })
    }

    pub fn coefficients_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn fmt_with(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, e)| e.to_i64() != 0)
                    .map(|(j, e)| match e.to_i64() {
                        1 => format!("{var}{}", j + 1),
                        k => format!("{var}{}^{k}", j + 1),
                    })
                    .collect();
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl ExactPoly {
    /// Maximal total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0) as u32
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        self.map_monomials(self.nvars, |e| {
            (e.iter().map(|x| *x as i32).collect(), Rational::one())
        })
    }

    /// Linear form `Σ coeffs[i]·x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            n,
            coeffs.iter().enumerate().map(|(i, c)| {
                let mut e = vec![0u32; n];
                e[i] = 1;
                (e, c.clone())
            }),
        )
    }
}

impl LaurentPoly {
    /// `Some` when every exponent is nonnegative.
    pub fn try_to_poly(&self) -> Option<ExactPoly> {
        if self.terms.keys().any(|m| m.0.iter().any(|e| *e < 0)) {
            return None;
        }
        Some(self.map_monomials(self.nvars, |e| {
            (e.iter().map(|x| *x as u32).collect(), Rational::one())
        }))
    }

    /// `t_i - t_i^{-1}`.
    pub fn cayley_coordinate(nvars: usize, i: usize) -> Self {
        let mut up = vec![0; nvars];
        up[i] = 1;
        let mut down = vec![0; nvars];
        down[i] = -1;
        Self::from_terms(nvars, [(up, rat(1)), (down, rat(-1))])
    }

    /// Restricts to `t_N = (t_1⋯t_{N-1})^{-1}`, returning a polynomial in
    /// the first `N-1` variables.
    pub fn restrict_determinant_one(&self) -> Self {
        let n = self.nvars;
        assert!(n >= 2);
        self.map_monomials(n - 1, |e| {
            let last = e[n - 1];
            (
                e[..n - 1].iter().map(|x| x - last).collect(),
                Rational::one(),
            )
        })
    }
}

impl<E: Exponent> fmt::Display for Poly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(E::VAR))
    }
}

impl<E: Exponent> Add for &Poly<E> {
    type Output = Poly<E>;
    fn add(self, rhs: &Poly<E>) -> Poly<E> {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl<E: Exponent> Sub for &Poly<E> {
    type Output = Poly<E>;
    fn sub(self, rhs: &Poly<E>) -> Poly<E> {
        self.try_sub(rhs).expect("variable count mismatch")
    }
}

impl<E: Exponent> Mul for &Poly<E> {
    type Output = Poly<E>;
    fn mul(self, rhs: &Poly<E>) -> Poly<E> {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl<E: Exponent> Add for Poly<E> {
    type Output = Poly<E>;
    fn add(self, rhs: Poly<E>) -> Poly<E> {
        &self + &rhs
    }
}

impl<E: Exponent> Sub for Poly<E> {
    type Output = Poly<E>;
    fn sub(self, rhs: Poly<E>) -> Poly<E> {
        &self - &rhs
    }
}

impl<E: Exponent> Mul for Poly<E> {
    type Output = Poly<E>;
    fn mul(self, rhs: Poly<E>) -> Poly<E> {
        &self * &rhs
    }
}

impl<E: Exponent> Neg for &Poly<E> {
    type Output = Poly<E>;
    fn neg(self) -> Poly<E> {
        self.scale(&rat(-1))
    }
}

impl<E: Exponent> Neg for Poly<E> {
    type Output = Poly<E>;
    fn neg(self) -> Poly<E> {
        -&self
    }
}

/// `e_k` in the listed (0-based) variables.
pub fn elementary_symmetric(k: usize, vars: &[usize], nvars: usize) -> Result<ExactPoly> {
    if k > vars.len() {
        return Err(Error::BadIndex {
            index: k,
            max: vars.len(),
        });
    }
    if let Some(&v) = vars.iter().find(|&&v| v >= nvars) {
        return Err(Error::BadIndex {
            index: v,
            max: nvars.saturating_sub(1),
        });
    }
    // coefficient of q^k in Π (1 + x_v q)
    let mut coeffs = vec![ExactPoly::one(nvars)];
    for &v in vars {
        let x = ExactPoly::var(nvars, v);
        let mut next = coeffs.clone();
        next.push(ExactPoly::zero(nvars));
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] = &next[j + 1] + &(c * &x);
        }
        coeffs = next;
        coeffs.truncate(k + 1);
    }
    Ok(coeffs
        .get(k)
        .cloned()
        .unwrap_or_else(|| ExactPoly::zero(nvars)))
}

/// `Σ x_v^k` over the listed variables.
pub fn power_sum(k: u32, vars: &[usize], nvars: usize) -> ExactPoly {
    vars.iter().fold(ExactPoly::zero(nvars), |acc, &v| {
        &acc + &ExactPoly::var(nvars, v).pow(k)
    })
}

/// True iff `f` is fixed by every listed element.
pub fn is_invariant<P>(f: &P, group: &[WeylElement]) -> Result<bool>
where
    P: WeylAction + PartialEq,
{
    for w in group {
        if w.act(f)? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str, n: usize) -> LaurentPoly {
        parse_poly(s, 't', Some(n)).unwrap()
    }

    fn xp(s: &str, n: usize) -> ExactPoly {
        parse_poly(s, 'x', Some(n)).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = lp("t1 - t1^-1", 1);
        let b = lp("t1 + t1^-1", 1);
        assert_eq!(&a * &b, lp("t1^2 - t1^-2", 1));
    }

    #[test]
    fn substitute_into_cayley_coordinates() {
        let f = xp("2*x1", 1);
        let img = LaurentPoly::cayley_coordinate(1, 0).scale(&ratio(1, 2));
        assert_eq!(f.substitute(&[img]).unwrap(), lp("t1 - t1^-1", 1));
    }

    #[test]
    fn cancellation_leaves_empty_map() {
        let p = xp("3*x1^2 - x2 + 5", 2);
        let z = &p + &(-&p);
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn mismatched_variable_counts() {
        let a = ExactPoly::var(2, 0);
        let b = ExactPoly::var(3, 0);
        assert_eq!(a.try_add(&b), Err(Error::VariableCountMismatch(2, 3)));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn elementary_symmetric_examples() {
        assert_eq!(
            elementary_symmetric(1, &[0, 1], 2).unwrap(),
            xp("x1 + x2", 2)
        );
        assert_eq!(
            elementary_symmetric(2, &[0, 1, 2], 3).unwrap(),
            xp("x1*x2 + x1*x3 + x2*x3", 3)
        );
        assert_eq!(
            elementary_symmetric(0, &[0, 1, 2], 3).unwrap(),
            ExactPoly::one(3)
        );
        assert!(matches!(
            elementary_symmetric(3, &[0, 1], 2),
            Err(Error::BadIndex { .. })
        ));
    }

    #[test]
    fn laurent_substitution_needs_monomial_images() {
        let f = lp("t1^-1", 1);
        let ok = f.substitute(&[lp("2*t1^2", 1)]).unwrap();
        assert_eq!(ok, lp("1/2*t1^-2", 1));
        assert!(matches!(
            f.substitute(&[lp("t1 + 1", 1)]),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn display_is_graded_lex_descending() {
        let p = xp("5 + x2 + 3/2*x1^2 - x1*x2", 2);
        assert_eq!(p.to_string(), "3/2*x1^2 - x1*x2 + x2 + 5");
        let q = lp("3/2*t1^2*t2^-1 - t1^-1", 2);
        assert_eq!(q.to_string(), "3/2*t1^2*t2^-1 - t1^-1");
    }

    #[test]
    fn determinant_one_restriction() {
        let p = lp("t1 - t2", 2);
        assert_eq!(p.restrict_determinant_one(), lp("t1 - t1^-1", 1));
    }
}
