//! Arithmetic in GF(p^m).
//!
//! Elements are encoded as integers in `[0, q)` whose base-p digits are the
//! polynomial coefficients, constant term in the least-significant digit.
//! Index 0 is the additive identity and index 1 the multiplicative identity.
//!
//! Multiplication goes through exp/log tables built from a primitive element;
//! addition is XOR in characteristic 2, a dense table for small odd-order
//! fields, and digit-wise arithmetic otherwise.

use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// Fields up to this order get a dense addition table.
const DENSE_ADD_LIMIT: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field exponent must be at least 1")]
    ZeroExponent,
    #[error("field order {p}^{m} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge { p: u32, m: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("reduction polynomial must be monic of degree {degree} (got coefficients {coeffs:?})")]
    BadPolynomial { degree: u32, coeffs: Vec<u32> },
    #[error("reduction polynomial {0:?} is reducible")]
    Reducible(Vec<u32>),
    #[error("element index {index} is out of range for GF({q})")]
    OutOfRange { index: u32, q: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// A field element, stored as its integer encoding.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    /// Monic reduction polynomial, constant term first, length m + 1.
    poly: Vec<u32>,
    neg: Vec<u16>,
    add: Option<Vec<u16>>,
    /// exp[i] = g^i for i in [0, 2(q-1)), so log sums need no reduction.
    exp: Vec<u16>,
    log: Vec<u32>,
    inv: Vec<u16>,
}

/// A concrete finite field GF(p^m). Cloning is cheap (shared tables).
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Inner>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.inner.p)
            .field("m", &self.inner.m)
            .field("reduction_poly", &self.inner.poly)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.poly == other.inner.poly)
    }
}

impl Eq for FieldSpec {}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("FieldSpec", 4)?;
        s.serialize_field("p", &self.inner.p)?;
        s.serialize_field("m", &self.inner.m)?;
        s.serialize_field("q", &self.inner.q)?;
        s.serialize_field("reduction_poly", &self.inner.poly)?;
        s.end()
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, m)` with `q = p^m`, p prime.
pub fn prime_power(q: u32) -> Result<(u32, u32), FieldError> {
    if q < 2 {
        return Err(FieldError::NotPrimePower(q));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    if rest != 1 {
        return Err(FieldError::NotPrimePower(q));
    }
    Ok((p, m))
}

fn checked_order(p: u32, m: u32) -> Result<u32, FieldError> {
    let q = p.checked_pow(m).ok_or(FieldError::TooLarge { p, m })?;
    if q > MAX_ORDER {
        return Err(FieldError::TooLarge { p, m });
    }
    Ok(q)
}

// Polynomials over GF(p) as coefficient vectors, constant term first.

fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Remainder of `a` modulo the monic polynomial `b`.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        for (i, &c) in b.iter().enumerate() {
            let x = &mut r[shift + i];
            *x = ((*x as u64 + p as u64 - (lead as u64 * c as u64) % p as u64) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    poly_rem(&prod, modulus, p)
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as usize).pow(d as u32);
        for tail in 0..count {
            let mut g = digits_of(tail as u32, p, d);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn digits_of(mut x: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % p);
        x /= p;
    }
    out
}

fn index_of(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Smallest monic irreducible of degree m, comparing coefficients from the
/// constant term upward.
fn default_poly(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    let m = m as usize;
    let count = (p as usize).pow(m as u32);
    for idx in 0..count {
        // c0 is the most significant digit of idx
        let mut tail: Vec<u32> = digits_of(idx as u32, p, m);
        tail.reverse();
        tail.push(1);
        if is_irreducible(&tail, p) {
            return tail;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FieldSpec {
    /// Builds GF(p^m). Without a reduction polynomial the smallest monic
    /// irreducible of degree m is used.
    pub fn new(p: u32, m: u32, reduction_poly: Option<&[u32]>) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroExponent);
        }
        let q = checked_order(p, m)?;
        let poly = match reduction_poly {
            Some(c) => {
                let ok =
                    c.len() == m as usize + 1 && c.last() == Some(&1) && c.iter().all(|&x| x < p);
                if !ok {
                    return Err(FieldError::BadPolynomial {
                        degree: m,
                        coeffs: c.to_vec(),
                    });
                }
                if !is_irreducible(c, p) {
                    return Err(FieldError::Reducible(c.to_vec()));
                }
                c.to_vec()
            }
            None => default_poly(p, m),
        };
        Ok(Self::build(p, m, q, poly))
    }

    /// GF(q) with the default reduction polynomial.
    pub fn with_order(q: u32) -> Result<Self, FieldError> {
        let (p, m) = prime_power(q)?;
        Self::new(p, m, None)
    }

    pub fn binary() -> Self {
        Self::new(2, 1, None).expect("GF(2)")
    }

    fn build(p: u32, m: u32, q: u32, poly: Vec<u32>) -> Self {
        let mu = m as usize;
        let neg: Vec<u16> = (0..q)
            .map(|x| {
                let d: Vec<u32> = digits_of(x, p, mu).iter().map(|&c| (p - c) % p).collect();
                index_of(&d, p) as u16
            })
            .collect();

        let add = (p != 2 && q <= DENSE_ADD_LIMIT).then(|| {
            let mut t = vec![0u16; (q * q) as usize];
            for a in 0..q {
                let da = digits_of(a, p, mu);
                for b in 0..q {
                    let db = digits_of(b, p, mu);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    t[(a * q + b) as usize] = index_of(&s, p) as u16;
                }
            }
            t
        });

        // Find a primitive element by walking powers with polynomial arithmetic.
        let order = (q - 1) as usize;
        let mut exp = Vec::new();
        for g in 1..q {
            let gd = digits_of(g, p, mu);
            let mut powers = Vec::with_capacity(order);
            let mut cur = vec![1u32];
            let mut seen_one = false;
            for _ in 0..order {
                let mut padded = cur.clone();
                padded.resize(mu, 0);
                let idx = index_of(&padded, p);
                if idx == 1 && !powers.is_empty() {
                    seen_one = true;
                    break;
                }
                powers.push(idx as u16);
                cur = poly_mulmod(&cur, &gd, &poly, p);
            }
            if !seen_one && powers.len() == order {
                exp = powers;
                break;
            }
        }
        debug_assert_eq!(exp.len(), order);
        let mut log = vec![0u32; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        let doubled: Vec<u16> = exp.iter().chain(exp.iter()).copied().collect();
        let mut inv = vec![0u16; q as usize];
        for a in 1..q as usize {
            let l = log[a] as usize;
            inv[a] = doubled[(order - l) % order];
        }

        FieldSpec {
            inner: Arc::new(Inner {
                p,
                m,
                q,
                poly,
                neg,
                add,
                exp: doubled,
                log,
                inv,
            }),
        }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.inner.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.inner.m
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.inner.q
    }

    pub fn reduction_poly(&self) -> &[u32] {
        &self.inner.poly
    }

    pub fn is_binary(&self) -> bool {
        self.inner.q == 2
    }

    pub fn elem(&self, index: u32) -> Result<Elem, FieldError> {
        if index < self.inner.q {
            Ok(Elem(index as u16))
        } else {
            Err(FieldError::OutOfRange {
                index,
                q: self.inner.q,
            })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.inner.q).map(|i| Elem(i as u16))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.inner.q).map(|i| Elem(i as u16))
    }

    /// Base-p coefficient digits of `a`, constant term first.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        digits_of(a.0 as u32, self.inner.p, self.inner.m as usize)
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Elem, FieldError> {
        let p = self.inner.p;
        if digits.len() != self.inner.m as usize || digits.iter().any(|&d| d >= p) {
            return Err(FieldError::OutOfRange {
                index: index_of(digits, p),
                q: self.inner.q,
            });
        }
        Ok(Elem(index_of(digits, p) as u16))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.inner;
        if inner.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if let Some(t) = &inner.add {
            return Elem(t[a.index() * inner.q as usize + b.index()]);
        }
        let p = inner.p;
        let (mut x, mut y) = (a.0 as u32, b.0 as u32);
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        Elem(out as u16)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.inner.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let inner = &*self.inner;
        Elem(inner.exp[(inner.log[a.index()] + inner.log[b.index()]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(Elem(self.inner.inv[a.index()]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn cayley_add_table(&self) -> CayleyTable {
        self.table(TableKind::Additive, |a, b| self.add(a, b))
    }

    /// Full multiplication table, including the zero row and column.
    pub fn cayley_mul_table(&self) -> CayleyTable {
        self.table(TableKind::Multiplicative, |a, b| self.mul(a, b))
    }

    fn table(&self, kind: TableKind, op: impl Fn(Elem, Elem) -> Elem) -> CayleyTable {
        let q = self.order() as usize;
        let mut entries = Vec::with_capacity(q * q);
        for a in self.elements() {
            for b in self.elements() {
                entries.push(op(a, b));
            }
        }
        CayleyTable {
            kind,
            order: q,
            entries,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.m == 1 {
            write!(f, "GF({})", self.inner.p)
        } else {
            write!(f, "GF({}^{})", self.inner.p, self.inner.m)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    Additive,
    Multiplicative,
}

/// A q×q operation table with both axes in ascending element order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CayleyTable {
    pub kind: TableKind,
    pub order: usize,
    entries: Vec<Elem>,
}

impl CayleyTable {
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Elem {
        self.entries[row * self.order + col]
    }

    pub fn row(&self, row: usize) -> &[Elem] {
        &self.entries[row * self.order..(row + 1) * self.order]
    }

    pub fn to_rows(&self) -> Vec<Vec<u16>> {
        (0..self.order)
            .map(|i| self.row(i).iter().map(|e| e.0).collect())
            .collect()
    }

    /// Whether the rows and columns in `range` are permutations of the field.
    fn lines_are_permutations(&self, range: std::ops::Range<usize>) -> bool {
        let q = self.order;
        let mut seen = vec![false; q];
        let mut check = |get: &dyn Fn(usize) -> Elem| {
            seen.iter_mut().for_each(|s| *s = false);
            (0..q).all(|j| !std::mem::replace(&mut seen[get(j).index()], true))
        };
        range
            .clone()
            .all(|i| check(&|j| self.get(i, j)) && check(&|j| self.get(j, i)))
    }

    /// Every row and column is a permutation of the field.
    pub fn is_latin_square(&self) -> bool {
        self.lines_are_permutations(0..self.order)
    }

    /// Row/column 0 are zero and every other line is a bijection of the field.
    pub fn is_multiplicative_shape(&self) -> bool {
        let zero_lines =
            (0..self.order).all(|j| self.get(0, j).is_zero() && self.get(j, 0).is_zero());
        zero_lines && self.lines_are_permutations(1..self.order)
    }
}
