//! Distance, rate and length bounds for codes with locality and availability.
//!
//! Everything is exact: integer bounds are `i64` (some can go negative for
//! degenerate parameters) and rate bounds are big rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub r: usize,
    pub t: usize,
    pub q: u32,
}

/// Exact rational wrapper that serializes as `"num/den"`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn ceil_div(a: usize, b: usize) -> i64 {
    a.div_ceil(b) as i64
}

/// Singleton-like bound for locality r: n − k − ⌈k/r⌉ + 2.
pub fn bound_singleton_locality(n: usize, k: usize, r: usize) -> i64 {
    n as i64 - k as i64 - ceil_div(k, r) + 2
}

/// Bound for one parity per repair set: n − k − ⌈kt/r⌉ + t + 1.
pub fn bound_one_parity_repair(n: usize, k: usize, r: usize, t: usize) -> i64 {
    n as i64 - k as i64 - ceil_div(k * t, r) + t as i64 + 1
}

/// Availability bound without the one-parity restriction:
/// n − k − ⌈(t(k−1)+1)/(t(r−1)+1)⌉ + 2.
pub fn bound_wang_zhang(n: usize, k: usize, r: usize, t: usize) -> i64 {
    n as i64 - k as i64 - ceil_div(t * (k - 1) + 1, t * (r - 1) + 1) + 2
}

/// Rate bound 1 / ∏_{j=1}^{t} (1 + 1/(jr)).
pub fn bound_rate_product(r: usize, t: usize) -> Rational {
    let mut prod = BigRational::one();
    for j in 1..=t {
        let jr = BigInt::from(j * r);
        prod *= BigRational::new(&jr + 1, jr);
    }
    Rational(prod.recip())
}

/// Distance bound n − Σ_{i=0}^{t} ⌊(k−1)/r^i⌋.
pub fn bound_distance_floorsum(n: usize, k: usize, r: usize, t: usize) -> i64 {
    let mut sum: i64 = 0;
    let mut power: u128 = 1;
    for _ in 0..=t {
        sum += ((k as u128 - 1) / power) as i64;
        power = power.saturating_mul(r as u128);
    }
    n as i64 - sum
}

/// Rate bound r/(r+2) for availability two.
pub fn bound_rate_prakash(r: usize) -> Rational {
    Rational::new(r as i64, r as i64 + 2)
}

/// Shortest possible length: k + ⌈kt/r⌉.
pub fn bound_length(k: usize, r: usize, t: usize) -> usize {
    k + (k * t).div_ceil(r)
}

/// Highest possible rate: k/(k + ⌈kt/r⌉), which is r/(r+t) when r | kt.
pub fn bound_rate_corollary(k: usize, r: usize, t: usize) -> Rational {
    if (k * t).is_multiple_of(r) {
        Rational::new(r as i64, (r + t) as i64)
    } else {
        Rational::new(k as i64, bound_length(k, r, t) as i64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub params: CodeParams,
    pub singleton_locality: i64,
    pub one_parity_repair: i64,
    pub wang_zhang: i64,
    pub distance_floorsum: i64,
    pub rate_product: Rational,
    pub rate_prakash: Rational,
    pub rate_corollary: Rational,
    pub length: usize,
    pub distance_lower: usize,
    pub rate: Rational,
    /// d equals the one-parity-repair bound.
    pub distance_optimal: bool,
    /// n equals the length bound.
    pub rate_optimal: bool,
    /// d ≥ t + 1.
    pub meets_lower: bool,
}

pub fn classify(params: CodeParams) -> BoundsReport {
    let CodeParams { n, k, d, r, t, .. } = params;
    let one_parity_repair = bound_one_parity_repair(n, k, r, t);
    let length = bound_length(k, r, t);
    BoundsReport {
        params,
        singleton_locality: bound_singleton_locality(n, k, r),
        one_parity_repair,
        wang_zhang: bound_wang_zhang(n, k, r, t),
        distance_floorsum: bound_distance_floorsum(n, k, r, t),
        rate_product: bound_rate_product(r, t),
        rate_prakash: bound_rate_prakash(r),
        rate_corollary: bound_rate_corollary(k, r, t),
        length,
        distance_lower: t + 1,
        rate: Rational::new(k as i64, n as i64),
        distance_optimal: d as i64 == one_parity_repair,
        rate_optimal: n == length,
        meets_lower: d > t,
    }
}

impl BoundsReport {
    /// Two-column text table of every value.
    pub fn table(&self) -> String {
        let p = &self.params;
        let rows: Vec<(&str, String)> = vec![
            (
                "n k d r t q",
                format!("{} {} {} {} {} {}", p.n, p.k, p.d, p.r, p.t, p.q),
            ),
            ("d <= n-k-ceil(k/r)+2", self.singleton_locality.to_string()),
            (
                "d <= n-k-ceil(kt/r)+t+1",
                self.one_parity_repair.to_string(),
            ),
            (
                "d <= n-k-ceil((t(k-1)+1)/(t(r-1)+1))+2",
                self.wang_zhang.to_string(),
            ),
            (
                "d <= n-sum floor((k-1)/r^i)",
                self.distance_floorsum.to_string(),
            ),
            ("d >= t+1", self.distance_lower.to_string()),
            ("k/n <= 1/prod(1+1/(jr))", self.rate_product.to_string()),
            ("k/n <= r/(r+2)  [t=2]", self.rate_prakash.to_string()),
            (
                "k/n <= (one-parity rate bound)",
                self.rate_corollary.to_string(),
            ),
            ("n >= k+ceil(kt/r)", self.length.to_string()),
            ("rate k/n", self.rate.to_string()),
            ("distance_optimal", self.distance_optimal.to_string()),
            ("rate_optimal", self.rate_optimal.to_string()),
            ("meets_lower", self.meets_lower.to_string()),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_locality() {
        assert_eq!(bound_singleton_locality(50, 25, 5), 22);
        assert_eq!(bound_singleton_locality(14, 7, 3), 6);
        assert_eq!(bound_singleton_locality(20, 8, 8), 13);
    }

    #[test]
    fn one_parity() {
        assert_eq!(bound_one_parity_repair(50, 25, 5, 5), 6);
        assert_eq!(bound_one_parity_repair(62, 31, 6, 6), 7);
        assert_eq!(bound_one_parity_repair(8, 4, 2, 2), 3);
    }

    #[test]
    fn wang_zhang() {
        assert_eq!(bound_wang_zhang(50, 25, 5, 5), 21);
        assert_eq!(bound_wang_zhang(14, 7, 3, 3), 6);
        assert_eq!(
            bound_wang_zhang(30, 12, 4, 1),
            bound_singleton_locality(30, 12, 4)
        );
    }

    #[test]
    fn rate_bounds() {
        assert_eq!(bound_rate_prakash(5), Rational::new(5, 7));
        assert_eq!(bound_rate_product(1, 1), Rational::new(1, 2));
        // 1 / ((1 + 1/2)(1 + 1/4)) = 8/15
        assert_eq!(bound_rate_product(2, 2), Rational::new(8, 15));
        assert_eq!(bound_rate_product(1, 1).to_string(), "1/2");
    }

    #[test]
    fn floorsum() {
        assert_eq!(bound_distance_floorsum(50, 25, 5, 5), 22);
        // r = 1 keeps every term at k - 1
        assert_eq!(bound_distance_floorsum(10, 3, 1, 2), 4);
    }

    #[test]
    fn length_and_rate() {
        assert_eq!(bound_length(25, 5, 5), 50);
        assert_eq!(bound_rate_corollary(25, 5, 5), Rational::new(1, 2));
        assert_eq!(bound_length(4, 2, 2), 8);
        assert_eq!(bound_length(5, 3, 2), 9);
        assert_eq!(bound_rate_corollary(5, 3, 2), Rational::new(5, 9));
    }

    #[test]
    fn classify_examples() {
        let p = |n, k, d, r, t| CodeParams {
            n,
            k,
            d,
            r,
            t,
            q: 2,
        };
        let rep = classify(p(50, 25, 6, 5, 5));
        assert!(rep.distance_optimal && rep.rate_optimal && rep.meets_lower);
        assert!(!classify(p(50, 25, 5, 5, 5)).distance_optimal);
        let rep = classify(p(62, 31, 7, 6, 6));
        assert!(rep.distance_optimal && rep.rate_optimal);
        assert!(rep.table().contains("distance_optimal"));
    }
}
