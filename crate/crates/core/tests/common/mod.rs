//! Independent reference implementations used as test oracles. None of this
//! calls into the library's arithmetic: fields are plain polynomial
//! arithmetic over Z/p, ranks use textbook elimination on `u32` entries, and
//! distances come from counting through every message.

#![allow(dead_code)]

use islrc::{GfMatrix, StandardParityCheck};

/// GF(p^m) as polynomials over Z/p, elements encoded as base-p digit
/// indices with the constant term least significant.
pub struct PolyField {
    pub p: u32,
    pub m: usize,
    /// Monic reduction polynomial, constant term first, length m + 1.
    pub modulus: Vec<u32>,
}

impl PolyField {
    pub fn new(p: u32, modulus: &[u32]) -> Self {
        PolyField {
            p,
            m: modulus.len() - 1,
            modulus: modulus.to_vec(),
        }
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.m as u32)
    }

    fn digits(&self, mut x: u32) -> Vec<u32> {
        (0..self.m)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn index(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.index(&s)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let (x, y) = (self.digits(a), self.digits(b));
        // schoolbook product, degree ≤ 2m − 2
        let mut prod = vec![0u64; 2 * self.m];
        for (i, &u) in x.iter().enumerate() {
            for (j, &v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u as u64 * v as u64) % p;
            }
        }
        // long division by the monic modulus, highest degree first
        for deg in (self.m..prod.len()).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            for (i, &c) in self.modulus.iter().enumerate() {
                let at = deg - self.m + i;
                prod[at] = (prod[at] + (p - lead) * c as u64) % p;
            }
        }
        let rem: Vec<u32> = prod[..self.m].iter().map(|&c| c as u32).collect();
        self.index(&rem)
    }

    pub fn neg(&self, a: u32) -> u32 {
        let d: Vec<u32> = self
            .digits(a)
            .iter()
            .map(|&u| (self.p - u) % self.p)
            .collect();
        self.index(&d)
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (1..self.order()).find(|&b| self.mul(a, b) == 1)
    }
}

/// Rank by Gaussian elimination with the field operations of `f`.
pub fn naive_rank(f: &PolyField, rows: &[Vec<u32>]) -> usize {
    let mut a: Vec<Vec<u32>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = f.inv(a[rank][c]).unwrap();
        let pivot_row: Vec<u32> = a[rank].iter().map(|&x| f.mul(x, inv)).collect();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let factor = f.neg(row[c]);
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.add(*x, f.mul(factor, y));
                }
            }
        }
        a[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Oracle field with the same reduction polynomial as the library's field.
pub fn oracle_for(h: &GfMatrix) -> PolyField {
    let f = h.field();
    if f.m() == 1 {
        PolyField::new(f.p(), &[0, 1])
    } else {
        PolyField::new(f.p(), f.reduction_poly())
    }
}

/// Minimum distance by counting through every message u and weighing
/// (u, −P u) directly.
pub fn brute_distance(code: &StandardParityCheck) -> usize {
    let h = code.h();
    let f = oracle_for(h);
    let q = f.order() as u64;
    let (k, red) = (code.k(), code.redundancy());
    let total = q.pow(k as u32);
    let mut best = usize::MAX;
    for x in 1..total {
        let mut u = vec![0u32; k];
        let mut y = x;
        for d in u.iter_mut() {
            *d = (y % q) as u32;
            y /= q;
        }
        let mut w = u.iter().filter(|&&d| d != 0).count();
        for i in 0..red {
            let mut s = 0;
            for (j, &uj) in u.iter().enumerate() {
                s = f.add(s, f.mul(h.get(i, j).0 as u32, uj));
            }
            w += (s != 0) as usize;
        }
        best = best.min(w);
    }
    best
}

/// Matrix entries as plain rows of indices.
pub fn rows_of(h: &GfMatrix) -> Vec<Vec<u32>> {
    h.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(u32::from).collect())
        .collect()
}

/// All prime powers up to `limit`.
pub fn prime_powers(limit: u32) -> Vec<(u32, u32)> {
    let is_prime = |p: u32| {
        p >= 2
            && (2..p)
                .take_while(|d| d * d <= p)
                .all(|d| !p.is_multiple_of(d))
    };
    let mut out = Vec::new();
    for p in (2..=limit).filter(|&p| is_prime(p)) {
        let mut m = 1;
        while p.pow(m) <= limit {
            out.push((p, m));
            m += 1;
        }
    }
    out.sort_by_key(|&(p, m)| p.pow(m));
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |c, i| c * (n - i) / (i + 1))
}
