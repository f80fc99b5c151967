//! The two rate-1/2 families built from the Cayley tables of GF(p^m).
//!
//! With s = p^m, the first family places the permutation matrix `M_c`
//! (positions of `c` in the addition table) at every position of the
//! multiplication table holding `c`. The resulting s²×s² matrix has rows and
//! columns of weight s, and any two rows meet in at most one column, which
//! gives an optimal (2s², s², s, s) code of distance s + 1.
//!
//! The second family borders that matrix into an (s²+s+1)-square matrix with
//! rows and columns of weight s + 1, giving an optimal
//! (2(s²+s+1), s²+s+1, s+1, s+1) code of distance s + 2.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::CodeParams;
use crate::field::{Elem, FieldError, FieldSpec};
use crate::lrc::{check_islrc, IslrcCertificate, LrcError, StandardParityCheck};
use crate::matrix::{GfMatrix, MatrixError};

/// Default cap on p^{2m}.
pub const DEFAULT_SIZE_CAP: usize = 4096;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("p^(2m) = {size} exceeds the size cap {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("fill element must be a nonzero element of GF({q}), got {value}")]
    BadFill { value: u16, q: u32 },
    #[error("construction {construction} failed its own locality check (r={r_observed}, t={t_observed})")]
    Verification {
        construction: u8,
        r_observed: usize,
        t_observed: usize,
    },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Lrc(#[from] LrcError),
}

/// How the ones of the 0/1 locality matrix are written into the target field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case", tag = "mode", content = "value")]
pub enum Fill {
    #[default]
    Ones,
    /// Every one becomes this element.
    Uniform(Elem),
    /// Every one becomes an independent uniformly random nonzero element.
    Random(u64),
}

impl fmt::Display for Fill {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fill::Ones => write!(f, "ones"),
            Fill::Uniform(e) => write!(f, "uniform:{e}"),
            Fill::Random(seed) => write!(f, "random:{seed}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConstructionOptions {
    /// Field of the code's symbols (independent of the GF(p^m) whose tables
    /// shape the matrix).
    pub target: FieldSpec,
    pub fill: Fill,
    pub size_cap: usize,
}

impl Default for ConstructionOptions {
    fn default() -> Self {
        ConstructionOptions {
            target: FieldSpec::binary(),
            fill: Fill::Ones,
            size_cap: DEFAULT_SIZE_CAP,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructedCode {
    #[serde(skip)]
    pub check: StandardParityCheck,
    pub declared: CodeParams,
    pub construction: u8,
    pub p: u32,
    pub m: u32,
    pub fill: Fill,
    pub certificate: IslrcCertificate,
}

impl ConstructedCode {
    /// Comment line written above the matrix text.
    pub fn header_line(&self) -> String {
        let d = &self.declared;
        let mut s = format!(
            "# construction={} p={} m={} n={} k={} r={} t={} d_claimed={} q={}",
            self.construction, self.p, self.m, d.n, d.k, d.r, d.t, d.d, d.q
        );
        if self.fill != Fill::Ones {
            s.push_str(&format!(" fill={}", self.fill));
        }
        s
    }

    pub fn to_text(&self) -> String {
        format!("{}\n{}", self.header_line(), self.check.h().to_text())
    }
}

/// `M_c`: ones where `c` sits in the addition table of `f`, written over
/// `target`. A permutation matrix, since the table is a Latin square.
pub fn indicator_block_over(f: &FieldSpec, c: Elem, target: &FieldSpec) -> GfMatrix {
    let q = f.order() as usize;
    GfMatrix::from_fn(target, q, q, |a, b| {
        if f.add(Elem(a as u16), Elem(b as u16)) == c {
            Elem::ONE
        } else {
            Elem::ZERO
        }
    })
}

/// `M_c` over GF(2).
pub fn indicator_block(f: &FieldSpec, c: Elem) -> GfMatrix {
    indicator_block_over(f, c, &FieldSpec::binary())
}

/// `H = [P | I]` with the first `l` rows of P as locality rows.
pub fn assemble_h(p: &GfMatrix, l: usize) -> Result<StandardParityCheck, ConstructionError> {
    let h = p.hstack(&GfMatrix::identity(p.field(), p.rows()))?;
    Ok(StandardParityCheck::new(h, l)?)
}

fn field_and_cap(p: u32, m: u32, cap: usize) -> Result<FieldSpec, ConstructionError> {
    let f = FieldSpec::new(p, m, None)?;
    let s = f.order() as usize;
    if s * s > cap {
        return Err(ConstructionError::SizeCap { size: s * s, cap });
    }
    Ok(f)
}

/// The s²×s² 0/1 locality matrix of the first family, over `target`.
fn affine_block_matrix(f: &FieldSpec, target: &FieldSpec) -> GfMatrix {
    let s = f.order() as usize;
    let mul = f.cayley_mul_table();
    let add = f.cayley_add_table();
    GfMatrix::from_fn(target, s * s, s * s, |row, col| {
        let c = mul.get(row / s, col / s);
        if add.get(row % s, col % s) == c {
            Elem::ONE
        } else {
            Elem::ZERO
        }
    })
}

fn apply_fill(m: &GfMatrix, fill: Fill) -> Result<GfMatrix, ConstructionError> {
    let target = m.field().clone();
    let q = target.order();
    match fill {
        Fill::Ones => Ok(m.clone()),
        Fill::Uniform(e) => {
            if e.is_zero() || e.0 as u32 >= q {
                return Err(ConstructionError::BadFill { value: e.0, q });
            }
            Ok(m.map(|_, _, x| if x.is_zero() { x } else { e }))
        }
        Fill::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(m.map(|_, _, x| {
                if x.is_zero() {
                    x
                } else {
                    Elem(rng.random_range(1..q) as u16)
                }
            }))
        }
    }
}

fn finish(
    p1: GfMatrix,
    construction: u8,
    p: u32,
    m: u32,
    declared: CodeParams,
    fill: Fill,
) -> Result<ConstructedCode, ConstructionError> {
    let p1 = apply_fill(&p1, fill)?;
    let l = p1.rows();
    let check = assemble_h(&p1, l)?;
    let certificate = check_islrc(&check, declared.r, declared.t);
    if !certificate.passed
        || certificate.r_observed != declared.r
        || certificate.t_observed != declared.t
    {
        return Err(ConstructionError::Verification {
            construction,
            r_observed: certificate.r_observed,
            t_observed: certificate.t_observed,
        });
    }
    Ok(ConstructedCode {
        check,
        declared,
        construction,
        p,
        m,
        fill,
        certificate,
    })
}

/// First family: an optimal (2s², s², s, s) code with s = p^m.
pub fn construct1(
    p: u32,
    m: u32,
    opts: &ConstructionOptions,
) -> Result<ConstructedCode, ConstructionError> {
    let f = field_and_cap(p, m, opts.size_cap)?;
    let s = f.order() as usize;
    let declared = CodeParams {
        n: 2 * s * s,
        k: s * s,
        d: s + 1,
        r: s,
        t: s,
        q: opts.target.order(),
    };
    finish(
        affine_block_matrix(&f, &opts.target),
        1,
        p,
        m,
        declared,
        opts.fill,
    )
}

/// Second family: an optimal (2K, K, s+1, s+1) code with K = s² + s + 1.
pub fn construct2(
    p: u32,
    m: u32,
    opts: &ConstructionOptions,
) -> Result<ConstructedCode, ConstructionError> {
    let f = field_and_cap(p, m, opts.size_cap)?;
    let t = &opts.target;
    let s = f.order() as usize;
    let kk = s * s + s + 1;

    let top = GfMatrix::ones(t, 1, s + 1).hstack(&GfMatrix::zeros(t, 1, s * s))?;
    let left = GfMatrix::identity(t, s + 1).kronecker(&GfMatrix::ones(t, s, 1))?;
    let right = GfMatrix::identity(t, s)
        .kronecker(&GfMatrix::ones(t, 1, s))?
        .vstack(&affine_block_matrix(&f, t))?;
    let p1 = top.vstack(&left.hstack(&right)?)?;
    debug_assert_eq!((p1.rows(), p1.cols()), (kk, kk));

    let declared = CodeParams {
        n: 2 * kk,
        k: kk,
        d: s + 2,
        r: s + 1,
        t: s + 1,
        q: t.order(),
    };
    finish(p1, 2, p, m, declared, opts.fill)
}

/// Smallest and largest number of information columns shared by two
/// distinct locality rows.
pub fn row_intersection_range(code: &StandardParityCheck) -> Option<(usize, usize)> {
    let supports: Vec<_> = code
        .local_rows()
        .iter()
        .map(|&r| code.info_support(r))
        .collect();
    let mut range: Option<(usize, usize)> = None;
    for i in 0..supports.len() {
        for j in i + 1..supports.len() {
            let x = supports[i].intersection_len(&supports[j]);
            range = Some(match range {
                None => (x, x),
                Some((lo, hi)) => (lo.min(x), hi.max(x)),
            });
        }
    }
    range
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(m: &GfMatrix) -> Vec<Vec<u16>> {
        m.to_rows()
    }

    #[test]
    fn indicator_blocks() {
        let f5 = FieldSpec::new(5, 1, None).unwrap();
        let m0 = indicator_block(&f5, Elem(0));
        let ones: Vec<(usize, usize)> = (0..5)
            .flat_map(|i| (0..5).map(move |j| (i, j)))
            .filter(|&(i, j)| m0.get(i, j) == Elem::ONE)
            .collect();
        assert_eq!(ones, vec![(0, 0), (1, 4), (2, 3), (3, 2), (4, 1)]);

        let f2 = FieldSpec::binary();
        assert_eq!(
            rows(&indicator_block(&f2, Elem(1))),
            vec![vec![0, 1], vec![1, 0]]
        );
    }

    #[test]
    fn construct1_binary_smallest() {
        let c = construct1(2, 1, &ConstructionOptions::default()).unwrap();
        assert_eq!(
            rows(&c.check.p1()),
            vec![
                vec![1, 0, 1, 0],
                vec![0, 1, 0, 1],
                vec![1, 0, 0, 1],
                vec![0, 1, 1, 0]
            ]
        );
        let d = &c.declared;
        assert_eq!((d.n, d.k, d.r, d.t, d.d), (8, 4, 2, 2, 3));
        assert_eq!(
            c.header_line(),
            "# construction=1 p=2 m=1 n=8 k=4 r=2 t=2 d_claimed=3 q=2"
        );
    }

    #[test]
    fn construct1_parameters() {
        let c = construct1(3, 1, &ConstructionOptions::default()).unwrap();
        let d = &c.declared;
        assert_eq!((d.n, d.k, d.r, d.t, d.d), (18, 9, 3, 3, 4));
    }

    #[test]
    fn construct2_smallest_is_fano_like() {
        let c = construct2(2, 1, &ConstructionOptions::default()).unwrap();
        let p1 = c.check.p1();
        assert_eq!((p1.rows(), p1.cols()), (7, 7));
        for i in 0..7 {
            assert_eq!(p1.row_weight(i).unwrap(), 3);
            assert_eq!(p1.col_weight(i).unwrap(), 3);
        }
        let d = &c.declared;
        assert_eq!((d.n, d.k, d.r, d.t, d.d), (14, 7, 3, 3, 4));
        assert_eq!(c.check.h().rows(), 7);
        assert_eq!(c.check.h().cols(), 14);
    }

    #[test]
    fn construct2_parameters() {
        let c = construct2(3, 1, &ConstructionOptions::default()).unwrap();
        let d = &c.declared;
        assert_eq!((d.n, d.k, d.r, d.t, d.d), (26, 13, 4, 4, 5));
    }

    #[test]
    fn errors() {
        let opts = ConstructionOptions {
            size_cap: 16,
            ..Default::default()
        };
        assert!(matches!(
            construct1(5, 1, &opts),
            Err(ConstructionError::SizeCap { size: 25, cap: 16 })
        ));
        let opts = ConstructionOptions {
            fill: Fill::Uniform(Elem::ZERO),
            ..Default::default()
        };
        assert!(matches!(
            construct1(2, 1, &opts),
            Err(ConstructionError::BadFill { .. })
        ));
        assert!(construct1(4, 1, &ConstructionOptions::default()).is_err());
    }

    #[test]
    fn assemble_without_locality_rows() {
        let f = FieldSpec::binary();
        let code = assemble_h(&GfMatrix::zeros(&f, 2, 3), 0).unwrap();
        assert_eq!(code.l(), 0);
        assert_eq!(
            code.h().to_rows(),
            vec![vec![0, 0, 0, 1, 0], vec![0, 0, 0, 0, 1]]
        );
    }

    #[test]
    fn fills_keep_support() {
        let target = FieldSpec::with_order(5).unwrap();
        let base = construct1(
            3,
            1,
            &ConstructionOptions {
                target: target.clone(),
                ..Default::default()
            },
        )
        .unwrap();
        for fill in [Fill::Uniform(Elem(3)), Fill::Random(7)] {
            let c = construct1(
                3,
                1,
                &ConstructionOptions {
                    target: target.clone(),
                    fill,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(c.certificate, base.certificate);
        }
    }
}
