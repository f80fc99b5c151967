//! Sub-codes obtained by deleting locality rows of H together with every
//! column their supports cover.
//!
//! For a distance-optimal code with δ = ⌈kt/r⌉ − t, deleting δ locality rows
//! leaves a full-rank H₁ with d − 1 rows whose code is MDS, and deleting
//! δ − 1 rows leaves H₂ with d rows whose code is almost MDS. The kept parity
//! columns still form an identity block, so both sub-matrices are again in
//! standard form.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::distance::{min_distance, DistanceConfig, DistanceError};
use crate::lrc::{min_local_rows, LrcError, StandardParityCheck};
use crate::matrix::{GfMatrix, MatrixError};

#[derive(Debug, Error)]
pub enum PunctureError {
    #[error("row {row} is not a locality row")]
    NotLocalRow { row: usize },
    #[error("needs ceil(kt/r) > t, got ceil(kt/r) = {min_rows} and t = {t}")]
    Precondition { min_rows: usize, t: usize },
    #[error("cannot draw {size} distinct rows out of {available}")]
    TooManyRows { size: usize, available: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Lrc(#[from] LrcError),
    #[error(transparent)]
    Distance(#[from] DistanceError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Mds,
    AlmostMds,
    /// The sub-code has dimension zero.
    Degenerate,
    Other,
}

#[derive(Debug, Clone, Serialize)]
pub struct PunctureReport {
    pub deleted_rows: Vec<usize>,
    /// Number of deleted columns.
    pub gamma: usize,
    pub kept_rows: Vec<usize>,
    pub kept_cols: Vec<usize>,
    #[serde(skip)]
    pub h_sub: GfMatrix,
    pub m: usize,
    pub n_sub: usize,
    pub rank: usize,
    pub sub_dim: usize,
    /// None when the sub-code is trivial.
    pub sub_distance: Option<usize>,
    pub singleton_defect: Option<i64>,
    pub classification: Classification,
}

impl PunctureReport {
    /// `[n_sub, sub_dim, sub_distance]`.
    pub fn nkd(&self) -> (usize, usize, Option<usize>) {
        (self.n_sub, self.sub_dim, self.sub_distance)
    }
}

/// Columns covered by the supports of `rows` (information and parity).
pub fn covered_columns(code: &StandardParityCheck, rows: &[usize]) -> Vec<usize> {
    let mut cols: Vec<usize> = rows.iter().flat_map(|&r| code.row_coords(r)).collect();
    cols.sort_unstable();
    cols.dedup();
    cols
}

pub fn puncture(
    code: &StandardParityCheck,
    deleted_rows: &[usize],
    cfg: &DistanceConfig,
) -> Result<PunctureReport, PunctureError> {
    let mut deleted: Vec<usize> = deleted_rows.to_vec();
    deleted.sort_unstable();
    deleted.dedup();
    if let Some(&row) = deleted
        .iter()
        .find(|&&r| code.local_rows().binary_search(&r).is_err())
    {
        return Err(PunctureError::NotLocalRow { row });
    }
    let cols = covered_columns(code, &deleted);
    let sub = code.h().delete_rows_cols(&deleted, &cols)?;
    let h_sub = sub.matrix;
    let (m, n_sub) = (h_sub.rows(), h_sub.cols());
    let rank = h_sub.rank();
    let sub_dim = n_sub - rank;

    let (sub_distance, singleton_defect, classification) = if sub_dim == 0 {
        (None, None, Classification::Degenerate)
    } else {
        let sub_code = StandardParityCheck::new(h_sub.clone(), 0)?;
        let d = min_distance(&sub_code, cfg)?.d;
        let defect = n_sub as i64 - sub_dim as i64 + 1 - d as i64;
        let class = match defect {
            0 => Classification::Mds,
            1 => Classification::AlmostMds,
            _ => Classification::Other,
        };
        (Some(d), Some(defect), class)
    };

    Ok(PunctureReport {
        deleted_rows: deleted,
        gamma: cols.len(),
        kept_rows: sub.kept_rows,
        kept_cols: sub.kept_cols,
        h_sub,
        m,
        n_sub,
        rank,
        sub_dim,
        sub_distance,
        singleton_defect,
        classification,
    })
}

/// `count` distinct deletion sets of `size` locality rows, drawn from `seed`.
/// Each set is sorted; the list is in draw order.
pub fn random_deletions(
    code: &StandardParityCheck,
    size: usize,
    count: usize,
    seed: u64,
) -> Result<Vec<Vec<usize>>, PunctureError> {
    let local = code.local_rows();
    if size > local.len() {
        return Err(PunctureError::TooManyRows {
            size,
            available: local.len(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| {
            let mut rows: Vec<usize> = sample(&mut rng, local.len(), size)
                .into_iter()
                .map(|i| local[i])
                .collect();
            rows.sort_unstable();
            rows
        })
        .collect())
}

/// Which of the two deletion sizes an instance used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeletionKind {
    /// δ = ⌈kt/r⌉ − t rows deleted; expected MDS.
    Full,
    /// δ − 1 rows deleted; expected almost MDS.
    OneShort,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteInstance {
    pub kind: DeletionKind,
    pub report: PunctureReport,
    /// Human-readable list of failed checks; empty when everything held.
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteSummary {
    pub d: usize,
    /// ⌈kt/r⌉ − t.
    pub delta: usize,
    pub m1: usize,
    pub m2: usize,
    pub instances: Vec<SuiteInstance>,
    pub degenerate: usize,
    pub mds: usize,
    pub almost_mds: usize,
    pub violations: usize,
}

impl SuiteSummary {
    pub fn all_hold(&self) -> bool {
        self.violations == 0
    }
}

/// Punctures every deletion set (each of size δ or δ − 1) and checks the
/// row counts, full row rank, sub-distances and MDS / almost-MDS status.
pub fn puncture_suite(
    code: &StandardParityCheck,
    r: usize,
    t: usize,
    certified_d: usize,
    deletions: &[Vec<usize>],
    cfg: &DistanceConfig,
) -> Result<SuiteSummary, PunctureError> {
    let min_rows = min_local_rows(code.k(), r, t);
    if min_rows <= t {
        return Err(PunctureError::Precondition { min_rows, t });
    }
    let delta = min_rows - t;
    let redundancy = code.redundancy();
    let m1 = redundancy - delta;
    let m2 = m1 + 1;
    let d = certified_d;

    let inner = DistanceConfig {
        exec: crate::par::Exec::Sequential,
        ..*cfg
    };
    let evaluated = cfg
        .exec
        .map_slice(deletions, |rows| puncture(code, rows, &inner));

    let mut instances = Vec::with_capacity(deletions.len());
    for (rows, res) in deletions.iter().zip(evaluated) {
        let report = res?;
        let mut v = Vec::new();
        let kind = if report.deleted_rows.len() == delta {
            DeletionKind::Full
        } else if report.deleted_rows.len() + 1 == delta {
            DeletionKind::OneShort
        } else {
            v.push(format!(
                "deletion {:?} has {} rows, expected {} or {}",
                rows,
                report.deleted_rows.len(),
                delta,
                delta - 1
            ));
            instances.push(SuiteInstance {
                kind: DeletionKind::Full,
                report,
                violations: v,
            });
            continue;
        };
        let (expect_m, expect_defect, name) = match kind {
            DeletionKind::Full => (m1, 0, "m1 = d - 1"),
            DeletionKind::OneShort => (m2, 1, "m2 = d"),
        };
        let expect_m_from_d = match kind {
            DeletionKind::Full => d - 1,
            DeletionKind::OneShort => d,
        };
        if report.m != expect_m || expect_m != expect_m_from_d {
            v.push(format!("{name} fails: {} rows, d = {d}", report.m));
        }
        if report.rank != report.m {
            v.push(format!("rank {} below {} rows", report.rank, report.m));
        }
        if report.n_sub < report.m {
            v.push(format!("n_sub {} < m {}", report.n_sub, report.m));
        }
        if report.classification != Classification::Degenerate {
            if report.sub_distance != Some(d) {
                v.push(format!("sub-distance {:?} != d = {d}", report.sub_distance));
            }
            if report.singleton_defect != Some(expect_defect) {
                v.push(format!(
                    "Singleton defect {:?}, expected {expect_defect}",
                    report.singleton_defect
                ));
            }
        }
        instances.push(SuiteInstance {
            kind,
            report,
            violations: v,
        });
    }

    let count = |c: Classification| {
        instances
            .iter()
            .filter(|i| i.report.classification == c)
            .count()
    };
    Ok(SuiteSummary {
        d,
        delta,
        m1,
        m2,
        degenerate: count(Classification::Degenerate),
        mds: count(Classification::Mds),
        almost_mds: count(Classification::AlmostMds),
        violations: instances
            .iter()
            .filter(|i| !i.violations.is_empty())
            .count(),
        instances,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn code_8_4() -> StandardParityCheck {
        let f = FieldSpec::binary();
        let p = GfMatrix::from_rows(
            &f,
            &[[1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 0, 1], [0, 1, 1, 0]],
        )
        .unwrap();
        let h = p.hstack(&GfMatrix::identity(&f, 4)).unwrap();
        StandardParityCheck::new(h, 4).unwrap()
    }

    #[test]
    fn mds_case() {
        let rep = puncture(&code_8_4(), &[1, 3], &DistanceConfig::default()).unwrap();
        assert_eq!(rep.h_sub.to_rows(), vec![vec![1, 1, 0], vec![1, 0, 1]]);
        assert_eq!(rep.kept_cols, vec![0, 4, 6]);
        assert_eq!(rep.rank, 2);
        assert_eq!(rep.nkd(), (3, 1, Some(3)));
        assert_eq!(rep.classification, Classification::Mds);
        assert_eq!(rep.gamma, 5);
    }

    #[test]
    fn almost_mds_case() {
        let rep = puncture(&code_8_4(), &[3], &DistanceConfig::default()).unwrap();
        assert_eq!(
            rep.h_sub.to_rows(),
            vec![
                vec![1, 0, 1, 0, 0],
                vec![0, 1, 0, 1, 0],
                vec![1, 1, 0, 0, 1]
            ]
        );
        assert_eq!(rep.rank, 3);
        assert_eq!(rep.nkd(), (5, 2, Some(3)));
        assert_eq!(rep.singleton_defect, Some(1));
        assert_eq!(rep.classification, Classification::AlmostMds);
    }

    #[test]
    fn degenerate_case() {
        let rep = puncture(&code_8_4(), &[0, 1], &DistanceConfig::default()).unwrap();
        assert_eq!(rep.h_sub.to_rows(), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(rep.sub_dim, 0);
        assert_eq!(rep.classification, Classification::Degenerate);
        assert_eq!(rep.sub_distance, None);
    }

    #[test]
    fn rejects_non_local_rows() {
        let f = FieldSpec::binary();
        let p = GfMatrix::from_rows(&f, &[[1, 1], [1, 0]]).unwrap();
        let h = p.hstack(&GfMatrix::identity(&f, 2)).unwrap();
        let code = StandardParityCheck::new(h, 1).unwrap();
        assert!(matches!(
            puncture(&code, &[1], &DistanceConfig::default()),
            Err(PunctureError::NotLocalRow { row: 1 })
        ));
    }

    #[test]
    fn suite_on_small_code() {
        let code = code_8_4();
        let deletions = vec![vec![1, 3], vec![3], vec![0, 1]];
        let s = puncture_suite(&code, 2, 2, 3, &deletions, &DistanceConfig::default()).unwrap();
        assert_eq!((s.delta, s.m1, s.m2), (2, 2, 3));
        assert!(s.all_hold(), "{:?}", s.instances);
        assert_eq!((s.mds, s.almost_mds, s.degenerate), (1, 1, 1));
    }

    #[test]
    fn suite_precondition() {
        let f = FieldSpec::binary();
        let h = GfMatrix::identity(&f, 2)
            .hstack(&GfMatrix::identity(&f, 2))
            .unwrap();
        let code = StandardParityCheck::new(h, 2).unwrap();
        assert!(matches!(
            puncture_suite(&code, 2, 1, 2, &[], &DistanceConfig::default()),
            Err(PunctureError::Precondition { .. })
        ));
    }

    #[test]
    fn random_deletions_are_reproducible() {
        let code = code_8_4();
        let a = random_deletions(&code, 2, 5, 42).unwrap();
        assert_eq!(a, random_deletions(&code, 2, 5, 42).unwrap());
        assert!(a.iter().all(|d| d.len() == 2 && d[0] < d[1]));
        assert!(random_deletions(&code, 5, 1, 0).is_err());
    }
}
