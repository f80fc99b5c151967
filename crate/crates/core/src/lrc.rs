//! Systematic codes given by a standard parity-check matrix `H = [P | I]`,
//! and verification of their information-symbol locality and availability.
//!
//! The locality-bearing rows of `P` (called P₁ here) are the rows that each
//! produce one repair relation: a dual codeword touching a handful of
//! information coordinates and exactly one parity coordinate. The code is an
//! (n, k, r, t) IS-LRC when every P₁ row has weight at most r, every
//! information column is covered by at least t P₁ rows, and no two P₁ rows
//! share more than one information coordinate.

use serde::Serialize;
use thiserror::Error;

use crate::field::{Elem, FieldSpec};
use crate::matrix::{GfMatrix, MatrixError, Support};
use crate::par::Exec;

#[derive(Debug, Error)]
pub enum LrcError {
    #[error("H is not in standard form [P | I]: {0}")]
    NotStandardForm(String),
    #[error("local row {row} is out of range ({rows} parity rows)")]
    LocalRowOutOfRange { row: usize, rows: usize },
    #[error("the locality certificate did not pass")]
    CertificateFailed,
    #[error("membership matrices are defined for binary codes only (field order {0})")]
    NonBinary(u32),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// A code with parity-check matrix `[P | I_{n-k}]` and a designated set of
/// locality rows of P.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardParityCheck {
    h: GfMatrix,
    n: usize,
    k: usize,
    local_rows: Vec<usize>,
}

impl StandardParityCheck {
    /// The first `l` rows of P are the locality rows.
    pub fn new(h: GfMatrix, l: usize) -> Result<Self, LrcError> {
        let code = Self::validate(h)?;
        if l > code.redundancy() {
            return Err(LrcError::LocalRowOutOfRange {
                row: l,
                rows: code.redundancy(),
            });
        }
        Ok(StandardParityCheck {
            local_rows: (0..l).collect(),
            ..code
        })
    }

    /// Explicit locality rows (sorted and deduplicated).
    pub fn with_local_rows(h: GfMatrix, mut rows: Vec<usize>) -> Result<Self, LrcError> {
        let code = Self::validate(h)?;
        rows.sort_unstable();
        rows.dedup();
        if let Some(&bad) = rows.iter().find(|&&r| r >= code.redundancy()) {
            return Err(LrcError::LocalRowOutOfRange {
                row: bad,
                rows: code.redundancy(),
            });
        }
        Ok(StandardParityCheck {
            local_rows: rows,
            ..code
        })
    }

    /// Takes every nonzero row of P with weight at most `r` as a locality row.
    /// No subset search is attempted.
    pub fn auto(h: GfMatrix, r: usize) -> Result<Self, LrcError> {
        let code = Self::validate(h)?;
        let rows = (0..code.redundancy())
            .filter(|&i| {
                let w = code.info_weight(i);
                w >= 1 && w <= r
            })
            .collect();
        Ok(StandardParityCheck {
            local_rows: rows,
            ..code
        })
    }

    fn validate(h: GfMatrix) -> Result<Self, LrcError> {
        let (rows, n) = (h.rows(), h.cols());
        if rows == 0 || rows >= n {
            return Err(LrcError::NotStandardForm(format!(
                "need 0 < n-k < n, got {rows} rows and {n} columns"
            )));
        }
        let k = n - rows;
        for i in 0..rows {
            for j in 0..rows {
                let expect = if i == j { Elem::ONE } else { Elem::ZERO };
                if h.get(i, k + j) != expect {
                    return Err(LrcError::NotStandardForm(format!(
                        "entry ({i}, {}) is {}, identity block needs {}",
                        k + j,
                        h.get(i, k + j),
                        expect
                    )));
                }
            }
        }
        Ok(StandardParityCheck {
            h,
            n,
            k,
            local_rows: Vec::new(),
        })
    }

    pub fn h(&self) -> &GfMatrix {
        &self.h
    }

    pub fn field(&self) -> &FieldSpec {
        self.h.field()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn l(&self) -> usize {
        self.local_rows.len()
    }

    /// Row indices of H designated as P₁.
    pub fn local_rows(&self) -> &[usize] {
        &self.local_rows
    }

    /// The k information columns of H.
    pub fn p(&self) -> GfMatrix {
        let rows: Vec<usize> = (0..self.redundancy()).collect();
        let cols: Vec<usize> = (0..self.k).collect();
        self.h.select(&rows, &cols)
    }

    pub fn p1(&self) -> GfMatrix {
        let cols: Vec<usize> = (0..self.k).collect();
        self.h.select(&self.local_rows, &cols)
    }

    /// Coordinate of the parity symbol checked by H row `row`.
    pub fn parity_coord(&self, row: usize) -> usize {
        self.k + row
    }

    /// Support of H row `row` restricted to the information columns.
    pub fn info_support(&self, row: usize) -> Support {
        Support::from_sorted(
            self.h.row(row)[..self.k]
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_zero())
                .map(|(j, _)| j)
                .collect(),
        )
    }

    fn info_weight(&self, row: usize) -> usize {
        self.h.row(row)[..self.k]
            .iter()
            .filter(|e| !e.is_zero())
            .count()
    }

    /// Full support of H row `row`: its information support plus its parity.
    pub fn row_coords(&self, row: usize) -> Vec<usize> {
        let mut c: Vec<usize> = self.info_support(row).iter().collect();
        c.push(self.parity_coord(row));
        c
    }
}

/// Coordinates from which information coordinate `info_coord` is recovered
/// through the dual codeword given by H row `parity_row`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepairSet {
    pub info_coord: usize,
    pub coords: Vec<usize>,
    pub parity_row: usize,
}

impl RepairSet {
    /// Solves the repair relation for the missing symbol, reading the other
    /// coordinates through `value`.
    pub fn solve(&self, code: &StandardParityCheck, mut value: impl FnMut(usize) -> Elem) -> Elem {
        let f = code.field();
        let h = code.h().row(self.parity_row);
        let acc = self
            .coords
            .iter()
            .fold(Elem::ZERO, |acc, &j| f.add(acc, f.mul(h[j], value(j))));
        let own = h[self.info_coord];
        f.neg(f.div(acc, own).expect("repair row covers its coordinate"))
    }

    pub fn parity_coord(&self) -> usize {
        *self.coords.last().expect("repair set holds its parity")
    }
}

/// A repair set together with the coordinate it repairs; one per P₁ row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalGroup {
    pub row: usize,
    pub coords: Vec<usize>,
}

/// Two P₁ rows sharing at least two information coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolatingPair {
    pub rows: (usize, usize),
    pub shared: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipMatrix {
    pub r: GfMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IslrcCertificate {
    pub passed: bool,
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub local_rows: Vec<usize>,
    pub r_requested: usize,
    pub t_requested: usize,
    /// Largest P₁ row weight.
    pub r_observed: usize,
    /// Smallest P₁ column weight.
    pub t_observed: usize,
    pub violating_pair: Option<ViolatingPair>,
    /// Repair sets of each information coordinate, lowest row first.
    pub repair_sets: Vec<Vec<RepairSet>>,
    pub repair_sets_disjoint: bool,
    pub membership: Option<MembershipMatrix>,
}

impl IslrcCertificate {
    /// Availability actually provided to every information coordinate.
    pub fn min_repair_sets(&self) -> usize {
        self.repair_sets.iter().map(Vec::len).min().unwrap_or(0)
    }
}

pub fn check_islrc(code: &StandardParityCheck, r: usize, t: usize) -> IslrcCertificate {
    check_islrc_with(code, r, t, Exec::default())
}

pub fn check_islrc_with(
    code: &StandardParityCheck,
    r: usize,
    t: usize,
    exec: Exec,
) -> IslrcCertificate {
    let k = code.k();
    let local = code.local_rows();
    let supports: Vec<Support> = local.iter().map(|&i| code.info_support(i)).collect();

    let r_observed = supports.iter().map(Support::len).max().unwrap_or(0);
    let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (li, s) in supports.iter().enumerate() {
        for c in s.iter() {
            incidence[c].push(li);
        }
    }
    let t_observed = if local.is_empty() {
        0
    } else {
        incidence.iter().map(Vec::len).min().unwrap_or(0)
    };

    // For each row, the first later row meeting it in two or more columns.
    let first_clash = exec.map(supports.len(), |li| {
        let mut later: Vec<usize> = supports[li]
            .iter()
            .flat_map(|c| incidence[c].iter().copied().filter(|&lj| lj > li))
            .collect();
        later.sort_unstable();
        later.windows(2).find(|w| w[0] == w[1]).map(|w| w[0])
    });
    let violating_pair = first_clash
        .iter()
        .enumerate()
        .find_map(|(li, lj)| lj.map(|lj| (li, lj)))
        .map(|(li, lj)| ViolatingPair {
            rows: (local[li], local[lj]),
            shared: supports[li]
                .iter()
                .filter(|&c| supports[lj].contains(c))
                .collect(),
        });

    let passed = r_observed <= r && t_observed >= t && violating_pair.is_none();

    let mut repair_sets = Vec::new();
    let mut repair_sets_disjoint = true;
    let mut membership = None;
    if passed {
        repair_sets = (0..k)
            .map(|i| {
                incidence[i]
                    .iter()
                    .map(|&li| {
                        let row = local[li];
                        let mut coords: Vec<usize> =
                            supports[li].iter().filter(|&c| c != i).collect();
                        coords.push(code.parity_coord(row));
                        RepairSet {
                            info_coord: i,
                            coords,
                            parity_row: row,
                        }
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        repair_sets_disjoint = repair_sets.iter().all(|sets| pairwise_disjoint(sets));
        if code.field().is_binary() {
            membership = membership_matrix(code).ok();
        }
    }

    IslrcCertificate {
        passed,
        n: code.n(),
        k,
        l: local.len(),
        local_rows: local.to_vec(),
        r_requested: r,
        t_requested: t,
        r_observed,
        t_observed,
        violating_pair,
        repair_sets,
        repair_sets_disjoint,
        membership,
    }
}

fn pairwise_disjoint(sets: &[RepairSet]) -> bool {
    let mut seen: Vec<usize> = sets.iter().flat_map(|s| s.coords.iter().copied()).collect();
    let total = seen.len();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == total
}

/// One local group per P₁ row.
pub fn local_groups(
    code: &StandardParityCheck,
    cert: &IslrcCertificate,
) -> Result<Vec<LocalGroup>, LrcError> {
    if !cert.passed {
        return Err(LrcError::CertificateFailed);
    }
    Ok(code
        .local_rows()
        .iter()
        .map(|&row| LocalGroup {
            row,
            coords: code.row_coords(row),
        })
        .collect())
}

/// The k×l membership matrix, which is the transpose of P₁ for binary codes.
pub fn membership_matrix(code: &StandardParityCheck) -> Result<MembershipMatrix, LrcError> {
    if !code.field().is_binary() {
        return Err(LrcError::NonBinary(code.field().order()));
    }
    Ok(MembershipMatrix {
        r: code.p1().transpose(),
    })
}

/// Fewest locality rows any (·, k, r, t) IS-LRC can have: ⌈kt/r⌉.
pub fn min_local_rows(k: usize, r: usize, t: usize) -> usize {
    (k * t).div_ceil(r)
}
