//! Shard-store simulator: one code symbol per node, erasures, and repair of
//! information symbols from their local repair sets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::distance::generator_from_check;
use crate::field::Elem;
use crate::lrc::{check_islrc, RepairSet, StandardParityCheck};
use crate::matrix::GfMatrix;
use crate::par::Exec;

/// Messages enumerated by [`exhaustive_sweep`] at most.
pub const SWEEP_CAP: u64 = 1 << 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepairError {
    #[error("coordinate {coord} is a parity symbol; locality guarantees cover information coordinates only")]
    InfoOnly { coord: usize },
    #[error("every repair set of coordinate {coord} contains an erased node")]
    Unrepairable { coord: usize },
    #[error("repair set {index} does not exist for coordinate {coord}")]
    NoSuchSet { coord: usize, index: usize },
    #[error("repair sets of coordinate {coord} touch erased node {node}")]
    ErasedInRepairSets { coord: usize, node: usize },
    #[error("message has {got} symbols, expected {expected}")]
    Length { expected: usize, got: usize },
    #[error("symbol {value} is not in the code's field GF({q})")]
    OutOfField { value: u16, q: u32 },
    #[error("node {node} does not exist")]
    NoSuchNode { node: usize },
    #[error("code fails the (r={r}, t={t}) locality check")]
    NotLocallyRepairable { r: usize, t: usize },
    #[error("repair sets of coordinate {coord} overlap outside it")]
    Overlapping { coord: usize },
    #[error("{count} messages exceeds the exhaustive sweep cap {cap}")]
    SweepCap { count: u128, cap: u64 },
    #[error("at least one trial is required")]
    NoTrials,
}

/// A verified code with its generator and repair sets.
#[derive(Debug, Clone)]
pub struct Codec {
    code: StandardParityCheck,
    generator: GfMatrix,
    repair_sets: Vec<Vec<RepairSet>>,
    r: usize,
    t: usize,
}

impl Codec {
    pub fn new(code: StandardParityCheck, r: usize, t: usize) -> Result<Self, RepairError> {
        let cert = check_islrc(&code, r, t);
        if !cert.passed {
            return Err(RepairError::NotLocallyRepairable { r, t });
        }
        if let Some(coord) = (0..code.k()).find(|&i| !disjoint(&cert.repair_sets[i])) {
            return Err(RepairError::Overlapping { coord });
        }
        Ok(Codec {
            generator: generator_from_check(&code),
            repair_sets: cert.repair_sets,
            code,
            r,
            t,
        })
    }

    pub fn code(&self) -> &StandardParityCheck {
        &self.code
    }

    pub fn generator(&self) -> &GfMatrix {
        &self.generator
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn repair_sets(&self, coord: usize) -> &[RepairSet] {
        &self.repair_sets[coord]
    }

    /// `message · G`; the first k symbols are the message itself.
    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>, RepairError> {
        let k = self.code.k();
        if message.len() != k {
            return Err(RepairError::Length {
                expected: k,
                got: message.len(),
            });
        }
        let f = self.code.field();
        if let Some(bad) = message.iter().find(|e| e.0 as u32 >= f.order()) {
            return Err(RepairError::OutOfField {
                value: bad.0,
                q: f.order(),
            });
        }
        let mut c = vec![Elem::ZERO; self.code.n()];
        for (i, &m) in message.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for (cj, &g) in c.iter_mut().zip(self.generator.row(i)) {
                if !g.is_zero() {
                    *cj = f.add(*cj, f.mul(m, g));
                }
            }
        }
        Ok(c)
    }

    pub fn store(&self, message: &[Elem]) -> Result<ShardStore<'_>, RepairError> {
        let codeword = self.encode(message)?;
        Ok(ShardStore {
            codec: self,
            nodes: codeword.iter().copied().map(Some).collect(),
            original: codeword,
        })
    }

    fn random_message(&self, rng: &mut ChaCha8Rng) -> Vec<Elem> {
        let q = self.code.field().order();
        (0..self.code.k())
            .map(|_| Elem(rng.random_range(0..q) as u16))
            .collect()
    }
}

fn disjoint(sets: &[RepairSet]) -> bool {
    let mut all: Vec<usize> = sets.iter().flat_map(|s| s.coords.iter().copied()).collect();
    let n = all.len();
    all.sort_unstable();
    all.dedup();
    all.len() == n
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepairTrace {
    pub coord: usize,
    pub repair_set: Vec<usize>,
    pub parity_row: usize,
    /// Nodes read, in order.
    pub reads: Vec<usize>,
    pub value: Elem,
    pub success: bool,
}

/// n nodes each holding one code symbol or an erasure.
#[derive(Debug, Clone)]
pub struct ShardStore<'a> {
    codec: &'a Codec,
    nodes: Vec<Option<Elem>>,
    /// Kept for auditing repairs only; never read by repair logic.
    original: Vec<Elem>,
}

impl<'a> ShardStore<'a> {
    pub fn nodes(&self) -> &[Option<Elem>] {
        &self.nodes
    }

    pub fn original(&self) -> &[Elem] {
        &self.original
    }

    /// Every live node still holds its original symbol.
    pub fn is_consistent(&self) -> bool {
        self.nodes
            .iter()
            .zip(&self.original)
            .all(|(n, o)| n.is_none_or(|v| v == *o))
    }

    pub fn erase(&mut self, coords: &[usize]) -> Result<(), RepairError> {
        if let Some(&node) = coords.iter().find(|&&c| c >= self.nodes.len()) {
            return Err(RepairError::NoSuchNode { node });
        }
        coords.iter().for_each(|&c| self.nodes[c] = None);
        Ok(())
    }

    fn check_info(&self, coord: usize) -> Result<(), RepairError> {
        if coord >= self.codec.code.k() {
            return Err(RepairError::InfoOnly { coord });
        }
        Ok(())
    }

    fn live(&self, set: &RepairSet) -> bool {
        set.coords.iter().all(|&j| self.nodes[j].is_some())
    }

    fn apply(&mut self, coord: usize, set: &RepairSet) -> RepairTrace {
        let value = set.solve(&self.codec.code, |j| self.nodes[j].expect("live node"));
        self.nodes[coord] = Some(value);
        RepairTrace {
            coord,
            repair_set: set.coords.clone(),
            parity_row: set.parity_row,
            reads: set.coords.clone(),
            value,
            success: value == self.original[coord],
        }
    }

    /// Repairs `coord` from its first fully live repair set (lowest row).
    pub fn repair_info(&mut self, coord: usize) -> Result<RepairTrace, RepairError> {
        self.check_info(coord)?;
        let codec = self.codec;
        let set = codec.repair_sets[coord]
            .iter()
            .find(|s| self.live(s))
            .ok_or(RepairError::Unrepairable { coord })?;
        Ok(self.apply(coord, set))
    }

    /// Repairs `coord` from its `index`-th repair set.
    pub fn repair_with(&mut self, coord: usize, index: usize) -> Result<RepairTrace, RepairError> {
        self.check_info(coord)?;
        let codec = self.codec;
        let set = codec.repair_sets[coord]
            .get(index)
            .ok_or(RepairError::NoSuchSet { coord, index })?;
        if !self.live(set) {
            return Err(RepairError::Unrepairable { coord });
        }
        Ok(self.apply(coord, set))
    }

    /// Recomputes `coord` independently from each of its disjoint repair sets.
    pub fn parallel_read(&self, coord: usize) -> Result<Vec<Elem>, RepairError> {
        self.check_info(coord)?;
        let sets = &self.codec.repair_sets[coord];
        for s in sets {
            if let Some(&node) = s.coords.iter().find(|&&j| self.nodes[j].is_none()) {
                return Err(RepairError::ErasedInRepairSets { coord, node });
            }
        }
        Ok(sets
            .iter()
            .map(|s| s.solve(&self.codec.code, |j| self.nodes[j].expect("live node")))
            .collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialTrace {
    pub trial: u64,
    pub erased: usize,
    pub repair_set: Vec<usize>,
    pub reads: usize,
    pub success: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignStats {
    pub seed: u64,
    pub trials: u64,
    pub attempted: u64,
    pub succeeded: u64,
    pub mean_reads: f64,
    pub max_reads: usize,
    pub traces: Vec<TrialTrace>,
}

impl CampaignStats {
    /// One line per trial: trial, erased coordinate, repair set, reads.
    pub fn trace_log(&self) -> String {
        self.traces
            .iter()
            .map(|t| {
                let set: Vec<String> = t.repair_set.iter().map(|c| c.to_string()).collect();
                format!(
                    "{} {} {} {}{}\n",
                    t.trial,
                    t.erased,
                    set.join(","),
                    t.reads,
                    if t.success { "" } else { " FAILED" }
                )
            })
            .collect()
    }
}

/// Per trial: a random message, one random information erasure, one repair.
/// Trial `i` draws from stream `i` of the seeded generator, so the outcome
/// does not depend on how trials are scheduled.
pub fn campaign(
    codec: &Codec,
    seed: u64,
    trials: u64,
    exec: Exec,
) -> Result<CampaignStats, RepairError> {
    if trials == 0 {
        return Err(RepairError::NoTrials);
    }
    let k = codec.code.k();
    let outcomes = exec.map(trials as usize, |trial| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        let message = codec.random_message(&mut rng);
        let coord = rng.random_range(0..k);
        let mut store = codec.store(&message)?;
        store.erase(&[coord])?;
        let trace = store.repair_info(coord)?;
        Ok::<_, RepairError>(TrialTrace {
            trial: trial as u64,
            erased: coord,
            reads: trace.reads.len(),
            repair_set: trace.repair_set,
            success: trace.success && store.is_consistent(),
        })
    });
    let traces = outcomes.into_iter().collect::<Result<Vec<_>, _>>()?;
    let succeeded = traces.iter().filter(|t| t.success).count() as u64;
    let total_reads: usize = traces.iter().map(|t| t.reads).sum();
    Ok(CampaignStats {
        seed,
        trials,
        attempted: trials,
        succeeded,
        mean_reads: total_reads as f64 / trials as f64,
        max_reads: traces.iter().map(|t| t.reads).max().unwrap_or(0),
        traces,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepStats {
    pub messages: u64,
    pub repairs: u64,
    pub failures: u64,
    pub max_reads: usize,
    pub parallel_reads_agree: bool,
}

#[allow(clippy::needless_range_loop)]
fn sweep_messages(codec: &Codec, messages: &[Vec<Elem>], exec: Exec) -> SweepStats {
    let k = codec.code.k();
    let per_message = exec.map_slice(messages, |msg| {
        let store = codec.store(msg).expect("valid message");
        let (mut repairs, mut failures, mut max_reads) = (0u64, 0u64, 0usize);
        let mut agree = true;
        for i in 0..k {
            let reads = store.parallel_read(i).expect("no erasures");
            agree &= reads.iter().all(|&v| v == msg[i]);
            for j in 0..codec.repair_sets[i].len() {
                let mut s = store.clone();
                s.erase(&[i]).expect("valid node");
                let trace = s.repair_with(i, j).expect("single erasure is repairable");
                repairs += 1;
                max_reads = max_reads.max(trace.reads.len());
                if !trace.success || !s.is_consistent() || trace.reads.len() > codec.r {
                    failures += 1;
                }
            }
        }
        (repairs, failures, max_reads, agree)
    });
    SweepStats {
        messages: messages.len() as u64,
        repairs: per_message.iter().map(|r| r.0).sum(),
        failures: per_message.iter().map(|r| r.1).sum(),
        max_reads: per_message.iter().map(|r| r.2).max().unwrap_or(0),
        parallel_reads_agree: per_message.iter().all(|r| r.3),
    }
}

/// Every message, every information coordinate, every repair set.
pub fn exhaustive_sweep(codec: &Codec, exec: Exec) -> Result<SweepStats, RepairError> {
    let q = codec.code.field().order();
    let k = codec.code.k();
    let count = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if count > SWEEP_CAP as u128 {
        return Err(RepairError::SweepCap {
            count,
            cap: SWEEP_CAP,
        });
    }
    let messages: Vec<Vec<Elem>> = (0..count as u64)
        .map(|mut x| {
            (0..k)
                .map(|_| {
                    let d = x % q as u64;
                    x /= q as u64;
                    Elem(d as u16)
                })
                .collect()
        })
        .collect();
    Ok(sweep_messages(codec, &messages, exec))
}

/// Like [`exhaustive_sweep`] over `count` seeded random messages.
pub fn random_sweep(codec: &Codec, count: usize, seed: u64, exec: Exec) -> SweepStats {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let messages: Vec<Vec<Elem>> = (0..count).map(|_| codec.random_message(&mut rng)).collect();
    sweep_messages(codec, &messages, exec)
}
