use std::collections::HashSet;

use serde::Serialize;

use crate::algebra::{HElem, Hyperfield, Sgn};
use crate::error::{Error, Result};

use super::system::{realisable_add, realisable_scale, RealisableMatrix, RealisableSet};

/// Sign class of a column's last-row entry after normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ColClass {
    Plus,
    Minus,
    /// The entry is `1 ⊞ -1`.
    Both,
    Zero,
}

#[derive(Clone, Debug)]
pub struct Normalized {
    pub matrix: RealisableMatrix,
    pub classes: Vec<ColClass>,
    /// Positive factor each column was multiplied by.
    pub scales: Vec<HElem>,
}

impl Normalized {
    pub fn indices(&self, class: ColClass) -> Vec<usize> {
        (0..self.classes.len()).filter(|&j| self.classes[j] == class).collect()
    }
}

/// Where a column of the reduced system comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Origin {
    /// Sum of a `J⁺ ∪ J•` column and a `J⁻ ∪ J•` column.
    Pair(usize, usize),
    /// A `J⁰` column with its last entry dropped.
    Kept(usize),
}

#[derive(Clone, Debug)]
pub struct EliminationStep {
    pub normalized: Normalized,
    pub reduced: RealisableMatrix,
    pub origins: Vec<Origin>,
}

impl EliminationStep {
    /// No column had a balanced last entry.
    pub fn generic(&self) -> bool {
        !self.normalized.classes.contains(&ColClass::Both)
    }
}

/// All steps of a full elimination, last variable first.
#[derive(Clone, Debug)]
pub struct Trace {
    pub steps: Vec<EliminationStep>,
}

impl Trace {
    /// System left once every variable is gone.
    pub fn remainder(&self) -> &RealisableMatrix {
        &self.steps.last().expect("trace of a system with variables").reduced
    }

    pub fn generic(&self) -> bool {
        self.steps.iter().all(EliminationStep::generic)
    }
}

fn require_fm(hf: &Hyperfield) -> Result<()> {
    hf.require_dense()
}

/// Scales every column by a positive unit so that its last entry is one of
/// `1`, `-1`, `1 ⊞ -1` or `0`.
pub fn normalize_last_row(m: &RealisableMatrix) -> Result<Normalized> {
    let hf = m.hyperfield();
    require_fm(hf)?;
    let d = m.rows();
    if d == 0 {
        return Err(Error::Precondition("system has no variables".into()));
    }
    let mut columns = Vec::with_capacity(m.cols());
    let mut classes = Vec::with_capacity(m.cols());
    let mut scales = Vec::with_capacity(m.cols());
    for col in m.columns() {
        let (class, scale) = match &col[d - 1] {
            RealisableSet::Singleton(x) if hf.is_zero(x) => (ColClass::Zero, hf.one()),
            RealisableSet::Singleton(x) => match hf.sign_of(x)? {
                Some(Sgn::Pos) => (ColClass::Plus, hf.inv(x)?),
                _ => (ColClass::Minus, hf.inv(&hf.neg(x))?),
            },
            RealisableSet::Balanced(a) => (ColClass::Both, hf.inv(a)?),
        };
        columns.push(col.iter().map(|e| realisable_scale(hf, &scale, e)).collect());
        classes.push(class);
        scales.push(scale);
    }
    Ok(Normalized { matrix: RealisableMatrix::with_rows(hf, d, columns)?, classes, scales })
}

/// Replaces column `j`, whose last entry is `1 ⊞ -1`, by a copy ending in
/// `1` and a copy ending in `-1`.
pub fn split_balanced_column(m: &RealisableMatrix, j: usize) -> Result<RealisableMatrix> {
    let hf = m.hyperfield();
    let d = m.rows();
    let col = m.column(j);
    if d == 0 || !matches!(col[d - 1], RealisableSet::Balanced(_)) {
        return Ok(m.clone());
    }
    let mut plus = col.to_vec();
    let mut minus = col.to_vec();
    plus[d - 1] = RealisableSet::Singleton(hf.one());
    minus[d - 1] = RealisableSet::Singleton(hf.neg(&hf.one()));
    let mut columns: Vec<Vec<RealisableSet>> = m.columns().to_vec();
    columns[j] = plus;
    columns.insert(j + 1, minus);
    RealisableMatrix::with_rows(hf, d, columns)
}

/// One Fourier–Motzkin step: removes the last variable.
pub fn eliminate_last_var(m: &RealisableMatrix) -> Result<EliminationStep> {
    let normalized = normalize_last_row(m)?;
    let hf = m.hyperfield();
    let d = m.rows();
    let nm = &normalized.matrix;
    let uppers: Vec<usize> = (0..nm.cols()).filter(|&j| matches!(normalized.classes[j], ColClass::Plus | ColClass::Both)).collect();
    let lowers: Vec<usize> = (0..nm.cols()).filter(|&j| matches!(normalized.classes[j], ColClass::Minus | ColClass::Both)).collect();
    let mut columns = Vec::new();
    let mut origins = Vec::new();
    let mut seen = HashSet::new();
    let mut push = |col: Vec<RealisableSet>, origin: Origin| {
        if seen.insert(col.clone()) {
            columns.push(col);
            origins.push(origin);
        }
    };
    for &j in &uppers {
        for &k in &lowers {
            let col = (0..d - 1).map(|i| realisable_add(hf, nm.get(i, j), nm.get(i, k))).collect::<Result<Vec<_>>>()?;
            push(col, Origin::Pair(j, k));
        }
    }
    for j in normalized.indices(ColClass::Zero) {
        push(nm.column(j)[..d - 1].to_vec(), Origin::Kept(j));
    }
    let reduced = RealisableMatrix::with_rows(hf, d - 1, columns)?;
    Ok(EliminationStep { normalized, reduced, origins })
}

/// Eliminates the last `k` variables.
pub fn eliminate_k(m: &RealisableMatrix, k: usize) -> Result<Vec<EliminationStep>> {
    if k > m.rows() {
        return Err(Error::Precondition(format!("cannot eliminate {k} of {} variables", m.rows())));
    }
    let mut steps = Vec::with_capacity(k);
    let mut cur = m.clone();
    for _ in 0..k {
        let step = eliminate_last_var(&cur)?;
        cur = step.reduced.clone();
        steps.push(step);
    }
    Ok(steps)
}

pub fn eliminate_all(m: &RealisableMatrix) -> Result<Trace> {
    require_fm(m.hyperfield())?;
    if m.rows() == 0 {
        return Err(Error::Precondition("system has no variables".into()));
    }
    Ok(Trace { steps: eliminate_k(m, m.rows())? })
}

/// Whether the strict system has a solution. A system without variables is
/// feasible only when it has no inequalities, since every empty sum is `{0}`.
pub fn feasible_strict(m: &RealisableMatrix) -> Result<bool> {
    require_fm(m.hyperfield())?;
    if m.rows() == 0 {
        return Ok(m.cols() == 0);
    }
    Ok(eliminate_all(m)?.remainder().cols() == 0)
}
