use crate::algebra::{Base, HElem, HSet, Hyperfield};
use crate::error::{Error, Result};

/// A singleton or balanced set: exactly the finite sums over a stringent
/// hyperfield.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RealisableSet {
    Singleton(HElem),
    /// Canonical form as in [`HSet::Balanced`].
    Balanced(HElem),
}

impl RealisableSet {
    pub fn zero(hf: &Hyperfield) -> Self {
        RealisableSet::Singleton(hf.zero())
    }

    /// `a ⊞ -a`.
    pub fn balanced(hf: &Hyperfield, a: &HElem) -> Result<Self> {
        if hf.is_zero(a) {
            return Err(Error::Precondition("balanced set of zero".into()));
        }
        Self::from_hset(&hf.add(a, &hf.neg(a))?)
    }

    pub fn from_hset(s: &HSet) -> Result<Self> {
        match s {
            HSet::Balanced(a) => Ok(RealisableSet::Balanced(a.clone())),
            HSet::Finite(v) if v.len() == 1 => Ok(RealisableSet::Singleton(v[0].clone())),
            _ => Err(Error::Unsupported(format!("{s} is not a realisable set of a stringent instance"))),
        }
    }

    pub fn to_hset(&self) -> HSet {
        match self {
            RealisableSet::Singleton(x) => HSet::single(x.clone()),
            RealisableSet::Balanced(a) => HSet::Balanced(a.clone()),
        }
    }

    pub fn is_zero(&self, hf: &Hyperfield) -> bool {
        matches!(self, RealisableSet::Singleton(x) if hf.is_zero(x))
    }
}

pub fn realisable_add(hf: &Hyperfield, a: &RealisableSet, b: &RealisableSet) -> Result<RealisableSet> {
    if !hf.is_stringent() {
        return Err(Error::Unsupported(format!("{hf} is not stringent")));
    }
    RealisableSet::from_hset(&hf.add_sets(&a.to_hset(), &b.to_hset())?)
}

pub fn realisable_scale(hf: &Hyperfield, c: &HElem, a: &RealisableSet) -> RealisableSet {
    RealisableSet::from_hset(&hf.scale_set(c, &a.to_hset())).expect("scaling keeps realisability")
}

/// A `d × n` system: column `j` is the strict inequality
/// `⊞ᵢ A_ij ⊙ Xᵢ ≻ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealisableMatrix {
    hf: Hyperfield,
    rows: usize,
    columns: Vec<Vec<RealisableSet>>,
}

impl RealisableMatrix {
    pub fn from_columns(hf: &Hyperfield, columns: Vec<Vec<RealisableSet>>) -> Result<Self> {
        let rows = columns.first().map_or(0, Vec::len);
        Self::with_rows(hf, rows, columns)
    }

    /// As [`Self::from_columns`], but also valid for zero columns.
    pub fn with_rows(hf: &Hyperfield, rows: usize, columns: Vec<Vec<RealisableSet>>) -> Result<Self> {
        for c in &columns {
            if c.len() != rows {
                return Err(Error::Dimension { expected: rows, got: c.len() });
            }
            for e in c {
                match e {
                    RealisableSet::Singleton(x) => hf.validate(x)?,
                    RealisableSet::Balanced(a) => {
                        hf.validate(a)?;
                        if hf.base().is_none() {
                            return Err(Error::Unsupported(format!("{hf} has no symbolic balanced sets")));
                        }
                    }
                }
            }
        }
        Ok(RealisableMatrix { hf: hf.clone(), rows, columns })
    }

    /// Matrix with singleton entries, given row by row.
    pub fn from_rows(hf: &Hyperfield, rows: &[Vec<HElem>]) -> Result<Self> {
        let d = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension { expected: n, got: r.len() });
        }
        let columns = (0..n).map(|j| (0..d).map(|i| RealisableSet::Singleton(rows[i][j].clone())).collect()).collect();
        Self::with_rows(hf, d, columns)
    }

    pub fn hyperfield(&self) -> &Hyperfield {
        &self.hf
    }

    /// Number of variables.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of inequalities.
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &RealisableSet {
        &self.columns[j][i]
    }

    pub fn column(&self, j: usize) -> &[RealisableSet] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<RealisableSet>] {
        &self.columns
    }

    /// Rows reordered so that new row `i` is old row `order[i]`.
    pub fn permute_rows(&self, order: &[usize]) -> RealisableMatrix {
        RealisableMatrix {
            hf: self.hf.clone(),
            rows: self.rows,
            columns: self.columns.iter().map(|c| order.iter().map(|&i| c[i].clone()).collect()).collect(),
        }
    }

    /// `⊞ᵢ A_ij ⊙ xᵢ` over the first `x.len()` rows; the empty sum is `{0}`.
    pub fn column_value(&self, j: usize, x: &[HElem]) -> Result<RealisableSet> {
        let mut acc = RealisableSet::zero(&self.hf);
        for (i, xi) in x.iter().enumerate() {
            let term = realisable_scale(&self.hf, xi, &self.columns[j][i]);
            acc = realisable_add(&self.hf, &acc, &term)?;
        }
        Ok(acc)
    }

    /// Whether `x` satisfies every inequality.
    pub fn solves(&self, x: &[HElem]) -> Result<bool> {
        if x.len() != self.rows {
            return Err(Error::Dimension { expected: self.rows, got: x.len() });
        }
        for j in 0..self.cols() {
            if !self.hf.set_subset_positive(&self.column_value(j, x)?.to_hset())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `λ` is a nonzero nonnegative vector with `0 ∈ ⊞ⱼ λⱼ⊙A_ij`
    /// for every row.
    pub fn is_kernel(&self, lambda: &[HElem]) -> Result<bool> {
        if lambda.len() != self.cols() {
            return Err(Error::Dimension { expected: self.cols(), got: lambda.len() });
        }
        let hf = &self.hf;
        if lambda.iter().all(|l| hf.is_zero(l)) {
            return Ok(false);
        }
        for l in lambda {
            if !hf.is_zero(l) && !hf.is_positive(l)? {
                return Ok(false);
            }
        }
        for i in 0..self.rows {
            let mut acc = RealisableSet::zero(hf);
            for (j, l) in lambda.iter().enumerate() {
                acc = realisable_add(hf, &acc, &realisable_scale(hf, l, &self.columns[j][i]))?;
            }
            if !hf.set_contains_zero(&acc.to_hset()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn is_field_semidirect(&self) -> bool {
        self.hf.base() == Some(Base::Field)
    }
}
