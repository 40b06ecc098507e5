//! Finite hyperfields given by explicit operation tables, with an
//! exhaustive axiom checker.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tables are limited to 64 elements so sums fit in a bitmask.
pub const MAX_TABLE: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableHyperfield {
    names: Vec<String>,
    zero: usize,
    one: usize,
    neg: Vec<usize>,
    mul: Vec<Vec<usize>>,
    add: Vec<Vec<u64>>,
    positive: Option<u64>,
}

/// On-disk form. `mul` and `add` are keyed by "a,b"; a missing entry is
/// taken from its mirror "b,a".
#[derive(Debug, Serialize, Deserialize)]
pub struct TableFile {
    pub elements: Vec<String>,
    pub zero: String,
    pub one: String,
    pub neg: BTreeMap<String, String>,
    pub mul: BTreeMap<String, String>,
    pub add: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub positive: Option<Vec<String>>,
}

pub(crate) fn mask_iter(m: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| m >> i & 1 == 1)
}

impl TableHyperfield {
    /// Builds a table from raw operation data, checking shape only.
    pub fn new(
        names: Vec<String>,
        zero: usize,
        one: usize,
        neg: Vec<usize>,
        mul: Vec<Vec<usize>>,
        add: Vec<Vec<u64>>,
        positive: Option<u64>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 || n > MAX_TABLE {
            return Err(Error::Table(format!("table size {n} out of range 1..={MAX_TABLE}")));
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let ok = zero < n
            && one < n
            && neg.len() == n
            && neg.iter().all(|&x| x < n)
            && mul.len() == n
            && mul.iter().all(|r| r.len() == n && r.iter().all(|&x| x < n))
            && add.len() == n
            && add.iter().all(|r| r.len() == n && r.iter().all(|&m| m != 0 && m & !full == 0))
            && positive.is_none_or(|p| p & !full == 0);
        if !ok {
            return Err(Error::Table("operation tables have the wrong shape".into()));
        }
        Ok(TableHyperfield { names, zero, one, neg, mul, add, positive })
    }

    pub fn from_file_struct(f: &TableFile) -> Result<Self> {
        let n = f.elements.len();
        let idx: BTreeMap<&str, usize> = f.elements.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        if idx.len() != n {
            return Err(Error::Table("duplicate element names".into()));
        }
        let look = |s: &str| -> Result<usize> { idx.get(s.trim()).copied().ok_or_else(|| Error::Table(format!("unknown element {s:?}"))) };
        let pair = |k: &str| -> Result<(usize, usize)> {
            let (a, b) = k.split_once(',').ok_or_else(|| Error::Table(format!("bad key {k:?}")))?;
            Ok((look(a)?, look(b)?))
        };
        let mut neg = vec![None; n];
        for (k, v) in &f.neg {
            neg[look(k)?] = Some(look(v)?);
        }
        let mut mul = vec![vec![None; n]; n];
        for (k, v) in &f.mul {
            let (a, b) = pair(k)?;
            mul[a][b] = Some(look(v)?);
        }
        let mut add = vec![vec![None; n]; n];
        for (k, v) in &f.add {
            let (a, b) = pair(k)?;
            let mut m = 0u64;
            for s in v {
                m |= 1 << look(s)?;
            }
            add[a][b] = Some(m);
        }
        for a in 0..n {
            for b in 0..n {
                if mul[a][b].is_none() {
                    mul[a][b] = mul[b][a];
                }
                if add[a][b].is_none() {
                    add[a][b] = add[b][a];
                }
            }
        }
        let missing =
            |what: &str, a: usize, b: usize| Error::Table(format!("missing {what} entry for {},{}", f.elements[a], f.elements[b]));
        let neg = neg
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| Error::Table(format!("missing neg entry for {}", f.elements[i]))))
            .collect::<Result<Vec<_>>>()?;
        let mul =
            (0..n).map(|a| (0..n).map(|b| mul[a][b].ok_or_else(|| missing("mul", a, b))).collect()).collect::<Result<Vec<Vec<_>>>>()?;
        let add =
            (0..n).map(|a| (0..n).map(|b| add[a][b].ok_or_else(|| missing("add", a, b))).collect()).collect::<Result<Vec<Vec<_>>>>()?;
        let positive = match &f.positive {
            None => None,
            Some(p) => {
                let mut m = 0u64;
                for s in p {
                    m |= 1 << look(s)?;
                }
                Some(m)
            }
        };
        let t = TableHyperfield::new(f.elements.clone(), look(&f.zero)?, look(&f.one)?, neg, mul, add, positive)?;
        if let Some(p) = t.positive {
            if !t.check_ordering(p) {
                return Err(Error::Table("positive set fails the ordering axioms".into()));
            }
        }
        Ok(t)
    }

    pub fn parse_toml(text: &str) -> Result<Self> {
        let f: TableFile = toml::from_str(text).map_err(|e| Error::Table(e.to_string()))?;
        Self::from_file_struct(&f)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Table(format!("{}: {e}", path.display())))?;
        Self::parse_toml(&text)
    }

    pub fn to_file_struct(&self) -> TableFile {
        let n = self.len();
        let nm = |i: usize| self.names[i].clone();
        let key = |a: usize, b: usize| format!("{},{}", self.names[a], self.names[b]);
        let mut mul = BTreeMap::new();
        let mut add = BTreeMap::new();
        for a in 0..n {
            for b in a..n {
                mul.insert(key(a, b), nm(self.mul[a][b]));
                add.insert(key(a, b), mask_iter(self.add[a][b]).map(nm).collect());
            }
        }
        TableFile {
            elements: self.names.clone(),
            zero: nm(self.zero),
            one: nm(self.one),
            neg: (0..n).map(|i| (nm(i), nm(self.neg[i]))).collect(),
            mul,
            add,
            positive: self.positive.map(|p| mask_iter(p).map(nm).collect()),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(&self.to_file_struct()).expect("table serializes")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn add_mask(&self, a: usize, b: usize) -> u64 {
        self.add[a][b]
    }

    pub fn positive(&self) -> Option<u64> {
        self.positive
    }

    pub fn with_positive(&self, p: Option<u64>) -> Self {
        TableHyperfield { positive: p, ..self.clone() }
    }

    /// Replaces one sum entry (and its mirror). Used to build broken tables.
    pub fn with_add_entry(&self, a: usize, b: usize, m: u64) -> Self {
        let mut t = self.clone();
        t.add[a][b] = m;
        t.add[b][a] = m;
        t
    }

    fn full(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    /// Set sum of two subsets.
    pub fn add_sets(&self, x: u64, y: u64) -> u64 {
        let mut out = 0;
        for a in mask_iter(x) {
            for b in mask_iter(y) {
                out |= self.add[a][b];
            }
        }
        out
    }

    pub fn is_stringent(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| (self.add[a][b].count_ones() > 1) == (a != self.zero && b == self.neg[a])))
    }

    /// The three ordering axioms for a candidate positive set.
    pub fn check_ordering(&self, p: u64) -> bool {
        let n = self.len();
        if p >> self.zero & 1 == 1 {
            return false;
        }
        let mut negs = 0u64;
        for a in mask_iter(p) {
            negs |= 1 << self.neg[a];
        }
        if negs & p != 0 || (negs | p | 1 << self.zero) != self.full() {
            return false;
        }
        for a in mask_iter(p) {
            for b in mask_iter(p) {
                if self.add[a][b] & !p != 0 || p >> self.mul[a][b] & 1 == 0 {
                    return false;
                }
            }
        }
        let _ = n;
        true
    }

    /// Exhaustive check of every hyperfield axiom.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.len();
        let mut found: BTreeMap<Axiom, Vec<usize>> = BTreeMap::new();
        let mut note = |ax: Axiom, w: &[usize]| {
            found.entry(ax).or_insert_with(|| w.to_vec());
        };
        let z = self.zero;
        let one = self.one;
        for a in 0..n {
            if self.add[z][a] != 1 << a {
                note(Axiom::AddIdentity, &[z, a]);
            }
            if self.mul[one][a] != a {
                note(Axiom::MulIdentity, &[one, a]);
            }
            if self.mul[z][a] != z {
                note(Axiom::ZeroAbsorbs, &[z, a]);
            }
            let inverses: Vec<usize> = (0..n).filter(|&b| self.add[a][b] >> z & 1 == 1).collect();
            if inverses != [self.neg[a]] {
                note(Axiom::UniqueInverse, &[a, self.neg[a]]);
            }
            if a != z && !(0..n).any(|b| self.mul[a][b] == one) {
                note(Axiom::MulInverse, &[a]);
            }
            for b in 0..n {
                if self.add[a][b] != self.add[b][a] {
                    note(Axiom::AddCommutative, &[a, b]);
                }
                if self.mul[a][b] != self.mul[b][a] {
                    note(Axiom::MulCommutative, &[a, b]);
                }
                if a != z && b != z && self.mul[a][b] == z {
                    note(Axiom::MulInverse, &[a, b]);
                }
                for c in 0..n {
                    let left = self.add_sets(self.add[a][b], 1 << c);
                    let right = self.add_sets(1 << a, self.add[b][c]);
                    if left != right {
                        note(Axiom::AddAssociative, &[a, b, c]);
                    }
                    if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]] {
                        note(Axiom::MulAssociative, &[a, b, c]);
                    }
                    let lhs = self.scale(a, self.add[b][c]);
                    let rhs = self.add[self.mul[a][b]][self.mul[a][c]];
                    if lhs != rhs {
                        note(Axiom::Distributive, &[a, b, c]);
                    }
                    let fwd = self.add[b][c] >> a & 1 == 1;
                    let back = self.add[a][self.neg[b]] >> c & 1 == 1;
                    if fwd != back {
                        note(Axiom::Reversibility, &[a, b, c]);
                    }
                }
            }
        }
        let violations = found
            .into_iter()
            .map(|(axiom, w)| AxiomViolation { axiom, witness: w.iter().map(|&i| self.names[i].clone()).collect() })
            .collect();
        AxiomReport { violations }
    }

    /// `a ⊙ S` for a subset `S`.
    pub fn scale(&self, a: usize, s: u64) -> u64 {
        mask_iter(s).fold(0, |m, x| m | 1 << self.mul[a][x])
    }

    /// Sign hyperfield as a table, elements `0, +, -`.
    pub fn sign() -> Self {
        let names = vec!["0".to_string(), "+".to_string(), "-".to_string()];
        let neg = vec![0, 2, 1];
        let mul = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]];
        let add = vec![vec![0b001, 0b010, 0b100], vec![0b010, 0b010, 0b111], vec![0b100, 0b111, 0b100]];
        TableHyperfield::new(names, 0, 1, neg, mul, add, Some(0b010)).expect("sign table")
    }

    /// Krasner hyperfield as a table, elements `0, 1`.
    pub fn krasner() -> Self {
        let names = vec!["0".to_string(), "1".to_string()];
        let add = vec![vec![0b01, 0b10], vec![0b10, 0b11]];
        TableHyperfield::new(names, 0, 1, vec![0, 1], vec![vec![0, 0], vec![0, 1]], add, None).expect("krasner table")
    }

    /// The five-element ordered factor hyperfield on `{0, 1, t, -t, -1}`,
    /// with positive set `{1, t}`.
    pub fn h5() -> Self {
        TableHyperfield::parse_toml(H5_TOML).expect("builtin table parses")
    }
}

pub const H5_TOML: &str = include_str!("../../data/h5.hf");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AddCommutative,
    AddAssociative,
    AddIdentity,
    UniqueInverse,
    Reversibility,
    MulCommutative,
    MulAssociative,
    MulIdentity,
    MulInverse,
    ZeroAbsorbs,
    Distributive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, ax: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == ax)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "all axioms hold");
        }
        for v in &self.violations {
            writeln!(f, "{:?} fails at ({})", v.axiom, v.witness.join(", "))?;
        }
        Ok(())
    }
}
