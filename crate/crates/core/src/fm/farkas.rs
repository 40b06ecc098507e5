//! The Farkas dichotomy: a positive kernel vector or a separator.

use serde::Serialize;

use crate::algebra::HElem;
use crate::error::{Error, Result};

use super::eliminate::{eliminate_all, Origin, Trace};
use super::solve::back_substitute;
use super::system::RealisableMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vector", rename_all = "snake_case")]
pub enum FarkasCertificate {
    /// Nonnegative `λ`, not all zero, with `0 ∈ ⊞ⱼ λⱼ⊙A_ij` for every row.
    Kernel(Vec<HElem>),
    /// `α` with `⊞ᵢ αᵢ⊙A_ij ⊆ H⁺` for every column.
    Separator(Vec<HElem>),
    /// A balanced last entry showed up over `Q ⋊ G`.
    UndecidedNonGeneric,
}

impl FarkasCertificate {
    /// Re-checks the certificate against `m`.
    pub fn verify(&self, m: &RealisableMatrix) -> Result<bool> {
        match self {
            FarkasCertificate::Kernel(l) => m.is_kernel(l),
            FarkasCertificate::Separator(a) => m.solves(a),
            FarkasCertificate::UndecidedNonGeneric => Ok(true),
        }
    }
}

/// Rebuilds a kernel vector of the original system from the elimination of
/// an infeasible one.
pub fn reconstruct_kernel(m: &RealisableMatrix, trace: &Trace) -> Result<Vec<HElem>> {
    let hf = m.hyperfield();
    let mut lambda: Vec<HElem> = vec![hf.one(); trace.remainder().cols()];
    for step in trace.steps.iter().rev() {
        let n = step.normalized.matrix.cols();
        let mut acc: Vec<Vec<HElem>> = vec![Vec::new(); n];
        for (r, origin) in step.origins.iter().enumerate() {
            match *origin {
                Origin::Pair(j, k) => {
                    acc[j].push(lambda[r].clone());
                    acc[k].push(lambda[r].clone());
                }
                Origin::Kept(j) => acc[j].push(lambda[r].clone()),
            }
        }
        lambda = acc
            .iter()
            .zip(&step.normalized.scales)
            .map(|(terms, scale)| {
                if terms.is_empty() {
                    return Ok(hf.zero());
                }
                // Sums of positives are single positives over stringent instances.
                let s = hf.sum_many(terms)?;
                let x = s.as_singleton().ok_or_else(|| Error::Internal("positive sum is not a singleton".into()))?;
                Ok(hf.mul(x, scale))
            })
            .collect::<Result<_>>()?;
    }
    Ok(lambda)
}

fn is_undecidable(m: &RealisableMatrix, trace: &Trace) -> bool {
    m.is_field_semidirect() && !trace.generic()
}

fn farkas_once(m: &RealisableMatrix) -> Result<FarkasCertificate> {
    let trace = eliminate_all(m)?;
    if trace.remainder().cols() == 0 {
        match back_substitute(m, &trace) {
            Ok(x) if m.solves(&x)? => Ok(FarkasCertificate::Separator(x)),
            _ if is_undecidable(m, &trace) => Ok(FarkasCertificate::UndecidedNonGeneric),
            Ok(_) => Err(Error::Internal("back-substituted point fails the system".into())),
            Err(e) => Err(e),
        }
    } else {
        if is_undecidable(m, &trace) {
            return Ok(FarkasCertificate::UndecidedNonGeneric);
        }
        let lambda = reconstruct_kernel(m, &trace)?;
        if !m.is_kernel(&lambda)? {
            return Err(Error::Internal("reconstructed multipliers are not a kernel vector".into()));
        }
        Ok(FarkasCertificate::Kernel(lambda))
    }
}

/// Exactly one of a kernel vector or a separator, verified before it is
/// returned. Over `Q ⋊ G` a non-generic run is reported rather than guessed.
pub fn farkas(m: &RealisableMatrix) -> Result<FarkasCertificate> {
    farkas_with(m, false)
}

/// Largest row count for which `farkas_with` tries every row order.
pub const MAX_PERMUTED_ROWS: usize = 6;

/// As [`farkas`]; with `try_row_orders`, an undecided run is retried under
/// every other row order (at most [`MAX_PERMUTED_ROWS`] rows).
pub fn farkas_with(m: &RealisableMatrix, try_row_orders: bool) -> Result<FarkasCertificate> {
    m.hyperfield().require_dense()?;
    if m.rows() == 0 {
        return Ok(if m.cols() == 0 {
            FarkasCertificate::Separator(Vec::new())
        } else {
            FarkasCertificate::Kernel(vec![m.hyperfield().one(); m.cols()])
        });
    }
    let first = farkas_once(m)?;
    if first != FarkasCertificate::UndecidedNonGeneric || !try_row_orders {
        return Ok(first);
    }
    if m.rows() > MAX_PERMUTED_ROWS {
        return Err(Error::Precondition(format!("row-order search is limited to {MAX_PERMUTED_ROWS} rows")));
    }
    for order in permutations(m.rows()).into_iter().skip(1) {
        match farkas_once(&m.permute_rows(&order))? {
            FarkasCertificate::UndecidedNonGeneric => continue,
            FarkasCertificate::Kernel(l) => return Ok(FarkasCertificate::Kernel(l)),
            FarkasCertificate::Separator(a) => {
                let mut x = vec![HElem::Zero; a.len()];
                for (new, &old) in order.iter().enumerate() {
                    x[old] = a[new].clone();
                }
                debug_assert!(m.solves(&x).unwrap_or(false));
                return Ok(FarkasCertificate::Separator(x));
            }
        }
    }
    Ok(FarkasCertificate::UndecidedNonGeneric)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn go(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            go(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    go(0, &mut cur, &mut out);
    out
}

/// Weak duality for one pair of candidates: `λ` and `α` cannot both verify.
/// Returns `true` when the pair is consistent with it.
pub fn weak_duality_holds(m: &RealisableMatrix, lambda: &[HElem], alpha: &[HElem]) -> Result<bool> {
    Ok(!(m.is_kernel(lambda)? && m.solves(alpha)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::{member_conv_stringent, MembershipResult};
    use crate::parse::{parse_instance, parse_point, parse_system};

    #[test]
    fn contradictory_signs_give_a_kernel() {
        let m = parse_system("instance: TR@Q\nsingleton:+1@0\nsingleton:-1@0\n", None).unwrap();
        let c = farkas(&m).unwrap();
        assert!(matches!(c, FarkasCertificate::Kernel(_)));
        assert!(c.verify(&m).unwrap());
    }

    #[test]
    fn single_positive_column_is_separated() {
        let m = parse_system("instance: TR@Q\nsingleton:+1@0 singleton:+1@2\n", None).unwrap();
        let c = farkas(&m).unwrap();
        assert!(matches!(c, FarkasCertificate::Separator(_)));
        assert!(c.verify(&m).unwrap());
    }

    #[test]
    fn origin_in_hull_of_antipodal_pair() {
        let h = parse_instance("TR@Q").unwrap();
        let t = vec![parse_point(&h, "(+1@0,-1@0)").unwrap(), parse_point(&h, "(-1@0,+1@0)").unwrap()];
        let q = parse_point(&h, "(0,0)").unwrap();
        assert!(matches!(member_conv_stringent(&h, &t, &q).unwrap(), MembershipResult::Member { .. }));
    }

    #[test]
    fn rxz_example_is_separated() {
        let h = parse_instance("QxZ").unwrap();
        let t = vec![parse_point(&h, "((-1,0),(1,0))").unwrap(), parse_point(&h, "((1,0),(-1,0))").unwrap()];
        let q = parse_point(&h, "((1,0),(1,0))").unwrap();
        let r = member_conv_stringent(&h, &t, &q).unwrap();
        assert!(matches!(r, MembershipResult::Separated { .. }), "{r:?}");
    }
}
