use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::replay::report::{ClaimId, ClaimReport};

/// `f(d) = 2d(d+1) / (d − k + 2)`, exactly.
pub fn eval_f(d: i64, k: i64) -> Result<Rational> {
    let den = d - k + 2;
    if den == 0 {
        return Err(Error::InvalidParameter(format!(
            "f is undefined at d = k − 2 = {d}"
        )));
    }
    Rational::new(2 * d * (d + 1), den)
}

/// Largest `d` with `2d <= k² − k − 2`.
pub fn d_upper_for_bound(k: i64) -> i64 {
    (k * k - k - 2).div_euclid(2)
}

/// Maximum of `f` over the integers `d ∈ [k, ⌊(k² − k − 2)/2⌋]`, with the
/// first maximiser. `None` when the range is empty.
pub fn max_f_on_range(k: i64) -> Option<(Rational, i64)> {
    let mut best: Option<(Rational, i64)> = None;
    for d in k..=d_upper_for_bound(k) {
        let v = eval_f(d, k).expect("d >= k keeps the denominator positive");
        if best.is_none_or(|(b, _)| v > b) {
            best = Some((v, d));
        }
    }
    best
}

/// Smallest integer `d` with `2d > k² − k − 2` and `2d <= 3k − 3`.
pub fn final_system_solution(k: i64) -> Option<i64> {
    let lo = d_upper_for_bound(k) + 1;
    let hi = (3 * k - 3).div_euclid(2);
    (lo <= hi).then_some(lo)
}

/// Evaluates the closing inequalities for 1-based `l_x`, `r_x`.
///
/// `holds` reports whether the derived bounds `l_x <= k − 1`,
/// `r_x >= d − k + 1`, `d − k + 1 <= l_x − r_x <= 2k − d − 2` and
/// `2d <= 3k − 3` are all satisfied. Whether the combined system with
/// `2d > k² − k − 2` has an integer solution is reported separately.
// Inequalities are kept in the form they are stated.
#[allow(clippy::int_plus_one)]
pub fn final_arithmetic(k: i64, d: i64, l_x: i64, r_x: i64) -> ClaimReport {
    let mut rep = ClaimReport::new(ClaimId::FinalArithmetic);
    let diff = l_x - r_x;
    rep.check("l_x <= k-1", l_x <= k - 1);
    rep.check("r_x >= d-k+1", r_x >= d - k + 1);
    rep.check("l_x-r_x >= d-k+1", diff >= d - k + 1);
    rep.check("l_x-r_x <= 2k-d-2", diff <= 2 * k - d - 2);
    rep.check("2d <= 3k-3", 2 * d <= 3 * k - 3);

    let above = 2 * d > k * k - k - 2;
    let sqrt3 = (k - 2) * (k - 2) > 3;
    let solution = final_system_solution(k);
    rep.quantity("k", k);
    rep.quantity("d", d);
    rep.quantity("l_x", l_x);
    rep.quantity("r_x", r_x);
    rep.quantity("2d > k^2-k-2", above);
    rep.quantity("(k-2)^2 > 3", sqrt3);
    rep.quantity("system_infeasible", solution.is_none());
    if let Some(d0) = solution {
        rep.quantity("system_solution_d", d0);
        rep.notes.push(format!(
            "d = {d0} satisfies 2d > k²−k−2 and 2d <= 3k−3 for k = {k}; no contradiction"
        ));
    } else {
        rep.notes
            .push(format!("no integer d satisfies both bounds for k = {k}"));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_values() {
        assert_eq!(eval_f(4, 4).unwrap(), Rational::integer(20));
        assert_eq!(eval_f(5, 4).unwrap(), Rational::integer(20));
        assert!(eval_f(2, 4).is_err());
        for k in 2..=50 {
            assert_eq!(eval_f(k, k).unwrap(), Rational::integer(k * k + k));
        }
    }

    #[test]
    fn maximum_on_range() {
        for k in 4..=10 {
            let (m, _) = max_f_on_range(k).unwrap();
            assert_eq!(m, Rational::integer(k * k + k), "k = {k}");
        }
        assert!(max_f_on_range(2).is_none());
    }

    #[test]
    fn system_feasibility() {
        assert_eq!(final_system_solution(3), Some(3));
        assert_eq!(final_system_solution(4), None);
        assert_eq!(final_system_solution(10), None);
        let r = final_arithmetic(3, 3, 2, 1);
        assert_eq!(r.quantity_value("system_infeasible"), Some("false"));
        let r = final_arithmetic(4, 6, 3, 1);
        assert_eq!(r.quantity_value("system_infeasible"), Some("true"));
        assert!(!r.holds);
    }
}
