//! The integer arithmetic behind the final contradiction: the maximum of
//! f(d) = 2d(d+1)/(d-k+2) and the feasibility of the closing inequalities.

use hamtough::replay::{d_upper_for_bound, final_system_solution, max_f_on_range};

fn main() {
    println!(" k  d-range     max f   argmax  k^2+k  closing system");
    for k in 3..=12i64 {
        let range = format!("[{k},{}]", d_upper_for_bound(k));
        let (max, arg) = match max_f_on_range(k) {
            Some((m, d)) => (m.to_string(), d.to_string()),
            None => ("-".into(), "-".into()),
        };
        let system = match final_system_solution(k) {
            Some(d) => format!("feasible at d={d}"),
            None => "infeasible".into(),
        };
        println!(
            "{k:2}  {range:10} {max:>7} {arg:>7} {:>6}  {system}",
            k * k + k
        );
    }
}
