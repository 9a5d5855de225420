//! Exact degree factors in the hypercubical format next to their
//! leading-order estimate.
//!
//! cargo run --release --example asymptotics -- 3 1 0 40

use kalman_degree::asympt::{compare_exact_asymptotic, critical_constants, critical_point_values};

fn arg(i: usize, default: u32) -> u32 {
    std::env::args().nth(i).map_or(default, |s| s.parse().expect("integer argument"))
}

fn main() -> kalman_degree::Result<()> {
    let (k, omega, delta, max_n) = (arg(1, 3), arg(2, 1), arg(3, 0), arg(4, 24));

    let cc = critical_constants(k, omega, delta)?;
    println!("c = {}, det = {}, L0 = {}", cc.c, cc.det_hessian, cc.l0);
    if k >= 2 && omega * k >= 3 {
        let r = critical_point_values(k, omega)?;
        println!("F_D(c) = {}, -c_k dF_D(c) = {} (closed form {})", r.f_d_at_c, r.minus_ck_dk, r.minus_ck_dk_closed);
    }

    let ns: Vec<u32> = (delta + 1..=max_n).step_by(3).collect();
    println!("\n{:>4} {:>10} {:>12}", "n", "log10 d", "exact/est");
    for row in compare_exact_asymptotic(k, omega, delta, &ns)? {
        let log_exact = row.estimate.log10_value + row.estimate.ratio_to_exact.unwrap().log10();
        println!("{:>4} {:>10.4} {:>12.6}", row.n, log_exact, row.estimate.ratio_to_exact.unwrap());
    }
    Ok(())
}
