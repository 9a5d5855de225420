//! The denominator H built two ways, and the truncated series of the
//! generating function checked against direct extraction.

use kalman_degree::genfun::{build_h, build_h_via_determinant, expand_series, split_h};
use kalman_degree::{extract_degree, CodimVec, TensorFormat};

fn main() -> kalman_degree::Result<()> {
    let omega = [2, 1];
    let h = build_h(&omega)?;
    assert_eq!(h, build_h_via_determinant(&omega)?);
    let (h1, h2) = split_h(&h, omega.len());
    println!("H  = {h}\nH1 = {h1}\nH2 = {h2}\n");

    let series = expand_series(&omega, &[4, 4], 2)?;
    println!("{} nonzero coefficients up to x^(4,4) y^2", series.len());
    for ((n, delta), c) in series.iter().filter(|((n, _), _)| n[0] == 3) {
        let fmt = TensorFormat::new(n.clone(), omega.to_vec())?;
        let e = extract_degree(&fmt, &CodimVec::leading(2, *delta))?;
        println!("  n={n:?} delta={delta}: series {c}, extraction {e}");
    }
    Ok(())
}
