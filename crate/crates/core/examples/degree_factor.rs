//! Degree factors by coefficient extraction, and the closed forms that
//! specialize them.
//!
//! cargo run --example degree_factor -- 4,4 2,1 1,1

use kalman_degree::{binary_degree, extract_degree, kalman_degree, symmetric_degree, CodimVec, TensorFormat};

fn list(arg: Option<String>, default: &[u32]) -> Vec<u32> {
    match arg {
        Some(s) => s.split(',').map(|x| x.trim().parse().expect("comma-separated integers")).collect(),
        None => default.to_vec(),
    }
}

fn main() -> kalman_degree::Result<()> {
    let mut args = std::env::args().skip(1);
    let n = list(args.next(), &[4, 4]);
    let delta = list(args.next(), &[2, 1]);
    let omega = list(args.next(), &[1, 1]);

    let fmt = TensorFormat::new(n, omega)?;
    let delta = CodimVec::new(delta);
    let d = extract_degree(&fmt, &delta)?;
    println!("d(n={:?}, delta={:?}, omega={:?}) = {d}", fmt.n(), delta.delta(), fmt.omega());

    // a plane curve of degree 3 in the first factor, a degree-2 point set in the second
    if fmt.k() == 2 {
        println!("with deg Z = (3, 2): {}", kalman_degree(&fmt, &delta, &[3, 2])?);
    }

    println!("\nsingle factor, omega = 3: extraction vs closed form");
    for n in 1..=6 {
        let e = extract_degree(&TensorFormat::new(vec![n], vec![3])?, &CodimVec::zeros(1))?;
        println!("  n={n}: {e} {}", symmetric_degree(n, 0, 3)?);
    }

    println!("\nbinary format, omega = 1:");
    for k in 1..=4 {
        let mut row = Vec::new();
        for delta in 0..=k {
            let d: Vec<u32> = (0..k).map(|i| u32::from(i < delta)).collect();
            row.push(binary_degree(&vec![1; k], &CodimVec::new(d))?.to_string());
        }
        println!("  k={k}: {}", row.join(" "));
    }
    Ok(())
}
