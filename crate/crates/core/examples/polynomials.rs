//! The polynomial layer on its own: capped products, text round trips,
//! elementary symmetric polynomials and determinants.

use kalman_degree::poly::{elementary_symmetric, PolyMatrix};
use kalman_degree::{Caps, Ring, TPoly};

fn main() -> kalman_degree::Result<()> {
    let ring = Ring::new(["t1", "t2", "h"])?;
    let s = TPoly::from_terms(&ring, [(vec![1, 0, 0], 1), (vec![0, 1, 0], 1), (vec![0, 0, 1], 1)])?;

    let full = s.pow(4);
    let capped = s.pow_capped(4, &Caps::bounded(&[2, 2, 1]))?;
    println!("(t1+t2+h)^4 has {} terms, {} within caps (2,2,1)", full.len(), capped.len());
    println!("capped: {capped}");
    assert_eq!(TPoly::parse(&ring, &capped.to_text())?, capped);
    println!("[t1^2 t2 h] = {}", capped.coefficient(&[2, 1, 1]));

    let x = Ring::new(["x1", "x2", "x3", "x4"])?;
    for i in 0..=4 {
        println!("e{i} = {}", elementary_symmetric(&x, &[0, 1, 2, 3], i)?);
    }

    // det of a symmetric Toeplitz matrix in x1, x2
    let (a, b) = (TPoly::var(&x, 0), TPoly::var(&x, 1));
    let one = TPoly::one(&x);
    let m = PolyMatrix::from_rows(
        &x,
        vec![
            vec![one.clone(), a.clone(), b.clone()],
            vec![a.clone(), one.clone(), a.clone()],
            vec![b, a, one],
        ],
    )?;
    println!("det = {}", m.det()?);
    Ok(())
}
