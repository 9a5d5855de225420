//! Totally isotropic Kalman varieties, and codimensions of Kalman varieties
//! of symmetric singular tuples.

use kalman_degree::isotropic::{
    isotropic_degree, isotropic_degree_symmetric, partition_codim, symmetric_tuple_codim, NORMALIZED_MATRIX_REFERENCE,
};
use kalman_degree::TensorFormat;

fn main() -> kalman_degree::Result<()> {
    for (n, w) in [(vec![3], vec![2]), (vec![2, 2], vec![1, 1]), (vec![3, 3], vec![1, 1]), (vec![2, 3, 4], vec![2, 1, 3])] {
        let r = isotropic_degree(&TensorFormat::new(n.clone(), w.clone())?)?;
        println!("n={n:?} omega={w:?}: degree {} in {} component(s)", r.degree, r.components);
    }

    println!("\nsymmetric tensors, rows n = 2..6, columns omega = 1..4");
    for n in 2..=6 {
        let row: Vec<String> = (1..=4).map(|w| isotropic_degree_symmetric(n, w).map(|d| d.to_string())).collect::<Result<_, _>>()?;
        println!("  {}", row.join("\t"));
    }

    println!("\nsymmetric pairs of n x n matrices (degrees are reference data):");
    for (n, _, deg) in NORMALIZED_MATRIX_REFERENCE {
        println!("  n={n}: codim {}, degree {deg}", symmetric_tuple_codim(n, 2)?);
    }
    for p in [vec![2, 1], vec![2, 2], vec![3, 1], vec![2, 1, 1]] {
        println!("binary, partition {p:?}: codim {}", partition_codim(2, &p)?);
    }
    Ok(())
}
