use kalman_degree::genfun::{macmahon_check, macmahon_matrix};

fn main() -> kalman_degree::Result<()> {
    // the matrix behind the generating function for omega = (2, 1)
    let a = macmahon_matrix(&[2, 1])?;
    println!("A = {a:?}: {}", macmahon_check(&a, &[3, 3, 2])?);

    let samples = [
        vec![vec![2]],
        vec![vec![1, -2], vec![3, 0]],
        vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]],
        vec![vec![-3, 2, 1], vec![0, 1, -1], vec![2, 2, 3]],
    ];
    for a in samples {
        let cap = vec![3; a.len()];
        println!("A = {a:?}: {}", macmahon_check(&a, &cap)?);
    }
    Ok(())
}
