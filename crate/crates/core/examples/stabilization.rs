//! Once n_1 passes Σ_{j≥2}(n_j - 1) + δ_1, the degree factor stops changing
//! in n_1 (for ω_1 = 1).

use kalman_degree::{check_stabilization, CodimVec, TensorFormat};

fn main() -> kalman_degree::Result<()> {
    for (rest, delta) in [(vec![3u32], 0u32), (vec![3], 2), (vec![2, 3], 1), (vec![3, 3], 0)] {
        let k = rest.len() + 1;
        let threshold = rest.iter().map(|n| n - 1).sum::<u32>() + delta + 1;
        let mut n = vec![threshold];
        n.extend(&rest);
        let fmt = TensorFormat::new(n, vec![1; k])?;
        let rep = check_stabilization(&fmt, &CodimVec::leading(k, delta), 0, 4)?;
        let vals: Vec<String> = rep.values.iter().map(|(n, v)| format!("{n}:{v}")).collect();
        println!(
            "others {rest:?}, delta_1 = {delta}: threshold {}, values {}  stable={}",
            rep.threshold,
            vals.join(" "),
            rep.stable
        );
    }
    Ok(())
}
