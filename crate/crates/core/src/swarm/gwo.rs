//! Grey wolf: agents average pursuit steps toward the three best wolves.
//!
//! The control parameter a anneals 2 -> 0 over the first half of the budget
//! (not the full horizon) so the pack stops exploring early enough to settle
//! the last decimals within 100 iterations.

use super::Ctx;

pub(crate) fn step<F: Fn(&[f64]) -> f64>(
    c: &mut Ctx<F>,
    x: &mut [Vec<f64>],
    f: &mut [f64],
    it: usize,
    iters: usize,
) {
    let dim = c.dim;
    let a = (2.0 - 4.0 * it as f64 / iters as f64).max(0.0);
    let mut order: Vec<usize> = (0..c.pop).collect();
    order.sort_by(|&i, &j| f[i].total_cmp(&f[j]));
    let leads: Vec<Vec<f64>> = order[..3].iter().map(|&k| x[k].clone()).collect();
    for i in 0..c.pop {
        let mut acc = vec![0.0; dim];
        for lead in &leads {
            let ra = c.rand_vec();
            let rc = c.rand_vec();
            for d in 0..dim {
                let a_coef = 2.0 * a * ra[d] - a;
                let c_coef = 2.0 * rc[d];
                acc[d] += lead[d] - a_coef * (c_coef * lead[d] - x[i][d]).abs();
            }
        }
        let mut xn: Vec<f64> = acc.iter().map(|&v| v / 3.0).collect();
        c.repair(&mut xn);
        x[i] = xn;
        f[i] = c.evaluate(&x[i]);
    }
}
