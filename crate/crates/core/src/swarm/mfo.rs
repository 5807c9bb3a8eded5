//! Moth flame: moths spiral (b=1) around a sorted flame list that merges the
//! previous flames with the current moths each generation; the number of
//! distinct flames shrinks linearly from the population size to 1.
//!
//! Two choices that matter on this objective: the spiral parameter is drawn
//! per dimension (a scalar draw couples the dimensions and stalls on
//! anisotropic landscapes), and boundary handling reflects before clamping
//! so moths leaving the box re-enter instead of piling onto a bound.

use std::f64::consts::PI;

use super::Ctx;

pub(crate) struct State {
    /// (positions, values) sorted ascending by value; seeded from the first
    /// generation's population.
    flames: Option<(Vec<Vec<f64>>, Vec<f64>)>,
}

impl State {
    pub(crate) fn new() -> Self {
        State { flames: None }
    }
}

pub(crate) fn step<F: Fn(&[f64]) -> f64>(
    c: &mut Ctx<F>,
    x: &mut [Vec<f64>],
    f: &mut [f64],
    it: usize,
    iters: usize,
    st: &mut State,
) {
    let dim = c.dim;
    let (fx, ff) = match st.flames.take() {
        None => sorted_top(x.to_vec(), f.to_vec(), c.pop),
        Some((px, pf)) => {
            let mut all_x = px;
            all_x.extend(x.iter().cloned());
            let mut all_f = pf;
            all_f.extend(f.iter().copied());
            sorted_top(all_x, all_f, c.pop)
        }
    };

    let flame_no =
        ((c.pop as f64 - it as f64 * (c.pop as f64 - 1.0) / iters as f64).round() as usize).max(1);
    let a = -1.0 - it as f64 / iters as f64;
    for i in 0..c.pop {
        let j = i.min(flame_no - 1);
        let tv = c.rand_vec();
        let mut xn = vec![0.0; dim];
        for d in 0..dim {
            let t = (a - 1.0) * tv[d] + 1.0;
            let dist = (fx[j][d] - x[i][d]).abs();
            xn[d] = dist * t.exp() * (2.0 * PI * t).cos() + fx[j][d];
        }
        c.repair(&mut xn);
        x[i] = xn;
        f[i] = c.evaluate(&x[i]);
    }
    st.flames = Some((fx, ff));
}

fn sorted_top(x: Vec<Vec<f64>>, f: Vec<f64>, keep: usize) -> (Vec<Vec<f64>>, Vec<f64>) {
    let mut order: Vec<usize> = (0..f.len()).collect();
    order.sort_by(|&i, &j| f[i].total_cmp(&f[j]));
    order.truncate(keep);
    (
        order.iter().map(|&i| x[i].clone()).collect(),
        order.iter().map(|&i| f[i]).collect(),
    )
}
