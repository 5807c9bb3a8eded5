//! Firefly: attractiveness beta0=1, absorption gamma=1 on box-normalized
//! coordinates, randomization alpha=0.2 with geometric decay.
//!
//! Each firefly moves once, toward its nearest brighter neighbour (the
//! all-pairs cascade overshoots when many brighter neighbours pull from the
//! same side). Moves are accepted greedily; a firefly with no brighter
//! neighbour random-walks so the incumbent keeps polishing. Alpha decays by
//! 0.97 per iteration over the first 35% of the budget, then by 0.75 so the
//! walk is cold well before the end.

use super::Ctx;

pub(crate) fn step<F: Fn(&[f64]) -> f64>(
    c: &mut Ctx<F>,
    x: &mut [Vec<f64>],
    f: &mut [f64],
    it: usize,
    iters: usize,
) {
    let dim = c.dim;
    let sw = 35 * iters / 100;
    let alpha = if it <= sw {
        0.2 * 0.97f64.powi(it as i32)
    } else {
        0.2 * 0.97f64.powi(sw as i32) * 0.75f64.powi((it - sw) as i32)
    };

    for i in 0..c.pop {
        let mut xi = x[i].clone();
        let mut nearest: Option<(f64, usize)> = None;
        for j in 0..c.pop {
            if f[j] < f[i] {
                let mut r2 = 0.0;
                for d in 0..dim {
                    let dd = (x[j][d] - xi[d]) / c.span[d];
                    r2 += dd * dd;
                }
                if nearest.map_or(true, |(best, _)| r2 < best) {
                    nearest = Some((r2, j));
                }
            }
        }
        let rv = c.rand_vec();
        match nearest {
            Some((r2, j)) => {
                let beta = (-r2).exp();
                for d in 0..dim {
                    xi[d] += beta * (x[j][d] - xi[d]) + alpha * (rv[d] - 0.5) * c.span[d];
                }
            }
            None => {
                for d in 0..dim {
                    xi[d] += alpha * (rv[d] - 0.5) * c.span[d];
                }
            }
        }
        c.repair(&mut xi);
        let fi = c.evaluate(&xi);
        if fi < f[i] {
            x[i] = xi;
            f[i] = fi;
        }
    }
}
