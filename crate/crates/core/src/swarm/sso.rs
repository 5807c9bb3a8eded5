//! Social spider colony: a female majority (fraction drawn once in
//! (0.65, 0.9]) moves on vibration signals from nearer-better spiders and the
//! global best; dominant males (weight above the male median) court the
//! nearest female while the rest regroup on the weighted male mean; broods
//! replace the current worst spider. Mating radius is half the box diagonal
//! in normalized coordinates.
//!
//! Distances are measured on a positions snapshot taken at generation start,
//! while moves mix in the partners' live positions; the random-walk term
//! anneals to zero over the first half of the budget.

use super::{argmax, argmin, Ctx};

pub(crate) struct State {
    nf: usize,
}

impl State {
    pub(crate) fn new<F: Fn(&[f64]) -> f64>(c: &mut Ctx<F>) -> Self {
        let nf = ((0.9 - c.rand() * 0.25) * c.pop as f64).floor() as usize;
        State { nf }
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
    let n = c.pop;
    let dim = c.dim;
    let nf = st.nf;
    let nm = n - nf;
    let scale = (1.0 - 2.0 * it as f64 / iters as f64).max(0.0).powi(2);

    let fmin = f.iter().copied().fold(f64::INFINITY, f64::min);
    let fmax = f.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let den = (fmax - fmin).max(1e-300);
    let w: Vec<f64> = f.iter().map(|&v| (fmax - v) / den).collect();
    let gi = argmin(f);
    let xn: Vec<Vec<f64>> = x.iter().map(|xi| normalized(c, xi)).collect();

    for i in 0..nf {
        let d2: Vec<f64> = xn.iter().map(|r| dist2(r, &xn[i])).collect();
        let mut cidx = gi;
        let mut best = f64::INFINITY;
        for (j, &d2j) in d2.iter().enumerate() {
            if w[j] > w[i] && d2j < best {
                best = d2j;
                cidx = j;
            }
        }
        let vibc = w[cidx] * (-d2[cidx]).exp();
        let vibb = w[gi] * (-d2[gi]).exp();
        let al = c.rand();
        let be = c.rand();
        let de = c.rand();
        let rwv = c.rand_vec();
        let sgn = if c.rand() < 0.7 { 1.0 } else { -1.0 };
        let xc = x[cidx].clone();
        let xg = x[gi].clone();
        for d in 0..dim {
            let rw = (rwv[d] - 0.5) * c.span[d] * scale;
            x[i][d] += sgn * al * vibc * (xc[d] - x[i][d])
                + be * vibb * (xg[d] - x[i][d])
                + de * rw;
        }
        c.repair(&mut x[i]);
    }

    let wm = &w[nf..];
    let med = median(wm);
    let wsum = wm.iter().sum::<f64>().max(1e-300);
    let mean_male: Vec<f64> = (0..dim)
        .map(|d| (0..nm).map(|ii| x[nf + ii][d] * wm[ii]).sum::<f64>() / wsum)
        .collect();
    for ii in 0..nm {
        let i = nf + ii;
        let al = c.rand();
        let de = c.rand();
        let rwv = c.rand_vec();
        if w[i] >= med {
            let mut fj = 0;
            let mut bd = f64::INFINITY;
            for (j, row) in xn[..nf].iter().enumerate() {
                let dd = dist2(row, &xn[i]);
                if dd < bd {
                    bd = dd;
                    fj = j;
                }
            }
            let vibf = w[fj] * (-bd).exp();
            let xf = x[fj].clone();
            for d in 0..dim {
                let rw = (rwv[d] - 0.5) * c.span[d] * scale;
                x[i][d] += al * vibf * (xf[d] - x[i][d]) + de * rw;
            }
        } else {
            for d in 0..dim {
                x[i][d] += al * (mean_male[d] - x[i][d]);
            }
        }
        c.repair(&mut x[i]);
    }

    for i in 0..n {
        f[i] = c.evaluate(&x[i]);
    }

    let radius = (dim as f64).sqrt() / 2.0;
    let xn_live: Vec<Vec<f64>> = x.iter().map(|xi| normalized(c, xi)).collect();
    for ii in 0..nm {
        let i = nf + ii;
        if w[i] < med {
            continue;
        }
        let mut members: Vec<usize> = (0..nf)
            .filter(|&j| dist2(&xn_live[j], &xn_live[i]).sqrt() < radius)
            .collect();
        if members.is_empty() {
            continue;
        }
        members.push(i);
        let ws: Vec<f64> = members.iter().map(|&m| w[m].max(1e-12)).collect();
        let total: f64 = ws.iter().sum();
        // Per-dimension roulette: each coordinate inherited from a
        // (possibly different) member.
        let mut child = vec![0.0; dim];
        for (d, slot) in child.iter_mut().enumerate() {
            let u = c.rand() * total;
            let mut acc = 0.0;
            let mut pick = members.len() - 1;
            for (mi, &wv) in ws.iter().enumerate() {
                acc += wv;
                if u < acc {
                    pick = mi;
                    break;
                }
            }
            *slot = x[members[pick]][d];
        }
        let fc = c.evaluate(&child);
        let worst = argmax(f);
        if fc < f[worst] {
            x[worst] = child;
            f[worst] = fc;
        }
    }
}

fn normalized<F>(c: &Ctx<F>, x: &[f64]) -> Vec<f64> {
    x.iter()
        .zip(&c.lo)
        .zip(&c.span)
        .map(|((&v, &lo), &sp)| (v - lo) / sp)
        .collect()
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(&p, &q)| (p - q) * (p - q)).sum()
}

fn median(v: &[f64]) -> f64 {
    let mut s = v.to_vec();
    s.sort_by(f64::total_cmp);
    let n = s.len();
    if n % 2 == 1 {
        s[n / 2]
    } else {
        (s[n / 2 - 1] + s[n / 2]) / 2.0
    }
}
