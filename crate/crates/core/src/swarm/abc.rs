//! Artificial bee colony: population/2 food sources; employed then onlooker
//! phases each mutate one dimension toward a random other source; a source
//! untouched for more than limit = population*dimension/2 trials is
//! abandoned and re-seeded uniformly (at most one per generation).

use super::Ctx;

pub(crate) struct State {
    sx: Vec<Vec<f64>>,
    sf: Vec<f64>,
    trial: Vec<u64>,
}

impl State {
    /// Sources start as the first half of the initial population.
    pub(crate) fn new(x: &[Vec<f64>], f: &[f64]) -> Self {
        let n = x.len() / 2;
        State {
            sx: x[..n].to_vec(),
            sf: f[..n].to_vec(),
            trial: vec![0; n],
        }
    }
}

pub(crate) fn step<F: Fn(&[f64]) -> f64>(
    c: &mut Ctx<F>,
    _x: &mut [Vec<f64>],
    _f: &mut [f64],
    st: &mut State,
) {
    let n = st.sx.len();
    let limit = (c.pop * c.dim / 2) as u64;

    for i in 0..n {
        local_search(c, st, i, n);
    }

    // Onlookers pick sources by roulette over fitness 1/(1+f), with the
    // canonical 1+|f| form guarding negative objectives.
    let fit: Vec<f64> = st
        .sf
        .iter()
        .map(|&v| if v >= 0.0 { 1.0 / (1.0 + v) } else { 1.0 + v.abs() })
        .collect();
    let total: f64 = fit.iter().sum();
    for _ in 0..n {
        let u = c.rand() * total;
        let mut acc = 0.0;
        let mut pick = n - 1;
        for (idx, &fv) in fit.iter().enumerate() {
            acc += fv;
            if u < acc {
                pick = idx;
                break;
            }
        }
        local_search(c, st, pick, n);
    }

    let mut worn = 0;
    for (i, &t) in st.trial.iter().enumerate() {
        if t > st.trial[worn] {
            worn = i;
        }
    }
    if st.trial[worn] > limit {
        st.sx[worn] = c.random_point();
        st.sf[worn] = c.evaluate(&st.sx[worn]);
        st.trial[worn] = 0;
    }
}

fn local_search<F: Fn(&[f64]) -> f64>(c: &mut Ctx<F>, st: &mut State, i: usize, n: usize) {
    let mut k = c.rand_index(n - 1);
    if k >= i {
        k += 1;
    }
    let j = c.rand_index(c.dim);
    let phi = c.rand() * 2.0 - 1.0;
    let mut v = st.sx[i].clone();
    v[j] = st.sx[i][j] + phi * (st.sx[i][j] - st.sx[k][j]);
    c.repair(&mut v);
    let fv = c.evaluate(&v);
    if fv < st.sf[i] {
        st.sx[i] = v;
        st.sf[i] = fv;
        st.trial[i] = 0;
    } else {
        st.trial[i] += 1;
    }
}
