//! Statistics against slow, obviously-correct reimplementations.

use morphweave::tuner::{f_measure, hodges_lehmann, wilcoxon};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Mid-ranks of |d| computed by counting, then every sign pattern enumerated.
fn brute_wilcoxon(d: &[f64]) -> (f64, f64) {
    let n = d.len();
    let rank = |x: f64| {
        let below = d.iter().filter(|y| y.abs() < x.abs()).count() as f64;
        let tied = d.iter().filter(|y| y.abs() == x.abs()).count() as f64;
        below + (tied + 1.0) / 2.0
    };
    let ranks: Vec<f64> = d.iter().map(|&x| rank(x)).collect();
    let observed: f64 = d.iter().zip(&ranks).filter(|(x, _)| **x > 0.0).map(|(_, r)| r).sum();
    let (mut le, mut ge) = (0u64, 0u64);
    for mask in 0u32..(1 << n) {
        let w: f64 = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| ranks[k]).sum();
        if w <= observed {
            le += 1;
        }
        if w >= observed {
            ge += 1;
        }
    }
    let all = (1u64 << n) as f64;
    (observed, (2.0 * (le.min(ge) as f64 / all)).min(1.0))
}

pub fn wilcoxon_exact_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut done = 0;
    while done < 200 {
        let n = rng.gen_range(3..=10);
        // small integers so ties and zero differences both occur
        let a: Vec<f64> = (0..n).map(|_| rng.gen_range(0..8) as f64).collect();
        let b: Vec<f64> = (0..n).map(|_| rng.gen_range(0..8) as f64).collect();
        let d: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x - y).filter(|x| *x != 0.0).collect();
        if d.len() < 3 {
            assert!(wilcoxon(&a, &b).is_err());
            continue;
        }
        let w = wilcoxon(&a, &b).unwrap();
        let (w_plus, p) = brute_wilcoxon(&d);
        assert!(w.exact);
        assert_eq!(w.w_plus, w_plus, "{:?}", d);
        assert_eq!(w.p_value, p, "{:?}", d);
        done += 1;
    }
}

fn walsh_median(x: &[f64]) -> f64 {
    let mut w = Vec::new();
    for (j, a) in x.iter().enumerate() {
        for b in &x[j..] {
            w.push((a + b) / 2.0);
        }
    }
    w.sort_by(f64::total_cmp);
    let m = w.len();
    if m % 2 == 1 {
        w[m / 2]
    } else {
        (w[m / 2 - 1] + w[m / 2]) / 2.0
    }
}

pub fn hodges_lehmann_matches_walsh_median() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let n = rng.gen_range(1..=50);
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        assert_eq!(hodges_lehmann(&x).unwrap(), walsh_median(&x));
    }
    assert!(hodges_lehmann(&[]).is_err());
}

pub fn f_measure_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..1000 {
        let p: f64 = rng.gen_range(0.0..=1.0);
        let r: f64 = rng.gen_range(0.0..=1.0);
        let f = f_measure(p, r).unwrap();
        assert_eq!(f, f_measure(r, p).unwrap());
        assert!(f >= p.min(r) - 1e-12 && f <= p.max(r) + 1e-12);
        assert!((f_measure(p, p).unwrap() - p).abs() < 1e-12);
        assert_eq!(f_measure(0.0, r).unwrap(), 0.0);
        if p > 0.0 && r > 0.0 {
            assert!((2.0 / f - (1.0 / p + 1.0 / r)).abs() < 1e-6 * (1.0 / p + 1.0 / r));
        }
        assert!(f_measure(p + 1.0 + f64::EPSILON, r).is_err());
        assert!(f_measure(p, -r - 1e-9).is_err());
    }
}
