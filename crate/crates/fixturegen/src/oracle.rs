//! Oracle sets with provenance shaped to the target iteration curves.

use morphweave::pipeline::Variant;
use morphweave::tuner::{OracleCpat, OracleVariant};

use crate::plan::Class;

fn feedback_counts(n: usize) -> &'static [usize] {
    match n {
        3 => &[3, 2, 5, 12, 18, 26],
        6 => &[3, 2, 5, 13, 18, 25],
        10 => &[3, 2, 5, 13, 18, 26],
        4 => &[0, 1, 1, 2, 2, 3],
        8 => &[0, 1, 0, 1, 2, 2],
        9 => &[0, 0, 0, 0, 0, 1],
        _ => &[5, 5, 10, 25, 36, 51],
    }
}

fn prompt_mid(n: usize) -> &'static [usize] {
    if n == 9 {
        &[14, 7, 4]
    } else {
        &[57, 25, 16, 0, 0, 2]
    }
}

fn prompt_cold(n: usize) -> &'static [usize] {
    match n {
        1 | 9 => &[14, 3, 2, 1],
        8 => &[14, 2, 3, 1],
        10 => &[70, 12, 13, 5],
        _ => &[70, 13, 12, 5],
    }
}

fn expand(counts: &[usize]) -> Vec<u32> {
    counts
        .iter()
        .enumerate()
        .flat_map(|(k, &c)| std::iter::repeat(k as u32 + 1).take(c))
        .collect()
}

const OTHER_TEMPS: [f64; 4] = [0.3, 0.7, 0.9, 1.2];

/// How many non-useful variants carry feedback provenance.
fn feedback_total(n: usize) -> usize {
    match n {
        3 | 6 | 10 => 500,
        4 => 60,
        8 => 40,
        9 => 10,
        _ => 1000,
    }
}

pub fn build(n: usize, cpat_id: &str, variants: &[(&Variant, Class)]) -> OracleCpat {
    let useful_of = |c: &Class| matches!(c, Class::App | Class::Napp);
    let other_n = variants.iter().filter(|(_, c)| !useful_of(c)).count();
    let fb_n = feedback_total(n);
    assert!(fb_n <= other_n, "{}: too few non-useful variants", cpat_id);
    let prompt_n = variants.len() - fb_n;

    let mut fb = expand(feedback_counts(n));
    let tail: Vec<u32> = if n == 9 { vec![7, 8] } else { (7..=12).collect() };
    let mut k = 0;
    while fb.len() < fb_n {
        fb.push(tail[k % tail.len()]);
        k += 1;
    }
    let mid = expand(prompt_mid(n));
    let cold = expand(prompt_cold(n));
    assert!(mid.len() + cold.len() <= prompt_n, "{}: too few variants for the prompt curves", cpat_id);

    let (mut fi, mut ui) = (0, 0);
    let out = variants
        .iter()
        .map(|(v, c)| {
            let useful = useful_of(c);
            let (t, pi, f) = if useful || fi >= fb_n {
                let r = if ui < mid.len() {
                    (0.5, mid[ui], 0)
                } else if ui < mid.len() + cold.len() {
                    (0.0, cold[ui - mid.len()], 0)
                } else {
                    let j = ui - mid.len() - cold.len();
                    (OTHER_TEMPS[j % OTHER_TEMPS.len()], 1 + (j % 3) as u32, 0)
                };
                ui += 1;
                r
            } else {
                fi += 1;
                (0.5, 1, fb[fi - 1])
            };
            OracleVariant {
                code: v.code.clone(),
                correct: c.truly_correct(),
                useful,
                applicable: *c == Class::App,
                temperature: Some(t),
                prompt_iteration: Some(pi),
                feedback_iteration: Some(f),
            }
        })
        .collect();
    OracleCpat {
        cpat_id: cpat_id.to_string(),
        variants: out,
    }
}
