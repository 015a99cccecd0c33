#![allow(dead_code)]

use std::path::PathBuf;

use bowen_series::harness::{AlphaInput, Quadratic};
use bowen_series::numeric::Precision;
use bowen_series::polygon::{load_group, preset_modular, LabelledPolygon, Letter, Word};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Integer;

pub fn groups_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../groups")
}

pub fn modular() -> LabelledPolygon {
    preset_modular(Precision::default())
}

/// The non-arithmetic example, read from its group file.
pub fn golden() -> LabelledPolygon {
    load_group(groups_dir().join("golden_octagon.json"), None).expect("groups/golden_octagon.json")
}

pub fn both() -> Vec<LabelledPolygon> {
    vec![modular(), golden()]
}

/// Both presets with enough working bits for expansions several hundred
/// letters deep; `τ` stays at its default.
pub fn both_deep() -> Vec<LabelledPolygon> {
    let pr = Precision::new(2048).with_tolerance_exp(Precision::default().tolerance_exp);
    vec![
        preset_modular(pr),
        load_group(groups_dir().join("golden_octagon.json"), Some(pr)).expect("groups/golden_octagon.json"),
    ]
}

/// Turns arbitrary choices into an admissible word: after a letter, the
/// choice indexes the `2d − 1` letters other than its inverse.
pub fn admissible(p: &LabelledPolygon, choices: &[usize]) -> Word {
    let n = p.size();
    let mut w = Word::empty();
    for &c in choices {
        let next = match w.last() {
            None => Letter(c % n),
            Some(prev) => {
                let banned = p.inverse(prev).0;
                let i = c % (n - 1);
                Letter(if i >= banned { i + 1 } else { i })
            }
        };
        w.push(next);
    }
    w
}

pub fn choices(max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..64, 1..=max_len)
}

/// Non-squares that keep clear of the field of the golden octagon.
pub const RADICANDS: [i64; 16] = [2, 3, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29];

/// `(p + q√n)/r` with small coefficients, inside `[-1, 1]`-ish windows.
pub fn surd() -> impl Strategy<Value = AlphaInput> {
    (0..RADICANDS.len(), -20i64..20, 1i64..6, 1i64..30).prop_map(|(i, p, q, r)| surd_of(p, q, RADICANDS[i], r))
}

pub fn surd_of(p: i64, q: i64, n: i64, r: i64) -> AlphaInput {
    let v = Quadratic::surd(Integer::from(p), Integer::from(q), Integer::from(n), Integer::from(r)).unwrap();
    AlphaInput::new(format!("({p}+{q}*sqrt:{n})/{r}"), v)
}

/// Deterministic sample of surds with value in `[lo, hi]`.
pub fn surds_in(count: usize, lo: f64, hi: f64, seed: u64) -> Vec<AlphaInput> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<AlphaInput> = Vec::new();
    while out.len() < count {
        let n = RADICANDS[rng.gen_range(0..RADICANDS.len())];
        let r = rng.gen_range(2..40);
        let q = rng.gen_range(1..8) * if rng.gen_bool(0.5) { 1 } else { -1 };
        // choose p so that the value lands in the window
        let target = rng.gen_range(lo..hi);
        let p = (target * r as f64 - q as f64 * (n as f64).sqrt()).round() as i64;
        let a = surd_of(p, q, n, r);
        let x = a.to_real(64).to_f64();
        if x > lo && x < hi && !out.iter().any(|b| b.value == a.value) {
            out.push(a);
        }
    }
    out
}

/// Random decimals with `digits` digits after the point, in `(lo, hi)`.
pub fn decimals_in(count: usize, lo: f64, hi: f64, digits: usize, seed: u64) -> Vec<AlphaInput> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let int = rng.gen_range(lo..hi).floor() as i64;
            let frac: String = (0..digits).map(|_| char::from(b'0' + rng.gen_range(0..10u8))).collect();
            AlphaInput::parse(&format!("{int}.{frac}")).unwrap()
        })
        .collect()
}
