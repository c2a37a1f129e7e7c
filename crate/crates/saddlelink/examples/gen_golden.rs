//! Regenerate `tests/fixtures/golden_moduli.txt` from the ODE and sampling oracles.
//!
//! ```text
//! cargo run --release -p saddlelink --example gen_golden > crates/saddlelink/tests/fixtures/golden_moduli.txt
//! ```
//!
//! Points are drawn from a fixed seed. Only the oracles decide which points
//! lie off (TT); the closed forms are never consulted.

use std::f64::consts::{FRAC_PI_2, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use saddlelink::fixtures::{format, oracle, Golden, Kind};
use saddlelink_core::foliation::PairParams;
use saddlelink_core::linalg::{signed_angle, unit};
use saddlelink_core::oracle::{count_tangency_directions_oracle, Tolerances};

const SEED: u64 = 0x5add1e;
const SAMPLES: usize = 4096;

fn signed(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    let x = rng.gen_range(lo..hi);
    if rng.gen_bool(0.5) {
        x
    } else {
        -x
    }
}

fn off_axis(rng: &mut ChaCha8Rng) -> f64 {
    loop {
        let a = rng.gen_range(-PI..PI);
        let m = a.rem_euclid(FRAC_PI_2);
        if m > 0.05 && m < FRAC_PI_2 - 0.05 {
            return a;
        }
    }
}

fn lambda_of_s(s: f64) -> f64 {
    s + (s * s + 1.0).sqrt()
}

fn lambda_of_t(t: f64) -> f64 {
    t + ((t - 1.0) * (t + 1.0)).sqrt()
}

/// Four clean sign changes: the pair is off (TT) and away from its boundary.
fn off_tt(pair: PairParams) -> bool {
    matches!(count_tangency_directions_oracle(&pair, SAMPLES), Ok(4))
}

fn draw(kind: Kind, rng: &mut ChaCha8Rng) -> Vec<f64> {
    match kind {
        Kind::LogSpiral => {
            let alpha = signed(rng, 0.5, 3.0);
            let phi1 = rng.gen_range(-PI..PI);
            let travel = signed(rng, 0.05, 3.0);
            vec![alpha, phi1, phi1 + travel, travel]
        }
        Kind::PushedSpiral => {
            let beta = signed(rng, 0.5, 3.0);
            let lambda = rng.gen_range(1.0..5.0);
            let theta0 = rng.gen_range(-PI..PI);
            let delta = rng.gen_range(-PI..PI);
            let delta_prime = delta + signed(rng, 0.05, 3.0);
            let travel = signed_angle(unit(delta), unit(delta_prime));
            vec![beta, lambda, theta0, delta, delta_prime, travel]
        }
        Kind::Real => loop {
            let mu = rng.gen_range(0.1..3.0);
            if (mu - 1.0f64).abs() < 0.1 {
                continue;
            }
            let quadrant = rng.gen_range(0..4) as f64 * FRAC_PI_2;
            let phi1 = quadrant + rng.gen_range(0.1..FRAC_PI_2 - 0.1);
            let phi2 = quadrant + rng.gen_range(0.1..FRAC_PI_2 - 0.1);
            let tan_ratio = (phi1.tan() / phi2.tan()).abs().ln();
            if (phi1 - phi2).abs() > 0.02 && (tan_ratio / (1.0 - mu)).abs() < 5.0 {
                return vec![mu, phi1, phi2];
            }
        },
        Kind::Psi => loop {
            let alpha = rng.gen_range(0.3..3.0);
            let beta = signed(rng, 0.3, 4.0);
            let t = rng.gen_range(1.0..12.0);
            if (alpha - beta).abs() > 0.1 && off_tt(PairParams::Cc { alpha, beta, lambda: lambda_of_t(t) }) {
                return vec![alpha, beta, t];
            }
        },
        Kind::Upsilon => loop {
            let beta = signed(rng, 0.3, 3.0);
            let mu = rng.gen_range(0.1..0.9);
            let s = rng.gen_range(0.0..4.0);
            let theta0 = off_axis(rng);
            if off_tt(PairParams::Rc { beta, mu, lambda: lambda_of_s(s), theta0 }) {
                return vec![beta, mu, s, theta0];
            }
        },
        Kind::UpsilonCr => loop {
            let alpha = signed(rng, 0.3, 3.0);
            let gamma = rng.gen_range(0.1..0.9);
            let lambda = rng.gen_range(1.0..6.0);
            let theta1 = off_axis(rng).rem_euclid(PI) - FRAC_PI_2;
            if theta1.abs() > 0.05 && off_tt(PairParams::Cr { alpha, gamma, lambda, theta1 }) {
                return vec![alpha, gamma, lambda, theta1];
            }
        },
    }
}

fn main() {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut records = vec![
        Golden {
            kind: Kind::LogSpiral,
            params: vec![1.0, 2f64.atan(), 3f64.atan(), 3f64.atan() - 2f64.atan()],
            value: 0.0,
            tol: tol.rtol,
        },
        Golden { kind: Kind::Real, params: vec![2.0, PI / 6.0, PI / 3.0], value: 0.0, tol: tol.rtol },
    ];
    let plan = [
        (Kind::LogSpiral, 99),
        (Kind::PushedSpiral, 150),
        (Kind::Real, 149),
        (Kind::Psi, 250),
        (Kind::Upsilon, 250),
        (Kind::UpsilonCr, 100),
    ];
    for (kind, n) in plan {
        for _ in 0..n {
            records.push(Golden { kind, params: draw(kind, &mut rng), value: 0.0, tol: tol.rtol });
        }
    }
    for r in &mut records {
        r.value = oracle(r.kind, &r.params, 1.0, &tol).unwrap_or_else(|e| panic!("oracle failed on {}: {e}", r));
    }
    let header = format!(
        "Golden holonomy ratios and moduli from the ODE oracle (DOPRI5, rtol {:e}, atol {:e}).\nRegenerate with: cargo run --release -p saddlelink --example gen_golden\nSeed {SEED:#x}, {} records.",
        tol.rtol,
        tol.atol,
        records.len()
    );
    print!("{}", format(&records, &header));
}
