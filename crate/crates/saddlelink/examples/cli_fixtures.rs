//! Write the spec files under `tests/fixtures/cli/` that exercise the command line.
//!
//! ```text
//! cargo run -p saddlelink --example cli_fixtures -- crates/saddlelink/tests/fixtures/cli
//! ```

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};
use std::path::PathBuf;

use saddlelink::spec_file::SpecFile;
use saddlelink_core::foliation::PairParams;
use saddlelink_core::params::{EigenBlock, FrameAngles, SaddleData};
use saddlelink_core::ConnectionSpec;

fn lambda_of_s(s: f64) -> f64 {
    s + (s * s + 1.0).sqrt()
}

fn lambda_of_t(t: f64) -> f64 {
    t + ((t - 1.0) * (t + 1.0)).sqrt()
}

fn real(v: f64) -> EigenBlock {
    EigenBlock::Real(v)
}

fn complex(re: f64, im: f64) -> EigenBlock {
    EigenBlock::Complex { re, im }
}

fn plain(p: SaddleData, q: SaddleData) -> ConnectionSpec {
    ConnectionSpec { p, q, transition: None, frames: None }
}

fn realize(pair: PairParams) -> ConnectionSpec {
    pair.realize().expect("fixture parameters are realizable")
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).expect("output directory"));
    std::fs::create_dir_all(&dir).unwrap();
    let rr = |frames, mu, gamma| realize(PairParams::Rr { frames, mu, gamma });
    let mut scaled = realize(PairParams::Cc { alpha: 1.0, beta: -1.0, lambda: 6.0 });
    scaled.p = scaled.p.scaled(2.5);
    scaled.q = scaled.q.scaled(0.5);
    let mut missing = realize(PairParams::Rc { beta: 1.0, mu: 0.5, lambda: 2.0, theta0: 0.7 });
    missing.transition = None;
    let specs: Vec<(&str, ConnectionSpec)> = vec![
        ("cc_generic", realize(PairParams::Cc { alpha: 1.0, beta: -1.0, lambda: 6.0 })),
        ("cc_scaled", scaled),
        ("cc_other", realize(PairParams::Cc { alpha: 1.0, beta: -1.0, lambda: 8.0 })),
        ("cc_tt", realize(PairParams::Cc { alpha: 1.0, beta: -1.0, lambda: 2.0 })),
        ("cc_boundary", realize(PairParams::Cc { alpha: 1.0, beta: -1.0, lambda: lambda_of_t(3.0) })),
        ("cc_same_sign", realize(PairParams::Cc { alpha: 0.5, beta: 2.0, lambda: 30.0 })),
        ("rc_generic", realize(PairParams::Rc { beta: 1.0, mu: 0.5, lambda: lambda_of_s(4.0), theta0: -1.0 })),
        // the time reversal of cr_generic
        (
            "rc_reversed",
            realize(PairParams::Rc { beta: 1.0, mu: 0.5, lambda: lambda_of_s(3.0), theta0: 0.4 - FRAC_PI_2 }),
        ),
        ("rc_tt", realize(PairParams::Rc { beta: 1.0, mu: 0.5, lambda: lambda_of_s(0.5), theta0: 0.7 })),
        ("cr_generic", realize(PairParams::Cr { alpha: 1.0, gamma: 0.5, lambda: lambda_of_s(3.0), theta1: -0.4 })),
        ("cr_tt", realize(PairParams::Cr { alpha: 1.0, gamma: 0.5, lambda: lambda_of_s(3.0), theta1: 0.4 })),
        ("rr_type1", rr(FrameAngles::new(0.0, FRAC_PI_2, FRAC_PI_4, FRAC_PI_3), 0.5, 0.3)),
        ("rr_type2", rr(FrameAngles::new(0.0, FRAC_PI_2, FRAC_PI_4, 2.0 * FRAC_PI_3), 0.5, 0.3)),
        ("rr_degenerate", rr(FrameAngles::new(0.0, FRAC_PI_2, 0.0, FRAC_PI_3), 0.5, 0.3)),
        (
            "one_two_a",
            plain(
                SaddleData::new(real(-1.0), complex(0.5, 2.0)),
                SaddleData::new(EigenBlock::RealPair(-1.0, -3.0), real(2.0)),
            ),
        ),
        (
            "one_two_b",
            plain(
                SaddleData::new(real(-2.0), EigenBlock::RealPair(1.0, 4.0)),
                SaddleData::new(complex(-1.0, 1.0), real(1.0)),
            ),
        ),
        (
            "one_one_real",
            plain(
                SaddleData::new(real(-1.0), EigenBlock::RealPair(1.0, 2.0)),
                SaddleData::new(real(-1.0), EigenBlock::RealPair(1.0, 3.0)),
            ),
        ),
        (
            "one_one_complex",
            plain(
                SaddleData::new(real(-1.0), EigenBlock::RealPair(1.0, 2.0)),
                SaddleData::new(real(-1.0), complex(1.0, 3.0)),
            ),
        ),
        (
            "two_two_real",
            plain(
                SaddleData::new(EigenBlock::RealPair(-1.0, -2.0), real(1.0)),
                SaddleData::new(complex(-1.0, 1.0), real(1.0)),
            ),
        ),
        (
            "two_two_complex",
            plain(
                SaddleData::new(complex(-1.0, 2.0), real(1.0)),
                SaddleData::new(EigenBlock::RealPair(-1.0, -2.0), real(1.0)),
            ),
        ),
        (
            "equal_eigenvalues",
            plain(
                SaddleData::new(EigenBlock::RealPair(-1.0, -1.0), real(1.0)),
                SaddleData::new(real(-1.0), complex(1.0, 1.0)),
            ),
        ),
        ("missing_transition", missing),
    ];
    let pairs = [
        ("pair_cc", r#"{"pair": {"subset": "cc", "alpha": 1.0, "beta": -1.0, "lambda": 6.0}}"#),
        ("pair_tt", r#"{"pair": {"subset": "cc", "alpha": 1.0, "beta": -1.0, "lambda": 2.0}}"#),
    ];
    for (name, text) in pairs {
        std::fs::write(dir.join(format!("{name}.json")), format!("{text}\n")).unwrap();
    }
    for (name, spec) in specs {
        let text = serde_json::to_string(&SpecFile::from_spec(&spec)).unwrap();
        std::fs::write(dir.join(format!("{name}.json")), text + "\n").unwrap();
    }
}
