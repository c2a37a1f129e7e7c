//! Classification of a connection and the equivalence decision between two.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::holonomy::{psi_modulus, upsilon_cr, upsilon_modulus};
use crate::math::close;
use crate::params::{prepare, ConnectionSpec, MorseClass, NormalizedParams, Subset};
use crate::tangency::{is_tt_cc, is_tt_cr, is_tt_rc, rr_type, RrType, TtVerdict};

/// Where a modulus was evaluated.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ModulusArgs {
    Psi { alpha: f64, beta: f64, t: f64 },
    Upsilon { beta: f64, mu: f64, s: f64, theta0: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Modulus {
    pub value: f64,
    pub args: ModulusArgs,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Classification {
    pub subset: Subset,
    pub tt: Option<TtVerdict>,
    pub rr_type: Option<RrType>,
    pub psi: Option<Modulus>,
    pub upsilon: Option<Modulus>,
    /// α/β, for comparing non-(TT) complex-complex connections.
    pub alpha_beta_ratio: Option<f64>,
}

/// Classify a connection; genericity violations come back as [`Error::GenericityViolation`].
pub fn classify(spec: &ConnectionSpec) -> Result<Classification> {
    classify_params(&prepare(spec)?)
}

fn need(x: Option<f64>) -> Result<f64> {
    x.ok_or(Error::InvalidSpec("normalized parameters are incomplete"))
}

pub fn classify_params(p: &NormalizedParams) -> Result<Classification> {
    let mut c =
        Classification { subset: p.subset, tt: None, rr_type: None, psi: None, upsilon: None, alpha_beta_ratio: None };
    match p.subset {
        Subset::TwoOneCC => {
            let (alpha, beta, t) = (need(p.alpha)?, need(p.beta)?, need(p.t)?);
            let tt = is_tt_cc(alpha, beta, t)?;
            if !tt.in_tt {
                c.psi =
                    Some(Modulus { value: psi_modulus(alpha, beta, t)?, args: ModulusArgs::Psi { alpha, beta, t } });
                c.alpha_beta_ratio = Some(alpha / beta);
            }
            c.tt = Some(tt);
        }
        Subset::TwoOneRC => {
            let (beta, mu, s, theta0) = (need(p.beta)?, need(p.mu)?, need(p.s)?, need(p.theta0)?);
            let tt = is_tt_rc(beta, mu, s, theta0)?;
            if !tt.in_tt {
                c.upsilon = Some(Modulus {
                    value: upsilon_modulus(beta, mu, s, theta0)?,
                    args: ModulusArgs::Upsilon { beta, mu, s, theta0 },
                });
            }
            c.tt = Some(tt);
        }
        Subset::TwoOneCR => {
            let (alpha, gamma) = (need(p.alpha)?, need(p.gamma)?);
            let (lambda, s, theta1) = (need(p.lambda)?, need(p.s)?, need(p.theta1)?);
            let tt = is_tt_cr(alpha, gamma, lambda, theta1)?;
            if !tt.in_tt {
                c.upsilon = Some(Modulus {
                    value: upsilon_cr(alpha, gamma, lambda, theta1)?,
                    args: ModulusArgs::Upsilon { beta: alpha, mu: gamma, s: -s, theta0: -theta1 },
                });
            }
            c.tt = Some(tt);
        }
        Subset::TwoOneRR => {
            let frames = p.frames.ok_or(Error::MissingFrames)?;
            c.rr_type = Some(rr_type(&frames)?);
        }
        _ => {}
    }
    Ok(c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equivalent,
    NotEquivalent,
    BoundaryIndeterminate,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Equivalent => "equivalent",
            Verdict::NotEquivalent => "not equivalent",
            Verdict::BoundaryIndeterminate => "boundary-indeterminate",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Case inside the (2-1) decision table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    /// A real-real connection against a one-complex one.
    Impossible,
    /// Two real-real connections: compare types.
    SameType,
    /// Either (TT) verdict sits on its threshold.
    Boundary,
    BothTt,
    /// One in (TT), the other not.
    MixedTt,
    /// Both off (TT) with different subtags.
    CrossSubtype,
    /// Complex-complex off (TT): α/β first.
    AlphaBetaRatio,
    /// Complex-complex off (TT) with equal α/β: Ψ.
    Psi,
    /// Real-complex off (TT): Υ.
    Upsilon,
    /// Complex-real off (TT): Υ(α, γ, −s, −θ₁).
    UpsilonReversed,
}

/// The rule that decided a comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// Different Morse indices: not even locally conjugate at the saddles.
    MorseIndices,
    /// Both (1-2): always equivalent.
    OneTwo,
    /// Both (1-1) or both (2-2): equivalent iff same ℝ/ℂ subtag.
    Nature(MorseClass),
    Table {
        row: Subset,
        col: Subset,
        cell: Cell,
    },
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::MorseIndices => f.write_str("morse-indices: different Morse indices"),
            Rule::OneTwo => f.write_str("(1-2): always equivalent"),
            Rule::Nature(MorseClass::OneOne) => f.write_str("(1-1): same real/complex subset"),
            Rule::Nature(_) => f.write_str("(2-2): same real/complex subset"),
            Rule::Table { row, col, cell } => {
                let what = match cell {
                    Cell::Impossible => "impossible",
                    Cell::SameType => "same type (I) or (II)",
                    Cell::Boundary => "(TT) threshold within tolerance",
                    Cell::BothTt => "both in (TT)",
                    Cell::MixedTt => "exactly one in (TT)",
                    Cell::CrossSubtype => "both off (TT), different subsets",
                    Cell::AlphaBetaRatio => "off (TT): alpha/beta ratios",
                    Cell::Psi => "off (TT): equal alpha/beta, Psi",
                    Cell::UpsilonReversed => "off (TT): Upsilon(alpha, gamma, -s, -theta1)",
                    Cell::Upsilon => "off (TT): Upsilon",
                };
                write!(f, "table[{row},{col}]: {what}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Compared {
    pub name: &'static str,
    pub left: f64,
    pub right: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceVerdict {
    pub verdict: Verdict,
    pub rule: Rule,
    pub compared: Vec<Compared>,
    pub tol: f64,
}

/// Decide topological equivalence; numbers match when `|a − b| ≤ tol·max(1, |a|, |b|)`.
pub fn equivalent(c1: &Classification, c2: &Classification, tol: f64) -> Result<EquivalenceVerdict> {
    let done = |verdict, rule, compared| Ok(EquivalenceVerdict { verdict, rule, compared, tol });
    let yes_no = |b: bool| if b { Verdict::Equivalent } else { Verdict::NotEquivalent };
    let (m1, m2) = (c1.subset.morse_class(), c2.subset.morse_class());
    if m1 != m2 {
        return done(Verdict::NotEquivalent, Rule::MorseIndices, Vec::new());
    }
    match m1 {
        MorseClass::OneTwo => return done(Verdict::Equivalent, Rule::OneTwo, Vec::new()),
        MorseClass::OneOne | MorseClass::TwoTwo => {
            return done(yes_no(c1.subset == c2.subset), Rule::Nature(m1), Vec::new())
        }
        MorseClass::TwoOne => {}
    }
    let table = |cell| Rule::Table { row: c1.subset, col: c2.subset, cell };
    let rr1 = c1.subset == Subset::TwoOneRR;
    let rr2 = c2.subset == Subset::TwoOneRR;
    if rr1 != rr2 {
        return done(Verdict::NotEquivalent, table(Cell::Impossible), Vec::new());
    }
    if rr1 {
        let (a, b) = (
            c1.rr_type.ok_or(Error::IncompatibleClassifications)?,
            c2.rr_type.ok_or(Error::IncompatibleClassifications)?,
        );
        return done(yes_no(a == b), table(Cell::SameType), Vec::new());
    }

    let t1 = c1.tt.ok_or(Error::IncompatibleClassifications)?;
    let t2 = c2.tt.ok_or(Error::IncompatibleClassifications)?;
    if t1.boundary || t2.boundary {
        return done(Verdict::BoundaryIndeterminate, table(Cell::Boundary), Vec::new());
    }
    match (t1.in_tt, t2.in_tt) {
        (true, true) => return done(Verdict::Equivalent, table(Cell::BothTt), Vec::new()),
        (true, false) | (false, true) => return done(Verdict::NotEquivalent, table(Cell::MixedTt), Vec::new()),
        _ => {}
    }
    if c1.subset != c2.subset {
        return done(Verdict::NotEquivalent, table(Cell::CrossSubtype), Vec::new());
    }
    let value = |m: Option<Modulus>| m.map(|m| m.value).ok_or(Error::IncompatibleClassifications);
    match c1.subset {
        Subset::TwoOneCC => {
            let r1 = c1.alpha_beta_ratio.ok_or(Error::IncompatibleClassifications)?;
            let r2 = c2.alpha_beta_ratio.ok_or(Error::IncompatibleClassifications)?;
            let mut compared = alloc::vec![Compared { name: "alpha/beta", left: r1, right: r2 }];
            if !close(r1, r2, tol) {
                return done(Verdict::NotEquivalent, table(Cell::AlphaBetaRatio), compared);
            }
            let (p1, p2) = (value(c1.psi)?, value(c2.psi)?);
            compared.push(Compared { name: "Psi", left: p1, right: p2 });
            done(yes_no(close(p1, p2, tol)), table(Cell::Psi), compared)
        }
        Subset::TwoOneRC | Subset::TwoOneCR => {
            let (u1, u2) = (value(c1.upsilon)?, value(c2.upsilon)?);
            let cell = if c1.subset == Subset::TwoOneRC { Cell::Upsilon } else { Cell::UpsilonReversed };
            let compared = alloc::vec![Compared { name: "Upsilon", left: u1, right: u2 }];
            done(yes_no(close(u1, u2, tol)), table(cell), compared)
        }
        _ => Err(Error::IncompatibleClassifications),
    }
}
