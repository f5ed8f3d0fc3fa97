//! Explicit colourings and closed-form verdicts for structured families.
//!
//! Every colourer re-verifies its output before returning it.

mod circulant;
mod embed;
mod products;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{require_valid, Color, Coloring, ColoringError, Mode};
use crate::graph::{FamilySpec, GraphError, PetersenSpec};

pub use circulant::{
    characterize_circulant, characterize_cubic_circulant, characterize_quintic_circulant, circulant_constructions,
    circulant_reduce, color_circulant, lift_reduced, CirculantPattern,
};
pub use embed::{
    color_complement_bridge, color_join, color_lexicographic, embed_in_cnbc, embed_in_nbc, BridgeDirection,
};
pub use products::{color_box_k2, color_cartesian, color_strong, hypercube_coloring, prism_colorings};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("color classes must have equal size, got {red} red and {blue} blue")]
    Unbalanced { red: usize, blue: usize },
    #[error("{0}")]
    InvalidParameter(String),
    #[error("{0} has no CNB coloring")]
    NotCnbc(String),
    #[error("{0}")]
    ColorPattern(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        })
    }
}

/// A yes/no answer backed by a named result, or `Unknown` when none applies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterizationVerdict {
    pub value: Verdict,
    /// Short tag naming the result used.
    pub theorem: &'static str,
    pub reason: String,
    pub witness: Option<Coloring>,
}

impl CharacterizationVerdict {
    pub fn yes(theorem: &'static str, reason: impl Into<String>, witness: Coloring) -> Self {
        CharacterizationVerdict {
            value: Verdict::Yes,
            theorem,
            reason: reason.into(),
            witness: Some(witness),
        }
    }

    pub fn no(theorem: &'static str, reason: impl Into<String>) -> Self {
        CharacterizationVerdict {
            value: Verdict::No,
            theorem,
            reason: reason.into(),
            witness: None,
        }
    }

    pub fn unknown(theorem: &'static str, reason: impl Into<String>) -> Self {
        CharacterizationVerdict {
            value: Verdict::Unknown,
            theorem,
            reason: reason.into(),
            witness: None,
        }
    }
}

fn check_gp(n: usize, d: usize) -> Result<PetersenSpec, ConstructionError> {
    PetersenSpec::new(n, d).map_err(|e| ConstructionError::InvalidParameter(e.to_string()))
}

/// `GP(n, d)` has a CNB colouring iff `n` is even and `d` is odd.
pub fn characterize_gp(n: usize, d: usize) -> Result<CharacterizationVerdict, ConstructionError> {
    check_gp(n, d)?;
    Ok(if n % 2 == 0 && d % 2 == 1 {
        CharacterizationVerdict::yes(
            "generalized-petersen",
            format!("GP({n},{d}): n is even and d is odd"),
            color_gp(n, d)?,
        )
    } else {
        let why = if n % 2 == 1 { "n is odd" } else { "d is even" };
        CharacterizationVerdict::no("generalized-petersen", format!("GP({n},{d}): {why}"))
    })
}

/// Alternating colours around the outer cycle, each inner vertex matching its spoke partner.
pub fn color_gp(n: usize, d: usize) -> Result<Coloring, ConstructionError> {
    let spec = check_gp(n, d)?;
    if n % 2 == 1 || d % 2 == 0 {
        return Err(ConstructionError::NotCnbc(format!("GP({n},{d})")));
    }
    let c = Coloring::from_fn(2 * n, |v| if (v % n) % 2 == 1 { Color::Red } else { Color::Blue });
    require_valid(&spec.build(), &c, Mode::Cnb)?;
    Ok(c)
}

fn half_red(n: usize) -> Coloring {
    Coloring::from_reds(n, 0..n / 2)
}

fn degree_parity(family: &FamilySpec, mode: Mode) -> Result<Option<CharacterizationVerdict>, ConstructionError> {
    let g = family.build()?;
    let verdict = match mode {
        Mode::Cnb if g.n() % 2 == 1 => Some(format!("{family} has odd order {}", g.n())),
        Mode::Cnb => (0..g.n())
            .find(|&v| g.degree(v) % 2 == 0)
            .map(|v| format!("vertex {v} of {family} has even degree {}", g.degree(v))),
        Mode::Nb => (0..g.n())
            .find(|&v| g.degree(v) % 2 == 1)
            .map(|v| format!("vertex {v} of {family} has odd degree {}", g.degree(v))),
    };
    Ok(verdict.map(|r| CharacterizationVerdict::no("degree-parity", r)))
}

/// Closed-form verdict for a named family, `Unknown` when no result covers it.
pub fn characterize_family(family: &FamilySpec, mode: Mode) -> Result<CharacterizationVerdict, ConstructionError> {
    use FamilySpec as F;
    let verified = |v: CharacterizationVerdict| -> Result<CharacterizationVerdict, ConstructionError> {
        if let Some(w) = &v.witness {
            require_valid(&family.build()?, w, mode)?;
        }
        Ok(v)
    };
    match (family, mode) {
        (F::Circulant(s), _) => return verified(characterize_circulant(s, mode)?),
        (F::GenPetersen(p), Mode::Cnb) => return characterize_gp(p.n(), p.d()),
        (F::Hypercube(k), _) => {
            let (m, c) = hypercube_coloring(*k)?;
            return Ok(if m == mode {
                CharacterizationVerdict::yes("hypercube", format!("Q{k} with k {}", parity_word(*k as usize)), c)
            } else {
                let want = if mode == Mode::Cnb { "odd" } else { "even" };
                CharacterizationVerdict::no("hypercube", format!("Q{k}: k is not {want}"))
            });
        }
        _ => {}
    }
    if let Some(v) = degree_parity(family, mode)? {
        return Ok(v);
    }
    let v = match (family, mode) {
        (F::Complete(n), Mode::Cnb) => {
            CharacterizationVerdict::yes("complete", format!("K{n} with n even: any half red"), half_red(*n))
        }
        (F::Wheel(n), Mode::Cnb) => {
            if *n == 3 {
                CharacterizationVerdict::yes("wheel", "W3 = K4", half_red(4))
            } else {
                CharacterizationVerdict::no("wheel", format!("W{n}: only W3 is CNB"))
            }
        }
        (F::CompleteBipartite(a, b), Mode::Cnb) => {
            if (*a, *b) == (1, 1) {
                CharacterizationVerdict::yes("complete-bipartite", "K_{1,1} = K2", half_red(2))
            } else {
                CharacterizationVerdict::no("complete-bipartite", format!("K_{{{a},{b}}}: only K_{{1,1}} is CNB"))
            }
        }
        (F::Star(m), Mode::Cnb) => {
            if *m == 1 {
                CharacterizationVerdict::yes("complete-bipartite", "K_{1,1} = K2", half_red(2))
            } else {
                CharacterizationVerdict::no("leaf-bound", format!("the centre of K_{{1,{m}}} carries too many leaves"))
            }
        }
        (F::Cycle(n), Mode::Nb) => {
            if n % 4 == 0 {
                let c = Coloring::from_fn(*n, |i| if i % 4 < 2 { Color::Red } else { Color::Blue });
                CharacterizationVerdict::yes("cycle", format!("C{n} with n ≡ 0 (mod 4): RRBB repeated"), c)
            } else {
                CharacterizationVerdict::no("cycle", format!("C{n}: n is not divisible by 4"))
            }
        }
        (F::Empty(n), Mode::Nb) => {
            CharacterizationVerdict::yes("empty", "every neighbourhood is empty", Coloring::all_red(*n))
        }
        (F::Prism(n), Mode::Cnb) => match prism_colorings(*n).into_iter().next() {
            Some(c) => CharacterizationVerdict::yes("prism", format!("Y{n} with n even: alternating cycles"), c),
            None => CharacterizationVerdict::no("cubic-order", format!("Y{n} is cubic on {} vertices, not divisible by 4", 2 * n)),
        },
        (F::H6, Mode::Cnb) => {
            CharacterizationVerdict::yes("four-vertex-addition", "one 4-vertex addition to K2", "BRBRRR".parse()?)
        }
        (F::H7, Mode::Nb) => {
            CharacterizationVerdict::yes("three-vertex-addition", "one 3-vertex addition to 4K1", "RRBBBRR".parse()?)
        }
        _ => CharacterizationVerdict::unknown("none", format!("no closed form for {family} in {mode} mode")),
    };
    verified(v)
}

fn parity_word(k: usize) -> &'static str {
    if k % 2 == 0 {
        "even"
    } else {
        "odd"
    }
}
