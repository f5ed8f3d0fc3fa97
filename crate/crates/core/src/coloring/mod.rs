//! Red/blue colourings and their balance statistics.
//!
//! A colouring is *closed-neighbourhood balanced* (CNB) when every
//! `N[v]` holds as many red as blue vertices, and *neighbourhood
//! balanced* (NB) when the same holds for every open `N(v)`. Balance is
//! tracked as a signed residual, red minus blue, so that a search can
//! reason about how far a partial assignment is from zero.

mod forcing;
mod identities;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::{words_for, Ones, WORD_BITS};
use crate::graph::Graph;

pub use forcing::{leaf_force, ForcedConstraints, Infeasibility, PairConstraint};
pub use identities::{check_identities, ensure_identities, IdentityCheck, IdentityStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn is_red(self) -> bool {
        self == Color::Red
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

/// Which neighbourhood must be balanced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Closed neighbourhoods `N[v]`.
    Cnb,
    /// Open neighbourhoods `N(v)`.
    Nb,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Cnb => "cnb",
            Mode::Nb => "nb",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = ColoringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cnb" | "closed" => Ok(Mode::Cnb),
            "nb" | "open" => Ok(Mode::Nb),
            _ => Err(ColoringError::UnknownMode(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {coloring} vertices but the graph has {graph}")]
    SizeMismatch { graph: usize, coloring: usize },
    #[error("invalid color character {ch:?} at position {offset} (expected 'R' or 'B')")]
    InvalidChar { offset: usize, ch: char },
    #[error("unknown mode {0:?} (expected cnb or nb)")]
    UnknownMode(String),
    #[error("coloring is not a valid {mode} coloring: vertex {vertex} has residual {residual}")]
    NotValid { mode: Mode, vertex: usize, residual: i64 },
    #[error("counting identity {0:?} fails on a verified coloring")]
    IdentityViolated(String),
}

/// A red/blue assignment of `0..n`; bit `v` set means `v` is red.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    n: usize,
    bits: Vec<u64>,
}

impl Coloring {
    pub fn all_blue(n: usize) -> Self {
        Coloring {
            n,
            bits: vec![0; words_for(n)],
        }
    }

    pub fn all_red(n: usize) -> Self {
        Coloring::from_fn(n, |_| Color::Red)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> Color) -> Self {
        let mut c = Coloring::all_blue(n);
        for v in 0..n {
            if f(v).is_red() {
                c.set_red(v, true);
            }
        }
        c
    }

    pub fn from_reds(n: usize, reds: impl IntoIterator<Item = usize>) -> Self {
        let mut c = Coloring::all_blue(n);
        for v in reds {
            c.set_red(v, true);
        }
        c
    }

    /// Low `n` bits of `mask`; bit `v` set means red.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64, "from_mask supports at most 64 vertices");
        Coloring::from_fn(n, |v| if mask >> v & 1 == 1 { Color::Red } else { Color::Blue })
    }

    pub fn parse(s: &str) -> Result<Self, ColoringError> {
        let s = s.trim();
        let mut c = Coloring::all_blue(s.chars().count());
        for (offset, ch) in s.chars().enumerate() {
            match ch {
                'R' | 'r' => c.set_red(offset, true),
                'B' | 'b' => {}
                _ => return Err(ColoringError::InvalidChar { offset, ch }),
            }
        }
        Ok(c)
    }

    pub(crate) fn set_red(&mut self, v: usize, red: bool) {
        assert!(v < self.n, "vertex {v} out of range {}", self.n);
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        if red {
            self.bits[w] |= 1 << b;
        } else {
            self.bits[w] &= !(1 << b);
        }
    }

    pub(crate) fn set(&mut self, v: usize, color: Color) {
        self.set_red(v, color.is_red());
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_red(&self, v: usize) -> bool {
        (self.bits[v / WORD_BITS] >> (v % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn color(&self, v: usize) -> Color {
        if self.is_red(v) {
            Color::Red
        } else {
            Color::Blue
        }
    }

    /// Red set as bitset words, same stride as graph rows.
    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    pub fn red_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn blue_count(&self) -> usize {
        self.n - self.red_count()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.red_count() == self.n
    }

    pub fn reds(&self) -> Ones<'_> {
        Ones::over(&self.bits)
    }

    /// Swaps red and blue.
    pub fn flipped(&self) -> Coloring {
        Coloring::from_fn(self.n, |v| self.color(v).opposite())
    }

    /// `self` on `0..n` followed by `other` on `n..n+m`.
    pub fn concat(&self, other: &Coloring) -> Coloring {
        Coloring::from_fn(self.n + other.n, |v| {
            if v < self.n {
                self.color(v)
            } else {
                other.color(v - self.n)
            }
        })
    }

    /// Recolours `perm[v]` with the colour of `v`.
    pub fn permuted(&self, perm: &[usize]) -> Coloring {
        let mut c = Coloring::all_blue(self.n);
        for v in 0..self.n {
            c.set(perm[v], self.color(v));
        }
        c
    }

    pub fn to_rb_string(&self) -> String {
        (0..self.n).map(|v| self.color(v).as_char()).collect()
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_rb_string())
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring({})", self.to_rb_string())
    }
}

impl FromStr for Coloring {
    type Err = ColoringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Coloring::parse(s)
    }
}

/// Lexicographic order of the `R`/`B` string (`B < R`), shorter first on ties.
impl Ord for Coloring {
    fn cmp(&self, other: &Self) -> Ordering {
        for v in 0..self.n.min(other.n) {
            match self.is_red(v).cmp(&other.is_red(v)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.n.cmp(&other.n)
    }
}

impl PartialOrd for Coloring {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Coloring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_rb_string())
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Coloring::parse(&s).map_err(serde::de::Error::custom)
    }
}

fn check_size(g: &Graph, c: &Coloring) -> Result<(), ColoringError> {
    if g.n() != c.n() {
        Err(ColoringError::SizeMismatch {
            graph: g.n(),
            coloring: c.n(),
        })
    } else {
        Ok(())
    }
}

/// `|N(v) ∩ R| - |N(v) ∩ B|`.
#[inline]
pub fn open_residual(g: &Graph, c: &Coloring, v: usize) -> i64 {
    let red = g.count_in(v, c.words()) as i64;
    2 * red - g.degree(v) as i64
}

/// `|N[v] ∩ R| - |N[v] ∩ B|`.
#[inline]
pub fn closed_residual(g: &Graph, c: &Coloring, v: usize) -> i64 {
    open_residual(g, c, v) + if c.is_red(v) { 1 } else { -1 }
}

#[inline]
pub fn residual(g: &Graph, c: &Coloring, v: usize, mode: Mode) -> i64 {
    match mode {
        Mode::Cnb => closed_residual(g, c, v),
        Mode::Nb => open_residual(g, c, v),
    }
}

/// Outcome of checking a colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub valid: bool,
    /// Lowest-id vertex with a nonzero residual.
    pub first_violation: Option<usize>,
}

pub fn verify(g: &Graph, c: &Coloring, mode: Mode) -> Result<Verification, ColoringError> {
    check_size(g, c)?;
    let first_violation = (0..g.n()).find(|&v| residual(g, c, v, mode) != 0);
    Ok(Verification {
        valid: first_violation.is_none(),
        first_violation,
    })
}

pub fn verify_cnb(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    Ok(verify(g, c, Mode::Cnb)?.valid)
}

pub fn verify_nb(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    Ok(verify(g, c, Mode::Nb)?.valid)
}

/// `Ok(())` if `c` is valid in `mode`, otherwise the first violation as an error.
pub fn require_valid(g: &Graph, c: &Coloring, mode: Mode) -> Result<(), ColoringError> {
    match verify(g, c, mode)?.first_violation {
        None => Ok(()),
        Some(vertex) => Err(ColoringError::NotValid {
            mode,
            vertex,
            residual: residual(g, c, vertex, mode),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceReport {
    pub red_count: usize,
    pub blue_count: usize,
    pub rr: usize,
    pub bb: usize,
    pub rb: usize,
    pub red_degree_sum: usize,
    pub blue_degree_sum: usize,
    pub closed_residuals: Vec<i64>,
    pub open_residuals: Vec<i64>,
}

pub fn report(g: &Graph, c: &Coloring) -> Result<BalanceReport, ColoringError> {
    check_size(g, c)?;
    let (mut rr, mut bb, mut rb) = (0, 0, 0);
    for (u, v) in g.edges() {
        match (c.is_red(u), c.is_red(v)) {
            (true, true) => rr += 1,
            (false, false) => bb += 1,
            _ => rb += 1,
        }
    }
    let (mut red_degree_sum, mut blue_degree_sum) = (0, 0);
    for v in 0..g.n() {
        if c.is_red(v) {
            red_degree_sum += g.degree(v);
        } else {
            blue_degree_sum += g.degree(v);
        }
    }
    Ok(BalanceReport {
        red_count: c.red_count(),
        blue_count: c.blue_count(),
        rr,
        bb,
        rb,
        red_degree_sum,
        blue_degree_sum,
        closed_residuals: (0..g.n()).map(|v| closed_residual(g, c, v)).collect(),
        open_residuals: (0..g.n()).map(|v| open_residual(g, c, v)).collect(),
    })
}
