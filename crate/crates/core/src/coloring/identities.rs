//! Counting identities that every valid balanced colouring must satisfy.

use serde::Serialize;

use super::{report, require_valid, BalanceReport, Coloring, ColoringError, Mode};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityStatus {
    Holds,
    Fails,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl IdentityStatus {
    fn from_bool(b: bool) -> Self {
        if b {
            IdentityStatus::Holds
        } else {
            IdentityStatus::Fails
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub status: IdentityStatus,
}

impl IdentityCheck {
    fn new(name: &'static str, holds: bool) -> Self {
        IdentityCheck {
            name,
            status: IdentityStatus::from_bool(holds),
        }
    }

    fn skipped(name: &'static str) -> Self {
        IdentityCheck {
            name,
            status: IdentityStatus::NotApplicable,
        }
    }

    fn when(name: &'static str, applies: bool, holds: impl FnOnce() -> bool) -> Self {
        if applies {
            IdentityCheck::new(name, holds())
        } else {
            IdentityCheck::skipped(name)
        }
    }
}

fn handshake(g: &Graph, r: &BalanceReport) -> bool {
    r.red_count + r.blue_count == g.n()
        && r.rr + r.bb + r.rb == g.edge_count()
        && r.red_degree_sum == 2 * r.rr + r.rb
        && r.blue_degree_sum == 2 * r.bb + r.rb
}

fn count_deg_mod4(g: &Graph, c: &Coloring, residue: usize, color: Option<bool>) -> usize {
    (0..g.n())
        .filter(|&v| g.degree(v) % 4 == residue && color.is_none_or(|red| c.is_red(v) == red))
        .count()
}

fn cnb_checks(g: &Graph, c: &Coloring, r: &BalanceReport) -> Vec<IdentityCheck> {
    let n = g.n();
    let m = g.edge_count();
    let balanced = r.red_count == r.blue_count;
    let mut out = vec![
        IdentityCheck::new("handshake", handshake(g, r)),
        IdentityCheck::new(
            "odd-degrees-even-order",
            n % 2 == 0 && g.degrees().iter().all(|d| d % 2 == 1),
        ),
        IdentityCheck::new(
            "degree-sum",
            r.red_count + r.red_degree_sum == r.blue_count + r.blue_degree_sum,
        ),
        IdentityCheck::when("equal-classes-equal-mono-edges", balanced, || r.rr == r.bb),
        IdentityCheck::new(
            "edge-parity-order",
            if m % 2 == 0 { n % 4 == 0 } else { n % 4 == 2 },
        ),
        IdentityCheck::new("red-deg3-mod4-even", count_deg_mod4(g, c, 3, Some(true)) % 2 == 0),
        IdentityCheck::new("blue-deg3-mod4-even", count_deg_mod4(g, c, 3, Some(false)) % 2 == 0),
        IdentityCheck::new("deg1-mod4-even", count_deg_mod4(g, c, 1, None) % 2 == 0),
    ];
    let regular = g.regular_degree().filter(|_| n > 0);
    out.push(IdentityCheck::when("regular-equal-classes", regular.is_some(), || balanced));
    out.push(IdentityCheck::when("regular-rb-count", regular.is_some(), || {
        let r_deg = regular.unwrap();
        4 * r.rb == (r_deg + 1) * n
    }));
    out.push(IdentityCheck::when("regular-mono-count", regular.is_some(), || {
        let r_deg = regular.unwrap();
        8 * r.rr == (r_deg - 1) * n && 8 * r.bb == (r_deg - 1) * n
    }));
    out.push(IdentityCheck::when("regular-order-or-degree", regular.is_some(), || {
        n % 4 == 0 || regular.unwrap() % 4 == 1
    }));
    out.push(IdentityCheck::when("cubic-mono-perfect-matching", regular == Some(3), || {
        n % 4 == 0 && mono_edges_form_perfect_matching(g, c)
    }));
    out
}

fn nb_checks(g: &Graph, r: &BalanceReport) -> Vec<IdentityCheck> {
    let n = g.n();
    let regular = g.regular_degree().filter(|_| n > 0);
    vec![
        IdentityCheck::new("handshake", handshake(g, r)),
        IdentityCheck::new("even-degrees", g.degrees().iter().all(|d| d % 2 == 0)),
        IdentityCheck::new("degree-sum", r.red_degree_sum == r.blue_degree_sum),
        IdentityCheck::new("mono-edges-equal", r.rr == r.bb),
        IdentityCheck::when("regular-rb-count", regular.is_some(), || 4 * r.rb == regular.unwrap() * n),
        IdentityCheck::when("regular-mono-count", regular.is_some(), || {
            8 * r.rr == regular.unwrap() * n && 8 * r.bb == regular.unwrap() * n
        }),
    ]
}

fn mono_edges_form_perfect_matching(g: &Graph, c: &Coloring) -> bool {
    let mut hits = vec![0u32; g.n()];
    for (u, v) in g.edges() {
        if c.is_red(u) == c.is_red(v) {
            hits[u] += 1;
            hits[v] += 1;
        }
    }
    hits.iter().all(|&h| h == 1)
}

/// Evaluates every applicable counting identity for a verified colouring.
/// Regularity-dependent identities are reported as not applicable on
/// irregular graphs.
pub fn check_identities(g: &Graph, c: &Coloring, mode: Mode) -> Result<Vec<IdentityCheck>, ColoringError> {
    require_valid(g, c, mode)?;
    let r = report(g, c)?;
    Ok(match mode {
        Mode::Cnb => cnb_checks(g, c, &r),
        Mode::Nb => nb_checks(g, &r),
    })
}

/// Like [`check_identities`] but turns any failing identity into an error.
pub fn ensure_identities(g: &Graph, c: &Coloring, mode: Mode) -> Result<Vec<IdentityCheck>, ColoringError> {
    let checks = check_identities(g, c, mode)?;
    if let Some(bad) = checks.iter().find(|ch| ch.status == IdentityStatus::Fails) {
        return Err(ColoringError::IdentityViolated(bad.name.to_string()));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn fam(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    fn status(checks: &[IdentityCheck], name: &str) -> IdentityStatus {
        checks.iter().find(|c| c.name == name).unwrap().status
    }

    #[test]
    fn k4_two_two() {
        let c = Coloring::parse("RRBB").unwrap();
        let checks = ensure_identities(&fam("K4"), &c, Mode::Cnb).unwrap();
        assert_eq!(status(&checks, "degree-sum"), IdentityStatus::Holds);
        assert_eq!(status(&checks, "cubic-mono-perfect-matching"), IdentityStatus::Holds);
    }

    #[test]
    fn h6_skips_regular_identities() {
        let checks = ensure_identities(&fam("h6"), &Coloring::parse("BRBRRR").unwrap(), Mode::Cnb).unwrap();
        assert_eq!(status(&checks, "regular-rb-count"), IdentityStatus::NotApplicable);
        assert_eq!(status(&checks, "equal-classes-equal-mono-edges"), IdentityStatus::NotApplicable);
    }

    #[test]
    fn c4_nb() {
        let c = Coloring::parse("RRBB").unwrap();
        let checks = ensure_identities(&fam("C4"), &c, Mode::Nb).unwrap();
        assert!(checks.iter().all(|c| c.status == IdentityStatus::Holds));
        let r = report(&fam("C4"), &c).unwrap();
        assert_eq!((r.red_degree_sum, r.blue_degree_sum), (4, 4));
    }

    #[test]
    fn rejects_invalid_coloring() {
        let err = check_identities(&fam("K2"), &Coloring::parse("RR").unwrap(), Mode::Cnb).unwrap_err();
        assert!(matches!(err, ColoringError::NotValid { vertex: 0, .. }));
    }
}
