//! Explicit colourings of circulants and the cubic/quintic verdicts.

use serde::Serialize;

use super::{CharacterizationVerdict, ConstructionError};
use crate::coloring::{require_valid, Color, Coloring, Mode};
use crate::graph::CirculantSpec;

/// The three index-arithmetic colourings, in precedence order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CirculantPattern {
    /// `i` red iff `i` is odd.
    Alternating,
    /// `i` red iff `i` is even xor `i >= n/2`.
    HalfPeriod,
    /// `i` red iff `i ≡ 0, 1 (mod 4)`.
    ModFour,
}

impl CirculantPattern {
    pub const ALL: [CirculantPattern; 3] = [
        CirculantPattern::Alternating,
        CirculantPattern::HalfPeriod,
        CirculantPattern::ModFour,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CirculantPattern::Alternating => "alternating",
            CirculantPattern::HalfPeriod => "half-period",
            CirculantPattern::ModFour => "mod-four",
        }
    }

    pub fn coloring(self, n: usize) -> Coloring {
        let half = n / 2;
        Coloring::from_fn(n, |i| {
            let red = match self {
                CirculantPattern::Alternating => i % 2 == 1,
                CirculantPattern::HalfPeriod => (i % 2 == 0) != (i >= half),
                CirculantPattern::ModFour => i % 4 < 2,
            };
            if red {
                Color::Red
            } else {
                Color::Blue
            }
        })
    }

    /// Whether the construction's hypotheses hold for `spec` in `mode`.
    pub fn applies(self, spec: &CirculantSpec, mode: Mode) -> bool {
        let n = spec.n();
        let half = spec.has_half();
        let want_half = mode == Mode::Cnb;
        if half != want_half {
            return false;
        }
        match self {
            CirculantPattern::Alternating => {
                if n % 2 != 0 {
                    return false;
                }
                let odd = spec.short_lengths().filter(|d| d % 2 == 1).count();
                let even = spec.short_lengths().count() - odd;
                match mode {
                    Mode::Nb => odd == even,
                    // n/2 contributes a same-coloured neighbour when it is even
                    Mode::Cnb if (n / 2) % 2 == 1 => odd == even,
                    Mode::Cnb => odd == even + 1,
                }
            }
            CirculantPattern::HalfPeriod => {
                if n % 4 != 0 {
                    return false;
                }
                let rest: Vec<usize> = spec.short_lengths().filter(|&d| d != n / 4).collect();
                rest.iter().all(|d| rest.contains(&(n / 2 - d)))
            }
            CirculantPattern::ModFour => {
                if n % 4 != 0 {
                    return false;
                }
                let (s1, s2, _) = spec.residue_counts();
                match mode {
                    Mode::Nb => s1 == s2,
                    Mode::Cnb if n % 8 == 0 => s2 == s1 + 1,
                    Mode::Cnb => s2 == s1,
                }
            }
        }
    }
}

/// Every applicable construction with its (verified) colouring.
pub fn circulant_constructions(spec: &CirculantSpec, mode: Mode) -> Vec<(CirculantPattern, Coloring)> {
    let g = spec.build();
    CirculantPattern::ALL
        .into_iter()
        .filter(|p| p.applies(spec, mode))
        .map(|p| {
            let c = p.coloring(spec.n());
            require_valid(&g, &c, mode)
                .unwrap_or_else(|e| panic!("{} colouring of {spec} failed: {e}", p.name()));
            (p, c)
        })
        .collect()
}

/// The first applicable construction, or `None` when none covers `spec`.
pub fn color_circulant(spec: &CirculantSpec, mode: Mode) -> Option<(CirculantPattern, Coloring)> {
    let p = CirculantPattern::ALL.into_iter().find(|p| p.applies(spec, mode))?;
    let c = p.coloring(spec.n());
    require_valid(&spec.build(), &c, mode)
        .unwrap_or_else(|e| panic!("{} colouring of {spec} failed: {e}", p.name()));
    Some((p, c))
}

/// `t = gcd(S ∪ {n})` and `C_{n/t}(S/t)`. `C_n(S)` is `t` disjoint copies of
/// the reduced circulant; vertex `i` is vertex `i / t` of copy `i mod t`.
pub fn circulant_reduce(spec: &CirculantSpec) -> (usize, CirculantSpec) {
    let t = spec.gcd();
    if t == 1 {
        return (1, spec.clone());
    }
    let reduced = CirculantSpec::new(spec.n() / t, spec.lengths().iter().map(|d| d / t))
        .expect("dividing by the gcd keeps lengths in range");
    (t, reduced)
}

/// Lifts a colouring of the reduced circulant to every copy.
pub fn lift_reduced(c: &Coloring, t: usize) -> Coloring {
    Coloring::from_fn(c.n() * t, |i| c.color(i / t))
}

/// `C_n(d, n/2)`.
pub fn characterize_cubic_circulant(n: usize, d: usize) -> Result<CharacterizationVerdict, ConstructionError> {
    if n % 2 != 0 || d == 0 || 2 * d >= n {
        return Err(ConstructionError::InvalidParameter(format!(
            "cubic circulant needs n even and 1 <= d <= n/2 - 1, got n={n}, d={d}"
        )));
    }
    let spec = CirculantSpec::new(n, [d, n / 2])?;
    let (t, reduced) = circulant_reduce(&spec);
    let rn = reduced.n();
    let note = if t > 1 {
        format!(" after reducing {spec} to {t} copies of {reduced}")
    } else {
        String::new()
    };
    let verdict = if rn % 4 == 0 {
        let base = CirculantPattern::Alternating.coloring(rn);
        let witness = lift_reduced(&base, t);
        require_valid(&spec.build(), &witness, Mode::Cnb)?;
        CharacterizationVerdict::yes(
            "cubic-circulant",
            format!("reduced order {rn} is divisible by 4{note}"),
            witness,
        )
    } else {
        CharacterizationVerdict::no(
            "cubic-circulant",
            format!("reduced order {rn} is not divisible by 4{note}"),
        )
    };
    Ok(verdict)
}

/// `C_n(d1, d2, n/2)`.
pub fn characterize_quintic_circulant(
    n: usize,
    d1: usize,
    d2: usize,
) -> Result<CharacterizationVerdict, ConstructionError> {
    if n % 2 != 0 || d1 == 0 || d1 >= d2 || 2 * d2 >= n {
        return Err(ConstructionError::InvalidParameter(format!(
            "quintic circulant needs n even and 1 <= d1 < d2 < n/2, got n={n}, d1={d1}, d2={d2}"
        )));
    }
    let spec = CirculantSpec::new(n, [d1, d2, n / 2])?;
    quintic(&spec)
}

fn quintic(spec: &CirculantSpec) -> Result<CharacterizationVerdict, ConstructionError> {
    let n = spec.n();
    let short: Vec<usize> = spec.short_lengths().collect();
    let (d1, d2) = (short[0], short[1]);
    if n % 4 == 2 {
        return Ok(if d1 % 2 != d2 % 2 {
            let c = CirculantPattern::Alternating.coloring(n);
            require_valid(&spec.build(), &c, Mode::Cnb)?;
            CharacterizationVerdict::yes(
                "quintic-circulant",
                format!("{spec}: n ≡ 2 (mod 4) and the lengths {d1}, {d2} differ in parity"),
                c,
            )
        } else {
            CharacterizationVerdict::no(
                "quintic-circulant",
                format!("{spec}: n ≡ 2 (mod 4) and the lengths {d1}, {d2} have equal parity"),
            )
        });
    }
    if let Some((p, c)) = color_circulant(spec, Mode::Cnb) {
        return Ok(CharacterizationVerdict::yes(
            "circulant-construction",
            format!("{spec}: the {} colouring applies", p.name()),
            c,
        ));
    }
    let (t, reduced) = circulant_reduce(spec);
    if t > 1 {
        let inner = quintic(&reduced)?;
        let reason = format!("{spec} is {t} copies of {reduced}; {}", inner.reason);
        return Ok(CharacterizationVerdict {
            reason,
            witness: inner.witness.map(|w| lift_reduced(&w, t)),
            ..inner
        });
    }
    Ok(CharacterizationVerdict::unknown(
        "quintic-circulant",
        format!("{spec}: n ≡ 0 (mod 4) and no construction applies"),
    ))
}

/// Theorem-backed verdict for any circulant in CNB mode, or unknown.
pub fn characterize_circulant(spec: &CirculantSpec, mode: Mode) -> Result<CharacterizationVerdict, ConstructionError> {
    let deg = spec.degree();
    if mode == Mode::Cnb && (spec.n() % 2 == 1 || deg % 2 == 0) {
        return Ok(CharacterizationVerdict::no(
            "degree-parity",
            format!("{spec} has degree {deg} on {} vertices", spec.n()),
        ));
    }
    if mode == Mode::Nb && deg % 2 == 1 {
        return Ok(CharacterizationVerdict::no("degree-parity", format!("{spec} has odd degree {deg}")));
    }
    if mode == Mode::Cnb && deg == 3 && spec.has_half() {
        let d = spec.short_lengths().next().expect("cubic spec has a short length");
        return characterize_cubic_circulant(spec.n(), d);
    }
    if mode == Mode::Cnb && deg == 5 && spec.has_half() {
        return quintic(spec);
    }
    if let Some((p, c)) = color_circulant(spec, mode) {
        return Ok(CharacterizationVerdict::yes(
            "circulant-construction",
            format!("{spec}: the {} colouring applies", p.name()),
            c,
        ));
    }
    let (t, reduced) = circulant_reduce(spec);
    if t > 1 {
        let inner = characterize_circulant(&reduced, mode)?;
        let reason = format!("{spec} is {t} copies of {reduced}; {}", inner.reason);
        return Ok(CharacterizationVerdict {
            reason,
            witness: inner.witness.map(|w| lift_reduced(&w, t)),
            ..inner
        });
    }
    Ok(CharacterizationVerdict::unknown(
        "circulant-construction",
        format!("no construction covers {spec}"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::Verdict;

    fn spec(n: usize, s: &[usize]) -> CirculantSpec {
        CirculantSpec::new(n, s.iter().copied()).unwrap()
    }

    #[test]
    fn figure_examples() {
        let (p, _) = color_circulant(&spec(14, &[1, 6, 7]), Mode::Cnb).unwrap();
        assert_eq!(p, CirculantPattern::Alternating);
        let (p, _) = color_circulant(&spec(12, &[1, 5, 6]), Mode::Cnb).unwrap();
        assert_eq!(p, CirculantPattern::HalfPeriod);
        let (p, _) = color_circulant(&spec(16, &[2, 8]), Mode::Cnb).unwrap();
        assert_eq!(p, CirculantPattern::ModFour);
    }

    #[test]
    fn drawn_c12_coloring_differs_from_half_period() {
        let g = spec(12, &[1, 5, 6]).build();
        let drawn = Coloring::from_reds(12, [1, 3, 4, 6, 8, 11]);
        let ours = CirculantPattern::HalfPeriod.coloring(12);
        assert!(require_valid(&g, &drawn, Mode::Cnb).is_ok());
        assert!(require_valid(&g, &ours, Mode::Cnb).is_ok());
        assert_ne!(drawn, ours);
        assert_ne!(drawn, ours.flipped());
    }

    #[test]
    fn reduce() {
        assert_eq!(circulant_reduce(&spec(12, &[4, 6])), (2, spec(6, &[2, 3])));
        assert_eq!(circulant_reduce(&spec(12, &[1, 6])), (1, spec(12, &[1, 6])));
        assert_eq!(circulant_reduce(&spec(8, &[2])), (2, spec(4, &[1])));
    }

    #[test]
    fn reduced_structure_is_copies() {
        // C_12(4,6): vertex i of copy i mod 2 sits at i / 2 of C_6(2,3)
        let g = spec(12, &[4, 6]).build();
        let r = spec(6, &[2, 3]).build();
        for (u, v) in g.edges() {
            assert_eq!(u % 2, v % 2);
            assert!(r.has_edge(u / 2, v / 2));
        }
        assert_eq!(g.edge_count(), 2 * r.edge_count());
    }

    #[test]
    fn cubic() {
        assert_eq!(characterize_cubic_circulant(12, 1).unwrap().value, Verdict::Yes);
        assert_eq!(characterize_cubic_circulant(12, 4).unwrap().value, Verdict::No);
        assert_eq!(characterize_cubic_circulant(10, 1).unwrap().value, Verdict::No);
        assert!(characterize_cubic_circulant(11, 1).is_err());
        assert!(characterize_cubic_circulant(12, 6).is_err());
    }

    #[test]
    fn quintic_examples() {
        assert_eq!(characterize_quintic_circulant(14, 1, 6).unwrap().value, Verdict::Yes);
        assert_eq!(characterize_quintic_circulant(14, 1, 3).unwrap().value, Verdict::No);
        assert_eq!(characterize_quintic_circulant(12, 1, 5).unwrap().value, Verdict::Yes);
    }

    #[test]
    fn applicable_constructions_verify_everywhere() {
        for n in 3..=24 {
            let half = n / 2;
            for mask in 1u32..(1 << half) {
                let s: Vec<usize> = (1..=half).filter(|d| mask >> (d - 1) & 1 == 1).collect();
                let sp = spec(n, &s);
                for mode in [Mode::Cnb, Mode::Nb] {
                    // panics inside on an invalid colouring
                    circulant_constructions(&sp, mode);
                }
            }
        }
    }
}
