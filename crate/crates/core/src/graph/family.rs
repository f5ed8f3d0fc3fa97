//! Standard graph families with documented vertex numbering.
//!
//! Constructive colourers address vertices arithmetically, so every
//! builder here fixes its labelling:
//!
//! * `complete`, `empty`, `path`, `cycle`: `0..n` in order around the path/cycle.
//! * `star m` = `K_{1,m}`: centre `0`, leaves `1..=m`.
//! * `wheel n` = `W_n`: hub `0`, rim `1..=n` in cycle order.
//! * `complete-bipartite m n`: sides `0..m` and `m..m+n`.
//! * `circulant n S`: `i ~ i ± d (mod n)` for `d ∈ S`.
//! * `gp n d`: outer cycle `c_i = i`, inner `ĉ_i = n + i`, spokes `c_i ĉ_i`.
//! * `hypercube k`: `k`-bit labels, edges at Hamming distance one.
//! * `prism n` = `K_2 □ C_n`: copy `k ∈ {0,1}` of cycle vertex `i` is `k*n + i`.
//! * `h6`: `z1=0, z2=1, v=2, x=3, w1=4, w2=5`.
//! * `h7`: `w=0, x=1, y=2, z=3, u=4, a1=5, a2=6`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{product, Graph, GraphBuilder, GraphError, ProductKind};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Circulant `C_n(S)` with `S` a non-empty strictly increasing subset of `1..=n/2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CirculantSpec {
    n: usize,
    lengths: Vec<usize>,
}

impl CirculantSpec {
    pub fn new(n: usize, lengths: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let mut s: Vec<usize> = lengths.into_iter().collect();
        s.sort_unstable();
        if s.is_empty() {
            return Err(GraphError::InvalidParameter("circulant needs at least one connection length".into()));
        }
        if s.windows(2).any(|w| w[0] == w[1]) {
            return Err(GraphError::InvalidParameter(format!("repeated connection length in {s:?}")));
        }
        if s[0] == 0 || *s.last().unwrap() > n / 2 {
            return Err(GraphError::InvalidParameter(format!(
                "connection lengths {s:?} must lie in 1..={}",
                n / 2
            )));
        }
        Ok(CirculantSpec { n, lengths: s })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Whether `n` is even and `n/2 ∈ S`.
    pub fn has_half(&self) -> bool {
        self.n % 2 == 0 && self.lengths.contains(&(self.n / 2))
    }

    /// Lengths strictly below `n/2`.
    pub fn short_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        let half = self.n / 2;
        self.lengths.iter().copied().filter(move |&d| !(self.n % 2 == 0 && d == half))
    }

    pub fn degree(&self) -> usize {
        2 * self.lengths.len() - usize::from(self.has_half())
    }

    /// `gcd(S ∪ {n})`.
    pub fn gcd(&self) -> usize {
        self.lengths.iter().fold(self.n, |acc, &d| gcd(acc, d))
    }

    /// `(s1, s2, s3)`: short lengths `≡ 0 (mod 4)`, `≡ 2 (mod 4)` and odd.
    pub fn residue_counts(&self) -> (usize, usize, usize) {
        self.short_lengths().fold((0, 0, 0), |(a, b, c), d| match d % 4 {
            0 => (a + 1, b, c),
            2 => (a, b + 1, c),
            _ => (a, b, c + 1),
        })
    }

    /// `S̄ = {1..=⌊n/2⌋} \ S`, `None` when that is empty.
    pub fn complement(&self) -> Option<CirculantSpec> {
        let rest: Vec<usize> = (1..=self.n / 2).filter(|d| !self.lengths.contains(d)).collect();
        if rest.is_empty() {
            None
        } else {
            Some(CirculantSpec { n: self.n, lengths: rest })
        }
    }

    pub fn build(&self) -> Graph {
        let n = self.n;
        let mut b = GraphBuilder::new(n);
        for i in 0..n {
            for &d in &self.lengths {
                b.add_edge(i, (i + d) % n);
            }
        }
        b.build()
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.lengths.iter().map(|d| d.to_string()).collect();
        write!(f, "C_{}({})", self.n, s.join(","))
    }
}

/// Generalized Petersen graph `GP(n, d)`, `1 <= d <= (n-1)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PetersenSpec {
    n: usize,
    d: usize,
}

impl PetersenSpec {
    pub fn new(n: usize, d: usize) -> Result<Self, GraphError> {
        if n < 3 || d == 0 || d > (n - 1) / 2 {
            return Err(GraphError::InvalidParameter(format!(
                "GP({n},{d}) needs n >= 3 and 1 <= d <= (n-1)/2"
            )));
        }
        Ok(PetersenSpec { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn outer(&self, i: usize) -> usize {
        i % self.n
    }

    pub fn inner(&self, i: usize) -> usize {
        self.n + i % self.n
    }

    pub fn build(&self) -> Graph {
        let n = self.n;
        let mut b = GraphBuilder::new(2 * n);
        for i in 0..n {
            b.add_edge(self.outer(i), self.outer(i + 1));
            b.add_edge(self.outer(i), self.inner(i));
            b.add_edge(self.inner(i), self.inner(i + self.d));
        }
        b.build()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    Wheel(usize),
    CompleteBipartite(usize, usize),
    Circulant(CirculantSpec),
    GenPetersen(PetersenSpec),
    Hypercube(u32),
    Prism(usize),
    H6,
    H7,
}

const MAX_HYPERCUBE_DIM: u32 = 18;

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter(msg.into())
}

impl FamilySpec {
    /// `build_family(kind, params)` with integer parameters; circulant
    /// takes `n` followed by its connection lengths.
    pub fn from_params(kind: &str, params: &[usize]) -> Result<Self, GraphError> {
        let want = |k: usize| -> Result<(), GraphError> {
            if params.len() == k {
                Ok(())
            } else {
                Err(invalid(format!("{kind} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let kind_lc = kind.to_ascii_lowercase();
        let spec = match kind_lc.as_str() {
            "complete" | "k" => {
                want(1)?;
                FamilySpec::Complete(params[0])
            }
            "empty" => {
                want(1)?;
                FamilySpec::Empty(params[0])
            }
            "path" => {
                want(1)?;
                if params[0] == 0 {
                    return Err(invalid("path needs at least one vertex"));
                }
                FamilySpec::Path(params[0])
            }
            "cycle" => {
                want(1)?;
                if params[0] < 3 {
                    return Err(invalid("cycle needs n >= 3"));
                }
                FamilySpec::Cycle(params[0])
            }
            "star" => {
                want(1)?;
                FamilySpec::Star(params[0])
            }
            "wheel" => {
                want(1)?;
                if params[0] < 3 {
                    return Err(invalid("wheel needs n >= 3"));
                }
                FamilySpec::Wheel(params[0])
            }
            "complete-bipartite" | "kmn" => {
                want(2)?;
                FamilySpec::CompleteBipartite(params[0], params[1])
            }
            "circulant" => {
                if params.len() < 2 {
                    return Err(invalid("circulant takes n and at least one connection length"));
                }
                FamilySpec::Circulant(CirculantSpec::new(params[0], params[1..].iter().copied())?)
            }
            "gp" | "gen-petersen" | "petersen" => {
                want(2)?;
                FamilySpec::GenPetersen(PetersenSpec::new(params[0], params[1])?)
            }
            "hypercube" | "q" => {
                want(1)?;
                let k = u32::try_from(params[0]).ok().filter(|&k| k <= MAX_HYPERCUBE_DIM);
                FamilySpec::Hypercube(k.ok_or_else(|| {
                    invalid(format!("hypercube dimension must be at most {MAX_HYPERCUBE_DIM}"))
                })?)
            }
            "prism" => {
                want(1)?;
                if params[0] < 3 {
                    return Err(invalid("prism needs n >= 3"));
                }
                FamilySpec::Prism(params[0])
            }
            "h6" => {
                want(0)?;
                FamilySpec::H6
            }
            "h7" => {
                want(0)?;
                FamilySpec::H7
            }
            _ => return Err(invalid(format!("unknown family {kind:?}"))),
        };
        Ok(spec)
    }

    /// Parses `name p1 p2 ...`, where a parameter may be a comma separated
    /// list (`circulant 12 1,5,6`). Names like `K4` are shorthand for
    /// `complete 4`.
    pub fn parse_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self, GraphError> {
        let (name, rest) = tokens
            .split_first()
            .ok_or_else(|| invalid("empty family specification"))?;
        let name = name.as_ref();
        let mut params = Vec::new();
        for tok in rest {
            for piece in tok.as_ref().split(',').filter(|p| !p.is_empty()) {
                params.push(
                    piece
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| invalid(format!("not a non-negative integer: {piece:?}")))?,
                );
            }
        }
        let lower = name.to_ascii_lowercase();
        if params.is_empty() && lower.len() > 1 {
            let (head, digits) = lower.split_at(1);
            if matches!(head, "k" | "c" | "p" | "w" | "q") {
                if let Ok(k) = digits.parse::<usize>() {
                    let kind = match head {
                        "k" => "complete",
                        "c" => "cycle",
                        "p" => "path",
                        "w" => "wheel",
                        _ => "hypercube",
                    };
                    return FamilySpec::from_params(kind, &[k]);
                }
            }
        }
        FamilySpec::from_params(name, &params)
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        let g = match self {
            FamilySpec::Complete(n) => {
                let mut b = GraphBuilder::new(*n);
                for u in 0..*n {
                    for v in u + 1..*n {
                        b.add_edge(u, v);
                    }
                }
                b.build()
            }
            FamilySpec::Empty(n) => Graph::empty(*n),
            FamilySpec::Path(n) => {
                let mut b = GraphBuilder::new(*n);
                for i in 1..*n {
                    b.add_edge(i - 1, i);
                }
                b.build()
            }
            FamilySpec::Cycle(n) => {
                if *n < 3 {
                    return Err(invalid("cycle needs n >= 3"));
                }
                let mut b = GraphBuilder::new(*n);
                for i in 0..*n {
                    b.add_edge(i, (i + 1) % n);
                }
                b.build()
            }
            FamilySpec::Star(m) => {
                let mut b = GraphBuilder::new(m + 1);
                for leaf in 1..=*m {
                    b.add_edge(0, leaf);
                }
                b.build()
            }
            FamilySpec::Wheel(n) => {
                if *n < 3 {
                    return Err(invalid("wheel needs n >= 3"));
                }
                let mut b = GraphBuilder::new(n + 1);
                for i in 0..*n {
                    b.add_edge(0, i + 1);
                    b.add_edge(i + 1, (i + 1) % n + 1);
                }
                b.build()
            }
            FamilySpec::CompleteBipartite(m, n) => {
                let mut b = GraphBuilder::new(m + n);
                for u in 0..*m {
                    for v in 0..*n {
                        b.add_edge(u, m + v);
                    }
                }
                b.build()
            }
            FamilySpec::Circulant(spec) => spec.build(),
            FamilySpec::GenPetersen(spec) => spec.build(),
            FamilySpec::Hypercube(k) => {
                if *k > MAX_HYPERCUBE_DIM {
                    return Err(invalid("hypercube dimension too large"));
                }
                let n = 1usize << k;
                let mut b = GraphBuilder::new(n);
                for v in 0..n {
                    for bit in 0..*k {
                        let u = v ^ (1 << bit);
                        if u > v {
                            b.add_edge(v, u);
                        }
                    }
                }
                b.build()
            }
            FamilySpec::Prism(n) => {
                let k2 = FamilySpec::Complete(2).build()?;
                let cn = FamilySpec::Cycle(*n).build()?;
                product(ProductKind::Cartesian, &k2, &cn)
            }
            FamilySpec::H6 => Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (2, 4), (2, 5)])?,
            FamilySpec::H7 => Graph::from_edges(
                7,
                [(4, 0), (4, 1), (4, 2), (4, 3), (5, 0), (5, 2), (6, 1), (6, 3)],
            )?,
        };
        Ok(g)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete {n}"),
            FamilySpec::Empty(n) => write!(f, "empty {n}"),
            FamilySpec::Path(n) => write!(f, "path {n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle {n}"),
            FamilySpec::Star(m) => write!(f, "star {m}"),
            FamilySpec::Wheel(n) => write!(f, "wheel {n}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "complete-bipartite {m} {n}"),
            FamilySpec::Circulant(s) => {
                let l: Vec<String> = s.lengths().iter().map(|d| d.to_string()).collect();
                write!(f, "circulant {} {}", s.n(), l.join(","))
            }
            FamilySpec::GenPetersen(p) => write!(f, "gp {} {}", p.n(), p.d()),
            FamilySpec::Hypercube(k) => write!(f, "hypercube {k}"),
            FamilySpec::Prism(n) => write!(f, "prism {n}"),
            FamilySpec::H6 => write!(f, "h6"),
            FamilySpec::H7 => write!(f, "h7"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        FamilySpec::parse_tokens(&tokens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn circulant_degree_formula() {
        for n in 2..=20 {
            for mask in 1u32..(1 << (n / 2)) {
                let s: Vec<usize> = (1..=n / 2).filter(|d| mask >> (d - 1) & 1 == 1).collect();
                let spec = CirculantSpec::new(n, s).unwrap();
                assert_eq!(spec.build().regular_degree(), Some(spec.degree()), "{spec}");
            }
        }
    }

    #[test]
    fn circulant_12_1_5_6_is_quintic() {
        let g = fam("circulant 12 1,5,6");
        assert_eq!((g.n(), g.regular_degree()), (12, Some(5)));
        for i in 0..12 {
            for d in [1, 5, 6] {
                assert!(g.has_edge(i, (i + d) % 12));
            }
        }
    }

    #[test]
    fn circulant_spec_validation() {
        assert!(CirculantSpec::new(12, []).is_err());
        assert!(CirculantSpec::new(12, [7]).is_err());
        assert!(CirculantSpec::new(12, [0, 1]).is_err());
        assert!(CirculantSpec::new(12, [3, 3]).is_err());
        let s = CirculantSpec::new(12, [6, 1, 5]).unwrap();
        assert_eq!(s.lengths(), &[1, 5, 6]);
        assert_eq!(s.complement().unwrap().lengths(), &[2, 3, 4]);
        assert_eq!(s.residue_counts(), (0, 0, 2));
        assert_eq!(CirculantSpec::new(12, [4, 6]).unwrap().gcd(), 2);
    }

    #[test]
    fn gen_petersen_matches_edge_list_definition() {
        let spec = PetersenSpec::new(8, 3).unwrap();
        let g = spec.build();
        assert_eq!((g.n(), g.regular_degree()), (16, Some(3)));
        // independent construction: outer cycle, spokes, inner step-3 cycle
        let mut edges = Vec::new();
        for i in 0..8 {
            edges.push((i, (i + 1) % 8));
            edges.push((i, 8 + i));
            edges.push((8 + i, 8 + (i + 3) % 8));
        }
        assert_eq!(g, Graph::from_edges(16, edges).unwrap());
        assert!(PetersenSpec::new(8, 4).is_err());
        assert!(PetersenSpec::new(5, 0).is_err());
    }

    #[test]
    fn hypercube_small() {
        assert_eq!(fam("hypercube 1"), fam("complete 2"));
        assert_eq!(fam("hypercube 0"), Graph::empty(1));
        let c4 = crate::graph::relabel(&fam("cycle 4"), &[0, 1, 3, 2]).unwrap();
        assert_eq!(fam("hypercube 2"), c4);
        let q4 = fam("hypercube 4");
        assert_eq!((q4.n(), q4.regular_degree()), (16, Some(4)));
    }

    #[test]
    fn prism_is_two_cycles_and_a_matching() {
        let y = fam("prism 5");
        assert_eq!((y.n(), y.edge_count(), y.regular_degree()), (10, 15, Some(3)));
        for i in 0..5 {
            assert!(y.has_edge(i, 5 + i));
            assert!(y.has_edge(i, (i + 1) % 5));
            assert!(y.has_edge(5 + i, 5 + (i + 1) % 5));
        }
    }

    #[test]
    fn shorthand_names() {
        assert_eq!(fam("K4"), fam("complete 4"));
        assert_eq!(fam("C5"), fam("cycle 5"));
        assert_eq!(fam("W3"), fam("complete 4"));
        assert!("circulant 12".parse::<FamilySpec>().is_err());
        assert!("nonsense 3".parse::<FamilySpec>().is_err());
        assert!("gp 10 5".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["circulant 12 1,5,6", "gp 8 3", "complete-bipartite 2 3", "h6", "hypercube 3"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }
}
