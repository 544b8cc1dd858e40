//! Named graphs, the family DSL, and the extremal graphs of the path/cycle
//! theorems.
//!
//! A family spec is written as a sum of atoms with optional multipliers:
//! `P3 + C5*2`, `K3,3*2`, `H3*4`, `Q3`, `M10`, `G1`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::canon::CanonicalCode;
use crate::enumerate::{enumerate_regular_bipartite, RegularClass};
use crate::graph::Multigraph;
use crate::matchpoly::{matching_polynomial, MatchingPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("invalid atom at column {column}: {message}")]
    Semantic { column: usize, message: String },
    #[error("{0}")]
    Domain(String),
}

/// Whether parallel edges (`C2`, `H_r` with `r ≥ 2`) are allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphMode {
    Simple,
    Multi,
}

/// Connected building block. Sizes are vertex counts except for
/// `CompleteBipartite(r)` (`K_{r,r}`) and `MultiEdge(r)` (`H_r`, multiplicity).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize),
    MultiEdge(u32),
    Hypercube3,
    Mobius(usize),
    G1,
}

impl Atom {
    pub fn vertex_count(self) -> usize {
        match self {
            Atom::Path(k) | Atom::Cycle(k) | Atom::Mobius(k) => k,
            Atom::CompleteBipartite(r) => 2 * r,
            Atom::MultiEdge(_) => 2,
            Atom::Hypercube3 => 8,
            Atom::G1 => 10,
        }
    }

    pub fn realize(self) -> Multigraph {
        match self {
            Atom::Path(k) => Multigraph::from_pairs(k, (1..k).map(|i| (i - 1, i))).unwrap(),
            Atom::Cycle(2) => Multigraph::new(2, [(0, 1, 2)]).unwrap(),
            Atom::Cycle(k) => Multigraph::from_pairs(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap(),
            Atom::CompleteBipartite(r) => {
                Multigraph::from_pairs(2 * r, (0..r).flat_map(|i| (r..2 * r).map(move |j| (i, j))))
                    .unwrap()
            }
            Atom::MultiEdge(r) => Multigraph::new(2, [(0, 1, r)]).unwrap(),
            Atom::Hypercube3 => Multigraph::from_pairs(
                8,
                (0..8usize).flat_map(|v| {
                    (0..3)
                        .map(move |b| (v, v ^ (1 << b)))
                        .filter(|(a, b)| a < b)
                }),
            )
            .unwrap(),
            Atom::Mobius(n) => {
                // vertex i is (i+1, 1) and k + i is (i+1, 2)
                let k = n / 2;
                let mut e: Vec<(usize, usize)> = (0..k).map(|i| (i, k + i)).collect();
                e.extend((1..k).flat_map(|i| [(i - 1, i), (k + i - 1, k + i)]));
                e.push((0, 2 * k - 1));
                e.push((k, k - 1));
                Multigraph::from_pairs(2 * k, e).unwrap()
            }
            Atom::G1 => g1().clone(),
        }
    }

    fn check(self, mode: GraphMode) -> Result<(), String> {
        match self {
            Atom::Path(k) if k < 2 => Err(format!("P{k}: paths need at least 2 vertices")),
            Atom::Cycle(k) if k < 2 => Err(format!("C{k}: cycles need at least 2 vertices")),
            Atom::Cycle(2) if mode == GraphMode::Simple => {
                Err("C2 is a double edge, not allowed for simple graphs".into())
            }
            Atom::CompleteBipartite(0) => Err("K0,0 is empty".into()),
            Atom::MultiEdge(0) => Err("H0 has no edge".into()),
            Atom::MultiEdge(r) if r > 1 && mode == GraphMode::Simple => Err(format!(
                "H{r} has a multiple edge, not allowed for simple graphs"
            )),
            Atom::Mobius(n) if n < 6 || n % 2 == 1 => Err(format!(
                "M{n}: Möbius ladders need an even vertex count of at least 6"
            )),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Path(k) => write!(f, "P{k}"),
            Atom::Cycle(k) => write!(f, "C{k}"),
            Atom::CompleteBipartite(r) => write!(f, "K{r},{r}"),
            Atom::MultiEdge(r) => write!(f, "H{r}"),
            Atom::Hypercube3 => write!(f, "Q3"),
            Atom::Mobius(n) => write!(f, "M{n}"),
            Atom::G1 => write!(f, "G1"),
        }
    }
}

/// Multiset of atoms, kept sorted by (kind, size).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FamilySpec {
    parts: BTreeMap<Atom, usize>,
}

impl FamilySpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_parts<I: IntoIterator<Item = (Atom, usize)>>(parts: I) -> Self {
        let mut spec = Self::new();
        for (a, q) in parts {
            spec.add(a, q);
        }
        spec
    }

    pub fn add(&mut self, atom: Atom, count: usize) {
        if count > 0 {
            *self.parts.entry(atom).or_insert(0) += count;
        }
    }

    pub fn with(mut self, atom: Atom, count: usize) -> Self {
        self.add(atom, count);
        self
    }

    pub fn parts(&self) -> impl Iterator<Item = (Atom, usize)> + '_ {
        self.parts.iter().map(|(&a, &q)| (a, q))
    }

    pub fn vertex_count(&self) -> usize {
        self.parts().map(|(a, q)| a.vertex_count() * q).sum()
    }

    /// Disjoint union of all parts in sorted order.
    pub fn realize(&self) -> Multigraph {
        let mut g = Multigraph::empty(0);
        for (a, q) in self.parts() {
            g = g.disjoint_union(&a.realize().repeat(q));
        }
        g.with_detected_bipartition()
    }

    pub fn polynomial(&self) -> MatchingPolynomial {
        self.parts().fold(MatchingPolynomial::one(), |acc, (a, q)| {
            &acc * &matching_polynomial(&a.realize()).pow(q)
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("empty");
        }
        for (i, (a, q)) in self.parts().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{a}")?;
            if q > 1 {
                write!(f, "*{q}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.text.chars().count() + 1, |&(c, _)| c + 1)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, FamilyError> {
        Err(FamilyError::Syntax {
            column: self.column(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<usize, FamilyError> {
        let start = self.pos;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            return self.syntax("expected an integer");
        }
        digits.parse().or_else(|_| {
            self.pos = start;
            self.syntax("integer too large")
        })
    }

    fn atom(&mut self) -> Result<Atom, FamilyError> {
        let Some(kind) = self.peek() else {
            return self.syntax("expected an atom, found end of input");
        };
        self.pos += 1;
        Ok(match kind {
            'P' => Atom::Path(self.int()?),
            'C' => Atom::Cycle(self.int()?),
            'M' => Atom::Mobius(self.int()?),
            'H' => {
                let r = self.int()?;
                match u32::try_from(r) {
                    Ok(r) => Atom::MultiEdge(r),
                    Err(_) => return self.syntax("multiplicity too large"),
                }
            }
            'K' => {
                let a = self.int()?;
                if !self.eat(',') {
                    return self.syntax("expected `,` in K<r>,<r>");
                }
                let col = self.column();
                let b = self.int()?;
                if a != b {
                    return Err(FamilyError::Semantic {
                        column: col,
                        message: format!("K{a},{b}: only equal sides are supported"),
                    });
                }
                Atom::CompleteBipartite(a)
            }
            'Q' => {
                if self.int()? != 3 {
                    self.pos -= 1;
                    return self.syntax("only Q3 is supported");
                }
                Atom::Hypercube3
            }
            'G' => {
                if self.int()? != 1 {
                    self.pos -= 1;
                    return self.syntax("only G1 is supported");
                }
                Atom::G1
            }
            other => {
                self.pos -= 1;
                return self.syntax(format!("unknown atom `{other}`"));
            }
        })
    }
}

/// Parses a family expression such as `P3 + C5*2`.
pub fn parse_family(text: &str, mode: GraphMode) -> Result<FamilySpec, FamilyError> {
    let mut p = Parser {
        chars: text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        pos: 0,
        text,
    };
    let mut spec = FamilySpec::new();
    loop {
        let column = p.column();
        let atom = p.atom()?;
        atom.check(mode)
            .map_err(|message| FamilyError::Semantic { column, message })?;
        let mut count = 1;
        if p.eat('*') {
            let col = p.column();
            count = p.int()?;
            if count == 0 {
                return Err(FamilyError::Semantic {
                    column: col,
                    message: "multiplier must be at least 1".into(),
                });
            }
        }
        spec.add(atom, count);
        match p.peek() {
            None => return Ok(spec),
            Some('+') => p.pos += 1,
            Some(c) => return p.syntax(format!("expected `+`, `*` or end of input, found `{c}`")),
        }
    }
}

fn g1() -> &'static Multigraph {
    static G1: OnceLock<Multigraph> = OnceLock::new();
    G1.get_or_init(|| {
        let m10 = Atom::Mobius(10).realize().canonical_code();
        let g = enumerate_regular_bipartite(10, 3, RegularClass::SIMPLE_CONNECTED)
            .expect("10 vertices is within the enumeration cap")
            .into_iter()
            .find(|g| g.canonical_code() != m10)
            .expect("two connected cubic bipartite graphs on 10 vertices");
        assert_eq!(
            matching_polynomial(&g),
            MatchingPolynomial::from_u64s(&[1, 15, 75, 145, 96, 12])
        );
        g
    })
}

/// Names `g` as a family spec when every component is isomorphic to an atom.
pub fn identify(g: &Multigraph) -> Option<FamilySpec> {
    let mut spec = FamilySpec::new();
    for c in g.connected_components() {
        spec.add(identify_connected(&c)?, 1);
    }
    Some(spec)
}

fn identify_connected(c: &Multigraph) -> Option<Atom> {
    let n = c.vertex_count();
    if n == 2 {
        return Some(Atom::MultiEdge(c.multiplicity(0, 1)));
    }
    let mut candidates = vec![Atom::Path(n), Atom::Cycle(n)];
    if n.is_multiple_of(2) {
        candidates.push(Atom::CompleteBipartite(n / 2));
        if n >= 6 {
            candidates.push(Atom::Mobius(n));
        }
    }
    if n == 8 {
        candidates.push(Atom::Hypercube3);
    }
    if n == 10 {
        candidates.push(Atom::G1);
    }
    let edges = c.edge_slots();
    let code: CanonicalCode = c.canonical_code();
    candidates.into_iter().find(|a| {
        let r = a.realize();
        r.edge_slots() == edges && r.canonical_code() == code
    })
}

/// Cubic bipartite graphs on `two_n` vertices conjectured to maximize every
/// matching count: copies of `K3,3`, completed by `Q3` or by `G1`/`M10`.
pub fn extremal_cubic(two_n: usize) -> Result<Vec<FamilySpec>, FamilyError> {
    let k33 = Atom::CompleteBipartite(3);
    let out = match two_n % 6 {
        _ if two_n < 6 || two_n % 2 == 1 => {
            return Err(FamilyError::Domain(format!(
                "{two_n} vertices: need an even count of at least 6"
            )))
        }
        0 => vec![FamilySpec::new().with(k33, two_n / 6)],
        2 => vec![FamilySpec::new()
            .with(k33, (two_n - 8) / 6)
            .with(Atom::Hypercube3, 1)],
        _ => vec![
            FamilySpec::new()
                .with(k33, (two_n - 10) / 6)
                .with(Atom::G1, 1),
            FamilySpec::new()
                .with(k33, (two_n - 10) / 6)
                .with(Atom::Mobius(10), 1),
        ],
    };
    Ok(out)
}

/// Which side of the coefficientwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Min,
    Max,
}

/// Class of 2-regular graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwoRegularFlavor {
    Simple,
    SimpleBipartite,
    MultiBipartite,
}

/// Coefficientwise extremal 2-regular graphs on `n` vertices.
pub fn extremal_2regular(
    n: usize,
    side: Side,
    flavor: TwoRegularFlavor,
) -> Result<Vec<FamilySpec>, FamilyError> {
    if n < 3 {
        return Err(FamilyError::Domain(format!("n = {n}: need n >= 3")));
    }
    if flavor != TwoRegularFlavor::Simple && n % 2 == 1 {
        return Err(FamilyError::Domain(format!(
            "n = {n}: bipartite 2-regular graphs have an even number of vertices"
        )));
    }
    let c = Atom::Cycle;
    let spec = match (side, flavor) {
        (Side::Max, TwoRegularFlavor::Simple) => match n % 4 {
            _ if n == 3 => FamilySpec::new().with(c(3), 1),
            0 => FamilySpec::new().with(c(4), n / 4),
            r => FamilySpec::new()
                .with(c(4), (n - r - 4) / 4)
                .with(c(r + 4), 1),
        },
        (Side::Min, TwoRegularFlavor::Simple) => match n % 3 {
            0 => FamilySpec::new().with(c(3), n / 3),
            r => FamilySpec::new()
                .with(c(3), (n - r - 3) / 3)
                .with(c(r + 3), 1),
        },
        (Side::Min, _) => FamilySpec::new().with(c(n), 1),
        (Side::Max, TwoRegularFlavor::MultiBipartite) => {
            FamilySpec::new().with(Atom::MultiEdge(2), n / 2)
        }
        (Side::Max, TwoRegularFlavor::SimpleBipartite) => match n % 4 {
            0 => FamilySpec::new().with(c(4), n / 4),
            _ => FamilySpec::new().with(c(4), (n - 6) / 4).with(c(6), 1),
        },
    };
    Ok(vec![spec])
}

/// Extremal members of `Ω(n, k)` (unions of `k` paths and cycles on `n`
/// vertices), or of its bipartite part. Two-element results are ties with
/// equal matching polynomials.
pub fn extremal_omega(
    n: usize,
    k: usize,
    side: Side,
    bipartite: bool,
) -> Result<Vec<FamilySpec>, FamilyError> {
    if k == 0 || 2 * k > n {
        return Err(FamilyError::Domain(format!(
            "(n, k) = ({n}, {k}): need 2 <= 2k <= n"
        )));
    }
    let l = n - 2 * k;
    let (p, c) = (Atom::Path, Atom::Cycle);
    let spec = |parts: &[(Atom, usize)]| FamilySpec::from_parts(parts.iter().copied());
    if l == 0 {
        return Ok(vec![spec(&[(p(2), k)])]);
    }
    if l == 1 {
        return Ok(vec![spec(&[(p(2), k - 1), (p(3), 1)])]);
    }
    let out = match (side, bipartite) {
        (Side::Min, _) if l <= k => vec![spec(&[(p(3), l), (p(2), k - l)])],
        (Side::Min, false) => {
            let d = l - k;
            match d % 3 {
                0 => vec![spec(&[(p(3), k), (c(3), d / 3)])],
                1 => vec![spec(&[(p(3), k - 1), (p(4), 1), (c(3), (d - 1) / 3)])],
                _ => vec![
                    spec(&[(p(3), k - 1), (p(5), 1), (c(3), (d - 2) / 3)]),
                    spec(&[(p(3), k - 1), (p(2), 1), (c(3), (d + 1) / 3)]),
                ],
            }
        }
        (Side::Min, true) => {
            let d = l - k;
            if d >= 4 && d.is_multiple_of(2) {
                let mut v = vec![spec(&[(p(3), k), (c(d), 1)])];
                if d == 4 {
                    v.push(spec(&[(p(3), k - 1), (p(7), 1)]));
                }
                v
            } else {
                vec![spec(&[(p(3), k - 1), (p(d + 3), 1)])]
            }
        }
        (Side::Max, _) if l == 2 => vec![spec(&[(p(2), k - 1), (p(4), 1)])],
        (Side::Max, false) if l == 3 => vec![
            spec(&[(p(2), k - 1), (p(5), 1)]),
            spec(&[(p(2), k), (c(3), 1)]),
        ],
        (Side::Max, true) if l == 3 => vec![spec(&[(p(2), k - 1), (p(5), 1)])],
        (Side::Max, false) => match l % 4 {
            0 => vec![spec(&[(p(2), k), (c(4), l / 4)])],
            r => vec![spec(&[(p(2), k), (c(4), (l - r - 4) / 4), (c(r + 4), 1)])],
        },
        (Side::Max, true) => match l % 4 {
            0 => vec![spec(&[(p(2), k), (c(4), l / 4)])],
            1 => vec![
                spec(&[(p(2), k - 1), (c(4), (l - 1) / 4), (p(3), 1)]),
                spec(&[(p(2), k - 1), (c(4), (l - 5) / 4), (p(7), 1)]),
            ],
            2 => vec![spec(&[(p(2), k), (c(4), (l - 6) / 4), (c(6), 1)])],
            _ => vec![spec(&[(p(2), k - 1), (c(4), (l - 3) / 4), (p(5), 1)])],
        },
    };
    Ok(out)
}
