//! Isomorphism-free enumeration of path/cycle unions and of regular bipartite
//! (multi)graphs, plus per-coefficient extremum scans.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::CanonicalCode;
use crate::families::{Atom, FamilySpec, TwoRegularFlavor};
use crate::graph::Multigraph;
use crate::matchpoly::{matching_polynomial, MatchingPolynomial};

/// Default largest vertex count for regular bipartite enumeration.
pub const DEFAULT_VERTEX_CAP: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("{0}")]
    Domain(String),
    #[error("{two_n} vertices exceeds the enumeration cap of {cap}")]
    CapExceeded { two_n: usize, cap: usize },
    #[error("cannot scan an empty list of graphs")]
    EmptyInput,
}

/// Which graphs of `Ω(n, k)` to list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OmegaFlavor {
    Simple,
    SimpleBipartite,
    Multi,
}

/// Nonincreasing sequences of `count` parts (any count when `None`) from
/// `allowed`, summing to `total`, each part at most `max`.
fn partitions(
    total: usize,
    max: usize,
    count: Option<usize>,
    allowed: &dyn Fn(usize) -> bool,
) -> Vec<Vec<usize>> {
    fn go(
        left: usize,
        max: usize,
        count: Option<usize>,
        allowed: &dyn Fn(usize) -> bool,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 && count.is_none_or(|c| c == cur.len()) {
            out.push(cur.clone());
            return;
        }
        if count.is_some_and(|c| c == cur.len()) {
            return;
        }
        for part in (1..=max.min(left)).rev() {
            if allowed(part) {
                cur.push(part);
                go(left - part, part, count, allowed, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(total, max, count, allowed, &mut Vec::new(), &mut out);
    out
}

/// All members of `Ω(n, k)` up to isomorphism: `k` paths on at least 2 vertices
/// plus cycles, `n` vertices in total. Bipartite flavor drops odd cycles; the
/// multigraph flavor admits the double edge `C2`.
pub fn enumerate_omega(
    n: usize,
    k: usize,
    flavor: OmegaFlavor,
) -> Result<Vec<FamilySpec>, EnumError> {
    if k == 0 || 2 * k > n {
        return Err(EnumError::Domain(format!(
            "(n, k) = ({n}, {k}): need 2 <= 2k <= n"
        )));
    }
    let cycle_ok = move |c: usize| match flavor {
        OmegaFlavor::Simple => c >= 3,
        OmegaFlavor::SimpleBipartite => c >= 4 && c.is_multiple_of(2),
        OmegaFlavor::Multi => c >= 2,
    };
    let mut out = Vec::new();
    for path_total in 2 * k..=n {
        let cycles = partitions(n - path_total, n, None, &cycle_ok);
        for paths in partitions(path_total, path_total, Some(k), &|p| p >= 2) {
            for cs in &cycles {
                let spec = FamilySpec::from_parts(
                    paths
                        .iter()
                        .map(|&p| (Atom::Path(p), 1))
                        .chain(cs.iter().map(|&c| (Atom::Cycle(c), 1))),
                );
                out.push(spec);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All 2-regular graphs on `n` vertices of the given class, as cycle unions.
pub fn enumerate_2regular(n: usize, flavor: TwoRegularFlavor) -> Vec<FamilySpec> {
    let ok = move |c: usize| match flavor {
        TwoRegularFlavor::Simple => c >= 3,
        TwoRegularFlavor::SimpleBipartite => c >= 4 && c.is_multiple_of(2),
        TwoRegularFlavor::MultiBipartite => c.is_multiple_of(2),
    };
    let mut out: Vec<FamilySpec> = partitions(n, n, None, &ok)
        .into_iter()
        .map(|cs| FamilySpec::from_parts(cs.into_iter().map(|c| (Atom::Cycle(c), 1))))
        .collect();
    out.sort();
    out
}

/// Which regular bipartite graphs to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularClass {
    pub multi: bool,
    pub connected_only: bool,
}

impl RegularClass {
    pub const SIMPLE: Self = RegularClass {
        multi: false,
        connected_only: false,
    };
    pub const SIMPLE_CONNECTED: Self = RegularClass {
        multi: false,
        connected_only: true,
    };
    pub const MULTI: Self = RegularClass {
        multi: true,
        connected_only: false,
    };
    pub const MULTI_CONNECTED: Self = RegularClass {
        multi: true,
        connected_only: true,
    };
}

/// One representative of every isomorphism class of `r`-regular bipartite
/// graphs on `two_n` vertices, sorted by canonical code.
pub fn enumerate_regular_bipartite(
    two_n: usize,
    r: usize,
    class: RegularClass,
) -> Result<Vec<Multigraph>, EnumError> {
    enumerate_regular_bipartite_with_cap(two_n, r, class, DEFAULT_VERTEX_CAP)
}

pub fn enumerate_regular_bipartite_with_cap(
    two_n: usize,
    r: usize,
    class: RegularClass,
    cap: usize,
) -> Result<Vec<Multigraph>, EnumError> {
    if two_n == 0 || two_n % 2 == 1 {
        return Err(EnumError::Domain(format!(
            "vertex count {two_n} must be positive and even"
        )));
    }
    if r == 0 {
        return Err(EnumError::Domain("degree must be at least 1".into()));
    }
    if two_n > cap {
        return Err(EnumError::CapExceeded { two_n, cap });
    }
    let n = two_n / 2;
    if !class.multi && r > n {
        return Err(EnumError::Domain(format!(
            "no simple {r}-regular bipartite graph on {two_n} vertices"
        )));
    }
    if class.connected_only {
        return Ok(connected_catalog(n, r, class.multi));
    }
    let min_part = if class.multi { 1 } else { r };
    let catalogs: Vec<Vec<Multigraph>> = (0..=n)
        .map(|s| {
            if s >= min_part {
                connected_catalog(s, r, class.multi)
            } else {
                Vec::new()
            }
        })
        .collect();
    let mut out = BTreeMap::new();
    for parts in partitions(n, n, None, &|s| s >= min_part && !catalogs[s].is_empty()) {
        let mut by_size: BTreeMap<usize, usize> = BTreeMap::new();
        for s in parts {
            *by_size.entry(s).or_insert(0) += 1;
        }
        let mut unions = vec![Multigraph::empty(0)];
        let catalogs = &catalogs;
        for (&s, &q) in &by_size {
            let picks = multisets(catalogs[s].len(), q);
            unions = unions
                .iter()
                .flat_map(|u| {
                    let picks = &picks;
                    picks.iter().map(move |pick| {
                        pick.iter()
                            .fold(u.clone(), |acc, &i| acc.disjoint_union(&catalogs[s][i]))
                    })
                })
                .collect();
        }
        for g in unions {
            let g = g.with_detected_bipartition();
            out.insert(g.canonical_code(), g);
        }
    }
    Ok(out.into_values().collect())
}

/// Nondecreasing index sequences of length `q` over `0..len`.
fn multisets(len: usize, q: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, q: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for i in lo..len {
            cur.push(i);
            go(len, q, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, q, 0, &mut Vec::new(), &mut out);
    out
}

/// Connected `r`-regular bipartite graphs with `n` vertices per side.
///
/// Rows of the biadjacency matrix are filled one at a time. Columns that agree
/// on all rows so far are interchangeable, so within each such class the new
/// row is required to be nonincreasing; this keeps the columns in
/// lexicographically nonincreasing order. Survivors are deduplicated by
/// canonical code.
fn connected_catalog(n: usize, r: usize, multi: bool) -> Vec<Multigraph> {
    let max_entry = if multi { r } else { 1 };
    let first: Vec<usize> = if multi {
        vec![]
    } else {
        (0..n).map(|j| usize::from(j < r)).collect()
    };
    let start = Search {
        n,
        r,
        max_entry,
        rows: Vec::new(),
        col_sums: vec![0; n],
    };
    let seeds: Vec<Search> = if multi {
        start.children()
    } else {
        let mut s = start;
        s.push(first);
        vec![s]
    };
    let seeds: Vec<Search> = seeds.into_iter().flat_map(|s| s.children()).collect();
    let found: Vec<(CanonicalCode, Multigraph)> = seeds
        .into_par_iter()
        .flat_map_iter(|s| {
            let mut out = Vec::new();
            s.complete(&mut out);
            out.into_iter().filter_map(|rows| {
                let g = from_biadjacency(&rows);
                g.is_connected().then(|| (g.canonical_code(), g))
            })
        })
        .collect();
    let mut unique: BTreeMap<CanonicalCode, Multigraph> = BTreeMap::new();
    for (c, g) in found {
        unique.entry(c).or_insert(g);
    }
    unique.into_values().collect()
}

fn from_biadjacency(rows: &[Vec<usize>]) -> Multigraph {
    let n = rows.len();
    let edges = rows.iter().enumerate().flat_map(|(i, row)| {
        row.iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(move |(j, &x)| (i, n + j, x as u32))
    });
    let colors = (0..2 * n).map(|v| v >= n).collect();
    Multigraph::new(2 * n, edges)
        .and_then(|g| g.with_bipartition(colors))
        .expect("biadjacency matrix is a valid bipartite multigraph")
}

#[derive(Clone)]
struct Search {
    n: usize,
    r: usize,
    max_entry: usize,
    rows: Vec<Vec<usize>>,
    col_sums: Vec<usize>,
}

impl Search {
    fn push(&mut self, row: Vec<usize>) {
        for (s, x) in self.col_sums.iter_mut().zip(&row) {
            *s += x;
        }
        self.rows.push(row);
    }

    /// Every admissible next row.
    fn children(&self) -> Vec<Search> {
        if self.rows.len() == self.n {
            return vec![self.clone()];
        }
        let left_after = self.n - self.rows.len() - 1;
        let mut out = Vec::new();
        let mut row = vec![0; self.n];
        self.fill(0, self.r, left_after, &mut row, &mut out);
        out
    }

    fn fill(
        &self,
        j: usize,
        left: usize,
        rows_after: usize,
        row: &mut Vec<usize>,
        out: &mut Vec<Search>,
    ) {
        let n = self.n;
        if j == n {
            if left == 0 {
                let mut s = self.clone();
                s.push(row.clone());
                out.push(s);
            }
            return;
        }
        let room: usize = (j..n)
            .map(|c| (self.r - self.col_sums[c]).min(self.max_entry))
            .sum();
        if room < left {
            return;
        }
        let cap = (self.r - self.col_sums[j]).min(self.max_entry).min(left);
        let same_class = j > 0 && self.rows.iter().all(|row| row[j] == row[j - 1]);
        let hi = if same_class { cap.min(row[j - 1]) } else { cap };
        // the column must still be completable by the rows below
        let need = self.r - self.col_sums[j];
        for x in (0..=hi).rev() {
            if need - x > rows_after * self.max_entry {
                break;
            }
            row[j] = x;
            self.fill(j + 1, left - x, rows_after, row, out);
        }
        row[j] = 0;
    }

    fn complete(self, out: &mut Vec<Vec<Vec<usize>>>) {
        if self.rows.len() == self.n {
            out.push(self.rows);
            return;
        }
        for child in self.children() {
            child.complete(out);
        }
    }
}

/// Extremes of one coefficient over a list of graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientExtremum {
    pub m: usize,
    #[serde(serialize_with = "as_decimal")]
    pub min: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub max: BigUint,
    pub argmin: Vec<CanonicalCode>,
    pub argmax: Vec<CanonicalCode>,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

/// Per-coefficient minima and maxima of matching polynomials over a set of
/// graphs, and the graphs extremal for every coefficient at once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremumReport {
    pub schema: u32,
    pub graphs: usize,
    pub coefficients: Vec<CoefficientExtremum>,
    pub coefficientwise_min: Vec<CanonicalCode>,
    pub coefficientwise_max: Vec<CanonicalCode>,
    pub coefficientwise_min_exists: bool,
    pub coefficientwise_min_unique: bool,
    pub coefficientwise_max_exists: bool,
    pub coefficientwise_max_unique: bool,
}

impl ExtremumReport {
    pub fn coefficient(&self, m: usize) -> Option<&CoefficientExtremum> {
        self.coefficients.get(m)
    }
}

/// Computes matching polynomials in parallel and scans them.
pub fn extremum_scan(graphs: &[Multigraph]) -> Result<ExtremumReport, EnumError> {
    let entries: Vec<(CanonicalCode, MatchingPolynomial)> = graphs
        .par_iter()
        .map(|g| (g.canonical_code(), matching_polynomial(g)))
        .collect();
    scan_polynomials(&entries)
}

pub fn scan_polynomials(
    entries: &[(CanonicalCode, MatchingPolynomial)],
) -> Result<ExtremumReport, EnumError> {
    if entries.is_empty() {
        return Err(EnumError::EmptyInput);
    }
    let len = entries
        .iter()
        .map(|(_, p)| p.coeffs().len())
        .max()
        .unwrap_or(0);
    let mut coefficients = Vec::with_capacity(len);
    for m in 0..len {
        let values: Vec<BigUint> = entries.iter().map(|(_, p)| p.coeff(m)).collect();
        let min = values.iter().min().unwrap().clone();
        let max = values.iter().max().unwrap().clone();
        let pick = |target: &BigUint| -> Vec<CanonicalCode> {
            entries
                .iter()
                .zip(&values)
                .filter(|(_, v)| *v == target)
                .map(|((c, _), _)| c.clone())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect()
        };
        coefficients.push(CoefficientExtremum {
            m,
            argmin: pick(&min),
            argmax: pick(&max),
            min,
            max,
        });
    }
    let everywhere = |sets: Vec<&Vec<CanonicalCode>>| -> Vec<CanonicalCode> {
        let mut it = sets.into_iter();
        let first: BTreeSet<CanonicalCode> = it
            .next()
            .map(|s| s.iter().cloned().collect())
            .unwrap_or_default();
        it.fold(first, |acc, s| {
            let s: BTreeSet<_> = s.iter().cloned().collect();
            acc.intersection(&s).cloned().collect()
        })
        .into_iter()
        .collect()
    };
    let cmin = everywhere(coefficients.iter().map(|c| &c.argmin).collect());
    let cmax = everywhere(coefficients.iter().map(|c| &c.argmax).collect());
    let distinct = entries
        .iter()
        .map(|(c, _)| c)
        .collect::<BTreeSet<_>>()
        .len();
    Ok(ExtremumReport {
        schema: 1,
        graphs: distinct,
        coefficientwise_min_exists: !cmin.is_empty(),
        coefficientwise_min_unique: cmin.len() == 1,
        coefficientwise_max_exists: !cmax.is_empty(),
        coefficientwise_max_unique: cmax.len() == 1,
        coefficientwise_min: cmin,
        coefficientwise_max: cmax,
        coefficients,
    })
}
