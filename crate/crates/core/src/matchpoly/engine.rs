use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;

use super::poly::{cycle_poly, path_poly, MatchingPolynomial};
use super::PolyError;
use crate::graph::Multigraph;

/// Default edge-slot cap of [`matching_polynomial_bruteforce`].
pub const DEFAULT_SLOT_CAP: u64 = 24;

/// Exact matching polynomial computation.
///
/// Components that are paths, cycles or single (multi)edges use closed forms.
/// Any other component is expanded on its lowest remaining vertex `v`:
/// `Φ_S = Φ_{S−v} + x Σ_u mult(v,u) Φ_{S−v−u}` over induced vertex subsets `S`,
/// memoized by the subset. Vertices are numbered in BFS order first so that the
/// live frontier, and with it the number of distinct subsets, stays small.
#[derive(Debug, Clone)]
pub struct MatchingEngine {
    cache_capacity: usize,
}

impl Default for MatchingEngine {
    fn default() -> Self {
        MatchingEngine {
            cache_capacity: 1 << 22,
        }
    }
}

impl MatchingEngine {
    /// Memo entries beyond `capacity` are not stored; results stay exact.
    pub fn with_cache_capacity(capacity: usize) -> Self {
        MatchingEngine {
            cache_capacity: capacity,
        }
    }

    pub fn cache_capacity(&self) -> usize {
        self.cache_capacity
    }

    pub fn polynomial(&self, g: &Multigraph) -> MatchingPolynomial {
        g.component_vertex_sets()
            .iter()
            .fold(MatchingPolynomial::one(), |acc, vs| {
                let comp = g.induced(vs);
                &acc * &self.connected(&comp)
            })
    }

    fn connected(&self, g: &Multigraph) -> MatchingPolynomial {
        let n = g.vertex_count();
        match n {
            0 | 1 => return MatchingPolynomial::one(),
            2 => return MatchingPolynomial::edge(g.multiplicity(0, 1)),
            _ => {}
        }
        if g.is_simple() {
            let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
            if max_deg <= 2 {
                return if g.edge_count() == n {
                    cycle_poly(n).expect("n >= 3")
                } else {
                    path_poly(n)
                };
            }
        }
        Expansion::new(g, self.cache_capacity).run()
    }
}

pub fn matching_polynomial(g: &Multigraph) -> MatchingPolynomial {
    MatchingEngine::default().polynomial(g)
}

type Set = Box<[u64]>;

struct Expansion {
    /// adjacency in BFS numbering, neighbors with multiplicity
    adj: Vec<Vec<(usize, u32)>>,
    memo: HashMap<Set, MatchingPolynomial>,
    capacity: usize,
}

impl Expansion {
    fn new(g: &Multigraph, capacity: usize) -> Self {
        let n = g.vertex_count();
        let start = (0..n).min_by_key(|&v| g.degree(v)).unwrap_or(0);
        let mut pos = vec![usize::MAX; n];
        let mut queue = VecDeque::from([start]);
        pos[start] = 0;
        let mut next = 1;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in g.neighbors(v) {
                if pos[w] == usize::MAX {
                    pos[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v, m) in g.edges() {
            adj[pos[u]].push((pos[v], m));
            adj[pos[v]].push((pos[u], m));
        }
        Expansion {
            adj,
            memo: HashMap::new(),
            capacity,
        }
    }

    fn run(mut self) -> MatchingPolynomial {
        let n = self.adj.len();
        let mut set = vec![0u64; n.div_ceil(64)];
        for v in 0..n {
            set[v / 64] |= 1 << (v % 64);
        }
        self.eval(set.into_boxed_slice())
    }

    fn eval(&mut self, set: Set) -> MatchingPolynomial {
        let Some(v) = first(&set) else {
            return MatchingPolynomial::one();
        };
        if let Some(p) = self.memo.get(&set) {
            return p.clone();
        }
        let mut rest = set.clone();
        clear(&mut rest, v);
        let mut coeffs: Vec<BigUint> = self.eval(rest.clone()).into_coeffs();
        for i in 0..self.adj[v].len() {
            let (u, mult) = self.adj[v][i];
            if !contains(&rest, u) {
                continue;
            }
            let mut sub = rest.clone();
            clear(&mut sub, u);
            let p = self.eval(sub);
            for (k, c) in p.coeffs().iter().enumerate() {
                if coeffs.len() <= k + 1 {
                    coeffs.resize(k + 2, BigUint::default());
                }
                coeffs[k + 1] += c * mult;
            }
        }
        let result = MatchingPolynomial::new(coeffs);
        if self.memo.len() < self.capacity {
            self.memo.insert(set, result.clone());
        }
        result
    }
}

fn first(set: &[u64]) -> Option<usize> {
    set.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn contains(set: &[u64], v: usize) -> bool {
    set[v / 64] >> (v % 64) & 1 == 1
}

fn clear(set: &mut [u64], v: usize) {
    set[v / 64] &= !(1 << (v % 64));
}

/// Counts matchings by enumerating subsets of the edge multiset, each parallel
/// edge being a separate slot. Rejects graphs with more than `cap` slots.
pub fn matching_polynomial_bruteforce(
    g: &Multigraph,
    cap: u64,
) -> Result<MatchingPolynomial, PolyError> {
    let slots = g.edge_slots();
    if slots > cap {
        return Err(PolyError::SlotCapExceeded { slots, cap });
    }
    let slot_list: Vec<(usize, usize)> = g
        .edges()
        .flat_map(|(u, v, m)| std::iter::repeat_n((u, v), m as usize))
        .collect();
    let mut counts = vec![0u64; g.vertex_count() / 2 + 1];
    let mut used = vec![false; g.vertex_count()];
    subsets(&slot_list, 0, 0, &mut used, &mut counts);
    Ok(MatchingPolynomial::new(
        counts.into_iter().map(BigUint::from).collect(),
    ))
}

fn subsets(slots: &[(usize, usize)], i: usize, size: usize, used: &mut [bool], counts: &mut [u64]) {
    if i == slots.len() {
        counts[size] += 1;
        return;
    }
    subsets(slots, i + 1, size, used, counts);
    let (u, v) = slots[i];
    if !used[u] && !used[v] {
        used[u] = true;
        used[v] = true;
        subsets(slots, i + 1, size + 1, used, counts);
        used[u] = false;
        used[v] = false;
    }
}
