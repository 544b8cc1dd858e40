//! Canonical codes for multigraphs.
//!
//! Each connected component is labeled by individualization–refinement: color
//! refinement (weighted by edge multiplicity) splits the vertices, a vertex of
//! the first smallest non-singleton cell is individualized, and the search
//! recurses until the coloring is discrete. Every discrete leaf yields an
//! ordering of the vertices; the component code is the smallest packed upper
//! triangle of the reordered multiplicity matrix over all leaves. The code of a
//! graph is the sorted list of its component codes, so disconnected graphs
//! never pay for the symmetries between isomorphic components.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::Multigraph;

/// Byte string identifying an isomorphism class. Equal codes iff isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        if !s.len().is_multiple_of(2) {
            return None;
        }
        (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(s.get(i..i + 2)?, 16).ok())
            .collect::<Option<Vec<u8>>>()
            .map(CanonicalCode)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

pub fn canonical_code(g: &Multigraph) -> CanonicalCode {
    let mut parts: Vec<Vec<u8>> = g
        .component_vertex_sets()
        .iter()
        .map(|vs| component_code(&g.induced(vs)))
        .collect();
    parts.sort();
    let mut out = Vec::new();
    for p in parts {
        write_varint(&mut out, p.len() as u64);
        out.extend_from_slice(&p);
    }
    CanonicalCode(out)
}

pub(crate) fn connected_code(g: &Multigraph) -> CanonicalCode {
    canonical_code(g)
}

/// Vertex order realizing the canonical code of a connected graph:
/// `order[i]` is the vertex placed at position `i`.
pub fn canonical_order(g: &Multigraph) -> Vec<usize> {
    let mut search = Search::new(g);
    if g.vertex_count() <= 1 {
        return (0..g.vertex_count()).collect();
    }
    let colors = refine(g, vec![0; g.vertex_count()]);
    search.run(colors);
    search.best.map(|(_, order)| order).unwrap_or_default()
}

fn component_code(g: &Multigraph) -> Vec<u8> {
    let n = g.vertex_count();
    let max_mult = g.edges().map(|(_, _, m)| m).max().unwrap_or(0);
    let mut header = Vec::new();
    write_varint(&mut header, n as u64);
    write_varint(&mut header, max_mult as u64);
    if n <= 1 {
        return header;
    }
    let mut search = Search::new(g);
    let colors = refine(g, vec![0; n]);
    search.run(colors);
    header.extend(search.best.expect("at least one leaf").0);
    header
}

struct Search<'a> {
    g: &'a Multigraph,
    bits: u32,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Multigraph) -> Self {
        let max_mult = g.edges().map(|(_, _, m)| m).max().unwrap_or(0);
        Search {
            g,
            bits: 32 - max_mult.leading_zeros(),
            best: None,
        }
    }

    fn run(&mut self, colors: Vec<u32>) {
        let n = colors.len();
        let classes = colors.iter().copied().max().map_or(0, |c| c as usize + 1);
        if classes == n {
            let mut order = vec![0usize; n];
            for (v, &c) in colors.iter().enumerate() {
                order[c as usize] = v;
            }
            let code = self.encode(&order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        }
        let mut sizes = vec![0usize; classes];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..classes)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c))
            .expect("non-discrete coloring has a non-singleton cell") as u32;
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        for &v in &cell {
            let split: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| 2 * c + u32::from(c == target && u != v))
                .collect();
            self.run(refine(self.g, normalize(split)));
        }
    }

    fn encode(&self, order: &[usize]) -> Vec<u8> {
        let n = order.len();
        let mut out = Vec::with_capacity((n * n * self.bits as usize).div_ceil(16));
        let mut acc: u64 = 0;
        let mut filled = 0u32;
        for i in 0..n {
            for j in (i + 1)..n {
                let m = self.g.multiplicity(order[i], order[j]) as u64;
                acc = (acc << self.bits) | m;
                filled += self.bits;
                while filled >= 8 {
                    filled -= 8;
                    out.push((acc >> filled) as u8);
                    acc &= (1u64 << filled) - 1;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (8 - filled)) as u8);
        }
        out
    }
}

/// Ranks arbitrary color values to `0..k` preserving order.
fn normalize(colors: Vec<u32>) -> Vec<u32> {
    let mut distinct = colors.clone();
    distinct.sort_unstable();
    distinct.dedup();
    colors
        .iter()
        .map(|c| distinct.binary_search(c).unwrap() as u32)
        .collect()
}

/// Color refinement to the coarsest equitable refinement of `colors`.
fn refine(g: &Multigraph, mut colors: Vec<u32>) -> Vec<u32> {
    let n = g.vertex_count();
    let mut classes = colors.iter().copied().max().map_or(0, |c| c as usize + 1);
    loop {
        let mut sigs: Vec<(u32, Vec<(u32, u32)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(u32, u32)> = g
                    .neighbors(v)
                    .iter()
                    .map(|&(w, m)| (colors[w], m))
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let new_colors: Vec<u32> = sigs
            .drain(..)
            .map(|s| distinct.binary_search(&s).unwrap() as u32)
            .collect();
        let new_classes = distinct.len();
        colors = new_colors;
        if new_classes == classes {
            return colors;
        }
        classes = new_classes;
    }
}

fn write_varint(out: &mut Vec<u8>, mut x: u64) {
    loop {
        let byte = (x & 0x7f) as u8;
        x >>= 7;
        if x == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cycle(k: usize) -> Multigraph {
        Multigraph::from_pairs(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
    }

    fn petersen() -> Multigraph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        Multigraph::from_pairs(10, e).unwrap()
    }

    #[test]
    fn invariant_under_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [
            cycle(6),
            petersen(),
            Multigraph::new(4, [(0, 1, 2), (1, 2, 1), (2, 3, 3)]).unwrap(),
        ] {
            let code = g.canonical_code();
            for _ in 0..20 {
                let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
                perm.shuffle(&mut rng);
                assert_eq!(g.relabel(&perm).canonical_code(), code);
            }
        }
    }

    #[test]
    fn k22_is_c4() {
        let k22 = Multigraph::from_pairs(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(k22.canonical_code(), cycle(4).canonical_code());
    }

    #[test]
    fn distinguishes_multiplicity_and_structure() {
        let h2 = Multigraph::new(2, [(0, 1, 2)]).unwrap();
        let p2 = Multigraph::from_pairs(2, [(0, 1)]).unwrap();
        assert_ne!(h2.canonical_code(), p2.canonical_code());
        assert_ne!(
            cycle(6).canonical_code(),
            cycle(3).repeat(2).canonical_code()
        );
        // two cubic graphs on 6 vertices: K_{3,3} and the prism
        let k33 =
            Multigraph::from_pairs(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap();
        let prism = Multigraph::from_pairs(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_ne!(k33.canonical_code(), prism.canonical_code());
    }

    #[test]
    fn isolated_vertices_count() {
        assert_ne!(
            Multigraph::empty(1).canonical_code(),
            Multigraph::empty(2).canonical_code()
        );
        assert_eq!(
            Multigraph::empty(0).canonical_code().as_bytes(),
            &[] as &[u8]
        );
    }

    #[test]
    fn hex_round_trip() {
        let c = petersen().canonical_code();
        assert_eq!(CanonicalCode::from_hex(&c.to_hex()), Some(c));
        assert_eq!(CanonicalCode::from_hex("abc"), None);
    }

    #[test]
    fn canonical_relabeling_is_idempotent() {
        let g = petersen();
        let canon = |h: &Multigraph| {
            let order = canonical_order(h);
            let mut perm = vec![0; order.len()];
            for (pos, &v) in order.iter().enumerate() {
                perm[v] = pos;
            }
            h.relabel(&perm)
        };
        let once = canon(&g);
        assert_eq!(canon(&once), once);
        let mut perm: Vec<usize> = (0..10).rev().collect();
        perm.swap(2, 7);
        assert_eq!(canon(&g.relabel(&perm)), once);
    }
}
