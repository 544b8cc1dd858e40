use num_bigint::BigUint;

use super::engine::matching_polynomial;
use super::PolyError;
use crate::graph::Multigraph;

/// `perm_m(A)`: the sum of the permanents of all `m × m` submatrices of `A`,
/// computed as the number of `m`-matchings of the bipartite multigraph whose
/// biadjacency matrix is `A`.
pub fn perm_m(a: &[Vec<u32>], m: usize) -> Result<BigUint, PolyError> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    if a.iter().any(|row| row.len() != cols) {
        return Err(PolyError::RaggedMatrix);
    }
    let max = rows.min(cols);
    if m == 0 || m > max {
        return Err(PolyError::MatchingSizeOutOfRange { m, max });
    }
    let edges = a.iter().enumerate().flat_map(|(i, row)| {
        row.iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(move |(j, &x)| (i, rows + j, x))
    });
    let g = Multigraph::new(rows + cols, edges).expect("biadjacency edges are valid");
    Ok(matching_polynomial(&g).coeff(m))
}

/// Biadjacency matrix of a bipartite multigraph: rows are the vertices of the
/// first color class in increasing order, columns those of the second. Uses the
/// stored bipartition if present, otherwise a BFS two-coloring. `None` if the
/// graph is not bipartite.
pub fn biadjacency(g: &Multigraph) -> Option<Vec<Vec<u32>>> {
    let colors = match g.bipartition() {
        Some(c) => c.to_vec(),
        None => g.two_coloring()?,
    };
    let left: Vec<usize> = (0..g.vertex_count()).filter(|&v| !colors[v]).collect();
    let right: Vec<usize> = (0..g.vertex_count()).filter(|&v| colors[v]).collect();
    Some(
        left.iter()
            .map(|&u| right.iter().map(|&v| g.multiplicity(u, v)).collect())
            .collect(),
    )
}
