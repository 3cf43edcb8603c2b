//! Named graph families with a fixed labelling.
//!
//! Labellings:
//! - `path(n)`: edges `i ~ i+1`.
//! - `cycle(n)`: the path plus `n-1 ~ 0`.
//! - `complete_bipartite(m, n)`: parts `0..m` and `m..m+n`.
//! - `star(n)`: `K_{1,n-1}` with centre `0`.
//! - `spider(t, s)`: centre `0`, subdivision vertices `1..=t`, their leaves
//!   `t+1..=2t` (`i ~ t+i`), and pendant leaves `2t+1..=2t+s`.
//! - `complete_minus_edge(n)`: `K_n` without the edge `0 ~ 1`.
//! - `petersen()`: outer cycle `0..5`, spokes `i ~ i+5`, inner pentagram `5+i ~ 5+(i+2)%5`.

use crate::graph::{Graph, GraphError};

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph, GraphError> {
    Graph::from_edges(n, edges)
}

/// Path on `n` vertices. Panics for `n > 64`; see [`try_path`].
pub fn path(n: usize) -> Graph {
    try_path(n).expect("path order within range")
}

pub fn try_path(n: usize) -> Result<Graph, GraphError> {
    build(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidFamily(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Complete graph. Panics for `n > 64`; see [`try_complete`].
pub fn complete(n: usize) -> Graph {
    try_complete(n).expect("complete graph order within range")
}

pub fn try_complete(n: usize) -> Result<Graph, GraphError> {
    build(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j))))
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    build(m + n, (0..m).flat_map(|i| (m..m + n).map(move |j| (i, j))))
}

pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Ok(Graph::null());
    }
    complete_bipartite(1, n - 1)
}

/// A star with `t + s` edges, `t` of them subdivided once.
pub fn spider(t: usize, s: usize) -> Result<Graph, GraphError> {
    let n = 1 + 2 * t + s;
    let legs = (1..=t).flat_map(|i| [(0, i), (i, t + i)]);
    let leaves = (2 * t + 1..n).map(|u| (0, u));
    build(n, legs.chain(leaves))
}

pub fn complete_minus_edge(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidFamily(format!(
            "K_n - e needs n >= 2, got {n}"
        )));
    }
    build(
        n,
        (0..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .filter(|&e| e != (0, 1)),
    )
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    build(10, outer.chain(spokes).chain(inner)).expect("petersen")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_degrees() {
        let sp = spider(3, 2).unwrap();
        assert_eq!(sp.n(), 9);
        assert_eq!(sp.max_degree(), 5);
        assert_eq!(sp.edge_count(), 8);
        assert_eq!(star(6).unwrap(), complete_bipartite(1, 5).unwrap());
        assert_eq!(petersen().regular_degree(), Some(3));
        assert_eq!(complete_minus_edge(5).unwrap().edge_count(), 9);
        assert!(cycle(2).is_err());
        assert!(try_complete(65).is_err());
        assert_eq!(star(1).unwrap().n(), 1);
    }

    #[test]
    fn complement_of_k_minus_e() {
        let g = complete_minus_edge(5).unwrap().complement();
        assert_eq!(g, Graph::from_edges(5, [(0, 1)]).unwrap());
    }
}
