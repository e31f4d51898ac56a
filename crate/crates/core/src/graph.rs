//! Intersection graphs of interval collections.

use crate::interval::Collection;

/// Undirected simple graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    adjacency: Vec<Vec<usize>>,
}

impl IntersectionGraph {
    /// Builds a graph from an edge list; duplicate edges and loops are dropped.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for (a, b) in edges {
            if a != b {
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Self { adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, ns)| ns.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }
}

/// Sorted sweep: after ordering by left endpoint, interval `i` meets every
/// later interval whose left endpoint is at most `r(i)`.
pub fn build_intersection_graph(collection: &Collection) -> IntersectionGraph {
    build_intersection_graph_within(collection, 0.0)
}

/// As [`build_intersection_graph`], treating gaps of at most `tol` as contact.
pub fn build_intersection_graph_within(collection: &Collection, tol: f64) -> IntersectionGraph {
    let items = collection.items();
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by(|&a, &b| items[a].left().total_cmp(&items[b].left()));
    let mut edges = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        let reach = items[i].right() + tol;
        for &j in &order[pos + 1..] {
            if items[j].left() > reach {
                break;
            }
            edges.push((i, j));
        }
    }
    IntersectionGraph::from_edges(items.len(), edges)
}

/// Quadratic pairwise construction.
pub fn build_intersection_graph_naive(collection: &Collection, tol: f64) -> IntersectionGraph {
    let items = collection.items();
    let mut edges = Vec::new();
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if items[i].intersects_within(&items[j], tol) {
                edges.push((i, j));
            }
        }
    }
    IntersectionGraph::from_edges(items.len(), edges)
}
