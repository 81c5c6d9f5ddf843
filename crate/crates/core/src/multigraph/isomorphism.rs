//! Backtracking isomorphism test for small multigraphs.

use super::Multigraph;

/// Per-vertex invariant: loop count, sorted neighbour multiplicities, and the
/// number of vertices at each BFS distance.
type VertexInvariant = (usize, Vec<usize>, Vec<usize>);

struct Prepared {
    mult: Vec<Vec<usize>>,
    invariants: Vec<VertexInvariant>,
}

fn prepare(g: &Multigraph) -> Prepared {
    let n = g.vertex_count();
    let mut mult = vec![vec![0usize; n]; n];
    for &(u, v) in g.edges() {
        mult[u - 1][v - 1] += 1;
        if u != v {
            mult[v - 1][u - 1] += 1;
        }
    }
    let invariants = (0..n)
        .map(|v| {
            let mut nbr: Vec<usize> = (0..n).filter(|&w| w != v && mult[v][w] > 0).map(|w| mult[v][w]).collect();
            nbr.sort_unstable();
            (mult[v][v], nbr, distance_profile(&mult, v))
        })
        .collect();
    Prepared { mult, invariants }
}

fn distance_profile(mult: &[Vec<usize>], start: usize) -> Vec<usize> {
    let n = mult.len();
    let mut dist = vec![usize::MAX; n];
    dist[start] = 0;
    let mut queue = std::collections::VecDeque::from([start]);
    let mut profile = vec![0usize; n];
    while let Some(x) = queue.pop_front() {
        profile[dist[x]] += 1;
        for y in 0..n {
            if mult[x][y] > 0 && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    while profile.last() == Some(&0) {
        profile.pop();
    }
    profile
}

/// Isomorphism-invariant fingerprint: sorted vertex invariants plus the edge count.
pub(crate) fn fingerprint(g: &Multigraph) -> (usize, usize, Vec<VertexInvariant>) {
    let mut inv = prepare(g).invariants;
    inv.sort();
    (g.vertex_count(), g.edge_count(), inv)
}

/// A vertex bijection `perm` with `perm[v - 1]` the image of `v`, if one exists
/// that maps edge multiplicities of `g1` onto those of `g2`.
pub fn find_isomorphism(g1: &Multigraph, g2: &Multigraph) -> Option<Vec<usize>> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let a = prepare(g1);
    let b = prepare(g2);
    let mut sa = a.invariants.clone();
    let mut sb = b.invariants.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let n = g1.vertex_count();
    let order = search_order(&a.mult);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(&a, &b, &order, 0, &mut image, &mut used) {
        Some(image.into_iter().map(|w| w + 1).collect())
    } else {
        None
    }
}

pub fn is_isomorphic(g1: &Multigraph, g2: &Multigraph) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// BFS order from each unvisited vertex, so most vertices have a mapped neighbour
/// by the time they are assigned.
fn search_order(mult: &[Vec<usize>]) -> Vec<usize> {
    let n = mult.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for y in 0..n {
                if mult[x][y] > 0 && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    order
}

fn extend(a: &Prepared, b: &Prepared, order: &[usize], depth: usize, image: &mut [usize], used: &mut [bool]) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let n = image.len();
    for w in 0..n {
        if used[w] || a.invariants[v] != b.invariants[w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| a.mult[v][u] == b.mult[w][image[u]]);
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(a, b, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
        image[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn isomorphism_maps_edges_onto_edges() {
        let cube = gallery::cube();
        let shuffled = cube.relabeled(&[5, 3, 8, 1, 2, 7, 4, 6]).unwrap();
        let perm = find_isomorphism(&cube, &shuffled).unwrap();
        for u in 1..=8 {
            for v in 1..=8 {
                assert_eq!(cube.multiplicity(u, v), shuffled.multiplicity(perm[u - 1], perm[v - 1]));
            }
        }
    }

    #[test]
    fn distinguishes_prism_from_k33() {
        let prism = gallery::prism();
        let k33 =
            Multigraph::from_edge_list(6, &[(1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6)])
                .unwrap();
        assert!(!is_isomorphic(&prism, &k33));
        assert!(is_isomorphic(&prism, &prism.relabeled(&[6, 5, 4, 3, 2, 1]).unwrap()));
    }

    #[test]
    fn multiplicities_matter() {
        let theta = gallery::theta();
        let dumbbell = gallery::dumbbell();
        assert!(!is_isomorphic(&theta, &dumbbell));
    }
}
