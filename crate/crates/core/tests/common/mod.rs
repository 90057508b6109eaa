#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trifp::graph::Multigraph;
use trifp::star::{build_pcs, PcsSpec};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Builds a graph from 1-based edge pairs.
pub fn one_based(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::from_edges(n, edges.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
}

/// 11-vertex tree of stars and two triangles sharing the path 4-5-7-8;
/// its average triangle bias is negative.
pub fn negative_bias_graph() -> Multigraph {
    one_based(
        11,
        &[
            (1, 4), (2, 4), (3, 4), (4, 5), (5, 6), (5, 7),
            (6, 7), (7, 8), (8, 9), (8, 10), (8, 11),
        ],
    )
}

/// K5 on {1..5} with the triangle {5,6,7} hanging off vertex 5.
pub fn k5_with_triangle() -> Multigraph {
    let mut edges = Vec::new();
    for u in 1..=5 {
        for v in u + 1..=5 {
            edges.push((u, v));
        }
    }
    edges.extend([(5, 6), (5, 7), (6, 7)]);
    one_based(7, &edges)
}

/// The same with a second triangle {6,8,9} sharing only vertex 6.
pub fn k5_with_triangle_at_vertex() -> Multigraph {
    let g = k5_with_triangle();
    let edges = g.edges().map(|(u, v, _)| (u + 1, v + 1)).chain([(6, 8), (6, 9), (8, 9)]);
    one_based(9, &edges.collect::<Vec<_>>())
}

/// The same with a new vertex 8 on the edge {6,7}.
pub fn k5_with_triangle_at_edge() -> Multigraph {
    let g = k5_with_triangle();
    let edges = g.edges().map(|(u, v, _)| (u + 1, v + 1)).chain([(6, 8), (7, 8)]);
    one_based(8, &edges.collect::<Vec<_>>())
}

/// Four copies of G(1,1,{}) with their tadpole tips merged into one vertex.
pub fn four_stars_at_tadpole_tips() -> Multigraph {
    let star = build_pcs(&PcsSpec::new(1, 1, vec![]).unwrap());
    let tip = 3;
    let mut g = star.clone();
    for _ in 0..3 {
        g = g.glue(tip, &star, tip).unwrap();
    }
    g
}

/// Random multigraph on `n` vertices: each pair gets 0..=max_mult edges with
/// probability `p`, and each vertex a loop with probability `loop_p`.
pub fn random_multigraph<R: Rng>(rng: &mut R, n: usize, p: f64, max_mult: u64, loop_p: f64) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..n {
        if rng.random::<f64>() < loop_p {
            edges.push((u, u, 1));
        }
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v, rng.random_range(1..=max_mult)));
            }
        }
    }
    Multigraph::from_weighted_edges(n, edges).unwrap()
}

/// Random simple graph with every vertex of positive degree (a random spanning
/// tree plus extra edges), so it is connected.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra_p: f64) -> Multigraph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < extra_p {
                edges.push((u, v));
            }
        }
    }
    let g = Multigraph::from_edges(n, edges).unwrap();
    // collapse duplicates from the tree step
    Multigraph::from_edges(n, g.edges().map(|(u, v, _)| (u, v))).unwrap()
}

/// Triangles glued at vertices in a tree-like fashion: every edge lies in exactly one triangle.
pub fn random_cactus<R: Rng>(rng: &mut R, triangles: usize) -> Multigraph {
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut n = 3;
    for _ in 1..triangles {
        let at = rng.random_range(0..n);
        edges.extend([(at, n), (at, n + 1), (n, n + 1)]);
        n += 2;
    }
    Multigraph::from_edges(n, edges).unwrap()
}

/// Triangles joined by disjoint paths of length `>= 3`, each path attached to a
/// random vertex of a random earlier triangle; returns the graph and the triangle vertices.
pub fn random_separated_triangles<R: Rng>(rng: &mut R, triangles: usize) -> (Multigraph, Vec<usize>) {
    let mut edges = Vec::new();
    let mut tri_vertices = Vec::new();
    let mut n = 0;
    for t in 0..triangles {
        let base = n;
        edges.extend([(base, base + 1), (base + 1, base + 2), (base, base + 2)]);
        tri_vertices.extend([base, base + 1, base + 2]);
        n += 3;
        if t > 0 {
            let from = tri_vertices[rng.random_range(0..3 * t)];
            let to = base + rng.random_range(0..3);
            let len = rng.random_range(3..6);
            let mut prev = from;
            for _ in 0..len - 1 {
                edges.push((prev, n));
                prev = n;
                n += 1;
            }
            edges.push((prev, to));
        }
    }
    (Multigraph::from_edges(n, edges).unwrap(), tri_vertices)
}

/// Number of triangles, by enumerating vertex triples with multiplicity products.
pub fn brute_triangles(g: &Multigraph) -> u64 {
    let n = g.n();
    let mut total = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                total += g.adjacency(i, j) * g.adjacency(j, k) * g.adjacency(i, k);
            }
        }
    }
    total
}
