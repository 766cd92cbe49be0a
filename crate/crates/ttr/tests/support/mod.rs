//! Shared helpers for the acceptance suite: seeded generators and
//! independent reference implementations (event simulation, exhaustive
//! colorability / NAE checks, isomorphism-class enumeration).

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ttr::model::{BoundMatrix, Edge, PeriodicLabeling, Tree, VertexId};
use ttr::reductions::{NaeFormula, SimpleGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random labeled tree via a random parent-joining sequence.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Tree {
    assert!(n >= 1);
    if n == 1 {
        return Tree::new(1, &[]).unwrap();
    }
    if n == 2 {
        return Tree::new(2, &[(0, 1)]).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &seq)
}

/// Standard Prüfer decoding.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Tree {
    assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n];
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1 && !used[v]).unwrap();
        edges.push((leaf, s));
        used[leaf] = true;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1 && !used[v]).collect();
    edges.push((rest[0], rest[1]));
    Tree::new(n, &edges).unwrap()
}

pub fn random_labeling(rng: &mut ChaCha8Rng, tree: &Tree, delta: u32) -> PeriodicLabeling {
    tree.edges()
        .into_iter()
        .map(|e| (e, rng.gen_range(1..=delta)))
        .collect()
}

/// Random sparse bound matrix: values centered on the satisfiable range
/// `[distance, trivial]`, occasionally outside it to exercise preprocessing.
pub fn random_bounds(
    rng: &mut ChaCha8Rng,
    tree: &Tree,
    delta: u32,
    entries: usize,
) -> BoundMatrix {
    let n = tree.vertex_count();
    let mut bounds = BoundMatrix::all_trivial();
    if n < 2 {
        return bounds;
    }
    for _ in 0..entries {
        let s = rng.gen_range(0..n);
        let mut t = rng.gen_range(0..n);
        if s == t {
            t = (t + 1) % n;
        }
        let k = tree.distance(s, t).unwrap() as u64;
        let trivial = (k - 1) * delta as u64 + 1;
        let lo = k.saturating_sub(1).max(1);
        let hi = trivial + 1;
        let value = rng.gen_range(lo..=hi);
        bounds.set(s, t, value).unwrap();
        if rng.gen_bool(0.5) {
            bounds.set(t, s, value).unwrap();
        }
    }
    bounds
}

/// Independent duration oracle: walk the path, taking each edge at its
/// earliest periodic occurrence strictly after the current time.
pub fn event_sim_duration(
    tree: &Tree,
    labeling: &PeriodicLabeling,
    delta: u32,
    s: VertexId,
    t: VertexId,
) -> u64 {
    let path = tree.path(s, t).unwrap();
    let delta = delta as u64;
    let start = labeling
        .get(Edge::new(path[0], path[1]).unwrap())
        .unwrap() as u64;
    let mut current = start;
    for pair in path.windows(2).skip(1) {
        let label = labeling.get(Edge::new(pair[0], pair[1]).unwrap()).unwrap() as u64;
        let mut next = label;
        while next <= current {
            next += delta;
        }
        current = next;
    }
    current - start + 1
}

/// Rooted canonical code: children codes sorted and wrapped.
fn subtree_code(tree: &Tree, v: VertexId, parent: Option<VertexId>) -> String {
    let mut child_codes: Vec<String> = tree
        .neighbors(v)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| subtree_code(tree, w, Some(v)))
        .collect();
    child_codes.sort();
    format!("({})", child_codes.join(""))
}

/// Tree centers by repeated leaf removal.
fn centers(tree: &Tree) -> Vec<VertexId> {
    let n = tree.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            for &w in tree.neighbors(v) {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// Isomorphism-invariant canonical form.
pub fn canonical_tree_code(tree: &Tree) -> String {
    centers(tree)
        .into_iter()
        .map(|c| subtree_code(tree, c, None))
        .min()
        .unwrap()
}

/// One representative per unlabeled tree shape with up to `max_n` vertices.
pub fn tree_shapes(max_n: usize) -> Vec<Tree> {
    let mut seen = BTreeSet::new();
    let mut shapes = Vec::new();
    for n in 1..=max_n {
        if n <= 2 {
            let tree = if n == 1 {
                Tree::new(1, &[]).unwrap()
            } else {
                Tree::new(2, &[(0, 1)]).unwrap()
            };
            if seen.insert(canonical_tree_code(&tree)) {
                shapes.push(tree);
            }
            continue;
        }
        let mut seq = vec![0usize; n - 2];
        loop {
            let tree = prufer_decode(n, &seq);
            if seen.insert(canonical_tree_code(&tree)) {
                shapes.push(tree);
            }
            // Mixed-radix increment over [0, n)^{n-2}.
            let mut done = true;
            for digit in (0..seq.len()).rev() {
                if seq[digit] + 1 < n {
                    seq[digit] += 1;
                    seq[digit + 1..].fill(0);
                    done = false;
                    break;
                }
            }
            if done {
                break;
            }
        }
    }
    shapes
}

const FIVE: usize = 5;

fn edge_positions() -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for a in 0..FIVE {
        for b in a + 1..FIVE {
            pairs.push((a, b));
        }
    }
    pairs
}

fn permute_mask(mask: u16, perm: &[usize], positions: &[(usize, usize)]) -> u16 {
    let index: BTreeMap<(usize, usize), usize> = positions
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i))
        .collect();
    let mut out = 0u16;
    for (i, &(a, b)) in positions.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let (pa, pb) = (perm[a], perm[b]);
            let key = (pa.min(pb), pa.max(pb));
            out |= 1 << index[&key];
        }
    }
    out
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// One representative per isomorphism class of simple graphs on exactly
/// five vertices (34 classes).
pub fn graphs_on_five_vertices() -> Vec<SimpleGraph> {
    let positions = edge_positions();
    let perms = all_permutations(FIVE);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u16..(1 << positions.len()) {
        let canonical = perms
            .iter()
            .map(|p| permute_mask(mask, p, &positions))
            .min()
            .unwrap();
        if seen.insert(canonical) && canonical == mask {
            let edges: Vec<(usize, usize)> = positions
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            out.push(SimpleGraph::new(FIVE, &edges).unwrap());
        }
    }
    out
}

/// Exhaustive k-colorability check.
pub fn is_colorable(graph: &SimpleGraph, colors: u32) -> bool {
    let n = graph.vertex_count();
    let total = (colors as u64).pow(n as u32);
    'outer: for mut code in 0..total {
        let mut assignment = vec![0u32; n];
        for slot in assignment.iter_mut() {
            *slot = (code % colors as u64) as u32 + 1;
            code /= colors as u64;
        }
        for &(a, b) in graph.edges() {
            if assignment[a] == assignment[b] {
                continue 'outer;
            }
        }
        return true;
    }
    false
}

/// First NAE-satisfying assignment by 2^n enumeration, if any.
pub fn nae_satisfying_assignment(formula: &NaeFormula) -> Option<Vec<bool>> {
    let n = formula.num_vars();
    (0u32..1 << n)
        .map(|mask| (0..n).map(|v| mask >> v & 1 == 1).collect::<Vec<bool>>())
        .find(|assignment| formula.is_nae_satisfied(assignment).unwrap())
}

/// Every monotone formula with at most `max_vars` variables and at most two
/// clauses (clauses are ordered triples, repeats allowed; clause sets, not
/// sequences).
pub fn small_formulas(max_vars: usize) -> Vec<NaeFormula> {
    let mut out = Vec::new();
    for n in 1..=max_vars {
        let mut triples = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    triples.push([a, b, c]);
                }
            }
        }
        for (i, &t) in triples.iter().enumerate() {
            out.push(NaeFormula::new(n, vec![t]).unwrap());
            for &u in triples.iter().skip(i + 1) {
                out.push(NaeFormula::new(n, vec![t, u]).unwrap());
            }
        }
    }
    out
}

pub fn random_formula(rng: &mut ChaCha8Rng, max_vars: usize, max_clauses: usize) -> NaeFormula {
    let n = rng.gen_range(3..=max_vars);
    let m = rng.gen_range(1..=max_clauses);
    let clauses: Vec<[usize; 3]> = (0..m)
        .map(|_| {
            [
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            ]
        })
        .collect();
    NaeFormula::new(n, clauses).unwrap()
}

/// Diameter by double BFS over all sources (trees are small here).
pub fn diameter(tree: &Tree) -> usize {
    let n = tree.vertex_count();
    let mut best = 0;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in tree.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        best = best.max(*dist.iter().max().unwrap());
    }
    best
}

pub fn max_degree(tree: &Tree) -> usize {
    (0..tree.vertex_count())
        .map(|v| tree.degree(v))
        .max()
        .unwrap_or(0)
}
