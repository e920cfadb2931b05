//! Exploration of the set of quasi-hereditary orders of one algebra:
//! enumeration, the twist graph, and certified transposition paths
//! between any two quasi-hereditary orders.

use crate::algebra::Algebra;
use crate::perm::Perm;
use crate::qh::is_quasi_hereditary;
use crate::twist::twistable;
use rayon::prelude::*;
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;
use thiserror::Error;

/// Hard cap for exhaustive enumeration (8! = 40320 orders).
pub const MAX_ENUMERATION_VERTICES: usize = 8;

#[derive(Debug, Error)]
pub enum ExplorerError {
    #[error("enumeration over {n}! orders refused; at most {max} vertices supported")]
    TooManyVertices { n: usize, max: usize },
    #[error("order {order:?} is not quasi-hereditary")]
    NotQuasiHereditary { order: Vec<usize> },
    #[error("no twist path found between the given orders")]
    NoPathFound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Test all n! orders independently.
    Brute,
    /// Breadth-first search through twistable moves from the
    /// lexicographically first quasi-hereditary order.
    Bfs,
}

impl std::str::FromStr for Strategy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Strategy::Brute),
            "bfs" => Ok(Strategy::Bfs),
            _ => Err(format!("unknown strategy '{s}', expected brute or bfs")),
        }
    }
}

/// All quasi-hereditary orders, lexicographically sorted.
pub fn enumerate_qh(a: &Arc<Algebra>, strategy: Strategy) -> Result<Vec<Perm>, ExplorerError> {
    let n = a.n();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(ExplorerError::TooManyVertices {
            n,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    let mut found = match strategy {
        Strategy::Brute => Perm::all(n)
            .into_par_iter()
            .filter(|s| is_quasi_hereditary(a, s).quasi_hereditary)
            .collect::<Vec<_>>(),
        Strategy::Bfs => {
            let seed = Perm::all(n)
                .into_iter()
                .find(|s| is_quasi_hereditary(a, s).quasi_hereditary);
            let Some(seed) = seed else {
                return Ok(Vec::new());
            };
            let mut seen: HashSet<Vec<usize>> = HashSet::new();
            seen.insert(seed.one_line());
            let mut queue = VecDeque::from([seed.clone()]);
            let mut out = vec![seed];
            while let Some(s) = queue.pop_front() {
                for p in 0..n.saturating_sub(1) {
                    if !twistable(a, &s, p).twistable {
                        continue;
                    }
                    let t = s.twist(p);
                    if seen.insert(t.one_line()) {
                        out.push(t.clone());
                        queue.push_back(t);
                    }
                }
            }
            out
        }
    };
    found.sort();
    Ok(found)
}

/// The undirected graph on quasi-hereditary orders whose edges are
/// twistable adjacent transpositions. Edges carry the 0-indexed position
/// and are listed with the lexicographically smaller endpoint first.
#[derive(Clone, Debug)]
pub struct TwistGraph {
    pub nodes: Vec<Perm>,
    /// (node index, node index, position), sorted.
    pub edges: Vec<(usize, usize, usize)>,
}

pub fn twist_graph(a: &Arc<Algebra>, strategy: Strategy) -> Result<TwistGraph, ExplorerError> {
    let nodes = enumerate_qh(a, strategy)?;
    let index: HashMap<Vec<usize>, usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, s)| (s.one_line(), i))
        .collect();
    let mut edges = Vec::new();
    for (i, s) in nodes.iter().enumerate() {
        for p in 0..a.n().saturating_sub(1) {
            if !twistable(a, s, p).twistable {
                continue;
            }
            let t = s.twist(p);
            let j = *index
                .get(&t.one_line())
                .expect("twistable move lands on a quasi-hereditary order");
            if i < j {
                edges.push((i, j, p));
            }
        }
    }
    edges.sort_unstable();
    Ok(TwistGraph { nodes, edges })
}

/// Greedy decomposition of the passage from `from` to `to` into adjacent
/// transpositions: repeatedly swap the lowest position whose occupant
/// needs to move above its successor. Pure permutation combinatorics; the
/// word length always equals the inversion distance.
pub fn transposition_word(from: &Perm, to: &Perm) -> Vec<usize> {
    assert_eq!(from.n(), to.n());
    let n = from.n();
    let mut rho = from.clone();
    let mut word = Vec::with_capacity(from.inversion_distance(to));
    'outer: while rho != *to {
        for q in 0..n - 1 {
            let x = rho.vertex_at(q);
            let y = rho.vertex_at(q + 1);
            if to.position_of(x) > to.position_of(y) {
                word.push(q);
                rho = rho.twist(q);
                continue 'outer;
            }
        }
        unreachable!("a misplaced adjacent pair exists whenever rho != to");
    }
    word
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnectMethod {
    /// The greedy minimal word, certified stepwise.
    MinimalWord,
    /// Breadth-first search through the twist graph.
    Bfs,
}

#[derive(Clone, Debug)]
pub struct ConnectPath {
    /// 0-indexed positions in application order (first swap first).
    pub word: Vec<usize>,
    /// All orders along the way, `from` first and `to` last.
    pub intermediates: Vec<Perm>,
    pub method: ConnectMethod,
    /// Every order along the way was re-checked quasi-hereditary and
    /// every step re-checked twistable.
    pub certified: bool,
}

/// A certified path of twists between two quasi-hereditary orders. The
/// greedy minimal word is tried first; if any of its intermediate orders
/// failed certification, a breadth-first search over certified twists is
/// used instead.
pub fn connect(a: &Arc<Algebra>, from: &Perm, to: &Perm) -> Result<ConnectPath, ExplorerError> {
    for s in [from, to] {
        if !is_quasi_hereditary(a, s).quasi_hereditary {
            return Err(ExplorerError::NotQuasiHereditary {
                order: s.one_line(),
            });
        }
    }
    let word = transposition_word(from, to);
    if let Some(path) = certify(a, from, &word) {
        return Ok(path);
    }
    bfs_connect(a, from, to)
}

/// Replays `word` from `from`, checking quasi-heredity of every order and
/// twistability of every step.
fn certify(a: &Arc<Algebra>, from: &Perm, word: &[usize]) -> Option<ConnectPath> {
    let mut intermediates = vec![from.clone()];
    let mut cur = from.clone();
    for &p in word {
        if !twistable(a, &cur, p).twistable {
            return None;
        }
        cur = cur.twist(p);
        if !is_quasi_hereditary(a, &cur).quasi_hereditary {
            return None;
        }
        intermediates.push(cur.clone());
    }
    Some(ConnectPath {
        word: word.to_vec(),
        intermediates,
        method: ConnectMethod::MinimalWord,
        certified: true,
    })
}

fn bfs_connect(a: &Arc<Algebra>, from: &Perm, to: &Perm) -> Result<ConnectPath, ExplorerError> {
    let n = a.n();
    let mut prev: HashMap<Vec<usize>, (Vec<usize>, usize)> = HashMap::new();
    let mut queue = VecDeque::from([from.clone()]);
    let mut seen: HashSet<Vec<usize>> = HashSet::from([from.one_line()]);
    while let Some(s) = queue.pop_front() {
        if s == *to {
            let mut word_rev = Vec::new();
            let mut cur = to.one_line();
            while cur != from.one_line() {
                let (parent, p) = prev[&cur].clone();
                word_rev.push(p);
                cur = parent;
            }
            word_rev.reverse();
            return certify(a, from, &word_rev)
                .map(|mut path| {
                    path.method = ConnectMethod::Bfs;
                    path
                })
                .ok_or(ExplorerError::NoPathFound);
        }
        for p in 0..n.saturating_sub(1) {
            if !twistable(a, &s, p).twistable {
                continue;
            }
            let t = s.twist(p);
            if !is_quasi_hereditary(a, &t).quasi_hereditary {
                continue;
            }
            if seen.insert(t.one_line()) {
                prev.insert(t.one_line(), (s.one_line(), p));
                queue.push_back(t);
            }
        }
    }
    Err(ExplorerError::NoPathFound)
}

/// Summary of `connect` over every ordered pair of quasi-hereditary
/// orders.
#[derive(Clone, Debug)]
pub struct ConnectivityReport {
    pub orders: usize,
    pub pairs: usize,
    /// Pairs where the greedy word failed and BFS took over.
    pub fallbacks: usize,
    pub all_certified: bool,
    /// Every word had length = inversion distance of the pair.
    pub all_minimal: bool,
    pub max_word_len: usize,
}

pub fn verify_connectedness(a: &Arc<Algebra>) -> Result<ConnectivityReport, ExplorerError> {
    let orders = enumerate_qh(a, Strategy::Brute)?;
    let pairs: Vec<(usize, usize)> = (0..orders.len())
        .flat_map(|i| (0..orders.len()).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let results: Vec<(bool, bool, bool, usize)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let path = connect(a, &orders[i], &orders[j]).expect("pairs are connectable");
            (
                path.method == ConnectMethod::Bfs,
                path.certified,
                path.word.len() == orders[i].inversion_distance(&orders[j]),
                path.word.len(),
            )
        })
        .collect();
    Ok(ConnectivityReport {
        orders: orders.len(),
        pairs: pairs.len(),
        fallbacks: results.iter().filter(|r| r.0).count(),
        all_certified: results.iter().all(|r| r.1),
        all_minimal: results.iter().all(|r| r.2),
        max_word_len: results.iter().map(|r| r.3).max().unwrap_or(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::{linear_algebra, paper_algebra};

    fn perm(one_line: &[usize]) -> Perm {
        Perm::from_one_line(one_line).unwrap()
    }

    #[test]
    fn greedy_word_for_the_reversal_example() {
        let from = Perm::identity(4);
        let to = perm(&[3, 2, 1, 4]);
        let word = transposition_word(&from, &to);
        assert_eq!(word, vec![0, 1, 0]);
        let mut cur = from.clone();
        let mut seen = Vec::new();
        for &p in &word {
            cur = cur.twist(p);
            seen.push(cur.one_line());
        }
        assert_eq!(
            seen,
            vec![vec![2, 1, 3, 4], vec![3, 1, 2, 4], vec![3, 2, 1, 4]]
        );
        assert_eq!(word.len(), from.inversion_distance(&to));
    }

    #[test]
    fn greedy_word_is_always_minimal() {
        for from in Perm::all(4) {
            for to in Perm::all(4) {
                let word = transposition_word(&from, &to);
                assert_eq!(word.len(), from.inversion_distance(&to));
                let mut cur = from.clone();
                for &p in &word {
                    cur = cur.twist(p);
                }
                assert_eq!(cur, to);
            }
        }
    }

    #[test]
    fn brute_enumeration_census() {
        let a = paper_algebra();
        let qh = enumerate_qh(&a, Strategy::Brute).unwrap();
        assert_eq!(qh.len(), 16);
        // Lexicographically first and last.
        assert_eq!(qh[0].one_line(), vec![1, 2, 3, 4]);
        assert_eq!(qh[15].one_line(), vec![4, 3, 2, 1]);
    }

    #[test]
    fn bfs_agrees_with_brute() {
        let a = paper_algebra();
        let brute = enumerate_qh(&a, Strategy::Brute).unwrap();
        let bfs = enumerate_qh(&a, Strategy::Bfs).unwrap();
        assert_eq!(brute, bfs);
    }

    #[test]
    fn twist_graph_shape() {
        let a = paper_algebra();
        let g = twist_graph(&a, Strategy::Brute).unwrap();
        assert_eq!(g.nodes.len(), 16);
        // Twistability is mutual, so each edge appears once; the graph is
        // connected because BFS enumeration finds everything.
        assert!(!g.edges.is_empty());
        for &(i, j, p) in &g.edges {
            assert_eq!(g.nodes[i].twist(p), g.nodes[j]);
        }
    }

    #[test]
    fn connect_uses_minimal_words() {
        let a = paper_algebra();
        let from = Perm::identity(4);
        let to = perm(&[3, 2, 1, 4]);
        let path = connect(&a, &from, &to).unwrap();
        assert_eq!(path.method, ConnectMethod::MinimalWord);
        assert!(path.certified);
        assert_eq!(path.word, vec![0, 1, 0]);
        assert_eq!(path.intermediates.len(), 4);
        assert_eq!(path.intermediates[0], from);
        assert_eq!(path.intermediates[3], to);
    }

    #[test]
    fn connect_rejects_bad_endpoints() {
        let a = paper_algebra();
        let bad = perm(&[1, 2, 4, 3]);
        assert!(matches!(
            connect(&a, &Perm::identity(4), &bad),
            Err(ExplorerError::NotQuasiHereditary { .. })
        ));
    }

    #[test]
    fn hereditary_case_everything_connects() {
        let a = linear_algebra(3);
        let qh = enumerate_qh(&a, Strategy::Brute).unwrap();
        assert_eq!(qh.len(), 6);
        let report = verify_connectedness(&a).unwrap();
        assert_eq!(report.pairs, 30);
        assert_eq!(report.fallbacks, 0);
        assert!(report.all_certified);
        assert!(report.all_minimal);
    }

    #[test]
    fn enumeration_guard() {
        let a = linear_algebra(9);
        assert!(matches!(
            enumerate_qh(&a, Strategy::Brute),
            Err(ExplorerError::TooManyVertices { n: 9, max: 8 })
        ));
    }
}
