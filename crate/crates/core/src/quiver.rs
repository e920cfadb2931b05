//! Quivers, paths, and linear relations between parallel paths.
//!
//! Vertices are 0-indexed internally. Paths compose left to right: the path
//! `a*c` means "follow a, then c", so its source is a's source and its
//! target is c's target.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub n: usize,
    pub arrows: Vec<Arrow>,
}

/// One summand of a relation: an integer coefficient times a composable
/// sequence of arrow indices (length >= 1 as parsed; admissibility pushes
/// it to >= 2 at build time).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTerm {
    pub coeff: i64,
    pub arrows: Vec<usize>,
}

/// A linear combination of parallel paths that is declared to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<RelationTerm>,
}

/// A path in the quiver: a start vertex plus a composable arrow sequence.
/// The empty sequence is the trivial path at `source`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            source: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.arrows
            .last()
            .map(|&a| q.arrows[a].target)
            .unwrap_or(self.source)
    }

    /// `self` then `other`; `None` when the endpoints do not match.
    pub fn compose(&self, other: &Path, q: &Quiver) -> Option<Path> {
        if self.target(q) != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            arrows,
        })
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", self.source + 1)
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrows[a].label.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

impl Quiver {
    pub fn arrow_by_label(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Builds a path from consecutive arrow indices; `None` when not composable.
    pub fn path(&self, arrows: &[usize]) -> Option<Path> {
        let first = *arrows.first()?;
        let mut p = Path {
            source: self.arrows[first].source,
            arrows: vec![first],
        };
        for &a in &arrows[1..] {
            if self.arrows[*p.arrows.last().unwrap()].target != self.arrows[a].source {
                return None;
            }
            p.arrows.push(a);
        }
        Some(p)
    }

    pub fn is_acyclic(&self) -> bool {
        self.longest_path_len().is_some()
    }

    /// Length of the longest path when the quiver is acyclic, else `None`.
    pub fn longest_path_len(&self) -> Option<usize> {
        // Kahn's algorithm; leftover vertices mean a cycle.
        let mut indeg = vec![0usize; self.n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut queue: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut dist = vec![0usize; self.n];
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for a in &self.arrows {
                if a.source == v {
                    dist[a.target] = dist[a.target].max(dist[v] + 1);
                    indeg[a.target] -= 1;
                    if indeg[a.target] == 0 {
                        queue.push(a.target);
                    }
                }
            }
        }
        if seen == self.n {
            Some(dist.into_iter().max().unwrap_or(0))
        } else {
            None
        }
    }

    /// All paths of length < `bound`, grouped nowhere in particular; the
    /// algebra builder sorts them into its own column order.
    pub fn paths_below(&self, bound: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.n).map(Path::trivial).collect();
        let mut frontier = out.clone();
        for _ in 1..bound {
            let mut next = Vec::new();
            for p in &frontier {
                let t = p.target(self);
                for (ai, a) in self.arrows.iter().enumerate() {
                    if a.source == t {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        next.push(Path {
                            source: p.source,
                            arrows,
                        });
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }
        out
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices;", self.n)?;
        for a in &self.arrows {
            write!(f, " {}: {} -> {}", a.label, a.source + 1, a.target + 1)?;
        }
        Ok(())
    }
}

/// The paper-style four-vertex test quiver used across the test suite:
/// a: 1->2, b: 1->3, c: 2->3, d: 3->4, with the relation a*c*d - b*d.
#[cfg(test)]
pub fn four_vertex_test_quiver() -> (Quiver, Vec<Relation>) {
    let q = Quiver {
        n: 4,
        arrows: vec![
            Arrow {
                label: "a".into(),
                source: 0,
                target: 1,
            },
            Arrow {
                label: "b".into(),
                source: 0,
                target: 2,
            },
            Arrow {
                label: "c".into(),
                source: 1,
                target: 2,
            },
            Arrow {
                label: "d".into(),
                source: 2,
                target: 3,
            },
        ],
    };
    let r = Relation {
        terms: vec![
            RelationTerm {
                coeff: 1,
                arrows: vec![0, 2, 3],
            },
            RelationTerm {
                coeff: -1,
                arrows: vec![1, 3],
            },
        ],
    };
    (q, vec![r])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_composition() {
        let (q, _) = four_vertex_test_quiver();
        let ac = q.path(&[0, 2]).unwrap();
        assert_eq!(ac.source, 0);
        assert_eq!(ac.target(&q), 2);
        assert_eq!(ac.display(&q), "a*c");
        assert!(q.path(&[2, 0]).is_none());
        let d = q.path(&[3]).unwrap();
        assert_eq!(ac.compose(&d, &q).unwrap().display(&q), "a*c*d");
        assert!(d.compose(&ac, &q).is_none());
        assert_eq!(Path::trivial(2).compose(&d, &q).unwrap(), d);
    }

    #[test]
    fn acyclicity_and_longest_path() {
        let (q, _) = four_vertex_test_quiver();
        assert_eq!(q.longest_path_len(), Some(3));
        let loop_q = Quiver {
            n: 1,
            arrows: vec![Arrow {
                label: "x".into(),
                source: 0,
                target: 0,
            }],
        };
        assert!(!loop_q.is_acyclic());
        let empty = Quiver {
            n: 3,
            arrows: vec![],
        };
        assert_eq!(empty.longest_path_len(), Some(0));
    }

    #[test]
    fn path_enumeration_counts() {
        let (q, _) = four_vertex_test_quiver();
        // e1..e4, a, b, c, d, a*c, b*d, c*d, a*c*d.
        let paths = q.paths_below(4);
        assert_eq!(paths.len(), 12);
        assert_eq!(paths.iter().filter(|p| p.is_empty()).count(), 4);
        assert_eq!(paths.iter().filter(|p| p.len() == 1).count(), 4);
        assert_eq!(paths.iter().filter(|p| p.len() == 2).count(), 3);
        assert_eq!(paths.iter().filter(|p| p.len() == 3).count(), 1);
        // Truncation below length 2 keeps only vertices and arrows.
        assert_eq!(q.paths_below(2).len(), 8);
        // A loop quiver is enumerable only because of the bound.
        let loop_q = Quiver {
            n: 1,
            arrows: vec![Arrow {
                label: "x".into(),
                source: 0,
                target: 0,
            }],
        };
        assert_eq!(loop_q.paths_below(3).len(), 3);
    }
}
