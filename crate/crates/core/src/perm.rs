//! Permutations of simple-module indices.
//!
//! A permutation assigns each vertex a position; vertex `i` comes before
//! vertex `j` exactly when `pos(i) < pos(j)`. Everything internal is
//! 0-indexed; one-line notation at the API boundary is 1-indexed, matching
//! the file format and reports.
//!
//! Adjacent transpositions act by left multiplication: `twist(p)` swaps the
//! two vertices occupying positions `p` and `p+1`. A word `(i_l, ..., i_1)`
//! multiplies out right to left, so the rightmost letter acts first.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("permutation is not a bijection on 1..={n}: {entries:?}")]
    NotABijection { n: usize, entries: Vec<usize> },
    #[error("transposition position {pos} out of range 1..={max}")]
    PositionOutOfRange { pos: usize, max: usize },
}

/// A permutation, stored as the 0-indexed position of each vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    pos: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            pos: (0..n).collect(),
        }
    }

    /// Parses 1-indexed one-line notation, e.g. `[2, 1, 3]`.
    pub fn from_one_line(entries: &[usize]) -> Result<Perm, PermError> {
        let n = entries.len();
        let mut seen = vec![false; n];
        for &e in entries {
            if e < 1 || e > n || seen[e - 1] {
                return Err(PermError::NotABijection {
                    n,
                    entries: entries.to_vec(),
                });
            }
            seen[e - 1] = true;
        }
        Ok(Perm {
            pos: entries.iter().map(|&e| e - 1).collect(),
        })
    }

    /// 1-indexed one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.pos.iter().map(|&p| p + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    /// 0-indexed position of vertex `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.pos[v]
    }

    /// Vertex sitting at 0-indexed position `p`.
    pub fn vertex_at(&self, p: usize) -> usize {
        self.pos
            .iter()
            .position(|&q| q == p)
            .expect("position in range")
    }

    /// Vertices in position order (the inverse permutation).
    pub fn by_position(&self) -> Vec<usize> {
        let mut v = vec![0; self.n()];
        for (vertex, &p) in self.pos.iter().enumerate() {
            v[p] = vertex;
        }
        v
    }

    /// The vertex one position after `v`, if any.
    pub fn successor(&self, v: usize) -> Option<usize> {
        let p = self.pos[v];
        if p + 1 < self.n() {
            Some(self.vertex_at(p + 1))
        } else {
            None
        }
    }

    /// Vertices at positions >= pos(v), sorted by vertex index.
    pub fn up_set(&self, v: usize) -> Vec<usize> {
        let p = self.pos[v];
        self.up_set_from(p)
    }

    /// Vertices at positions >= p, sorted by vertex index.
    pub fn up_set_from(&self, p: usize) -> Vec<usize> {
        (0..self.n()).filter(|&j| self.pos[j] >= p).collect()
    }

    /// Left multiplication by the adjacent transposition at 0-indexed
    /// position `p`: the vertices at positions `p`, `p+1` trade places.
    pub fn twist(&self, p: usize) -> Perm {
        assert!(p + 1 < self.n(), "transposition position out of range");
        let mut pos = self.pos.clone();
        for q in pos.iter_mut() {
            if *q == p {
                *q = p + 1;
            } else if *q == p + 1 {
                *q = p;
            }
        }
        Perm { pos }
    }

    /// Product of adjacent transpositions from a word of 0-indexed
    /// positions, rightmost letter applied first.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Perm, PermError> {
        let mut p = Perm::identity(n);
        for &w in word.iter().rev() {
            if w + 1 >= n {
                return Err(PermError::PositionOutOfRange {
                    pos: w + 1,
                    max: n.saturating_sub(1),
                });
            }
            p = p.twist(w);
        }
        Ok(p)
    }

    /// Applies a word on the left of `self`, rightmost letter first,
    /// returning every intermediate (including the final permutation).
    pub fn apply_word(&self, word: &[usize]) -> Vec<Perm> {
        let mut cur = self.clone();
        let mut out = Vec::with_capacity(word.len());
        for &w in word.iter().rev() {
            cur = cur.twist(w);
            out.push(cur.clone());
        }
        out
    }

    pub fn inverse(&self) -> Perm {
        Perm {
            pos: self.by_position(),
        }
    }

    /// Functional composition: (self . other)(v) = self(other(v)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm {
            pos: (0..self.n()).map(|v| self.pos[other.pos[v]]).collect(),
        }
    }

    /// Number of pairs ordered oppositely by `self` and `other`; this is the
    /// length of a shortest transposition word carrying one order to the other.
    pub fn inversion_distance(&self, other: &Perm) -> usize {
        assert_eq!(self.n(), other.n());
        let n = self.n();
        let mut count = 0;
        for x in 0..n {
            for y in x + 1..n {
                let a = self.pos[x] < self.pos[y];
                let b = other.pos[x] < other.pos[y];
                if a != b {
                    count += 1;
                }
            }
        }
        count
    }

    /// All permutations of n elements in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        loop {
            out.push(Perm { pos: cur.clone() });
            // next_permutation
            if n < 2 {
                break;
            }
            let Some(i) = (0..n - 1).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_line_round_trip() {
        let p = Perm::from_one_line(&[3, 1, 2, 4]).unwrap();
        assert_eq!(p.one_line(), vec![3, 1, 2, 4]);
        assert_eq!(p.position_of(0), 2);
        assert_eq!(p.vertex_at(0), 1);
        assert_eq!(p.by_position(), vec![1, 2, 0, 3]);
        assert!(Perm::from_one_line(&[1, 1, 3]).is_err());
        assert!(Perm::from_one_line(&[0, 1]).is_err());
        assert_eq!(Perm::from_one_line(&[]).unwrap().n(), 0);
    }

    #[test]
    fn twist_swaps_positions() {
        let e = Perm::identity(4);
        assert_eq!(e.twist(0).one_line(), vec![2, 1, 3, 4]);
        assert_eq!(e.twist(2).one_line(), vec![1, 2, 4, 3]);
        // Twist swaps whoever occupies the positions, not the labels.
        let p = Perm::from_one_line(&[3, 1, 2, 4]).unwrap();
        assert_eq!(p.twist(0).one_line(), vec![3, 2, 1, 4]);
    }

    #[test]
    fn words_multiply_rightmost_first() {
        // (1,2,1) as positions 0-indexed: (0,1,0).
        let p = Perm::from_word(4, &[0, 1, 0]).unwrap();
        assert_eq!(p.one_line(), vec![3, 2, 1, 4]);
        let p = Perm::from_word(4, &[0, 1, 2, 0, 1, 0]).unwrap();
        assert_eq!(p.one_line(), vec![4, 3, 2, 1]);
        // (2,1): first swap positions 1,2 of e, then positions 2,3 of the result.
        let p = Perm::from_word(4, &[1, 0]).unwrap();
        assert_eq!(p.one_line(), vec![3, 1, 2, 4]);
    }

    #[test]
    fn successor_and_up_set() {
        let p = Perm::from_one_line(&[2, 3, 1, 4]).unwrap();
        assert_eq!(p.successor(2), Some(0));
        assert_eq!(p.successor(3), None);
        assert_eq!(p.up_set(0), vec![0, 1, 3]);
        assert_eq!(p.up_set_from(0), vec![0, 1, 2, 3]);
    }

    #[test]
    fn all_perms_lex() {
        let all = Perm::all(3);
        let lines: Vec<Vec<usize>> = all.iter().map(|p| p.one_line()).collect();
        assert_eq!(
            lines,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1],
            ]
        );
        assert_eq!(Perm::all(5).len(), 120);
        assert_eq!(Perm::all(0).len(), 1);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn perm(n: usize) -> impl Strategy<Value = Perm> {
            Just(()).prop_perturb(move |_, mut rng| {
                let mut v: Vec<usize> = (1..=n).collect();
                for i in (1..n).rev() {
                    let j = (rng.next_u64() as usize) % (i + 1);
                    v.swap(i, j);
                }
                Perm::from_one_line(&v).unwrap()
            })
        }

        proptest! {
            #[test]
            fn inverse_composes_to_identity(p in perm(6)) {
                let inv = p.inverse();
                for v in 0..6 {
                    prop_assert_eq!(inv.position_of(p.position_of(v)), v);
                }
            }

            #[test]
            fn twist_is_involutive(p in perm(6), q in 0usize..5) {
                prop_assert_eq!(p.twist(q).twist(q), p);
            }

            #[test]
            fn inversion_distance_symmetric(a in perm(6), b in perm(6)) {
                prop_assert_eq!(a.inversion_distance(&b), b.inversion_distance(&a));
                prop_assert_eq!(a.inversion_distance(&a), 0);
            }
        }
    }
}
