//! Deterministic DOT output. Nodes are emitted in order position (or
//! enumeration) order and edges are pre-sorted, so equal inputs give
//! byte-equal graphs.

use crate::explorer::TwistGraph;
use crate::twist::Biquiver;
use std::fmt::Write as _;

fn dims(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(|d| d.to_string()).collect();
    format!("({})", inner.join(","))
}

/// Order diagram: one box per position holding the standard module's
/// dimension vector; solid arrows mark nonzero Ext to the next position,
/// dotted arrows nonzero Hom.
pub fn biquiver_dot(bq: &Biquiver) -> String {
    let mut out = String::from("digraph biquiver {\n  rankdir=LR;\n  node [shape=box];\n");
    for (p, v) in bq.vertex_by_position.iter().enumerate() {
        let _ = writeln!(
            out,
            "  p{} [label=\"{}: Delta({}) {}\"];",
            p + 1,
            p + 1,
            v,
            dims(&bq.standard_dims_by_position[p]),
        );
    }
    for iv in &bq.invariants {
        let p = iv.position + 1;
        if iv.ext != 0 {
            let _ = writeln!(out, "  p{} -> p{} [style=solid];", p, p + 1);
        }
        if iv.hom != 0 {
            let _ = writeln!(out, "  p{} -> p{} [style=dotted];", p, p + 1);
        }
    }
    out.push_str("}\n");
    out
}

/// Undirected twist graph: nodes are quasi-hereditary orders in one-line
/// notation, edges are certified twists labeled by their 1-based position.
pub fn twist_graph_dot(g: &TwistGraph) -> String {
    let mut out = String::from("graph twists {\n  node [shape=box];\n");
    for (i, s) in g.nodes.iter().enumerate() {
        let one: Vec<String> = s.one_line().iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "  n{} [label=\"{}\"];", i, one.join(","));
    }
    for &(i, j, p) in &g.edges {
        let _ = writeln!(out, "  n{} -- n{} [label=\"{}\"];", i, j, p + 1);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::{linear_algebra, paper_algebra};
    use crate::explorer::{twist_graph, Strategy};
    use crate::perm::Perm;
    use crate::twist::biquiver;

    #[test]
    fn biquiver_dot_for_the_natural_order() {
        let a = paper_algebra();
        let got = biquiver_dot(&biquiver(&a, &Perm::identity(4)));
        let want = concat!(
            "digraph biquiver {\n",
            "  rankdir=LR;\n",
            "  node [shape=box];\n",
            "  p1 [label=\"1: Delta(1) (1,0,0,0)\"];\n",
            "  p2 [label=\"2: Delta(2) (0,1,0,0)\"];\n",
            "  p3 [label=\"3: Delta(3) (0,0,1,0)\"];\n",
            "  p4 [label=\"4: Delta(4) (0,0,0,1)\"];\n",
            "  p1 -> p2 [style=solid];\n",
            "  p2 -> p3 [style=solid];\n",
            "  p3 -> p4 [style=solid];\n",
            "}\n",
        );
        assert_eq!(got, want);
    }

    #[test]
    fn twist_graph_dot_for_the_two_vertex_line() {
        let a = linear_algebra(2);
        let got = twist_graph_dot(&twist_graph(&a, Strategy::Brute).unwrap());
        let want = concat!(
            "graph twists {\n",
            "  node [shape=box];\n",
            "  n0 [label=\"1,2\"];\n",
            "  n1 [label=\"2,1\"];\n",
            "  n0 -- n1 [label=\"1\"];\n",
            "}\n",
        );
        assert_eq!(got, want);
    }

    #[test]
    fn dot_is_deterministic() {
        let a = paper_algebra();
        let g1 = twist_graph_dot(&twist_graph(&a, Strategy::Brute).unwrap());
        let g2 = twist_graph_dot(&twist_graph(&a, Strategy::Bfs).unwrap());
        assert_eq!(g1, g2);
        assert_eq!(
            g1.matches(" -- ").count(),
            twist_graph(&a, Strategy::Brute).unwrap().edges.len()
        );
    }
}
