//! Graphviz output for Auslander-Reiten quivers.
//!
//! Template, byte for byte (`I` is the member index):
//!
//! ```text
//! digraph ar_quiver {
//!   rankdir=LR;
//!   node [shape=box];
//!   nI [label="LABEL\n(d1,d2,...)"];
//!   nI -> nJ [label="(a,b)"];
//!   nI -> nJ [style=dashed, constraint=false];
//! }
//! ```
//!
//! Nodes come in catalogue order, then irreducible arrows in `(source,
//! target)` order, then one dashed edge from each non-projective member to
//! its translate.

use std::fmt::Write as _;

use raddeg_core::ar::ArQuiver;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn ar_quiver_dot(q: &ArQuiver) -> String {
    let mut out = String::from("digraph ar_quiver {\n  rankdir=LR;\n  node [shape=box];\n");
    for (i, (label, dv)) in q.labels.iter().zip(&q.dim_vectors).enumerate() {
        let dv: Vec<String> = dv.iter().map(usize::to_string).collect();
        writeln!(out, "  n{i} [label=\"{}\\n({})\"];", escape(label), dv.join(",")).unwrap();
    }
    for a in &q.arrows {
        writeln!(out, "  n{} -> n{} [label=\"({},{})\"];", a.source, a.target, a.a, a.b).unwrap();
    }
    for (i, t) in q.tau.iter().enumerate() {
        if let Some(j) = t {
            writeln!(out, "  n{i} -> n{j} [style=dashed, constraint=false];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
