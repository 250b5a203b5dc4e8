//! Graphviz output: one fill color per part, certificate hubs double-circled.

use std::fmt::Write;

use crate::certificate::Certificate;
use crate::graph::Graph;
use crate::partition::Partition;

const PALETTE: [&str; 8] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
];

pub fn emit_dot(g: &Graph, p: &Partition, certificate: Option<&Certificate>) -> String {
    let hubs = certificate.map(Certificate::hubs).unwrap_or_default();
    let mut out = String::from("graph partition {\n  node [style=filled, shape=circle];\n");
    for (i, part) in p.parts().iter().enumerate() {
        writeln!(out, "  subgraph part{i} {{").unwrap();
        for v in part.iter() {
            let shape = if hubs.contains(&v) { ", shape=doublecircle" } else { "" };
            writeln!(out, "    {v} [fillcolor=\"{}\"{shape}];", PALETTE[i % PALETTE.len()]).unwrap();
        }
        out.push_str("  }\n");
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
