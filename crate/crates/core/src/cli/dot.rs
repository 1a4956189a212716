//! Graphviz emitters with fixed node positions and ordering.

use std::fmt::Write;

use crate::coloring::{color_name, fixture_letter, Coloring, COLOR_NAMES};
use crate::prefixcode::{CodeTree, TreeColoring};
use crate::structure::{Graph, PointId, TriangularStructure};

fn font_for(fill: &str) -> &'static str {
    match fill {
        "black" | "blue" | "red" | "green" => "white",
        _ => "black",
    }
}

/// `x2 / 2` as a short decimal.
fn half(x2: i64) -> String {
    if x2 % 2 == 0 {
        (x2 / 2).to_string()
    } else {
        let sign = if x2 < 0 { "-" } else { "" };
        format!("{sign}{}.5", x2.abs() / 2)
    }
}

/// Pinned position: apex at the origin, row `r` at `y = -r`, columns
/// centered on `x = 0` one unit apart.
fn position(order: u32, p: PointId) -> String {
    match p {
        PointId::Apex => "0,0!".to_owned(),
        PointId::RowCol { row, col } => {
            let x2 = 2 * i64::from(col) - i64::from(order) - 1;
            format!("{},{}!", half(x2), -i64::from(row))
        }
    }
}

pub struct StructureDotOptions<'a> {
    pub coloring: Option<&'a Coloring>,
    pub color_names: &'a [String],
    /// Use the order-4 fixture letters as node labels.
    pub fixture_letters: bool,
}

/// Undirected DOT for a structure graph. Node ids are point labels.
pub fn structure_dot(s: &TriangularStructure, g: &Graph, opts: &StructureDotOptions<'_>) -> String {
    let mut out = String::new();
    let mode = g.mode().unwrap_or_default().as_str();
    writeln!(out, "graph triangular_{}_{} {{", s.order(), mode).unwrap();
    writeln!(out, "  layout=neato;").unwrap();
    writeln!(out, "  node [shape=circle, fixedsize=true, width=0.45, fontsize=10];").unwrap();
    for (v, &p) in s.points().iter().enumerate() {
        let label = match fixture_letter(p).filter(|_| opts.fixture_letters) {
            Some(letter) => letter.to_string(),
            None => p.to_string(),
        };
        write!(out, "  \"{p}\" [label=\"{label}\", pos=\"{}\"", position(s.order(), p)).unwrap();
        if let Some(c) = opts.coloring {
            let k = c.color(v);
            let name = opts
                .color_names
                .get(k as usize)
                .cloned()
                .unwrap_or_else(|| color_name(k).into_owned());
            if COLOR_NAMES.contains(&name.as_str()) {
                write!(
                    out,
                    ", style=filled, fillcolor=\"{name}\", fontcolor=\"{}\"",
                    font_for(&name)
                )
                .unwrap();
            } else {
                write!(out, ", style=filled, fillcolor=\"white\", xlabel=\"{name}\"").unwrap();
            }
        }
        out.push_str("];\n");
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  \"{}\" -- \"{}\";", s.points()[u], s.points()[v]).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Left-to-right DOT for a code tree; edges carry their bit, labeled
/// leaves show `C1`, `C2`, ... and their codeword.
pub fn tree_dot(t: &CodeTree, colors: Option<&TreeColoring>) -> String {
    let mut out = String::new();
    out.push_str("digraph code_tree {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=circle, fontsize=10];\n");
    let order = t.preorder();
    for &id in &order {
        let node = t.node(id);
        let name = node.name();
        let label = match node.label() {
            Some(l) => format!("{name}\\nC{} = {}", l + 1, t.words()[l]),
            None => name.clone(),
        };
        write!(out, "  \"{name}\" [label=\"{label}\"").unwrap();
        if let Some(colors) = colors {
            let fill = colors.color(id).name();
            write!(
                out,
                ", style=filled, fillcolor=\"{fill}\", fontcolor=\"{}\"",
                font_for(fill)
            )
            .unwrap();
        }
        out.push_str("];\n");
    }
    for &id in &order {
        let node = t.node(id);
        for bit in [false, true] {
            if let Some(child) = node.child(bit) {
                writeln!(
                    out,
                    "  \"{}\" -> \"{}\" [label=\"{}\"];",
                    node.name(),
                    t.node(child).name(),
                    u8::from(bit)
                )
                .unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}
