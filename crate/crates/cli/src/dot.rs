//! DOT export with provenance colouring.
//!
//! Vertices are coloured by label provenance: base vertices blue,
//! subdivision vertices green, copy vertices orange. Output is stable
//! across runs: vertices in index order, edges in stored order.

use std::io::Write;
use std::path::Path;

use extraconn_core::{Graph, VertexLabel};

fn provenance(label: VertexLabel) -> (&'static str, &'static str) {
    match label {
        VertexLabel::Base(_) => ("base", "#9ecae1"),
        VertexLabel::Sub(_, _) => ("sub", "#a1d99b"),
        VertexLabel::Copy { .. } => ("copy", "#fdae6b"),
    }
}

/// Renders the graph as a DOT document.
pub fn dot_string(g: &Graph) -> String {
    let mut out = String::from("graph {\n  node [style=filled];\n");
    for v in 0..g.vertex_count() as u32 {
        let label = g.label(v).expect("index in range");
        let (kind, color) = provenance(label);
        out.push_str(&format!(
            "  \"{label}\" [provenance={kind}, fillcolor=\"{color}\"];\n"
        ));
    }
    for &(u, v) in g.edges() {
        let lu = g.label(u).expect("index in range");
        let lv = g.label(v).expect("index in range");
        out.push_str(&format!("  \"{lu}\" -- \"{lv}\";\n"));
    }
    out.push_str("}\n");
    out
}

/// Writes [`dot_string`] to `path`, decorating I/O errors with the path.
pub fn export_dot(g: &Graph, path: &Path) -> std::io::Result<()> {
    let mut file = std::fs::File::create(path)
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    file.write_all(dot_string(g).as_bytes())
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}
