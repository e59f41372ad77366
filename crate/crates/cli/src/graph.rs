//! DOT and TikZ export. Nodes sit in rows (one DOT rank per row) and, for
//! TikZ, on the staircase grid `(column, -row)`.

use std::fmt::Write;

use kdirac_core::bgg::BggDiagram;
use kdirac_core::pushdown::{ComplexDescriptor, VertexImage};
use kdirac_core::{HasseDiagram, HasseVertex, ParabolicMarking, RootKind, RootLabel};

use crate::text;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeStyle {
    Single,
    Double,
    Dotted,
}

pub struct Node {
    pub id: String,
    pub label: String,
    pub tex: String,
    pub row: usize,
    pub col: usize,
}

pub struct Edge {
    pub from: String,
    pub to: String,
    pub label: Option<(String, String)>,
    pub style: EdgeStyle,
}

pub struct Graph {
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
}

fn node_id(v: HasseVertex) -> String {
    format!("A{}_{}", v.row(), v.col())
}

fn tex_name(prefix: char, v: HasseVertex) -> String {
    let (i, j) = (v.row(), v.col());
    if i < 10 && j < 10 {
        format!("{prefix}_{{{i}{j}}}")
    } else {
        format!("{prefix}_{{{i},{j}}}")
    }
}

fn tex_root(r: RootLabel) -> String {
    let name = match r.kind {
        RootKind::Alpha => "\\alpha",
        RootKind::Beta => "\\beta",
    };
    format!("{name}_{{{},{}}}", r.i, r.j)
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl Graph {
    pub fn hasse(d: &HasseDiagram) -> Self {
        let nodes = d
            .vertices()
            .iter()
            .map(|&v| Node {
                id: node_id(v),
                label: v.name(),
                tex: format!("${}$", tex_name('A', v)),
                row: v.row(),
                col: v.col(),
            })
            .collect();
        let edges = d
            .edges()
            .iter()
            .map(|e| Edge {
                from: node_id(e.source),
                to: node_id(e.target),
                label: Some((e.label.to_string(), format!("${}$", tex_root(e.label)))),
                style: EdgeStyle::Single,
            })
            .collect();
        Graph { nodes, edges }
    }

    pub fn bgg(d: &BggDiagram, half: bool) -> Self {
        let mut g = Self::hasse(d.hasse());
        for node in &mut g.nodes {
            let v = d
                .hasse()
                .vertices()
                .iter()
                .copied()
                .find(|&v| node_id(v) == node.id)
                .expect("node from this diagram");
            let w = d.weight(v).render(ParabolicMarking::Q, half);
            node.label = format!("{} {w}", v.name());
            node.tex = format!("${w}$");
        }
        g
    }

    pub fn pushdown(d: &BggDiagram, images: &[VertexImage], half: bool) -> Self {
        let mut g = Self::hasse(d.hasse());
        let dead = |id: &str| {
            images
                .iter()
                .any(|img| node_id(img.vertex) == id && img.image.degree().is_none())
        };
        for node in &mut g.nodes {
            let img = images
                .iter()
                .find(|img| node_id(img.vertex) == node.id)
                .expect("one image per vertex");
            let cell = text::image_cell(img, half);
            node.label = format!("{} {cell}", img.vertex.name());
            node.tex = match (img.image.weight(), img.image.degree()) {
                (Some(w), Some(deg)) => format!("${}_{deg}$", w.render(ParabolicMarking::P, half)),
                _ => "$\\emptyset$".to_string(),
            };
        }
        for e in &mut g.edges {
            e.label = None;
            if dead(&e.from) || dead(&e.to) {
                e.style = EdgeStyle::Dotted;
            }
        }
        g
    }

    pub fn complex(c: &ComplexDescriptor) -> Self {
        let nodes = c
            .terms
            .iter()
            .flat_map(|t| &t.entries)
            .map(|e| {
                let m = &e.descriptor;
                let tex = match e.vertex.row() {
                    0 => "$\\mathrm{Sp}_-$".to_string(),
                    1 => format!("$\\mathbb{{C}}^{{{}}}\\otimes\\mathrm{{Sp}}_+$", c.k),
                    _ => format!("${}$", tex_name('U', e.vertex)),
                };
                Node {
                    id: node_id(e.vertex),
                    label: format!("{} dim {}", text::term_name(e.vertex, c.k), m.dim),
                    tex,
                    row: e.vertex.row(),
                    col: e.vertex.col(),
                }
            })
            .collect();
        let edges = c
            .arrows
            .iter()
            .map(|a| Edge {
                from: node_id(a.from),
                to: node_id(a.to),
                label: None,
                style: if a.order == 2 { EdgeStyle::Double } else { EdgeStyle::Single },
            })
            .collect();
        Graph { nodes, edges }
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {name} {{").unwrap();
        writeln!(out, "  rankdir=TB;").unwrap();
        writeln!(out, "  node [shape=plaintext];").unwrap();
        for n in &self.nodes {
            writeln!(out, "  {} [label=\"{}\"];", n.id, escape_dot(&n.label)).unwrap();
        }
        let max_row = self.nodes.iter().map(|n| n.row).max().unwrap_or(0);
        for row in 0..=max_row {
            let ids: Vec<_> = self.nodes.iter().filter(|n| n.row == row).map(|n| n.id.as_str()).collect();
            if !ids.is_empty() {
                writeln!(out, "  {{ rank=same; {}; }}", ids.join("; ")).unwrap();
            }
        }
        for e in &self.edges {
            let mut attrs = Vec::new();
            if let Some((label, _)) = &e.label {
                attrs.push(format!("label=\"{}\"", escape_dot(label)));
            }
            match e.style {
                EdgeStyle::Single => {}
                EdgeStyle::Double => attrs.push("color=\"black:black\"".to_string()),
                EdgeStyle::Dotted => attrs.push("style=dotted".to_string()),
            }
            if attrs.is_empty() {
                writeln!(out, "  {} -> {};", e.from, e.to).unwrap();
            } else {
                writeln!(out, "  {} -> {} [{}];", e.from, e.to, attrs.join(", ")).unwrap();
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_tikz(&self) -> String {
        let mut out = String::new();
        out.push_str("\\documentclass[tikz]{standalone}\n\\begin{document}\n");
        out.push_str("\\begin{tikzpicture}[x=2.2cm, y=1.3cm, every node/.style={font=\\small}]\n");
        for n in &self.nodes {
            writeln!(out, "  \\node ({}) at ({}, -{}) {{{}}};", n.id, n.col, n.row, n.tex).unwrap();
        }
        for e in &self.edges {
            let style = match e.style {
                EdgeStyle::Single => "->",
                EdgeStyle::Double => "->, double",
                EdgeStyle::Dotted => "->, dotted",
            };
            match &e.label {
                Some((_, tex)) => writeln!(
                    out,
                    "  \\draw[{style}] ({}) -- node[midway, fill=white, inner sep=1pt, font=\\scriptsize] {{{tex}}} ({});",
                    e.from, e.to
                )
                .unwrap(),
                None => writeln!(out, "  \\draw[{style}] ({}) -- ({});", e.from, e.to).unwrap(),
            }
        }
        out.push_str("\\end{tikzpicture}\n\\end{document}\n");
        out
    }
}
