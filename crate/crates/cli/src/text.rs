//! Plain-text rendering in bracket notation. Without `--half` every weight is
//! printed doubled, i.e. with the factor 1/2 omitted.

use std::fmt::Write;

use kdirac_core::bgg::BggDiagram;
use kdirac_core::dirac4::PropertyReport;
use kdirac_core::pushdown::{ComplexDescriptor, TermEntry, VertexImage};
use kdirac_core::{dim_so4, weyl_dim_sl, HasseDiagram, HasseVertex, ModuleDescriptor, ParabolicMarking, SlHighestWeight};

const NO_IMAGE: &str = "\u{2205}";

fn units_note(half: bool) -> &'static str {
    if half {
        ""
    } else {
        " (factor 1/2 omitted)"
    }
}

pub fn hasse(d: &HasseDiagram) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "relative Hasse diagram, k = {}: {} vertices, {} edges",
        d.k(),
        d.vertices().len(),
        d.edges().len()
    )
    .unwrap();
    for i in 0..d.row_count() {
        let names: Vec<_> = d.row(i).map(|v| v.name()).collect();
        writeln!(out, "row {i}: {}", names.join(" ")).unwrap();
    }
    for e in d.edges() {
        writeln!(out, "{} -> {} [{}]", e.source.name(), e.target.name(), e.label).unwrap();
    }
    out
}

pub fn bgg(d: &BggDiagram, half: bool) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "relative BGG diagram, k = {}, seed {}{}",
        d.k(),
        d.seed().render(ParabolicMarking::Q, half),
        units_note(half)
    )
    .unwrap();
    for i in 0..d.hasse().row_count() {
        let cells: Vec<_> = d
            .hasse()
            .row(i)
            .map(|v| format!("{} {}", v.name(), d.weight(v).render(ParabolicMarking::Q, half)))
            .collect();
        writeln!(out, "row {i}: {}", cells.join("  ")).unwrap();
    }
    out
}

pub fn image_cell(img: &VertexImage, half: bool) -> String {
    match (img.image.weight(), img.image.degree()) {
        (Some(w), Some(deg)) => format!("{}_{deg}", w.render(ParabolicMarking::P, half)),
        _ => NO_IMAGE.to_string(),
    }
}

pub fn pushdown(d: &BggDiagram, images: &[VertexImage], half: bool) -> String {
    let mut out = String::new();
    writeln!(out, "direct images, k = {}{}", d.k(), units_note(half)).unwrap();
    for i in 0..d.hasse().row_count() {
        let cells: Vec<_> = images
            .iter()
            .filter(|img| img.vertex.row() == i)
            .map(|img| format!("{} {}", img.vertex.name(), image_cell(img, half)))
            .collect();
        writeln!(out, "row {i}: {}", cells.join("  ")).unwrap();
    }
    out
}

/// `U31`, or `U10,0` once an index has two digits.
pub fn module_name(v: HasseVertex) -> String {
    format!("U{}", &v.name()[1..])
}

/// `Sp-`, `C^k (x) Sp+` or `U_ij`.
pub fn term_name(v: HasseVertex, k: usize) -> String {
    match v.row() {
        0 => "Sp-".to_string(),
        1 => format!("C^{k} (x) Sp+"),
        _ => module_name(v),
    }
}

fn slk(m: &ModuleDescriptor) -> String {
    let entries: Vec<_> = m.slk_hw.iter().map(u32::to_string).collect();
    format!("[{}]", entries.join(","))
}

fn entry_line(e: &TermEntry, k: usize, half: bool) -> String {
    let m = &e.descriptor;
    format!(
        "{} {}: sl_k {} so_4 ({},{}) dim {}",
        term_name(e.vertex, k),
        e.weight.render(ParabolicMarking::P, half),
        slk(m),
        m.so4_hw.0,
        m.so4_hw.1,
        m.dim
    )
}

pub fn complex(c: &ComplexDescriptor, half: bool) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "complex on G/P, k = {}: {} terms, positions {:?}{}",
        c.k,
        c.terms.len(),
        c.positions(),
        units_note(half)
    )
    .unwrap();
    for (n, term) in c.terms.iter().enumerate() {
        let cells: Vec<_> = term.entries.iter().map(|e| entry_line(e, c.k, half)).collect();
        writeln!(out, "[{}] {}", term.position, cells.join(" | ")).unwrap();
        if let Some(&order) = c.operator_orders.get(n) {
            let arrow = if order == 2 { "=>" } else { "->" };
            let from: Vec<_> = c
                .arrows
                .iter()
                .filter(|a| term.entries.iter().any(|e| e.vertex == a.from))
                .map(|a| format!("{} {arrow} {}", module_name(a.from), module_name(a.to)))
                .collect();
            writeln!(out, "  {arrow} order {order}: {}", from.join(", ")).unwrap();
        }
    }
    out
}

pub fn dims(c: &ComplexDescriptor) -> String {
    let mut out = String::new();
    writeln!(out, "module dimensions, k = {}", c.k).unwrap();
    writeln!(out, "pos  module  sl_k weight  dim V  so_4 weight  dim W  dim U").unwrap();
    for term in &c.terms {
        let mut total = 0;
        for e in &term.entries {
            let m = &e.descriptor;
            let dim_v = SlHighestWeight::new(m.slk_hw.clone()).and_then(|hw| weyl_dim_sl(&hw));
            let dim_w = dim_so4(m.so4_hw.0, m.so4_hw.1);
            let (Ok(dim_v), Ok(dim_w)) = (dim_v, dim_w) else {
                unreachable!("descriptors in a built complex have valid dimensions")
            };
            let so4 = format!("({},{})", m.so4_hw.0, m.so4_hw.1);
            writeln!(
                out,
                "{:<4} {:<7} {:<12} {:<6} {:<12} {:<6} {}",
                term.position,
                module_name(e.vertex),
                slk(m),
                dim_v,
                so4,
                dim_w,
                m.dim
            )
            .unwrap();
            total += m.dim;
        }
        writeln!(out, "     total at position {}: {}", term.position, total).unwrap();
    }
    out
}

pub fn check_dirac(k: usize, degree: u32, trials: usize, seed: u64, r: &PropertyReport) -> String {
    let mut out = String::new();
    writeln!(out, "Dirac operator in {k} variables: degree <= {degree}, {trials} trials, rng seed {seed}").unwrap();
    writeln!(out, "{}/{} factorization checks passed", r.factorization.passed, r.factorization.total).unwrap();
    if k >= 2 {
        writeln!(out, "{}/{} polarization checks passed", r.polarization.passed, r.polarization.total).unwrap();
    }
    writeln!(out, "{}/{} monogenic annihilation checks passed", r.monogenic.passed, r.monogenic.total).unwrap();
    let verdict = if r.target_dimension as u64 == r.expected_target_dimension {
        "ok"
    } else {
        "MISMATCH"
    };
    writeln!(
        out,
        "target dimension {} vs dim(C^{k} (x) Sp+) = {}: {verdict}",
        r.target_dimension, r.expected_target_dimension
    )
    .unwrap();
    out
}
