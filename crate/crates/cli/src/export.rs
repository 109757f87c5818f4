//! DOT and JSON renderings of the trispectrum.

use serde_json::{json, Value};
use triring::{Ideal, Parity, Triideal, Triring, Trispectrum};

/// Greedy generators: the smallest members that generate the triideal,
/// even part first.
pub fn generators(ring: &Triring, p: &Triideal) -> (Vec<usize>, Vec<usize>) {
    let mut even = Vec::new();
    let mut current = ring.even().zero_ideal();
    for &x in p.even().members() {
        if !current.contains(x) {
            even.push(x);
            current = ring.even().ideal_generated(&even);
        }
    }
    let mut odd = Vec::new();
    let mut current: Ideal = ring
        .make_triideal(&even, &[])
        .expect("generators in range")
        .odd()
        .clone();
    for &x in p.odd().members() {
        if !current.contains(x) {
            odd.push(x);
            current = ring.make_triideal(&even, &odd).expect("generators in range").odd().clone();
        }
    }
    (even, odd)
}

fn list(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// The specialization order as a digraph: an edge `p -> q` for every strict
/// inclusion of point `p` in point `q`.
pub fn to_dot(spectrum: &Trispectrum) -> String {
    let ring = spectrum.ring();
    let mut out = format!("digraph \"{}\" {{\n  rankdir=BT;\n", escape(ring.name()));
    for (k, p) in spectrum.points().iter().enumerate() {
        let (even, odd) = generators(ring, p);
        out += &format!(
            "  p{k} [label=\"P{k} {}: even ({}) odd ({})\"];\n",
            spectrum.parity(k),
            list(&even),
            list(&odd)
        );
    }
    for (p, q) in spectrum.specialization_order().edges {
        out += &format!("  p{p} -> p{q};\n");
    }
    out += "}\n";
    out
}

pub fn to_json_value(spectrum: &Trispectrum) -> Value {
    let ring = spectrum.ring();
    let points: Vec<Value> = spectrum
        .points()
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let (even_gens, odd_gens) = generators(ring, p);
            json!({
                "index": k,
                "parity": match spectrum.parity(k) { Parity::Even => "even", Parity::Odd => "odd" },
                "even": p.even().members(),
                "odd": p.odd().members(),
                "even_generators": even_gens,
                "odd_generators": odd_gens,
            })
        })
        .collect();
    let even_opens: Vec<Value> = ring
        .even()
        .elements()
        .map(|x0| json!({"element": x0, "points": spectrum.dsharp_even(x0)}))
        .collect();
    let odd_opens: Vec<Value> = ring
        .odd()
        .elements()
        .map(|x1| json!({"element": x1, "points": spectrum.dsharp_odd(x1)}))
        .collect();
    let edges: Vec<[usize; 2]> = spectrum
        .specialization_order()
        .edges
        .into_iter()
        .map(|(p, q)| [p, q])
        .collect();
    json!({
        "name": ring.name(),
        "points": points,
        "closed_sets": spectrum.closed_sets(),
        "basic_opens": {"even": even_opens, "odd": odd_opens},
        "specialization": edges,
    })
}

/// Canonical JSON: sorted keys, no insignificant whitespace, trailing newline.
pub fn to_json(spectrum: &Trispectrum) -> String {
    format!("{}\n", to_json_value(spectrum))
}
