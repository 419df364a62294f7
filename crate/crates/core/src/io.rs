//! Plain-text file formats and JSON result records.
//!
//! Graphs and multigraphs share one format: a `n m` header line, then m
//! `u v` lines; edge ids are line order.  Embedding files append one
//! rotation line per vertex listing darts as `edge:side` tokens (side 0 is
//! the edge's first endpoint), `-` for a bare vertex.  Chord diagrams are a
//! single line with each chord label appearing twice.  Blank lines and `#`
//! comments are ignored everywhere.  Coloring results serialize to JSON.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::chord::ChordDiagram;
use crate::error::{Error, Result};
use crate::exact::ScanRecord;
use crate::fundcut::EdgeColoringResult;
use crate::graph::{Graph, Multigraph};
use crate::odd_color::ColoringResult;
use crate::planar::PlanarEmbedding;

fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse(format!("line {line}: bad {what} `{tok}`")))
}

fn parse_header_and_edges(text: &str) -> Result<(usize, Vec<(usize, usize)>, Vec<(usize, &str)>)> {
    let lines = content_lines(text);
    let Some(&(ln, header)) = lines.first() else {
        return Err(Error::Parse("empty input".into()));
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    let [n_tok, m_tok] = toks.as_slice() else {
        return Err(Error::Parse(format!("line {ln}: header must be `n m`")));
    };
    let n: usize = parse_num(n_tok, ln, "vertex count")?;
    let m: usize = parse_num(m_tok, ln, "edge count")?;
    if lines.len() < 1 + m {
        return Err(Error::Parse(format!("expected {m} edge lines, found {}", lines.len() - 1)));
    }
    let mut edges = Vec::with_capacity(m);
    for &(ln, l) in &lines[1..=m] {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [u_tok, v_tok] = toks.as_slice() else {
            return Err(Error::Parse(format!("line {ln}: edge line must be `u v`")));
        };
        edges.push((parse_num(u_tok, ln, "endpoint")?, parse_num(v_tok, ln, "endpoint")?));
    }
    Ok((n, edges, lines[1 + m..].to_vec()))
}

/// `n m` header plus `u v` lines; rejects trailing content, loops, and
/// duplicate edges (via the simple-graph constructor).
pub fn parse_graph(text: &str) -> Result<Graph> {
    let (n, edges, rest) = parse_header_and_edges(text)?;
    if let Some(&(ln, _)) = rest.first() {
        return Err(Error::Parse(format!("line {ln}: unexpected content after edges")));
    }
    Graph::from_edges(n, &edges)
}

/// Same format as [`parse_graph`] but loops and parallel edges are kept;
/// edge ids follow line order.
pub fn parse_multigraph(text: &str) -> Result<Multigraph> {
    let (n, edges, rest) = parse_header_and_edges(text)?;
    if let Some(&(ln, _)) = rest.first() {
        return Err(Error::Parse(format!("line {ln}: unexpected content after edges")));
    }
    Multigraph::from_edges(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn write_multigraph(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edge_list() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Multigraph lines followed by n rotation lines of `edge:side` dart tokens
/// in cyclic order (`-` for a vertex with no darts).  Validated by the
/// embedding constructor, including the genus-0 face check.
pub fn parse_embedding(text: &str) -> Result<PlanarEmbedding> {
    let (n, edges, rest) = parse_header_and_edges(text)?;
    let g = Multigraph::from_edges(n, &edges)?;
    if rest.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} rotation lines, found {}",
            rest.len()
        )));
    }
    let mut rotation = Vec::with_capacity(n);
    for &(ln, l) in &rest {
        if l == "-" {
            rotation.push(Vec::new());
            continue;
        }
        let mut darts = Vec::new();
        for tok in l.split_whitespace() {
            let Some((e_tok, s_tok)) = tok.split_once(':') else {
                return Err(Error::Parse(format!("line {ln}: dart `{tok}` is not `edge:side`")));
            };
            let e: usize = parse_num(e_tok, ln, "edge id")?;
            let s: usize = parse_num(s_tok, ln, "side")?;
            if s > 1 {
                return Err(Error::Parse(format!("line {ln}: side must be 0 or 1")));
            }
            darts.push(2 * e + s);
        }
        rotation.push(darts);
    }
    PlanarEmbedding::new(g, rotation)
}

pub fn write_embedding(emb: &PlanarEmbedding) -> String {
    let mut out = write_multigraph(emb.graph());
    for sigma in emb.rotation() {
        if sigma.is_empty() {
            out.push_str("-\n");
            continue;
        }
        let toks: Vec<String> =
            sigma.iter().map(|&d| format!("{}:{}", d / 2, d % 2)).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}

/// Double-occurrence word: whitespace-separated chord labels, each exactly
/// twice.
pub fn parse_chord_word(text: &str) -> Result<ChordDiagram> {
    let mut word = Vec::new();
    for (ln, l) in content_lines(text) {
        for tok in l.split_whitespace() {
            word.push(parse_num(tok, ln, "chord label")?);
        }
    }
    ChordDiagram::from_word(&word)
}

pub fn write_chord_word(cd: &ChordDiagram) -> String {
    let toks: Vec<String> = cd.word().iter().map(|x| x.to_string()).collect();
    toks.join(" ") + "\n"
}

/// Whitespace-separated edge ids (spanning trees and other edge sets).
pub fn parse_edge_ids(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (ln, l) in content_lines(text) {
        for tok in l.split_whitespace() {
            out.push(parse_num(tok, ln, "edge id")?);
        }
    }
    Ok(out)
}

pub fn write_edge_ids(ids: &[usize]) -> String {
    let toks: Vec<String> = ids.iter().map(|x| x.to_string()).collect();
    toks.join(" ") + "\n"
}

/// Whitespace-separated colors, one per vertex in id order.
pub fn parse_vertex_colors(text: &str) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    for (ln, l) in content_lines(text) {
        for tok in l.split_whitespace() {
            out.push(parse_num(tok, ln, "color")?);
        }
    }
    Ok(out)
}

/// `edge color` lines.
pub fn parse_edge_colors(text: &str) -> Result<BTreeMap<usize, u32>> {
    let mut out = BTreeMap::new();
    for (ln, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [e_tok, c_tok] = toks.as_slice() else {
            return Err(Error::Parse(format!("line {ln}: expected `edge color`")));
        };
        let e = parse_num(e_tok, ln, "edge id")?;
        if out.insert(e, parse_num(c_tok, ln, "color")?).is_some() {
            return Err(Error::Parse(format!("line {ln}: duplicate edge {e}")));
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct VertexResultRecord<'a> {
    colors: &'a [u32],
    num_colors: u32,
    witness: BTreeMap<String, u32>,
    proper: bool,
    algorithm: &'a str,
    seed: Option<u64>,
}

/// JSON record for a vertex-coloring result; the witness map holds, per
/// vertex, a color seen an odd number of times in its neighborhood.
pub fn write_vertex_result(r: &ColoringResult) -> String {
    let witness = r
        .witness
        .iter()
        .enumerate()
        .filter_map(|(v, w)| w.map(|c| (v.to_string(), c)))
        .collect();
    let rec = VertexResultRecord {
        colors: &r.colors,
        num_colors: r.num_colors,
        witness,
        proper: r.proper,
        algorithm: &r.algorithm,
        seed: r.seed,
    };
    serde_json::to_string_pretty(&rec).expect("serializable") + "\n"
}

#[derive(Serialize)]
struct EdgeResultRecord<'a> {
    edge_colors: BTreeMap<String, u32>,
    num_colors: u32,
    color_bound: u32,
    method_per_layer: &'a [String],
    verification: &'a str,
}

pub fn write_edge_result(r: &EdgeColoringResult) -> String {
    let rec = EdgeResultRecord {
        edge_colors: r.colors.iter().map(|(&e, &c)| (e.to_string(), c)).collect(),
        num_colors: r.num_colors,
        color_bound: r.color_bound,
        method_per_layer: &r.method_per_layer,
        verification: if r.verified { "passed" } else { "failed" },
    };
    serde_json::to_string_pretty(&rec).expect("serializable") + "\n"
}

/// One whitespace-aligned line per scan record, diffable across runs.
pub fn write_scan_report(records: &[ScanRecord]) -> String {
    let mut out = String::from("instance parameter value nodes seconds note\n");
    for r in records {
        let value = r.value.map_or("-".into(), |v| v.to_string());
        let note = if r.note.is_empty() { "-" } else { &r.note };
        out.push_str(&format!(
            "{} {} {} {} {:.3} {}\n",
            r.instance, r.parameter, value, r.nodes, r.seconds, note
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_roundtrip_and_errors() {
        let text = "# triangle\n3 3\n0 1\n1 2\n2 0\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        let again = parse_graph(&write_graph(&g)).unwrap();
        assert_eq!(again.edges(), g.edges());

        assert!(parse_graph("").is_err());
        assert!(parse_graph("3 3\n0 1\n1 2\n").is_err());
        assert!(parse_graph("3 1\n0 x\n").is_err());
        assert!(parse_graph("3 1\n0 1\n2 2\n").is_err()); // trailing content
        assert!(parse_graph("2 1\n0 0\n").is_err()); // loop in a simple graph
    }

    #[test]
    fn multigraph_roundtrip_keeps_loops_and_parallels() {
        let text = "3 4\n0 1\n0 1\n2 2\n1 2\n";
        let g = parse_multigraph(text).unwrap();
        assert_eq!(g.m(), 4);
        assert!(g.is_loop(2));
        let again = parse_multigraph(&write_multigraph(&g)).unwrap();
        assert_eq!(again.edge_list(), g.edge_list());
    }

    #[test]
    fn embedding_roundtrip() {
        let emb = crate::gen::random_triangulation(8, 5).unwrap();
        let text = write_embedding(&emb);
        let back = parse_embedding(&text).unwrap();
        assert_eq!(back.graph().edge_list(), emb.graph().edge_list());
        assert_eq!(back.rotation(), emb.rotation());
        assert_eq!(
            back.trace_faces().unwrap().len(),
            emb.trace_faces().unwrap().len()
        );

        // malformed dart token and wrong line count
        assert!(parse_embedding("2 1\n0 1\n0:0\n0:2\n").is_err());
        assert!(parse_embedding("2 1\n0 1\n0:0\n").is_err());
    }

    #[test]
    fn chord_word_roundtrip() {
        let cd = parse_chord_word("0 1 2 0 1 2\n").unwrap();
        assert_eq!(cd.n_chords(), 3);
        let again = parse_chord_word(&write_chord_word(&cd)).unwrap();
        assert_eq!(again.word(), cd.word());
        assert!(parse_chord_word("0 1 0\n").is_err());
    }

    #[test]
    fn id_and_color_lists() {
        assert_eq!(parse_edge_ids("0 3 5\n").unwrap(), vec![0, 3, 5]);
        assert_eq!(parse_edge_ids(&write_edge_ids(&[2, 4])).unwrap(), vec![2, 4]);
        assert_eq!(parse_vertex_colors("1 2\n1\n").unwrap(), vec![1, 2, 1]);
        assert!(parse_vertex_colors("1 -2\n").is_err());

        let ec = parse_edge_colors("0 5\n3 17\n").unwrap();
        assert_eq!(ec.get(&3), Some(&17));
        assert!(parse_edge_colors("0 5\n0 6\n").is_err());
        assert!(parse_edge_colors("0\n").is_err());
    }

    #[test]
    fn json_records_have_expected_fields() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let r = crate::odd_color::improper_odd_color(&g).unwrap();
        let v: serde_json::Value = serde_json::from_str(&write_vertex_result(&r)).unwrap();
        assert_eq!(v["num_colors"], 1);
        assert_eq!(v["witness"]["0"], 1);
        assert_eq!(v["proper"], false);

        let k4 = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        let er = crate::fundcut::fund_cut_color(&k4, &[0, 1, 2]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&write_edge_result(&er)).unwrap();
        assert_eq!(v["verification"], "passed");
        assert_eq!(v["edge_colors"]["4"], 1);
        assert!(v["color_bound"].as_u64().unwrap() <= 49);
    }

    #[test]
    fn scan_report_lines() {
        let records = vec![ScanRecord {
            instance: "c4".into(),
            parameter: "chi_o(F(G,T))".into(),
            value: Some(2),
            nodes: 10,
            seconds: 0.001,
            note: String::new(),
        }];
        let text = write_scan_report(&records);
        assert!(text.contains("c4 chi_o(F(G,T)) 2 10 0.001 -"));
    }
}
