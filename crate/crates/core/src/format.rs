//! Text formats: the plane-graph file and orientation listings.
//!
//! ```text
//! planegraph v1
//! vertices <n>
//! edge <eid> <u> <v>
//! rot <vid>: <±eid list>      # clockwise; +e = u-end dart, -e = v-end
//! outer <eid> <+|->
//! ```
//! `#` starts a comment. The writer emits records in id order; the reader
//! accepts any record order after the header line.

use crate::error::{Error, Result};
use crate::graph::{Dart, PlaneGraph};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse_graph(text: &str) -> Result<PlaneGraph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (eid, u, v)
    let mut rots: Vec<(usize, usize, Vec<Dart>)> = Vec::new(); // (line, vid, darts)
    let mut outer: Option<(usize, Dart)> = None;
    let mut saw_header = false;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if !saw_header {
            if line != "planegraph v1" {
                return Err(perr(lineno, "expected header `planegraph v1`"));
            }
            saw_header = true;
            continue;
        }
        let mut it = line.split_whitespace();
        let kw = it.next().unwrap();
        match kw {
            "vertices" => {
                let v: usize = it
                    .next()
                    .ok_or_else(|| perr(lineno, "vertices: missing count"))?
                    .parse()
                    .map_err(|_| perr(lineno, "vertices: bad count"))?;
                if n.replace(v).is_some() {
                    return Err(perr(lineno, "duplicate vertices record"));
                }
            }
            "edge" => {
                let nums: Vec<usize> = it
                    .map(|t| t.parse().map_err(|_| perr(lineno, format!("edge: bad number `{}`", t))))
                    .collect::<Result<_>>()?;
                if nums.len() != 3 {
                    return Err(perr(lineno, "edge: expected `edge <eid> <u> <v>`"));
                }
                if nums[1] == nums[2] {
                    return Err(perr(lineno, "edge: loops are not accepted in input"));
                }
                edges.push((nums[0], nums[1], nums[2]));
            }
            "rot" => {
                let vid_tok = it.next().ok_or_else(|| perr(lineno, "rot: missing vertex"))?;
                let vid_tok = vid_tok
                    .strip_suffix(':')
                    .ok_or_else(|| perr(lineno, "rot: expected `rot <vid>:`"))?;
                let vid: usize =
                    vid_tok.parse().map_err(|_| perr(lineno, "rot: bad vertex id"))?;
                let mut darts = Vec::new();
                for tok in it {
                    darts.push(parse_signed_dart(tok, lineno)?);
                }
                rots.push((lineno, vid, darts));
            }
            "outer" => {
                let eid: usize = it
                    .next()
                    .ok_or_else(|| perr(lineno, "outer: missing edge id"))?
                    .parse()
                    .map_err(|_| perr(lineno, "outer: bad edge id"))?;
                let sign = it.next().ok_or_else(|| perr(lineno, "outer: missing sign"))?;
                let d = match sign {
                    "+" => 2 * eid,
                    "-" => 2 * eid + 1,
                    _ => return Err(perr(lineno, "outer: sign must be + or -")),
                };
                if outer.replace((lineno, d)).is_some() {
                    return Err(perr(lineno, "duplicate outer record"));
                }
            }
            _ => return Err(perr(lineno, format!("unknown record `{}`", kw))),
        }
    }

    if !saw_header {
        return Err(perr(1, "missing header `planegraph v1`"));
    }
    let n = n.ok_or_else(|| perr(1, "missing vertices record"))?;
    let m = edges.len();
    let mut edge_list = vec![None; m];
    for (eid, u, v) in edges {
        if eid >= m {
            return Err(perr(1, format!("edge ids must be dense 0..{}, got {}", m, eid)));
        }
        if edge_list[eid].replace((u, v)).is_some() {
            return Err(perr(1, format!("duplicate edge id {}", eid)));
        }
    }
    let edge_list: Vec<(usize, usize)> = edge_list.into_iter().map(|e| e.unwrap()).collect();

    let mut rot = vec![None; n];
    for (lineno, vid, darts) in rots {
        if vid >= n {
            return Err(perr(lineno, format!("rot: vertex {} out of range", vid)));
        }
        for &d in &darts {
            if d >= 2 * m {
                return Err(perr(lineno, format!("rot: dart for edge {} out of range", d >> 1)));
            }
        }
        if rot[vid].replace(darts).is_some() {
            return Err(perr(lineno, format!("duplicate rot record for vertex {}", vid)));
        }
    }
    if let Some(v) = rot.iter().position(|r| r.is_none()) {
        return Err(perr(1, format!("missing rot record for vertex {}", v)));
    }
    let rot: Vec<Vec<Dart>> = rot.into_iter().map(|r| r.unwrap()).collect();
    let outer = match outer {
        Some((_, d)) => d,
        None if m == 0 => 0,
        None => return Err(perr(1, "missing outer record")),
    };
    PlaneGraph::new(n, edge_list, rot, outer)
}

fn parse_signed_dart(tok: &str, lineno: usize) -> Result<Dart> {
    let (neg, digits) = match tok.as_bytes().first() {
        Some(b'+') => (false, &tok[1..]),
        Some(b'-') => (true, &tok[1..]),
        _ => (false, tok),
    };
    let e: usize = digits
        .parse()
        .map_err(|_| perr(lineno, format!("bad rotation token `{}`", tok)))?;
    Ok(2 * e + usize::from(neg))
}

pub fn write_graph(g: &PlaneGraph) -> String {
    let mut out = String::new();
    out.push_str("planegraph v1\n");
    out.push_str(&format!("vertices {}\n", g.vertex_count()));
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        out.push_str(&format!("edge {} {} {}\n", e, u, v));
    }
    for v in 0..g.vertex_count() {
        out.push_str(&format!("rot {}:", v));
        for &d in g.rotation(v) {
            let sign = if d & 1 == 0 { '+' } else { '-' };
            out.push_str(&format!(" {}{}", sign, d >> 1));
        }
        out.push('\n');
    }
    if g.edge_count() > 0 {
        let d = g.outer_dart();
        out.push_str(&format!("outer {} {}\n", d >> 1, if d & 1 == 0 { '+' } else { '-' }));
    }
    out
}

/// One line per edge: `orient <eid> <u|v>`, source endpoint named.
pub fn write_orientation(sources_are_u: &[bool]) -> String {
    let mut out = String::new();
    for (e, &su) in sources_are_u.iter().enumerate() {
        out.push_str(&format!("orient {} {}\n", e, if su { 'u' } else { 'v' }));
    }
    out
}

pub fn parse_orientation(text: &str, edge_count: usize) -> Result<Vec<bool>> {
    let mut res = vec![None; edge_count];
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        if it.next() != Some("orient") {
            return Err(perr(lineno, "expected `orient <eid> <u|v>`"));
        }
        let e: usize = it
            .next()
            .ok_or_else(|| perr(lineno, "orient: missing edge id"))?
            .parse()
            .map_err(|_| perr(lineno, "orient: bad edge id"))?;
        if e >= edge_count {
            return Err(perr(lineno, format!("orient: edge {} out of range", e)));
        }
        let side = match it.next() {
            Some("u") => true,
            Some("v") => false,
            _ => return Err(perr(lineno, "orient: side must be u or v")),
        };
        if res[e].replace(side).is_some() {
            return Err(perr(lineno, format!("duplicate orient record for edge {}", e)));
        }
    }
    if let Some(e) = res.iter().position(|r| r.is_none()) {
        return Err(perr(1, format!("missing orient record for edge {}", e)));
    }
    Ok(res.into_iter().map(|r| r.unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::embedding_isomorphic;

    #[test]
    fn triangle_file_roundtrip() {
        let g = fixtures::triangle();
        let text = write_graph(&g);
        let h = parse_graph(&text).unwrap();
        assert_eq!(h.faces().len(), 2);
        assert!(embedding_isomorphic(&g, &h));
    }

    #[test]
    fn k4_file_has_four_faces() {
        let text = write_graph(&fixtures::k4());
        let g = parse_graph(&text).unwrap();
        assert_eq!(g.faces().len(), 4);
    }

    #[test]
    fn corrupt_rotation_reports_embedding_error() {
        let g = fixtures::k4();
        let mut text = write_graph(&g);
        assert!(text.contains("rot 0: +0 +3 -2"), "fixture text drifted");
        // swap two tokens in vertex 0's rotation
        text = text.replace("rot 0: +0 +3 -2", "rot 0: +3 +0 -2");
        match parse_graph(&text) {
            Err(Error::Embedding(_)) => {}
            other => panic!("expected embedding error, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn loops_rejected() {
        let text = "planegraph v1\nvertices 1\nedge 0 0 0\nrot 0: +0 -0\nouter 0 +\n";
        assert!(matches!(parse_graph(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn comments_and_order_insensitivity() {
        let text = "planegraph v1\n# a triangle\nouter 0 -\nrot 2: +2 -1\nrot 1: +1 -0\nrot 0: +0 -2\nvertices 3\nedge 2 2 0\nedge 0 0 1\nedge 1 1 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.faces().len(), 2);
    }

    #[test]
    fn roundtrip_fixture_corpus() {
        for g in [
            fixtures::k4(),
            fixtures::cube(),
            fixtures::octahedron(),
            fixtures::parallel_edges(3),
            fixtures::good_orientation_counterexample(),
        ] {
            let h = parse_graph(&write_graph(&g)).unwrap();
            assert!(embedding_isomorphic(&g, &h));
        }
    }
}
