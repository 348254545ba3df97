//! Text form of move sequences: `base <name>` then one `move ...` per line.
//! Corner hints (`cu=`, `c0=`, ...) appear only when a face id alone would
//! not pin the corner down.

use super::types::{Base, Move, MoveSequence};
use crate::error::{Error, Result};

pub fn write_sequence(seq: &MoveSequence) -> String {
    let mut out = format!("base {}\n", seq.base.name());
    for m in &seq.moves {
        match m {
            Move::H1 { f, u, v, cu, cv } => {
                out.push_str(&format!("move H1 f={} u={} v={}", f, u, v));
                if let Some(c) = cu {
                    out.push_str(&format!(" cu={}", c));
                }
                if let Some(c) = cv {
                    out.push_str(&format!(" cv={}", c));
                }
            }
            Move::H2 { f, e, w, cw } => {
                out.push_str(&format!("move H2 f={} e={} w={}", f, e, w));
                if let Some(c) = cw {
                    out.push_str(&format!(" cw={}", c));
                }
            }
            Move::E3 { e, v, f, c } => {
                out.push_str(&format!("move E3 e={} v={} f={}", e, v, f));
                if let Some(cc) = c {
                    out.push_str(&format!(" c={}", cc));
                }
            }
            Move::V4 { u, f0, f1, f2, c0, c1, c2 } => {
                out.push_str(&format!("move V4 u={} f0={} f1={} f2={}", u, f0, f1, f2));
                for (name, c) in [("c0", c0), ("c1", c1), ("c2", c2)] {
                    if let Some(cc) = c {
                        out.push_str(&format!(" {}={}", name, cc));
                    }
                }
            }
            Move::V22 { u, f0, f1, c0, c1 } => {
                out.push_str(&format!("move V22 u={} f0={} f1={}", u, f0, f1));
                for (name, c) in [("c0", c0), ("c1", c1)] {
                    if let Some(cc) = c {
                        out.push_str(&format!(" {}={}", name, cc));
                    }
                }
            }
        }
        out.push('\n');
    }
    out
}

pub fn parse_sequence(text: &str) -> Result<MoveSequence> {
    let mut base = None;
    let mut moves = Vec::new();
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
        match it.next().unwrap() {
            "base" => {
                let name = it
                    .next()
                    .ok_or_else(|| Error::Parse { line: lineno, msg: "base: missing name".into() })?;
                base = Some(Base::from_name(name).ok_or_else(|| Error::Parse {
                    line: lineno,
                    msg: format!("unknown base `{}`", name),
                })?);
            }
            "move" => {
                let kind = it
                    .next()
                    .ok_or_else(|| Error::Parse { line: lineno, msg: "move: missing kind".into() })?;
                let mut kv = std::collections::BTreeMap::new();
                for tok in it {
                    let (k, v) = tok.split_once('=').ok_or_else(|| Error::Parse {
                        line: lineno,
                        msg: format!("bad move parameter `{}`", tok),
                    })?;
                    let v: usize = v.parse().map_err(|_| Error::Parse {
                        line: lineno,
                        msg: format!("bad number in `{}`", tok),
                    })?;
                    kv.insert(k.to_string(), v);
                }
                let req = |k: &str| -> Result<usize> {
                    kv.get(k).copied().ok_or_else(|| Error::Parse {
                        line: lineno,
                        msg: format!("move {}: missing {}=", kind, k),
                    })
                };
                let opt = |k: &str| kv.get(k).copied();
                let m = match kind {
                    "H1" => Move::H1 {
                        f: req("f")?,
                        u: req("u")?,
                        v: req("v")?,
                        cu: opt("cu"),
                        cv: opt("cv"),
                    },
                    "H2" => Move::H2 { f: req("f")?, e: req("e")?, w: req("w")?, cw: opt("cw") },
                    "E3" => Move::E3 { e: req("e")?, v: req("v")?, f: req("f")?, c: opt("c") },
                    "V4" => Move::V4 {
                        u: req("u")?,
                        f0: req("f0")?,
                        f1: req("f1")?,
                        f2: req("f2")?,
                        c0: opt("c0"),
                        c1: opt("c1"),
                        c2: opt("c2"),
                    },
                    "V22" => Move::V22 {
                        u: req("u")?,
                        f0: req("f0")?,
                        f1: req("f1")?,
                        c0: opt("c0"),
                        c1: opt("c1"),
                    },
                    _ => {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("unknown move kind `{}`", kind),
                        })
                    }
                };
                moves.push(m);
            }
            kw => {
                return Err(Error::Parse { line: lineno, msg: format!("unknown record `{}`", kw) })
            }
        }
    }
    Ok(MoveSequence {
        base: base.ok_or_else(|| Error::Parse { line: 1, msg: "missing base record".into() })?,
        moves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let seq = MoveSequence {
            base: Base::IsolatedVertex,
            moves: vec![
                Move::V4 { u: 0, f0: 0, f1: 0, f2: 0, c0: None, c1: None, c2: None },
                Move::E3 { e: 0, v: 1, f: 2, c: Some(1) },
            ],
        };
        let text = write_sequence(&seq);
        let back = parse_sequence(&text).unwrap();
        assert_eq!(seq, back);
    }
}
