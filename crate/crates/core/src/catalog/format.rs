//! Plain-text algebra files.
//!
//! ```text
//! algebra Hd2.4
//! dim 2
//! scalars rational
//! alpha 1 1 1          # coefficient of e1 in α(e1)
//! left 1 2 1 1         # coefficient of e1 in e1 ⊣ e2
//! right 2 2 2 1
//! end
//! ```
//!
//! An optional `structure <kind>` line after `scalars` tags satellite
//! structures; without it the tables are a dialgebra.

use std::fmt::Write;

use super::{Structure, StructureKind};
use crate::algebra::{HomDialgebra, LinearMap, MultTable};
use crate::error::{Error, Result};
use crate::scalar::{Backend, Scalar};

/// Renders a structure in the file format: sorted, zero entries omitted.
pub fn serialize(s: &Structure) -> String {
    let a = &s.algebra;
    let n = a.dim();
    let mut out = String::new();
    let _ = writeln!(out, "algebra {}", a.name());
    let _ = writeln!(out, "dim {n}");
    let _ = writeln!(out, "scalars {}", a.backend().name());
    if s.kind != StructureKind::Dialgebra {
        let _ = writeln!(out, "structure {}", s.kind.name());
    }
    for i in 0..n {
        for j in 0..n {
            let v = a.alpha().get(i, j);
            if !v.is_exact_zero() {
                let _ = writeln!(out, "alpha {} {} {v}", i + 1, j + 1);
            }
        }
    }
    for (word, t) in [("left", a.left()), ("right", a.right())] {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = t.get(i, j, k);
                    if !v.is_exact_zero() {
                        let _ = writeln!(out, "{word} {} {} {} {v}", i + 1, j + 1, k + 1);
                    }
                }
            }
        }
    }
    out.push_str("end\n");
    out
}

struct Header {
    name: String,
    dim: usize,
    backend: Backend,
    kind: StructureKind,
}

/// Parses the file format; every error names the offending line.
pub fn parse(text: &str) -> Result<Structure> {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, words)| !words.is_empty())
        .collect();
    let mut it = lines.iter().peekable();
    let last_line = text.lines().count().max(1);

    let mut expect = |word: &str| -> Result<(usize, &[&str])> {
        match it.next() {
            Some((ln, words)) if words[0] == word => Ok((*ln, &words[1..])),
            Some((ln, words)) => Err(Error::parse(*ln, format!("expected `{word}`, found `{}`", words[0]))),
            None => Err(Error::parse(last_line, format!("missing `{word}` line"))),
        }
    };

    let (ln, rest) = expect("algebra")?;
    if rest.is_empty() {
        return Err(Error::parse(ln, "`algebra` needs a name"));
    }
    let name = rest.join(" ");
    let (ln, rest) = expect("dim")?;
    let dim = match rest {
        [d] => d
            .parse::<usize>()
            .ok()
            .filter(|&d| d > 0)
            .ok_or_else(|| Error::parse(ln, format!("dimension must be a positive integer, found `{d}`")))?,
        _ => return Err(Error::parse(ln, "`dim` takes exactly one value")),
    };
    let (ln, rest) = expect("scalars")?;
    let backend = match rest {
        [b] => b.parse::<Backend>().map_err(|_| Error::parse(ln, format!("unknown scalars `{b}`, expected rational or complex")))?,
        _ => return Err(Error::parse(ln, "`scalars` takes exactly one value")),
    };
    let mut kind = StructureKind::Dialgebra;
    if let Some((ln, words)) = it.peek() {
        if words[0] == "structure" {
            kind = match &words[1..] {
                [k] => StructureKind::from_name(k).ok_or_else(|| Error::parse(*ln, format!("unknown structure `{k}`")))?,
                _ => return Err(Error::parse(*ln, "`structure` takes exactly one value")),
            };
            it.next();
        }
    }
    let header = Header { name, dim, backend, kind };
    body(&header, it, last_line)
}

fn body<'a, 'w: 'a>(h: &Header, lines: impl Iterator<Item = &'a (usize, Vec<&'w str>)>, last_line: usize) -> Result<Structure> {
    let n = h.dim;
    let mut alpha = LinearMap::zero(n, h.backend);
    let mut tables = [MultTable::zero(n, h.backend), MultTable::zero(n, h.backend)];
    let mut seen = std::collections::HashSet::new();
    let mut ended = false;
    for (ln, words) in lines {
        let ln = *ln;
        if ended {
            return Err(Error::parse(ln, "content after `end`"));
        }
        let arity = match words[0] {
            "end" => {
                if words.len() > 1 {
                    return Err(Error::parse(ln, "`end` takes no values"));
                }
                ended = true;
                continue;
            }
            "alpha" => 2,
            "left" | "right" => 3,
            "algebra" | "dim" | "scalars" | "structure" => {
                return Err(Error::parse(ln, format!("`{}` must appear once, in the header", words[0])))
            }
            other => return Err(Error::parse(ln, format!("unknown directive `{other}`"))),
        };
        if words.len() != arity + 2 {
            return Err(Error::parse(
                ln,
                format!("`{}` takes {arity} indices and a value, found {} fields", words[0], words.len() - 1),
            ));
        }
        let mut idx = Vec::with_capacity(arity);
        for w in &words[1..=arity] {
            let i: usize = w.parse().map_err(|_| Error::parse(ln, format!("index `{w}` is not a positive integer")))?;
            if i == 0 || i > n {
                return Err(Error::parse(ln, format!("index {i} out of range 1..={n}")));
            }
            idx.push(i - 1);
        }
        let text = words[arity + 1];
        let value = Scalar::parse(text, h.backend).map_err(|e| match e {
            Error::BackendMismatch { .. } => Error::parse(ln, format!("value `{text}` is not allowed with {} scalars", h.backend.name())),
            other => Error::parse(ln, other.to_string()),
        })?;
        if !seen.insert((words[0], idx.clone())) {
            return Err(Error::parse(ln, format!("duplicate `{}` entry", words[0])));
        }
        match words[0] {
            "alpha" => alpha.set(idx[0], idx[1], value),
            "left" => tables[0].set(idx[0], idx[1], idx[2], value),
            _ => tables[1].set(idx[0], idx[1], idx[2], value),
        }
    }
    if !ended {
        return Err(Error::parse(last_line, "missing `end` line"));
    }
    let [left, right] = tables;
    let algebra = HomDialgebra::new(h.name.clone(), left, right, alpha)?;
    Ok(Structure { kind: h.kind, algebra })
}
