//! Text formats for graphs, matrices, polynomials, sampled functions and
//! curves.
//!
//! Reals are written with 17 significant digits and `inf`/`-inf`, exact
//! rationals as `p/q`; every writer's output parses back to an equal value.
//! Readers treat `#` as the start of a comment, except for the
//! `# semiring` header line of matrix files.

use std::fmt::Write as _;

use crate::dequant::{CurvePiece, GenPolynomial, Polytope, Term, TropicalCurve};
use crate::error::{Error, Result};
use crate::interval::{IntervalGraph, IntervalMatrix, IntervalValue};
use crate::linalg::{Edge, Graph, SemiringMatrix};
use crate::scalar::{Exact, Scalar};
use crate::semiring::{ExtReal, SemiringSpec};
use crate::transform::{Convention, SampledFunction};

/// Formats like C's `%.17g`.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp) as usize;
        strip_zeros(format!("{x:.decimals$}"))
    } else {
        format!(
            "{}e{}{:02}",
            strip_zeros(mantissa.to_string()),
            if exp < 0 { '-' } else { '+' },
            exp.abs()
        )
    }
}

fn strip_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn format_ext<T: Scalar>(x: ExtReal<T>) -> String {
    format_real(x.get().to_f64().expect("float converts to f64"))
}

pub fn format_rational<R: Exact>(x: &R) -> String {
    let s = x.to_string();
    if s.contains('/') {
        s
    } else {
        format!("{s}/1")
    }
}

/// Parses a real, accepting `inf`, `+inf` and `-inf`.
pub fn parse_real<T: Scalar>(tok: &str, line: usize) -> Result<T> {
    let v: f64 = match tok {
        "inf" | "+inf" => f64::INFINITY,
        "-inf" => f64::NEG_INFINITY,
        _ => tok
            .parse()
            .ok()
            .filter(|v: &f64| v.is_finite())
            .ok_or_else(|| Error::parse(line, format!("expected a number, got `{tok}`")))?,
    };
    Ok(T::lit(v))
}

/// Parses an exact rational written as `p/q`, an integer, or a decimal
/// such as `-1.25`.
pub fn parse_rational<R: Exact>(tok: &str, line: usize) -> Result<R> {
    let bad = || Error::parse(line, format!("expected a rational, got `{tok}`"));
    let int = |s: &str| s.parse::<i64>().map_err(|_| bad());
    if let Some((p, q)) = tok.split_once('/') {
        let q = int(q)?;
        if q == 0 {
            return Err(Error::parse(line, format!("zero denominator in `{tok}`")));
        }
        return Ok(R::int(int(p)?) / R::int(q));
    }
    if let Some((whole, frac)) = tok.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 18 {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let digits = format!("{}{frac}", whole.trim_start_matches(['-', '+']));
        let num = int(&digits)?;
        let den = 10i64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
        let r = R::int(num) / R::int(den);
        return Ok(if negative { -r } else { r });
    }
    Ok(R::int(int(tok)?))
}

/// Non-blank lines stripped of `#` comments, with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, key: &str) -> Result<(usize, Vec<&'a str>)> {
    let (no, l) = lines
        .next()
        .ok_or_else(|| Error::parse(0, format!("missing `{key}` header")))?;
    let toks: Vec<&str> = l.split_whitespace().collect();
    if toks.first() != Some(&key) {
        return Err(Error::parse(no, format!("expected `{key}` header, got `{l}`")));
    }
    Ok((no, toks[1..].to_vec()))
}

fn count_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<usize> {
    let (no, rest) = header(lines, "n")?;
    match rest.as_slice() {
        [n] => n.parse().map_err(|_| Error::parse(no, format!("bad count `{n}`"))),
        _ => Err(Error::parse(no, "expected `n <count>`")),
    }
}

fn index(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a node index, got `{tok}`")))
}

fn at_line<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::parse(line, other.to_string()),
    })
}

/// Graph file: header `n <count>`, then one edge `src dst weight` per line.
pub fn parse_graph<T: Scalar>(text: &str) -> Result<Graph<T>> {
    let mut lines = content_lines(text);
    let n = count_header(&mut lines)?;
    let mut edges = Vec::new();
    let mut last = 1;
    for (no, l) in lines {
        last = no;
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [s, d, w] = toks.as_slice() else {
            return Err(Error::parse(no, "expected `src dst weight`"));
        };
        edges.push(Edge {
            src: index(s, no)?,
            dst: index(d, no)?,
            weight: parse_real(w, no)?,
        });
    }
    at_line(last, Graph::new(n, edges))
}

/// Interval graph file: header `n <count>`, then `src dst wmin wmax` lines.
pub fn parse_interval_graph<T: Scalar>(text: &str) -> Result<IntervalGraph<T>> {
    let mut lines = content_lines(text);
    let n = count_header(&mut lines)?;
    let mut edges = Vec::new();
    let mut last = 1;
    for (no, l) in lines {
        last = no;
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [s, d, lo, hi] = toks.as_slice() else {
            return Err(Error::parse(no, "expected `src dst wmin wmax`"));
        };
        edges.push((index(s, no)?, index(d, no)?, parse_real(lo, no)?, parse_real(hi, no)?));
    }
    at_line(last, IntervalGraph::new(n, edges))
}

/// TSV matrix preceded by a `# semiring <id>` line.
pub fn write_matrix<T: Scalar>(m: &SemiringMatrix<T>) -> String {
    let mut out = format!("# semiring {}\n", m.spec());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|&x| format_ext(x)).collect();
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

fn semiring_header<T: Scalar>(text: &str) -> Result<(SemiringSpec<T>, bool)> {
    for (i, l) in text.lines().enumerate() {
        let l = l.trim();
        if l.is_empty() {
            continue;
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        return match toks.as_slice() {
            ["#", "semiring", id] => Ok((at_line(i + 1, id.parse())?, false)),
            ["#", "semiring", id, "interval"] => Ok((at_line(i + 1, id.parse())?, true)),
            _ => Err(Error::parse(i + 1, "expected `# semiring <id>` header")),
        };
    }
    Err(Error::parse(0, "empty matrix file"))
}

fn tsv_cells(text: &str) -> Vec<(usize, Vec<&str>)> {
    content_lines(text)
        .map(|(no, l)| (no, l.split('\t').map(str::trim).collect()))
        .collect()
}

pub fn parse_matrix<T: Scalar>(text: &str) -> Result<SemiringMatrix<T>> {
    let (spec, interval) = semiring_header::<T>(text)?;
    if interval {
        return Err(Error::parse(1, "interval matrix where a point matrix was expected"));
    }
    let rows = tsv_cells(text);
    let cols = rows.first().map_or(0, |r| r.1.len());
    let mut entries = Vec::new();
    for (no, cells) in &rows {
        if cells.len() != cols {
            return Err(Error::parse(
                *no,
                format!("expected {cols} columns, got {}", cells.len()),
            ));
        }
        for c in cells {
            entries.push(at_line(*no, ExtReal::new(parse_real::<T>(c, *no)?))?);
        }
    }
    SemiringMatrix::new(rows.len(), cols, entries, spec)
}

/// TSV of numeric intervals `[min,max]` after a `# semiring <id> interval`
/// line.
pub fn write_interval_matrix<T: Scalar>(m: &IntervalMatrix<T>) -> String {
    let mut out = format!("# semiring {} interval\n", m.spec());
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols())
            .map(|j| {
                let (a, b) = m.get(i, j).to_numeric();
                format!("[{},{}]", format_ext(a), format_ext(b))
            })
            .collect();
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

pub fn parse_interval_matrix<T: Scalar>(text: &str) -> Result<IntervalMatrix<T>> {
    let (spec, interval) = semiring_header::<T>(text)?;
    if !interval {
        return Err(Error::parse(1, "expected an interval matrix header"));
    }
    let rows = tsv_cells(text);
    let cols = rows.first().map_or(0, |r| r.1.len());
    let mut entries = Vec::new();
    for (no, cells) in &rows {
        if cells.len() != cols {
            return Err(Error::parse(
                *no,
                format!("expected {cols} columns, got {}", cells.len()),
            ));
        }
        for c in cells {
            let (a, b) = c
                .strip_prefix('[')
                .and_then(|c| c.strip_suffix(']'))
                .and_then(|c| c.split_once(','))
                .ok_or_else(|| Error::parse(*no, format!("expected `[a,b]`, got `{c}`")))?;
            let a = at_line(*no, ExtReal::new(parse_real::<T>(a, *no)?))?;
            let b = at_line(*no, ExtReal::new(parse_real::<T>(b, *no)?))?;
            entries.push(at_line(*no, IntervalValue::from_numeric(a, b, spec.clone()))?);
        }
    }
    IntervalMatrix::from_entries(rows.len(), cols, &entries, spec)
}

/// Polynomial file: header `n <dim>`, then `coeff d1 … dn` per term with
/// exponents as rationals.
pub fn parse_polynomial<T: Scalar, R: Exact>(text: &str) -> Result<GenPolynomial<T, R>> {
    let (dim, rows) = parse_term_rows(text)?;
    let mut terms = Vec::new();
    for (no, c, d) in rows {
        terms.push(Term {
            coeff: parse_real::<T>(c, no)?,
            exponent: d.iter().map(|t| parse_rational(t, no)).collect::<Result<_>>()?,
        });
    }
    GenPolynomial::new(dim, terms)
}

/// The same layout as [`parse_polynomial`] for the max-plus polynomial
/// `max_i ((d_i, x) + c_i)` in two variables, with `c_i` exact.
pub fn parse_tropical_terms<R: Exact>(text: &str) -> Result<Vec<(R, [R; 2])>> {
    let (dim, rows) = parse_term_rows(text)?;
    if dim != 2 {
        return Err(Error::DimensionMismatch(2, dim));
    }
    rows.into_iter()
        .map(|(no, c, d)| {
            Ok((
                parse_rational(c, no)?,
                [parse_rational(d[0], no)?, parse_rational(d[1], no)?],
            ))
        })
        .collect()
}

type TermRow<'a> = (usize, &'a str, Vec<&'a str>);

fn parse_term_rows(text: &str) -> Result<(usize, Vec<TermRow<'_>>)> {
    let mut lines = content_lines(text);
    let dim = count_header(&mut lines)?;
    let mut rows = Vec::new();
    for (no, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != dim + 1 {
            return Err(Error::parse(no, format!("expected a coefficient and {dim} exponents")));
        }
        rows.push((no, toks[0], toks[1..].to_vec()));
    }
    Ok((dim, rows))
}

/// Vertices as `x1 x2; y1 y2; …` in rationals.
pub fn format_polytope<R: Exact>(p: &Polytope<R>) -> String {
    p.vertices()
        .iter()
        .map(|v| v.iter().map(format_rational).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("; ")
}

pub const CURVE_HEADER: &str = "base_x,base_y,dir_x,dir_y,t0,t1";

/// CSV with one row per piece; unbounded parameters are `-inf`/`inf`.
pub fn write_curve<R: Exact>(c: &TropicalCurve<R>) -> String {
    let mut out = format!("{CURVE_HEADER}\n");
    for p in c.pieces() {
        let t0 = p.t0.as_ref().map_or("-inf".into(), format_rational);
        let t1 = p.t1.as_ref().map_or("inf".into(), format_rational);
        let _ = writeln!(
            out,
            "{},{},{},{},{t0},{t1}",
            format_rational(&p.base[0]),
            format_rational(&p.base[1]),
            format_rational(&p.direction[0]),
            format_rational(&p.direction[1]),
        );
    }
    out
}

pub fn parse_curve<R: Exact>(text: &str) -> Result<Vec<CurvePiece<R>>> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, h)) if h == CURVE_HEADER => {}
        Some((no, _)) => return Err(Error::parse(no, format!("expected header `{CURVE_HEADER}`"))),
        None => return Err(Error::parse(0, "empty curve file")),
    }
    lines
        .map(|(no, l)| {
            let f: Vec<&str> = l.split(',').collect();
            let [bx, by, dx, dy, t0, t1] = f.as_slice() else {
                return Err(Error::parse(no, "expected 6 fields"));
            };
            let r = |t: &str| parse_rational::<R>(t, no);
            Ok(CurvePiece {
                base: [r(bx)?, r(by)?],
                direction: [r(dx)?, r(dy)?],
                t0: if *t0 == "-inf" { None } else { Some(r(t0)?) },
                t1: if *t1 == "inf" { None } else { Some(r(t1)?) },
            })
        })
        .collect()
}

/// Header `start <a> step <d> convention <c>`, then one value per line.
pub fn write_sampled<T: Scalar>(f: &SampledFunction<T>) -> String {
    let real = |x: T| format_real(x.to_f64().expect("float converts to f64"));
    let mut out = format!(
        "start {} step {} convention {}\n",
        real(f.start()),
        real(f.step()),
        f.convention()
    );
    for &v in f.values() {
        out.push_str(&format_ext(v));
        out.push('\n');
    }
    out
}

pub fn parse_sampled<T: Scalar>(text: &str) -> Result<SampledFunction<T>> {
    let mut lines = content_lines(text);
    let (no, rest) = header(&mut lines, "start")?;
    let [a, "step", d, "convention", c] = rest.as_slice() else {
        return Err(Error::parse(
            no,
            "expected `start <a> step <d> convention <maxplus|minplus>`",
        ));
    };
    let start = parse_real::<T>(a, no)?;
    let step = parse_real::<T>(d, no)?;
    let convention: Convention = at_line(no, c.parse())?;
    let mut values = Vec::new();
    let mut last = no;
    for (no, l) in lines {
        last = no;
        values.push(at_line(no, ExtReal::new(parse_real::<T>(l, no)?))?);
    }
    at_line(last, SampledFunction::new(start, step, values, convention))
}

/// CSV `x,y` of planar points.
pub fn write_points<T: Scalar>(pts: &[[T; 2]]) -> String {
    let mut out = String::from("x,y\n");
    for p in pts {
        let _ = writeln!(
            out,
            "{},{}",
            format_real(p[0].to_f64().expect("float converts to f64")),
            format_real(p[1].to_f64().expect("float converts to f64"))
        );
    }
    out
}
