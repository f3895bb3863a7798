use crate::{blade_label, label_table, parse_blade_label, AlgebraError, Multivector, Side};

/// Canonical text form: terms in the conventional per-dimension blade order,
/// zero coefficients skipped, coefficients printed with the shortest
/// round-tripping decimal representation (never scientific notation, so a
/// coefficient can always be told apart from a blade label).
pub fn format_multivector(m: &Multivector) -> String {
    let mut out = String::new();
    for entry in label_table(m.n()) {
        let displayed = m.coeff(entry.mask) * entry.sign;
        if displayed == 0.0 {
            continue;
        }
        let (label, _) = blade_label(m.n(), entry.mask, m.side());
        let mag = displayed.abs();
        if out.is_empty() {
            if displayed < 0.0 {
                out.push('-');
            }
        } else if displayed < 0.0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if entry.mask == 0 {
            out.push_str(&format!("{mag}"));
        } else if mag == 1.0 {
            out.push_str(&label);
        } else {
            out.push_str(&format!("{mag}{label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Plain-decimal scalar formatting at 12 significant digits, trailing zeros
/// trimmed, integers without a decimal point. Never scientific notation.
pub fn format_scalar(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let rounded = x.round();
    if x == rounded && x.abs() < 1e15 {
        return format!("{}", rounded as i64);
    }
    let exp10 = x.abs().log10().floor() as i32;
    let decimals = (11 - exp10).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse(format!("{msg} at position {}", self.pos))
    }
}

/// Parse the canonical text form back into a multivector. The side comes
/// from the blade letters (e = dual, E = target, a pure scalar reads as
/// dual); mixing letters is a side mismatch.
pub fn parse_multivector(input: &str, n: u8) -> Result<Multivector, AlgebraError> {
    let mut cur = Cursor {
        src: input.as_bytes(),
        pos: 0,
    };
    let mut side: Option<Side> = None;
    let mut terms: Vec<(u16, f64)> = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            if first {
                return Err(cur.err("empty multivector"));
            }
            break;
        }
        let mut sign = 1.0;
        let mut saw_sign = false;
        while let Some(c) = cur.peek() {
            match c {
                b'+' => {
                    cur.pos += 1;
                    saw_sign = true;
                }
                b'-' => {
                    sign = -sign;
                    cur.pos += 1;
                    saw_sign = true;
                }
                b if (b as char).is_whitespace() => cur.pos += 1,
                _ => break,
            }
        }
        if !first && !saw_sign {
            return Err(cur.err("expected '+' or '-' between terms"));
        }
        cur.skip_ws();
        let (mask, term_side, coeff) = parse_term(&mut cur, n)?;
        if let Some(ts) = term_side {
            match side {
                None => side = Some(ts),
                Some(s) if s != ts => return Err(AlgebraError::SideMismatch),
                _ => {}
            }
        }
        terms.push((mask, sign * coeff));
        first = false;
    }
    let side = side.unwrap_or(Side::Dual);
    Ok(Multivector::from_terms(n, side, &terms))
}

/// One term: number, blade, or number followed directly by a blade. Numbers
/// are plain decimals; there is deliberately no exponent form, so "1e3"
/// reads as coefficient 1 on blade e3.
fn parse_term(cur: &mut Cursor, n: u8) -> Result<(u16, Option<Side>, f64), AlgebraError> {
    let number = parse_number(cur)?;
    let blade = parse_blade(cur, n)?;
    match (number, blade) {
        (Some(v), None) => Ok((0, None, v)),
        (None, Some((mask, side, perm_sign))) => Ok((mask, Some(side), perm_sign)),
        (Some(v), Some((mask, side, perm_sign))) => Ok((mask, Some(side), v * perm_sign)),
        (None, None) => Err(cur.err("expected a number or blade")),
    }
}

fn parse_number(cur: &mut Cursor) -> Result<Option<f64>, AlgebraError> {
    let start = cur.pos;
    let mut saw_digit = false;
    while let Some(c) = cur.peek() {
        if c.is_ascii_digit() {
            saw_digit = true;
            cur.pos += 1;
        } else if c == b'.' {
            cur.pos += 1;
        } else {
            break;
        }
    }
    if cur.pos == start {
        return Ok(None);
    }
    if !saw_digit {
        return Err(cur.err("lone '.' is not a number"));
    }
    let text = std::str::from_utf8(&cur.src[start..cur.pos]).unwrap();
    text.parse::<f64>()
        .map(Some)
        .map_err(|_| cur.err("malformed number"))
}

fn parse_blade(
    cur: &mut Cursor,
    n: u8,
) -> Result<Option<(u16, Side, f64)>, AlgebraError> {
    let side = match cur.peek() {
        Some(b'e') => Side::Dual,
        Some(b'E') => Side::Target,
        _ => return Ok(None),
    };
    cur.pos += 1;
    let start = cur.pos;
    while cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        cur.pos += 1;
    }
    if cur.pos == start {
        return Err(cur.err("blade letter needs indices"));
    }
    let indices = std::str::from_utf8(&cur.src[start..cur.pos]).unwrap();
    let (mask, sign) = parse_blade_label(indices, n)?;
    Ok(Some((mask, side, sign)))
}
