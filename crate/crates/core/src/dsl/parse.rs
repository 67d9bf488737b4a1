use std::collections::HashMap;

use super::{ParseError, ParseErrorKind};
use crate::gates::GateSpec;
use crate::qudit::{Register, WireSpec};
use crate::synthesis::{Circuit, Control, GatePlacement};

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    col: usize,
}

/// Whitespace-separated tokens with 1-based columns; `#` starts a comment.
fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in line.char_indices().enumerate() {
        if ch == '#' && start.is_none() {
            return out;
        }
        if ch.is_whitespace() {
            if let Some((b, c)) = start.take() {
                out.push(Token {
                    text: &line[b..byte],
                    col: c + 1,
                });
            }
        } else if start.is_none() {
            start = Some((byte, col));
        }
    }
    if let Some((b, c)) = start {
        out.push(Token {
            text: &line[b..],
            col: c + 1,
        });
    }
    out
}

struct LineCtx {
    line: usize,
}

impl LineCtx {
    fn err(&self, col: usize, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: col,
            kind,
        }
    }
}

fn is_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_header(
    ctx: &LineCtx,
    decls: &[Token<'_>],
    header_col: usize,
) -> Result<Register, ParseError> {
    if decls.is_empty() {
        return Err(ctx.err(header_col, ParseErrorKind::EmptyHeader));
    }
    let mut wires: Vec<WireSpec> = Vec::with_capacity(decls.len());
    for t in decls {
        let bad = || ctx.err(t.col, ParseErrorKind::BadWireDecl(t.text.to_string()));
        let (label, dim) = t.text.split_once(':').ok_or_else(bad)?;
        let dim: usize = dim.parse().map_err(|_| bad())?;
        if !is_label(label) {
            return Err(bad());
        }
        if wires.iter().any(|w| w.label() == label) {
            return Err(ctx.err(t.col, ParseErrorKind::DuplicateWire(label.to_string())));
        }
        wires.push(WireSpec::new(label, dim).map_err(|_| bad())?);
    }
    Register::new(wires)
        .map_err(|e| ctx.err(header_col, ParseErrorKind::InvalidPlacement(e.to_string())))
}

struct Field<'a> {
    value: &'a str,
    col: usize,
}

fn bad_value(ctx: &LineCtx, key: &str, f: &Field<'_>) -> ParseError {
    ctx.err(
        f.col,
        ParseErrorKind::BadValue {
            field: key.to_string(),
            value: f.value.to_string(),
        },
    )
}

/// `<wire>` or `<wire>@<level>`, with the level checked against the wire.
fn wire_ref(
    ctx: &LineCtx,
    reg: &Register,
    key: &str,
    f: &Field<'_>,
    level_required: bool,
) -> Result<(String, Option<usize>), ParseError> {
    let (label, level) = match f.value.split_once('@') {
        Some((l, lv)) => (l, Some(lv)),
        None => (f.value, None),
    };
    if level.is_none() && level_required {
        return Err(bad_value(ctx, key, f));
    }
    let wire = reg
        .wire(label)
        .map_err(|_| ctx.err(f.col, ParseErrorKind::UnknownWire(label.to_string())))?;
    let level = match level {
        None => None,
        Some(lv) => {
            let lv: usize = lv.parse().map_err(|_| bad_value(ctx, key, f))?;
            if lv >= wire.dim() {
                return Err(ctx.err(
                    f.col,
                    ParseErrorKind::LevelOutOfRange {
                        wire: label.to_string(),
                        level: lv,
                        dim: wire.dim(),
                    },
                ));
            }
            Some(lv)
        }
    };
    Ok((label.to_string(), level))
}

fn parse_gate(
    ctx: &LineCtx,
    reg: &Register,
    gate_tok: &Token<'_>,
    name: Option<&Token<'_>>,
    rest: &[Token<'_>],
) -> Result<GatePlacement, ParseError> {
    let name = name.ok_or_else(|| ctx.err(gate_tok.col, ParseErrorKind::MissingField("name")))?;
    let allowed: &[&str] = match name.text {
        "CNOT" => &["target"],
        "SX" => &["wire"],
        "X" => &["swap", "wire", "dim"],
        "HWP" => &["angle", "wire"],
        other => return Err(ctx.err(name.col, ParseErrorKind::UnknownGate(other.to_string()))),
    };

    let mut controls = Vec::new();
    let mut fields: HashMap<&str, Field<'_>> = HashMap::new();
    for t in rest {
        let (key, value) = t
            .text
            .split_once('=')
            .ok_or_else(|| ctx.err(t.col, ParseErrorKind::UnexpectedField(t.text.to_string())))?;
        let field = Field {
            value,
            col: t.col + key.len() + 1,
        };
        if key == "control" {
            let (wire, level) = wire_ref(ctx, reg, key, &field, true)?;
            if controls.iter().any(|c: &Control| c.wire == wire) {
                return Err(ctx.err(
                    t.col,
                    ParseErrorKind::DuplicateField(format!("control={wire}")),
                ));
            }
            controls.push(Control::new(wire, level.expect("required")));
        } else if allowed.contains(&key) {
            if fields.insert(key, field).is_some() {
                return Err(ctx.err(t.col, ParseErrorKind::DuplicateField(key.to_string())));
            }
        } else {
            return Err(ctx.err(t.col, ParseErrorKind::UnexpectedField(key.to_string())));
        }
    }

    let required = |key: &'static str| {
        fields
            .get(key)
            .ok_or_else(|| ctx.err(name.col, ParseErrorKind::MissingField(key)))
    };
    let target_key = if name.text == "CNOT" {
        "target"
    } else {
        "wire"
    };
    let target_field = required(target_key)?;
    let (target, offset) = wire_ref(ctx, reg, target_key, target_field, false)?;
    let offset = offset.unwrap_or(0);

    let gate = match name.text {
        "CNOT" => {
            if controls.is_empty() {
                return Err(ctx.err(name.col, ParseErrorKind::MissingField("control")));
            }
            GateSpec::SigmaX
        }
        "SX" => GateSpec::SigmaX,
        "X" => {
            let f = required("swap")?;
            let (a, b) = f
                .value
                .split_once(',')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                .ok_or_else(|| bad_value(ctx, "swap", f))?;
            let dim = match fields.get("dim") {
                Some(f) => f.value.parse().map_err(|_| bad_value(ctx, "dim", f))?,
                None => reg.wire(&target).expect("checked").dim() - offset,
            };
            GateSpec::XSwap { a, b, dim }
        }
        "HWP" => {
            let f = required("angle")?;
            let degrees: f64 = f
                .value
                .parse()
                .ok()
                .filter(|d: &f64| d.is_finite())
                .ok_or_else(|| bad_value(ctx, "angle", f))?;
            GateSpec::Hwp { degrees }
        }
        _ => unreachable!("gate names filtered above"),
    };

    Ok(GatePlacement {
        gate,
        target,
        offset,
        controls,
    })
}

/// Parses a circuit document. Every failure carries a line and column.
pub fn parse(text: &str) -> Result<Circuit, ParseError> {
    let mut circuit: Option<Circuit> = None;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let ctx = LineCtx { line: i + 1 };
        last_line = i + 1;
        let toks = tokenize(raw);
        let Some(first) = toks.first() else { continue };
        match first.text {
            "wires:" => {
                if circuit.is_some() {
                    return Err(ctx.err(first.col, ParseErrorKind::DuplicateHeader));
                }
                circuit = Some(Circuit::new(parse_header(&ctx, &toks[1..], first.col)?));
            }
            "gate" => {
                let c = circuit
                    .as_mut()
                    .ok_or_else(|| ctx.err(first.col, ParseErrorKind::MissingHeader))?;
                let placement = parse_gate(
                    &ctx,
                    c.register(),
                    first,
                    toks.get(1),
                    toks.get(2..).unwrap_or(&[]),
                )?;
                c.push(placement).map_err(|e| {
                    ctx.err(toks[1].col, ParseErrorKind::InvalidPlacement(e.to_string()))
                })?;
            }
            other => {
                return Err(ctx.err(
                    first.col,
                    ParseErrorKind::UnknownStatement(other.to_string()),
                ));
            }
        }
    }
    circuit.ok_or(ParseError {
        line: last_line.max(1),
        column: 1,
        kind: ParseErrorKind::MissingHeader,
    })
}
