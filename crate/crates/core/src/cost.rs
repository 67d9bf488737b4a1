//! Closed-form CNOT counts, evaluated in exact rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::registry::Registry;

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn pow2(n: u32) -> BigRational {
    BigRational::from_integer(BigInt::one() << n as usize)
}

fn pow4(n: u32) -> BigRational {
    BigRational::from_integer(BigInt::one() << (2 * n as usize))
}

/// Quantum Shannon decomposition: `(23/48) 4^n - (3/2) 2^n + 4/3`.
pub fn qsd_count(n: u32) -> BigRational {
    frac(23, 48) * pow4(n) - frac(3, 2) * pow2(n) + frac(4, 3)
}

/// Generic lower bound `(4^n - 3n - 1) / 4`.
pub fn lower_bound(n: u32) -> BigRational {
    (pow4(n) - int(3 * n as i64) - int(1)) / int(4)
}

/// Auxiliary-space construction: `(5/16) 4^n - (5/4) 2^n + 2n` for even
/// `n`, `(5/16) 4^n - 2^n + 2(n - 1)` for odd `n`.
pub fn li_count(n: u32) -> BigRational {
    let n64 = n as i64;
    if n.is_multiple_of(2) {
        frac(5, 16) * pow4(n) - frac(5, 4) * pow2(n) + int(2 * n64)
    } else {
        frac(5, 16) * pow4(n) - pow2(n) + int(2 * (n64 - 1))
    }
}

/// CNOTs in the `n`-control qudit Fredkin: `2n + 3`.
pub fn fredkin_count(n_controls: u32) -> u64 {
    2 * n_controls as u64 + 3
}

/// A CNOT-count formula selectable by name.
pub trait CostFormula: Send + Sync {
    fn name(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    fn count(&self, n: u32) -> BigRational;
}

struct Qsd;
struct LowerBound;
struct Li;
struct Fredkin;

impl CostFormula for Qsd {
    fn name(&self) -> &'static str {
        "qsd"
    }
    fn describe(&self) -> &'static str {
        "quantum Shannon decomposition, generic n-qubit unitary"
    }
    fn count(&self, n: u32) -> BigRational {
        qsd_count(n)
    }
}

impl CostFormula for LowerBound {
    fn name(&self) -> &'static str {
        "lower_bound"
    }
    fn describe(&self) -> &'static str {
        "theoretical lower bound, generic n-qubit unitary"
    }
    fn count(&self, n: u32) -> BigRational {
        lower_bound(n)
    }
}

impl CostFormula for Li {
    fn name(&self) -> &'static str {
        "li"
    }
    fn describe(&self) -> &'static str {
        "auxiliary-space synthesis, generic n-qubit unitary"
    }
    fn count(&self, n: u32) -> BigRational {
        li_count(n)
    }
}

impl CostFormula for Fredkin {
    fn name(&self) -> &'static str {
        "fredkin"
    }
    fn describe(&self) -> &'static str {
        "qudit-assisted n-control Fredkin"
    }
    fn count(&self, n: u32) -> BigRational {
        int(fredkin_count(n) as i64)
    }
}

/// The built-in formulas in table column order.
pub fn formulas() -> Registry<dyn CostFormula> {
    let mut r: Registry<dyn CostFormula> = Registry::new("cost formula");
    for f in [
        Box::new(Qsd) as Box<dyn CostFormula>,
        Box::new(LowerBound),
        Box::new(Li),
        Box::new(Fredkin),
    ] {
        r.register(f.name(), f);
    }
    r
}

#[derive(Debug, Clone, PartialEq)]
pub struct CostRow {
    pub n: u32,
    pub qsd: BigRational,
    pub lower_bound: BigRational,
    pub li: BigRational,
    pub fredkin_n_control: u64,
}

pub fn cost_table(max_n: u32) -> Vec<CostRow> {
    (1..=max_n)
        .map(|n| CostRow {
            n,
            qsd: qsd_count(n),
            lower_bound: lower_bound(n),
            li: li_count(n),
            fredkin_n_control: fredkin_count(n),
        })
        .collect()
}

/// `p` for integers, `p/q` otherwise.
pub fn format_exact(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Tab-separated table with one column per named formula.
pub fn render_tsv(registry: &Registry<dyn CostFormula>, max_n: u32) -> String {
    let mut out = String::from("n");
    for name in registry.names() {
        out.push('\t');
        out.push_str(name);
    }
    out.push('\n');
    for n in 1..=max_n {
        out.push_str(&n.to_string());
        for (_, f) in registry.iter() {
            out.push('\t');
            out.push_str(&format_exact(&f.count(n)));
        }
        out.push('\n');
    }
    out
}

/// Aligned table with decimal values and an unscaled `n^2` reference
/// column (the quadratic scaling has no published constant).
pub fn render_human(registry: &Registry<dyn CostFormula>, max_n: u32) -> String {
    let mut header = vec!["n".to_string()];
    header.extend(registry.names().map(str::to_string));
    header.push("n^2 (ref)".into());
    let mut rows = vec![header];
    for n in 1..=max_n {
        let mut row = vec![n.to_string()];
        for (_, f) in registry.iter() {
            let v = f.count(n);
            if v.is_integer() {
                row.push(format_exact(&v));
            } else {
                row.push(format!(
                    "{} ({})",
                    format_exact(&v),
                    crate::report::sig(to_f64(&v))
                ));
            }
        }
        row.push((n as u64 * n as u64).to_string());
        rows.push(row);
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

impl CostRow {
    /// `qsd * 48` is always integral.
    pub fn qsd_times_48_is_integer(&self) -> bool {
        (&self.qsd * int(48)).is_integer()
    }
}
