use std::path::Path;

use serde_json::{json, Value};
use tangent_core::{
    check_tangency, decompose, derive_poly, derive_ratfun, dual, intersection_multiplicity,
    parse_poly, parse_ratfun, quotient_table, rules, tangent_at, taylor_shift, Dual,
    ElementaryFn, LinearFunction, Multiplicity, Polynomial, Rational,
};

use crate::envelope::{fields, CliError, Report};
use crate::plot::{self, PlotSpec};

/// Significant digits in decimal renderings.
const DECIMAL_DIGITS: usize = 12;

type CmdResult = Result<Report, CliError>;

fn poly_arg(name: &str, text: &str) -> Result<Polynomial, CliError> {
    parse_poly(text).map_err(|e| CliError::from_core(name, e))
}

fn rational_arg(name: &str, text: &str) -> Result<Rational, CliError> {
    text.parse::<Rational>().map_err(|e| CliError::from_core(name, e))
}

fn float_arg(name: &str, text: &str) -> Result<f64, CliError> {
    text.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| CliError::Input(format!("{name}: invalid number `{text}`")))
}

fn multiplicity_json(m: Multiplicity) -> Value {
    match m {
        Multiplicity::Finite(n) => json!(n),
        Multiplicity::Infinite => json!("INFINITE"),
    }
}

fn s(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

/// `(x - 3)`, or `x` when the point is 0.
fn factor_text(p: &Rational) -> String {
    Polynomial::linear_factor(p).to_string()
}

pub fn tangent(expr: &str, p: &str) -> CmdResult {
    let f = poly_arg("expr", expr)?;
    let p = rational_arg("p", p)?;
    let t = tangent_at(&f, &p).map_err(|e| CliError::from_core("tangent", e))?;
    let line = t.line();
    let verified = t.is_certificate_for(&f);
    if !verified {
        return Err(CliError::Internal("tangent certificate failed re-verification".into()));
    }
    let certificate = format!(
        "{f} - ({}) = ({})^2 * ({})",
        line.to_polynomial(),
        factor_text(&p),
        t.cofactor
    );
    let text = format!(
        "f(x) = {f}\np = {p}\ntangent: {line}\nk = {}\nb = {}\nQ(x) = {}\ncertificate: {certificate} [verified]\n",
        t.k, t.b, t.cofactor
    );
    Ok(Report {
        inputs: fields([("expr", s(&f)), ("p", s(&p))]),
        result: json!({
            "k": t.k.to_string(),
            "b": t.b.to_string(),
            "cofactor": t.cofactor.to_string(),
            "equation": line.to_string(),
            "certificate": certificate,
            "verified": verified,
        }),
        text,
    })
}

pub fn derive(expr: &str) -> CmdResult {
    let r = parse_ratfun(expr).map_err(|e| CliError::from_core("expr", e))?;
    let (kind, derivative) = match r.as_poly() {
        Some(f) => ("polynomial", derive_poly(f).to_string()),
        None => ("rational_function", derive_ratfun(&r).to_string()),
    };
    Ok(Report {
        inputs: fields([("expr", s(&r))]),
        result: json!({ "kind": kind, "derivative": derivative }),
        text: format!("f(x) = {r}\nf'(x) = {derivative}\n"),
    })
}

struct LineArgs {
    f: Polynomial,
    line: LinearFunction,
    p: Rational,
}

fn line_args(expr: &str, k: &str, b: &str, p: &str) -> Result<LineArgs, CliError> {
    Ok(LineArgs {
        f: poly_arg("expr", expr)?,
        line: LinearFunction::new(rational_arg("k", k)?, rational_arg("b", b)?),
        p: rational_arg("p", p)?,
    })
}

fn line_inputs(a: &LineArgs) -> serde_json::Map<String, Value> {
    fields([
        ("expr", s(&a.f)),
        ("k", s(&a.line.k)),
        ("b", s(&a.line.b)),
        ("p", s(&a.p)),
    ])
}

pub fn check(expr: &str, k: &str, b: &str, p: &str) -> CmdResult {
    let a = line_args(expr, k, b, p)?;
    let m = intersection_multiplicity(&a.f, &a.line, &a.p);
    let tangent = check_tangency(&a.f, &a.line, &a.p);
    if tangent != m.at_least(2) {
        return Err(CliError::Internal(
            "divisibility test and multiplicity disagree".into(),
        ));
    }
    let difference = &a.f - &a.line.to_polynomial();
    let verdict = match (tangent, m) {
        (true, Multiplicity::Infinite) => "tangent (line coincides with the graph)",
        (true, _) => "tangent",
        (false, Multiplicity::Finite(0)) => "not tangent (line misses the point)",
        (false, _) => "not tangent (line crosses the graph)",
    };
    let text = format!(
        "f(x) = {}\nline: {}\np = {}\nf(x) - line = {difference}\nmultiplicity at p: {m}\nverdict: {verdict}\n",
        a.f, a.line, a.p
    );
    Ok(Report {
        inputs: line_inputs(&a),
        result: json!({
            "difference": difference.to_string(),
            "multiplicity": multiplicity_json(m),
            "tangent": tangent,
        }),
        text,
    })
}

pub fn mult(expr: &str, k: &str, b: &str, p: &str) -> CmdResult {
    let a = line_args(expr, k, b, p)?;
    let m = intersection_multiplicity(&a.f, &a.line, &a.p);
    Ok(Report {
        inputs: line_inputs(&a),
        result: json!({ "multiplicity": multiplicity_json(m) }),
        text: format!("{m}\n"),
    })
}

pub fn expand(expr: &str, p: &str) -> CmdResult {
    let f = poly_arg("expr", expr)?;
    let p = rational_arg("p", p)?;
    let e = taylor_shift(&f, &p);
    let in_t = e.in_t().render("t");
    Ok(Report {
        inputs: fields([("expr", s(&f)), ("p", s(&p))]),
        result: json!({
            "coefficients": e.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "expansion": in_t,
        }),
        text: format!("f({p} + t) = {in_t}\n"),
    })
}

pub fn decompose_cmd(expr: &str, x0: &str) -> CmdResult {
    let f = poly_arg("expr", expr)?;
    let x0 = rational_arg("x0", x0)?;
    let d = decompose(&f, &x0);
    if d.reconstruct() != f || !d.remainder_valuation().at_least(2) {
        return Err(CliError::Internal("decomposition failed re-verification".into()));
    }
    let remainder = d.remainder.render("t");
    let valuation = d.remainder_valuation();
    let text = format!(
        "f(x) = {f}\nx0 = {x0}\nf(x0) = {}\nf'(x0) = {}\nR(t) = {remainder}\nvaluation of R: {valuation}\nf({x0} + t) = {} + {}*t + R(t)\n",
        d.value, d.slope, d.value, d.slope
    );
    Ok(Report {
        inputs: fields([("expr", s(&f)), ("x0", s(&x0))]),
        result: json!({
            "value": d.value.to_string(),
            "slope": d.slope.to_string(),
            "remainder": remainder,
            "valuation": multiplicity_json(valuation),
        }),
        text,
    })
}

pub fn table(expr: &str, x0: &str, steps: u32) -> CmdResult {
    let f = poly_arg("expr", expr)?;
    let x0 = rational_arg("x0", x0)?;
    let slope = derive_poly(&f).eval(&x0);
    let rows = quotient_table(&f, &x0, steps);
    let dec = |r: &Rational| r.to_sig_decimal(DECIMAL_DIGITS);

    let mut text = format!("f(x) = {f}\nx0 = {x0}\nf'(x0) = {slope}\n");
    text.push_str("h | dy | dy/h | dy/h - f'(x0)\n");
    let mut json_rows = Vec::with_capacity(rows.len());
    for row in &rows {
        text.push_str(&format!(
            "{} | {} | {} ({}) | {} ({})\n",
            row.h,
            row.dy,
            row.quotient,
            dec(&row.quotient),
            row.gap,
            dec(&row.gap)
        ));
        json_rows.push(json!({
            "h": row.h.to_string(),
            "dy": row.dy.to_string(),
            "quotient": row.quotient.to_string(),
            "quotient_decimal": dec(&row.quotient),
            "gap": row.gap.to_string(),
            "gap_decimal": dec(&row.gap),
        }));
    }
    Ok(Report {
        inputs: fields([("expr", s(&f)), ("x0", s(&x0)), ("steps", json!(steps))]),
        result: json!({ "slope": slope.to_string(), "rows": json_rows }),
        text,
    })
}

pub fn rules_cmd(f_expr: &str, g_expr: &str) -> CmdResult {
    let f = poly_arg("f", f_expr)?;
    let g = poly_arg("g", g_expr)?;
    let mut entries = Vec::new();
    let mut text = format!("f(x) = {f}\ng(x) = {g}\n");
    let mut failed = Vec::new();
    for (rule, outcome) in rules::verify_all(&f, &g) {
        match outcome {
            Ok(report) => {
                if !report.holds {
                    failed.push(rule.name());
                }
                text.push_str(&format!(
                    "{:<8} {}: {} = {} [{}]\n",
                    rule.name(),
                    rule.statement(),
                    report.lhs,
                    report.rhs,
                    if report.holds { "holds" } else { "FAILS" }
                ));
                entries.push(json!({
                    "rule": rule.name(),
                    "statement": rule.statement(),
                    "lhs": report.lhs.to_string(),
                    "rhs": report.rhs.to_string(),
                    "holds": report.holds,
                }));
            }
            Err(err) => {
                text.push_str(&format!("{:<8} {}: input error: {err}\n", rule.name(), rule.statement()));
                entries.push(json!({
                    "rule": rule.name(),
                    "statement": rule.statement(),
                    "holds": Value::Null,
                    "error": err.to_string(),
                }));
            }
        }
    }
    if !failed.is_empty() {
        return Err(CliError::Internal(format!("rule identities failed: {}", failed.join(", "))));
    }
    Ok(Report {
        inputs: fields([("f", s(&f)), ("g", s(&g))]),
        result: json!({ "rules": entries }),
        text,
    })
}

pub struct PlotArgs<'a> {
    pub expr: &'a str,
    pub p: &'a str,
    pub range: Option<&'a str>,
    pub dx: Option<&'a str>,
    pub size: &'a str,
    pub output: Option<&'a Path>,
}

fn parse_range(text: &str) -> Result<(Rational, Rational), CliError> {
    let (lo, hi) = text
        .split_once(',')
        .ok_or_else(|| CliError::Input(format!("range: expected `lo,hi`, got `{text}`")))?;
    let lo = rational_arg("range", lo)?;
    let hi = rational_arg("range", hi)?;
    if lo >= hi {
        return Err(CliError::Input(format!("range: empty range {lo}..{hi}")));
    }
    Ok((lo, hi))
}

fn parse_size(text: &str) -> Result<(u32, u32), CliError> {
    let bad = || CliError::Input(format!("size: expected `WxH` with both at least 100, got `{text}`"));
    let (w, h) = text.split_once('x').ok_or_else(bad)?;
    let w: u32 = w.trim().parse().map_err(|_| bad())?;
    let h: u32 = h.trim().parse().map_err(|_| bad())?;
    if w < 100 || h < 100 {
        return Err(bad());
    }
    Ok((w, h))
}

/// Writes the SVG to `output`, or returns it as the text output when no
/// path is given.
pub fn plot_cmd(args: &PlotArgs) -> CmdResult {
    let f = poly_arg("expr", args.expr)?;
    let p = rational_arg("p", args.p)?;
    let (lo, hi) = match args.range {
        Some(r) => parse_range(r)?,
        None => (&p - &Rational::from(3), &p + &Rational::from(3)),
    };
    let dx = args.dx.map(|d| rational_arg("dx", d)).transpose()?;
    let (width, height) = parse_size(args.size)?;

    let spec = PlotSpec {
        f: &f,
        p: p.clone(),
        lo: lo.clone(),
        hi: hi.clone(),
        dx: dx.clone(),
        width,
        height,
    };
    let (svg, mut summary) = plot::render(&spec);

    let mut inputs = fields([
        ("expr", s(&f)),
        ("p", s(&p)),
        ("range", json!([lo.to_string(), hi.to_string()])),
        ("dx", dx.as_ref().map_or(Value::Null, s)),
        ("size", s(format!("{width}x{height}"))),
    ]);
    let text = match args.output {
        Some(path) => {
            std::fs::write(path, &svg)?;
            inputs.insert("output".into(), s(path.display()));
            summary["output"] = s(path.display());
            format!("wrote {}\n", path.display())
        }
        None => svg,
    };
    Ok(Report {
        inputs,
        result: summary,
        text,
    })
}

pub fn dual_cmd(function: &str, a: &str, b: &str) -> CmdResult {
    if let Ok(func) = function.parse::<ElementaryFn>() {
        let av = float_arg("a", a)?;
        let bv = float_arg("b", b)?;
        let out = func
            .apply(Dual::new(av, bv))
            .map_err(|e| CliError::from_core("dual", e))?;
        return Ok(Report {
            inputs: fields([("function", s(func.name())), ("a", json!(av)), ("b", json!(bv))]),
            result: json!({ "real": out.real, "eps": out.eps }),
            text: format!("{}({av} + {bv}ε) = {} + {}ε\n", func.name(), out.real, out.eps),
        });
    }
    let f = poly_arg("function", function)?;
    let av = rational_arg("a", a)?;
    let bv = rational_arg("b", b)?;
    let out = dual::eval_poly(&f, &Dual::new(av.clone(), bv.clone()));
    Ok(Report {
        inputs: fields([("function", s(&f)), ("a", s(&av)), ("b", s(&bv))]),
        result: json!({ "real": out.real.to_string(), "eps": out.eps.to_string() }),
        text: format!("f(x) = {f}\nf({av} + {bv}ε) = {} + {}ε\n", out.real, out.eps),
    })
}
