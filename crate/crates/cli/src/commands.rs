//! Argument parsing and dispatch.
//!
//! Every subcommand builds one [`Document`] and the process prints it to
//! stdout in the requested format. Exit codes: 0 on success, 1 on a domain
//! error (reported as a JSON object with `error.kind`), 2 on a usage error.
//! Domain errors render as JSON in every format so the `error.kind` field
//! stays machine-readable.

use clap::{Parser, Subcommand};
use fqlab::combinatorics::{census_covers_oracle, stirling_signed, stirling_unsigned};
use fqlab::covers::{check_bounds, parse_curve, KummerCurve};
use fqlab::ffield::{make_field, FieldCtx};
use fqlab::pgl::{classify, enumerate_pgl, orbits_on_p1, subgroup_closure, PGLElement};
use fqlab::projective;
use fqlab::quotients::{curve_invariance_report, InvarianceReport, ParamOrbits};
use fqlab::zeta::fit_numerator;
use fqlab::Error;
use serde_json::{Map, Value};

use crate::output::{self, big, biguint, rational, uint, Document, Format};
use crate::verify::{self, Scale};

#[derive(Parser)]
#[command(
    name = "fqlab",
    version,
    about = "Finite fields, curve point counts, zeta functions, and PGL(2,q)"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Finite field construction
    Field {
        #[command(subcommand)]
        cmd: FieldCmd,
    },
    /// Projective spaces over finite fields
    Projective {
        #[command(subcommand)]
        cmd: ProjectiveCmd,
    },
    /// Triangle of Stirling numbers of the first kind for n = 0..=N
    Stirling {
        /// Largest row of the triangle.
        #[arg(long)]
        table: u64,
    },
    /// Census of monic polynomials up to affine substitution x -> ax+b
    Census {
        /// Field characteristic.
        #[arg(long)]
        p: u64,
        /// Field extension degree.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Polynomial degree to census.
        #[arg(long)]
        deg: u64,
        /// Cover degree recorded in the report.
        #[arg(long)]
        cover_degree: u64,
    },
    /// Superelliptic curves y^n = c(x-r_1)^d_1 ... (x-r_s)^d_s
    Covers {
        #[command(subcommand)]
        cmd: CoversCmd,
    },
    /// Zeta function numerators from point counts
    Zeta {
        #[command(subcommand)]
        cmd: ZetaCmd,
    },
    /// The projective linear group PGL(2,q) acting on P^1
    Pgl {
        #[command(subcommand)]
        cmd: PglCmd,
    },
    /// Monomial invariants of coordinate substitutions
    Quotient {
        #[command(subcommand)]
        cmd: QuotientCmd,
    },
    /// Run the full acceptance suite
    VerifyAll {
        #[arg(long, value_enum, default_value_t = Scale::Small)]
        scale: Scale,
        /// Seed for the randomized criteria.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Subcommand)]
pub enum FieldCmd {
    /// Describe F_{p^n} and its canonical modulus
    Info {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

#[derive(Subcommand)]
pub enum ProjectiveCmd {
    /// Number of points of P^dim(F_{p^n})
    Count {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        dim: usize,
    },
}

#[derive(Subcommand)]
pub enum CoversCmd {
    /// Genus of the smooth model, with the ramification data
    Genus {
        /// Field order (prime power).
        #[arg(long)]
        q: u64,
        /// Curve, e.g. "y^2 = (x-0)(x-1)(x-4)".
        #[arg(long)]
        curve: String,
    },
    /// Point counts over F_{q^r}
    Points {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        curve: String,
    },
    /// Weil-type bounds on the smooth-model count over F_{q^r}
    Bounds {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        curve: String,
    },
}

#[derive(Subcommand)]
pub enum ZetaCmd {
    /// Fit the numerator P(t) from N_1..N_g and predict N_1..N_2g
    Fit {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        g: u64,
        /// Comma-separated counts N_1,...,N_g.
        #[arg(long)]
        counts: String,
    },
    /// Check a count sequence against the fitted numerator
    Check {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        g: u64,
        /// Comma-separated counts N_1,...,N_k with k >= g.
        #[arg(long)]
        counts: String,
        /// Series comparison order; defaults to the number of counts.
        #[arg(long)]
        order: Option<usize>,
    },
}

#[derive(Subcommand)]
pub enum PglCmd {
    /// Order of PGL(2,q) by enumeration
    Order {
        #[arg(long)]
        q: u64,
    },
    /// Conjugacy type and fixed points of one element
    Classify {
        #[arg(long)]
        q: u64,
        /// Row-major integer entries "a,b,c,d".
        #[arg(long)]
        matrix: String,
    },
    /// Orbits on P^1 of the subgroup generated by the given matrices
    Orbits {
        #[arg(long)]
        q: u64,
        /// Semicolon-separated generators, each "a,b,c,d".
        #[arg(long)]
        gens: String,
    },
}

#[derive(Subcommand)]
pub enum QuotientCmd {
    /// Invariance and orbit report for y^m = 1 - x^(q0-1) over F_{q0^2}
    Invariants {
        #[arg(long)]
        q0: u64,
        #[arg(long)]
        m: u64,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = err.exit_code();
            let _ = err.print();
            return code;
        }
    };
    let format = cli.format;
    match dispatch(cli.command) {
        Ok((doc, code)) => {
            print!("{}", output::render(&doc, format));
            code
        }
        Err(err) => {
            let mut inner = Map::new();
            inner.insert("kind".into(), Value::from(err.kind()));
            inner.insert("message".into(), Value::from(err.to_string()));
            let mut doc = Map::new();
            doc.insert("error".into(), Value::Object(inner));
            print!("{}", output::render(&Document::Map(doc), Format::Json));
            1
        }
    }
}

fn dispatch(command: Command) -> fqlab::Result<(Document, i32)> {
    let doc = match command {
        Command::Field { cmd } => match cmd {
            FieldCmd::Info { p, n } => field_info(p, n)?,
        },
        Command::Projective { cmd } => match cmd {
            ProjectiveCmd::Count { p, n, dim } => projective_count(p, n, dim)?,
        },
        Command::Stirling { table } => stirling_table(table)?,
        Command::Census { p, n, deg, cover_degree } => census(p, n, deg, cover_degree)?,
        Command::Covers { cmd } => match cmd {
            CoversCmd::Genus { q, curve } => covers_genus(q, &curve)?,
            CoversCmd::Points { q, r, curve } => covers_points(q, r, &curve)?,
            CoversCmd::Bounds { q, r, curve } => covers_bounds(q, r, &curve)?,
        },
        Command::Zeta { cmd } => match cmd {
            ZetaCmd::Fit { q, g, counts } => zeta_fit(q, g, &counts)?,
            ZetaCmd::Check { q, g, counts, order } => zeta_check(q, g, &counts, order)?,
        },
        Command::Pgl { cmd } => match cmd {
            PglCmd::Order { q } => pgl_order(q)?,
            PglCmd::Classify { q, matrix } => pgl_classify(q, &matrix)?,
            PglCmd::Orbits { q, gens } => pgl_orbits(q, &gens)?,
        },
        Command::Quotient { cmd } => match cmd {
            QuotientCmd::Invariants { q0, m } => quotient_invariants(q0, m)?,
        },
        Command::VerifyAll { scale, seed } => {
            let workers = verify::workers_from_env();
            let (doc, all_pass) = verify::verify_all(scale, seed, workers);
            return Ok((doc, if all_pass { 0 } else { 1 }));
        }
    };
    Ok((doc, 0))
}

fn field_info(p: u64, n: usize) -> fqlab::Result<Document> {
    let ctx = make_field(p, n)?;
    let mut doc = Map::new();
    doc.insert("p".into(), uint(ctx.p()));
    doc.insert("degree".into(), uint(ctx.degree() as u64));
    doc.insert("order".into(), uint(ctx.order()));
    doc.insert(
        "modulus".into(),
        Value::from(ctx.modulus().iter().map(|c| uint(*c)).collect::<Vec<_>>()),
    );
    doc.insert("is_prime_field".into(), Value::from(ctx.is_prime_field()));
    Ok(Document::Map(doc))
}

fn projective_count(p: u64, n: usize, dim: usize) -> fqlab::Result<Document> {
    let ctx = make_field(p, n)?;
    let mut doc = Map::new();
    doc.insert("count".into(), biguint(&projective::point_count(&ctx, dim)));
    Ok(Document::Map(doc))
}

fn stirling_table(table: u64) -> fqlab::Result<Document> {
    let mut rows = Vec::new();
    for n in 0..=table {
        for k in 0..=n {
            rows.push(vec![
                uint(n),
                uint(k),
                biguint(&stirling_unsigned(n, k)?),
                big(&stirling_signed(n, k)?),
            ]);
        }
    }
    Ok(Document::Table {
        headers: vec!["n".into(), "k".into(), "unsigned".into(), "signed".into()],
        rows,
    })
}

fn census(p: u64, n: usize, deg: u64, cover_degree: u64) -> fqlab::Result<Document> {
    let ctx = make_field(p, n)?;
    let report = census_covers_oracle(&ctx, cover_degree, deg)?;
    let mut by_roots = Map::new();
    for (k, (falling, count)) in &report.by_root_count {
        let mut entry = Map::new();
        entry.insert("count".into(), uint(*count));
        entry.insert("falling_factorial".into(), big(falling));
        by_roots.insert(k.to_string(), Value::Object(entry));
    }
    let mut doc = Map::new();
    doc.insert("q".into(), uint(report.q));
    doc.insert("cover_degree".into(), uint(report.cover_degree));
    doc.insert("poly_degree".into(), uint(report.poly_degree));
    doc.insert("formula_value".into(), rational(&report.formula_value));
    doc.insert("falling_q_minus_2".into(), big(&report.falling_q_minus_2));
    doc.insert("oracle_value".into(), uint(report.oracle_value));
    doc.insert("by_root_count".into(), Value::Object(by_roots));
    Ok(Document::Map(doc))
}

fn curve_for(q: u64, input: &str) -> fqlab::Result<(FieldCtx, KummerCurve)> {
    let ctx = fqlab::ffield::field_from_order(q)?;
    let curve = parse_curve(&ctx, input)?;
    Ok((ctx, curve))
}

fn covers_genus(q: u64, input: &str) -> fqlab::Result<Document> {
    let (_, curve) = curve_for(q, input)?;
    let ram = curve.ramification_indices();
    let mut ram_doc = Map::new();
    ram_doc.insert(
        "finite".into(),
        Value::from(ram.finite.iter().map(|e| uint(*e)).collect::<Vec<_>>()),
    );
    ram_doc.insert("infinity".into(), uint(ram.infinity));
    ram_doc.insert("infinity_unramified".into(), Value::from(ram.infinity_unramified));
    ram_doc.insert(
        "total_degree_multiple_of_n".into(),
        Value::from(ram.total_degree_multiple_of_n),
    );
    ram_doc.insert(
        "total_degree_multiple_of_q".into(),
        Value::from(ram.total_degree_multiple_of_q),
    );
    let mut doc = Map::new();
    doc.insert("genus".into(), uint(curve.genus_tame()?));
    doc.insert("genus_formula".into(), rational(&curve.genus_formula()));
    doc.insert("cover_degree".into(), uint(curve.cover_degree()));
    doc.insert("branch_count".into(), uint(curve.branch_count()));
    doc.insert("total_degree".into(), uint(curve.total_degree()));
    doc.insert("tame".into(), Value::from(curve.is_tame()));
    doc.insert("primitive".into(), Value::from(curve.primitivity() == 1));
    doc.insert("ramification".into(), Value::Object(ram_doc));
    Ok(Document::Map(doc))
}

fn covers_points(q: u64, r: u32, input: &str) -> fqlab::Result<Document> {
    let (_, curve) = curve_for(q, input)?;
    let mut doc = Map::new();
    doc.insert("q".into(), uint(q));
    doc.insert("r".into(), uint(r as u64));
    doc.insert("affine".into(), uint(curve.count_affine_points(r)?));
    let smooth = match curve.count_smooth_model_points(r) {
        Ok(count) => uint(count),
        Err(Error::UnsupportedModel(_)) => Value::Null,
        Err(err) => return Err(err),
    };
    doc.insert("smooth_model".into(), smooth);
    Ok(Document::Map(doc))
}

fn covers_bounds(q: u64, r: u32, input: &str) -> fqlab::Result<Document> {
    let (_, curve) = curve_for(q, input)?;
    let count = curve.count_smooth_model_points(r)?;
    let genus = curve.genus_tame()?;
    let q_eff = q.checked_pow(r).ok_or_else(|| {
        Error::TooLarge(format!("field order {q}^{r} overflows"))
    })?;
    let report = check_bounds(count, genus, q_eff, None);
    let opt = |v: Option<bool>| v.map(Value::from).unwrap_or(Value::Null);
    let mut doc = Map::new();
    doc.insert("n_points".into(), uint(report.n_points));
    doc.insert("genus".into(), uint(report.genus));
    doc.insert("q".into(), uint(report.q));
    doc.insert("hasse_weil_ok".into(), Value::from(report.hasse_weil_ok));
    doc.insert("stohr_voloch_ok".into(), opt(report.stohr_voloch_ok));
    doc.insert("weil_q2_ok".into(), opt(report.weil_q2_ok));
    doc.insert("is_maximal".into(), Value::from(report.is_maximal));
    doc.insert("ihara_ok".into(), opt(report.ihara_ok));
    Ok(Document::Map(doc))
}

fn parse_u64_list(s: &str) -> fqlab::Result<Vec<u64>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("expected an unsigned integer, got {part:?}")))
        })
        .collect()
}

fn parse_i64_list(s: &str) -> fqlab::Result<Vec<i64>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("expected an integer, got {part:?}")))
        })
        .collect()
}

fn zeta_fit(q: u64, g: u64, counts: &str) -> fqlab::Result<Document> {
    let counts = parse_u64_list(counts)?;
    let zn = fit_numerator(q, g, &counts)?;
    let mut predicted = Map::new();
    for r in 1..=(2 * g) as u32 {
        predicted.insert(r.to_string(), big(&zn.predict_count(r)?));
    }
    let mut doc = Map::new();
    doc.insert("q".into(), uint(q));
    doc.insert("g".into(), uint(g));
    doc.insert(
        "coeffs".into(),
        Value::from(zn.coeffs().iter().map(big).collect::<Vec<_>>()),
    );
    doc.insert(
        "functional_equation".into(),
        Value::from(zn.functional_equation_holds()),
    );
    doc.insert("predicted".into(), Value::Object(predicted));
    Ok(Document::Map(doc))
}

fn zeta_check(q: u64, g: u64, counts: &str, order: Option<usize>) -> fqlab::Result<Document> {
    let counts = parse_u64_list(counts)?;
    if counts.len() < g as usize {
        return Err(Error::OutOfRange(format!(
            "need at least g = {g} counts, got {}",
            counts.len()
        )));
    }
    let zn = fit_numerator(q, g, &counts[..g as usize])?;
    let order = order.unwrap_or(counts.len());
    let consistent = zn.series_consistency(&counts, order)?;
    let weil = if g == 0 {
        Value::Null
    } else {
        Value::from(zn.weil_magnitude_check(1e-9)?)
    };
    let mut doc = Map::new();
    doc.insert("q".into(), uint(q));
    doc.insert("g".into(), uint(g));
    doc.insert(
        "coeffs".into(),
        Value::from(zn.coeffs().iter().map(big).collect::<Vec<_>>()),
    );
    doc.insert("order".into(), uint(order as u64));
    doc.insert("consistent".into(), Value::from(consistent));
    doc.insert("weil_ok".into(), weil);
    Ok(Document::Map(doc))
}

fn pgl_order(q: u64) -> fqlab::Result<Document> {
    let ctx = fqlab::ffield::field_from_order(q)?;
    let group = enumerate_pgl(&ctx)?;
    let mut doc = Map::new();
    doc.insert("order".into(), uint(group.len() as u64));
    Ok(Document::Map(doc))
}

fn matrix_from(ctx: &FieldCtx, s: &str) -> fqlab::Result<PGLElement> {
    let entries = parse_i64_list(s)?;
    if entries.len() != 4 {
        return Err(Error::Parse(format!(
            "a matrix needs 4 entries a,b,c,d, got {}",
            entries.len()
        )));
    }
    PGLElement::from_ints(ctx, entries[0], entries[1], entries[2], entries[3])
}

fn pgl_classify(q: u64, matrix: &str) -> fqlab::Result<Document> {
    let ctx = fqlab::ffield::field_from_order(q)?;
    let g = matrix_from(&ctx, matrix)?;
    let fixed: Vec<Value> = g
        .fixed_points()
        .iter()
        .map(|z| Value::from(z.to_string()))
        .collect();
    let mut doc = Map::new();
    doc.insert("class".into(), Value::from(classify(&g).to_string()));
    doc.insert("fixed_points".into(), Value::from(fixed));
    doc.insert("order".into(), uint(g.order()));
    Ok(Document::Map(doc))
}

fn pgl_orbits(q: u64, gens: &str) -> fqlab::Result<Document> {
    let ctx = fqlab::ffield::field_from_order(q)?;
    let gens = gens
        .split(';')
        .map(|part| matrix_from(&ctx, part))
        .collect::<fqlab::Result<Vec<_>>>()?;
    let subgroup = subgroup_closure(&ctx, &gens)?;
    let orbits = orbits_on_p1(&subgroup)?;
    let orbit_values: Vec<Value> = orbits
        .iter()
        .map(|orbit| {
            Value::from(
                orbit
                    .iter()
                    .map(|z| Value::from(z.to_string()))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let sizes: Vec<Value> = orbits.iter().map(|o| uint(o.len() as u64)).collect();
    let mut doc = Map::new();
    doc.insert("subgroup_order".into(), uint(subgroup.len() as u64));
    doc.insert("orbits".into(), Value::from(orbit_values));
    doc.insert("orbit_sizes".into(), Value::from(sizes));
    Ok(Document::Map(doc))
}

fn param_orbits_value(orbits: &[ParamOrbits]) -> Value {
    Value::from(
        orbits
            .iter()
            .map(|po| {
                let mut m = Map::new();
                m.insert("param".into(), Value::from(po.param.as_str()));
                m.insert("map_order".into(), uint(po.map_order));
                m.insert("preserves_points".into(), Value::from(po.preserves_points));
                m.insert(
                    "orbit_sizes".into(),
                    Value::from(po.orbit_sizes.iter().map(|s| uint(*s)).collect::<Vec<_>>()),
                );
                Value::Object(m)
            })
            .collect::<Vec<_>>(),
    )
}

fn quotient_invariants(q0: u64, m: u64) -> fqlab::Result<Document> {
    let report: InvarianceReport = curve_invariance_report(q0, m)?;
    let mut doc = Map::new();
    doc.insert("q0".into(), uint(report.q0));
    doc.insert("m".into(), uint(report.m));
    doc.insert("field_order".into(), uint(report.field_order));
    doc.insert("exponent".into(), uint(report.exponent));
    doc.insert("affine_points".into(), uint(report.affine_points));
    doc.insert("mu_invariant_case_a".into(), Value::from(report.mu_invariant_case_a));
    doc.insert("tau_invariant_case_a".into(), Value::from(report.tau_invariant_case_a));
    doc.insert(
        "gamma_invariant_case_b".into(),
        Value::from(report.gamma_invariant_case_b),
    );
    doc.insert(
        "delta_invariant_case_b".into(),
        Value::from(report.delta_invariant_case_b),
    );
    doc.insert(
        "case_a_fixed_count".into(),
        report.case_a_fixed_count.map(uint).unwrap_or(Value::Null),
    );
    doc.insert("case_b_fixed_count".into(), uint(report.case_b_fixed_count));
    doc.insert("case_c_fixed_count".into(), uint(report.case_c_fixed_count));
    doc.insert("case_a_orbits".into(), param_orbits_value(&report.case_a_orbits));
    doc.insert("case_b_orbits".into(), param_orbits_value(&report.case_b_orbits));
    Ok(Document::Map(doc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn json(doc: &Document) -> String {
        output::render(doc, Format::Json)
    }

    #[test]
    fn projective_count_golden() {
        assert_eq!(json(&projective_count(3, 1, 2).unwrap()), "{\"count\":13}\n");
    }

    #[test]
    fn pgl_order_golden() {
        assert_eq!(json(&pgl_order(5).unwrap()), "{\"order\":120}\n");
    }

    #[test]
    fn census_reports_formula_and_oracle() {
        let doc = census(3, 1, 1, 2).unwrap();
        let rendered = json(&doc);
        let value: Value = serde_json::from_str(rendered.trim()).unwrap();
        assert_eq!(value["formula_value"], Value::from("1/2"));
        assert_eq!(value["oracle_value"], Value::from(1));
        assert_eq!(value["by_root_count"]["1"]["count"], Value::from(3));
    }

    #[test]
    fn covers_points_elliptic() {
        let doc = covers_points(5, 1, "y^2 = (x-0)(x-1)(x-4)").unwrap();
        let value: Value = serde_json::from_str(json(&doc).trim()).unwrap();
        assert_eq!(value["affine"], Value::from(7));
        assert_eq!(value["smooth_model"], Value::from(8));
    }

    #[test]
    fn zeta_fit_elliptic() {
        let doc = zeta_fit(5, 1, "8").unwrap();
        let value: Value = serde_json::from_str(json(&doc).trim()).unwrap();
        assert_eq!(value["coeffs"], serde_json::json!([1, 2, 5]));
        assert_eq!(value["predicted"]["2"], Value::from(32));
    }

    #[test]
    fn classify_reports_class_and_fixed_points() {
        let doc = pgl_classify(3, "1,1,0,1").unwrap();
        let value: Value = serde_json::from_str(json(&doc).trim()).unwrap();
        assert_eq!(value["class"], Value::from("Unipotent"));
        assert_eq!(value["fixed_points"], serde_json::json!(["inf"]));
        assert_eq!(value["order"], Value::from(3));
    }

    #[test]
    fn bad_matrix_is_a_parse_error() {
        let err = pgl_classify(3, "1,1,0").unwrap_err();
        assert_eq!(err.kind(), "Parse");
    }
}
