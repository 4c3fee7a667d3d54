//! Command-line driver: subcommands over the orbit, level, character, and
//! table machinery, with text and JSON output.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error (valid syntax but
//! no such object / not admissible), 3 reference-table mismatch.

use crate::admissible::{classify_level, orbit_of_level, Family};
use crate::exceptional::exceptional_w_algebras;
use crate::orbits::{orbit_by_label, orbit_catalog, Orbit};
use crate::output::OutputRecord;
use crate::rat::{rat_to_string, ratio, rzero, Rat};
use crate::rootsys::{build_root_system, RootSystem, SimpleType};
use crate::tables::{
    computed_table, diff_classical_table, diff_exceptional_table, golden_table_text, parse_table,
    Table,
};
use crate::wchar::{central_charge, character_hred};
use crate::Error;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "orbitlab",
    about = "Nilpotent-orbit invariants, admissible levels, W-algebra charges and characters",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the result as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Truncation order for q-series output.
    #[arg(long, global = true, default_value_t = 12)]
    order: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every nilpotent orbit of the algebra with its invariants.
    Orbits { r#type: String, rank: usize },
    /// The orbit O_q (principal) or ^LO_q (coprincipal).
    Oq {
        r#type: String,
        rank: usize,
        q: i64,
        family: String,
    },
    /// Classify a level: family, denominator, degeneracy, attached orbit.
    Level {
        r#type: String,
        rank: usize,
        /// Level expression: a signed sum of atoms `n`, `n/m`, `p/m`, `n/q`,
        /// `p/q` (e.g. `-1/2` or `-30+p/6`); `p`/`q` take their values from
        /// the options below.
        #[arg(allow_hyphen_values = true)]
        k: String,
        /// Value substituted for the symbol `p` in the level expression.
        #[arg(long)]
        p: Option<i64>,
        /// Value substituted for the symbol `q` in the level expression.
        #[arg(long)]
        q: Option<i64>,
    },
    /// Central charge of the W-algebra attached to (orbit, level).
    Charge {
        r#type: String,
        rank: usize,
        orbit: String,
        #[arg(allow_hyphen_values = true)]
        k: String,
        #[arg(long)]
        p: Option<i64>,
        #[arg(long)]
        q: Option<i64>,
    },
    /// q-character of the reduced vacuum module H⁰(L(kΛ₀)).
    Character {
        r#type: String,
        rank: usize,
        orbit: String,
        #[arg(allow_hyphen_values = true)]
        k: String,
        #[arg(long)]
        p: Option<i64>,
        #[arg(long)]
        q: Option<i64>,
    },
    /// Enumerate the exceptional W-algebras of the type.
    Exceptional { r#type: String, rank: usize },
    /// Regenerate reference tables and diff them against the embedded
    /// golden copies (exceptional types) or the closed-form family rules
    /// (classical types).  With no arguments, runs the whole gate.
    Tables {
        r#type: Option<String>,
        rank: Option<usize>,
    },
    /// Dump the embedded weighted-Dynkin records for exceptional types.
    OrbitData,
}

/// One executed subcommand: the machine-readable record and the text view.
pub struct CmdOutput {
    pub record: OutputRecord,
    pub text: String,
}

/// Parse a level expression: `expr := ['+'|'-'] atom { ('+'|'-') atom }`,
/// `atom := (int | 'p') [ '/' (int | 'q') ]`.  The symbols take the values
/// passed as `--p` / `--q`.
pub fn parse_level_expr(input: &str, p: Option<i64>, q: Option<i64>) -> Result<Rat, Error> {
    let s: Vec<char> = input.chars().collect();
    let mut pos = 0usize;
    let mut total = rzero();
    let bad = |msg: &str| Error::Parse(format!("level expression `{input}`: {msg}"));

    let skip_ws = |pos: &mut usize| {
        while s.get(*pos).is_some_and(|c| c.is_whitespace()) {
            *pos += 1;
        }
    };
    let parse_symbol_or_int = |pos: &mut usize, symbol: char, value: Option<i64>| {
        skip_ws(pos);
        if s.get(*pos) == Some(&symbol) {
            *pos += 1;
            return value.ok_or_else(|| {
                bad(&format!("references `{symbol}` but --{symbol} was not given"))
            });
        }
        let start = *pos;
        while s.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
            *pos += 1;
        }
        if start == *pos {
            return Err(bad(&format!("expected an integer or `{symbol}`")));
        }
        s[start..*pos]
            .iter()
            .collect::<String>()
            .parse::<i64>()
            .map_err(|_| bad("integer out of range"))
    };

    let mut first = true;
    loop {
        skip_ws(&mut pos);
        if pos == s.len() {
            if first {
                return Err(bad("empty"));
            }
            break;
        }
        let sign = match s[pos] {
            '+' => {
                pos += 1;
                1
            }
            '-' => {
                pos += 1;
                -1
            }
            _ if first => 1,
            _ => return Err(bad("expected `+` or `-` between terms")),
        };
        first = false;
        let num = parse_symbol_or_int(&mut pos, 'p', p)?;
        let mut probe = pos;
        skip_ws(&mut probe);
        let den = if s.get(probe) == Some(&'/') {
            pos = probe + 1;
            let d = parse_symbol_or_int(&mut pos, 'q', q)?;
            if d == 0 {
                return Err(bad("division by zero"));
            }
            d
        } else {
            1
        };
        total += ratio(sign * num, den);
    }
    Ok(total)
}

fn parse_type(letter: &str, rank: usize) -> Result<SimpleType, Error> {
    SimpleType::parse(&format!("{}{rank}", letter.to_ascii_uppercase()))
}

fn parse_family(s: &str) -> Result<Family, Error> {
    match s.to_ascii_lowercase().as_str() {
        "principal" | "p" => Ok(Family::Principal),
        "coprincipal" | "c" => Ok(Family::Coprincipal),
        other => Err(Error::Parse(format!(
            "family must be `principal` or `coprincipal`, got `{other}`"
        ))),
    }
}

fn orbit_json(rs: &RootSystem, orbit: &Orbit) -> Value {
    let mut v = json!({
        "label": orbit.label(),
        "marks": orbit.marks(),
        "height": orbit.height(),
        "coheight": orbit.dual_height(),
        "dim": orbit.dim(),
        "dim_centralizer": orbit.dim_centralizer(rs),
    });
    if let Some(p) = orbit.partition() {
        v["partition"] = json!(p.parts());
    }
    if let Some(ve) = orbit.very_even() {
        v["very_even"] = json!(ve.to_string());
    }
    v
}

fn marks_str(orbit: &Orbit) -> String {
    orbit
        .marks()
        .iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn pad(s: &str, w: usize) -> String {
    format!("{s}{}", " ".repeat(w.saturating_sub(s.chars().count())))
}

fn columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: &[String]| {
        cells
            .iter()
            .enumerate()
            .map(|(i, c)| pad(c, widths[i]))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    out.push_str(&fmt_row(&header.iter().map(|h| h.to_string()).collect::<Vec<_>>()));
    out.push('\n');
    for row in rows {
        out.push_str(&fmt_row(row));
        out.push('\n');
    }
    out
}

pub fn cmd_orbits(st: SimpleType) -> Result<CmdOutput, Error> {
    let rs = build_root_system(st);
    let mut catalog = orbit_catalog(&rs)?;
    catalog.sort_by_key(|o| (o.dim(), o.label().to_string()));
    let rows: Vec<Vec<String>> = catalog
        .iter()
        .map(|o| {
            vec![
                o.label().to_string(),
                marks_str(o),
                o.height().to_string(),
                o.dual_height().to_string(),
                o.dim().to_string(),
                o.dim_centralizer(&rs).to_string(),
            ]
        })
        .collect();
    let mut text = format!("{} nilpotent orbits of {st}\n", catalog.len());
    text.push_str(&columns(
        &["orbit", "marks", "ht", "ht~", "dim", "dim g^f"],
        &rows,
    ));
    let provenance = if st.is_classical() {
        vec![]
    } else {
        vec!["data/exceptional_orbits.txt".to_string()]
    };
    let record = OutputRecord::new(
        "orbits",
        json!({"type": st.to_string()}),
        json!({
            "count": catalog.len(),
            "orbits": catalog.iter().map(|o| orbit_json(&rs, o)).collect::<Vec<_>>(),
        }),
        provenance,
    );
    Ok(CmdOutput { record, text })
}

fn golden_asset_name(st: SimpleType, family: Family) -> Option<String> {
    golden_table_text(st, family)
        .map(|_| format!("data/tables/{}_{family}.txt", st.to_string().to_lowercase()))
}

pub fn cmd_oq(st: SimpleType, q: i64, family: Family) -> Result<CmdOutput, Error> {
    if q < 1 {
        return Err(Error::Parse(format!("q must be a positive integer, got {q}")));
    }
    let rs = build_root_system(st);
    let catalog = orbit_catalog(&rs)?;
    let orbit = match family {
        Family::Principal => crate::orbits::oq_from_catalog(&rs, &catalog, q)?,
        Family::Coprincipal => crate::orbits::loq_from_catalog(&rs, &catalog, q)?,
    };
    let name = match family {
        Family::Principal => "O_q",
        Family::Coprincipal => "^LO_q",
    };
    let text = format!(
        "{name} for {st}, q={q}: {}   (dim {}, ht {}, ht~ {}, marks {})\n",
        orbit.label(),
        orbit.dim(),
        orbit.height(),
        orbit.dual_height(),
        marks_str(&orbit),
    );
    let record = OutputRecord::new(
        "oq",
        json!({"type": st.to_string(), "q": q, "family": family.to_string()}),
        json!({"orbit": orbit_json(&rs, &orbit)}),
        golden_asset_name(st, family).into_iter().collect(),
    );
    Ok(CmdOutput { record, text })
}

pub fn cmd_level(st: SimpleType, k: &Rat) -> Result<CmdOutput, Error> {
    let rs = build_root_system(st);
    let level = classify_level(&rs, k).ok_or_else(|| {
        Error::InvalidLevel(format!("k = {} is not admissible for {st}", rat_to_string(k)))
    })?;
    let (orbit, nondegenerate) = orbit_of_level(&rs, &level)?;
    let text = format!(
        "k = {} for {st}: {} p={} q={} {}; O[k] = {} (dim {}), kappa = {}\n",
        rat_to_string(k),
        level.family(),
        level.p(),
        level.q(),
        if level.degenerate() {
            "degenerate"
        } else {
            "non-degenerate"
        },
        orbit.label(),
        orbit.dim(),
        rat_to_string(&level.kappa(&rs)),
    );
    let record = OutputRecord::new(
        "level",
        json!({"type": st.to_string(), "k": rat_to_string(k)}),
        json!({
            "family": level.family().to_string(),
            "p": level.p(),
            "q": level.q(),
            "degenerate": level.degenerate(),
            "kappa": rat_to_string(&level.kappa(&rs)),
            "orbit": orbit_json(&rs, &orbit),
            "nondegenerate": nondegenerate,
        }),
        vec![],
    );
    Ok(CmdOutput { record, text })
}

pub fn cmd_charge(st: SimpleType, orbit_label: &str, k: &Rat) -> Result<CmdOutput, Error> {
    let rs = build_root_system(st);
    let orbit = orbit_by_label(&rs, orbit_label)?;
    let c = central_charge(&rs, &orbit, k)?;
    let text = format!(
        "central charge of W_k({st}, {}) at k = {}: c = {}\n",
        orbit.label(),
        rat_to_string(k),
        rat_to_string(&c),
    );
    let record = OutputRecord::new(
        "charge",
        json!({"type": st.to_string(), "orbit": orbit_label, "k": rat_to_string(k)}),
        json!({"orbit": orbit.label(), "c": rat_to_string(&c)}),
        golden_asset_name(st, Family::Principal).into_iter().collect(),
    );
    Ok(CmdOutput { record, text })
}

pub fn cmd_character(
    st: SimpleType,
    orbit_label: &str,
    k: &Rat,
    order: i64,
) -> Result<CmdOutput, Error> {
    let rs = build_root_system(st);
    let orbit = orbit_by_label(&rs, orbit_label)?;
    let level = classify_level(&rs, k).ok_or_else(|| {
        Error::InvalidLevel(format!("k = {} is not admissible for {st}", rat_to_string(k)))
    })?;
    let lambda_bar = vec![rzero(); rs.ambient_dim()];
    let series = character_hred(&rs, &level, &lambda_bar, &orbit, order)?;
    let text = format!(
        "ch_q H0(L(kΛ0)) for {st}, orbit {}, k = {} ({} p={} q={}), to order q^{order}:\n{}\n",
        orbit.label(),
        rat_to_string(k),
        level.family(),
        level.p(),
        level.q(),
        if series.is_zero() {
            "0  (reduction vanishes)".to_string()
        } else {
            series.render()
        },
    );
    let record = OutputRecord::new(
        "character",
        json!({
            "type": st.to_string(),
            "orbit": orbit_label,
            "k": rat_to_string(k),
            "order": order,
        }),
        json!({
            "family": level.family().to_string(),
            "p": level.p(),
            "q": level.q(),
            "zero": series.is_zero(),
            "series": series.to_json(),
        }),
        vec![],
    );
    Ok(CmdOutput { record, text })
}

pub fn cmd_exceptional(st: SimpleType) -> Result<CmdOutput, Error> {
    let rs = build_root_system(st);
    let rows = exceptional_w_algebras(&rs)?;
    let table_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                if r.principal {
                    format!("{}+", r.q)
                } else {
                    r.q.to_string()
                },
                r.orbit.label().to_string(),
                if r.principal { "principal" } else { "non-principal" }.to_string(),
            ]
        })
        .collect();
    let mut text = format!("exceptional W-algebras of {st}\n");
    text.push_str(&columns(&["q", "orbit", "kind"], &table_rows));
    let record = OutputRecord::new(
        "exceptional",
        json!({"type": st.to_string()}),
        json!({
            "rows": rows.iter().map(|r| json!({
                "q": r.q,
                "orbit": r.orbit.label(),
                "principal": r.principal,
            })).collect::<Vec<_>>(),
        }),
        golden_asset_name(st, Family::Principal).into_iter().collect(),
    );
    Ok(CmdOutput { record, text })
}

fn table_rows_json(table: &Table) -> Value {
    json!(table
        .rows
        .iter()
        .map(|r| {
            let mut v = json!({
                "q": r.qspec(),
                "orbit": r.label,
                "unbounded": r.and_up,
                "excluded_q": r.qs.iter().filter(|(_, p)| *p).map(|(q, _)| *q).collect::<Vec<_>>(),
            });
            if let Some(flag) = r.flag {
                v["exceptional"] = json!(flag);
            }
            if let Some(f) = &r.formula {
                v["charge"] = json!(f);
            }
            v
        })
        .collect::<Vec<_>>())
}

fn render_table(title: &str, table: &Table, status: &str) -> String {
    let has_flag = table.rows.iter().any(|r| r.flag.is_some());
    let has_formula = table.rows.iter().any(|r| r.formula.is_some());
    let mut header: Vec<&str> = vec!["q", "orbit"];
    if has_flag {
        header.push("exceptional");
    }
    if has_formula {
        header.push("charge");
    }
    let rows: Vec<Vec<String>> = table
        .rows
        .iter()
        .map(|r| {
            let mut row = vec![r.qspec(), r.label.clone()];
            if has_flag {
                row.push(match r.flag {
                    Some(true) => "yes".into(),
                    Some(false) => "no".into(),
                    None => String::new(),
                });
            }
            if has_formula {
                row.push(r.formula.clone().unwrap_or_default());
            }
            row
        })
        .collect();
    format!("== {title} ==\n{}{status}\n", columns(&header, &rows))
}

/// The (type, family) pairs with embedded golden tables.
pub fn golden_table_set() -> Vec<(SimpleType, Family)> {
    let st = |s: &str| SimpleType::parse(s).unwrap();
    vec![
        ("G2", Family::Principal),
        ("G2", Family::Coprincipal),
        ("F4", Family::Principal),
        ("F4", Family::Coprincipal),
        ("E6", Family::Principal),
        ("E7", Family::Principal),
        ("E8", Family::Principal),
    ]
    .into_iter()
    .map(|(s, f)| (st(s), f))
    .collect()
}

/// The classical instantiations covered by the table gate.
pub fn classical_table_set() -> Vec<SimpleType> {
    let mut out = Vec::new();
    for rank in 1..=7 {
        out.push(SimpleType::parse(&format!("A{rank}")).unwrap());
    }
    for letter in ["B", "C"] {
        for rank in 2..=6 {
            out.push(SimpleType::parse(&format!("{letter}{rank}")).unwrap());
        }
    }
    for rank in 3..=6 {
        out.push(SimpleType::parse(&format!("D{rank}")).unwrap());
    }
    out
}

struct TableCheck {
    st: SimpleType,
    family: Family,
    table: Table,
    mismatches: Vec<String>,
    asset: String,
}

fn check_exceptional(st: SimpleType, family: Family) -> Result<TableCheck, Error> {
    let rs = build_root_system(st);
    let mismatches = diff_exceptional_table(&rs, family)?;
    let table = parse_table(golden_table_text(st, family).unwrap(), st, family)?;
    Ok(TableCheck {
        st,
        family,
        table,
        mismatches,
        asset: golden_asset_name(st, family).unwrap(),
    })
}

fn check_classical(st: SimpleType, family: Family) -> Result<TableCheck, Error> {
    let rs = build_root_system(st);
    let mismatches = diff_classical_table(&rs, family)?;
    let table = computed_table(&rs, family)?;
    let asset = match family {
        Family::Principal => "tables::principal_family_oracle",
        Family::Coprincipal => "tables::coprincipal_family_oracle",
    };
    Ok(TableCheck {
        st,
        family,
        table,
        mismatches,
        asset: asset.to_string(),
    })
}

/// Run the table checks; `target` narrows to one algebra.  The boolean is
/// true when every diff came back clean.
pub fn cmd_tables(target: Option<SimpleType>) -> Result<(CmdOutput, bool), Error> {
    let mut checks: Vec<TableCheck> = Vec::new();
    match target {
        Some(st) if st.is_classical() => {
            for family in [Family::Principal, Family::Coprincipal] {
                checks.push(check_classical(st, family)?);
            }
        }
        Some(st) => {
            let families: Vec<Family> = golden_table_set()
                .into_iter()
                .filter(|(t, _)| *t == st)
                .map(|(_, f)| f)
                .collect();
            if families.is_empty() {
                return Err(Error::InvalidType(format!("no reference tables for {st}")));
            }
            for family in families {
                checks.push(check_exceptional(st, family)?);
            }
        }
        None => {
            for (st, family) in golden_table_set() {
                checks.push(check_exceptional(st, family)?);
            }
            for st in classical_table_set() {
                for family in [Family::Principal, Family::Coprincipal] {
                    checks.push(check_classical(st, family)?);
                }
            }
        }
    }

    let full_render = target.is_some();
    let mut text = String::new();
    let mut entries = Vec::new();
    let mut clean = true;
    for check in &checks {
        let status = if check.mismatches.is_empty() {
            format!("ok: {} rows reproduced from the orbit machinery", check.table.rows.len())
        } else {
            clean = false;
            format!("MISMATCH:\n  {}", check.mismatches.join("\n  "))
        };
        let name = match check.family {
            Family::Principal => "O_q",
            Family::Coprincipal => "^LO_q",
        };
        if full_render {
            text.push_str(&render_table(
                &format!("{} {} ({name})", check.st, check.family),
                &check.table,
                &status,
            ));
            text.push('\n');
        } else {
            text.push_str(&format!("{} {}: {status}\n", check.st, check.family));
        }
        entries.push(json!({
            "type": check.st.to_string(),
            "family": check.family.to_string(),
            "rows": table_rows_json(&check.table),
            "mismatches": check.mismatches,
            "source": check.asset,
        }));
    }
    if !full_render {
        text.push_str(if clean {
            "all tables reproduced\n"
        } else {
            "MISMATCHES FOUND\n"
        });
    }
    let mut provenance: Vec<String> = checks.iter().map(|c| c.asset.clone()).collect();
    provenance.dedup();
    let record = OutputRecord::new(
        "tables",
        json!({"type": target.map(|t| t.to_string())}),
        json!({"clean": clean, "tables": entries}),
        provenance,
    );
    Ok((CmdOutput { record, text }, clean))
}

pub fn cmd_orbit_data() -> Result<CmdOutput, Error> {
    let raw = crate::orbits::data::raw_data()?;
    let records = crate::orbits::data::parse_records(&raw)?;
    let record = OutputRecord::new(
        "orbit-data",
        json!({}),
        json!({
            "records": records.iter().map(|r| json!({
                "type": r.algebra.to_string(),
                "label": r.label,
                "marks": r.marks,
            })).collect::<Vec<_>>(),
        }),
        vec!["data/exceptional_orbits.txt".to_string()],
    );
    Ok(CmdOutput {
        record,
        text: raw,
    })
}

fn usage(e: Error) -> (i32, String) {
    (EXIT_USAGE, e.to_string())
}

fn domain(e: Error) -> (i32, String) {
    (EXIT_DOMAIN, e.to_string())
}

fn dispatch(cli: &Cli) -> Result<(CmdOutput, i32), (i32, String)> {
    match &cli.command {
        Command::Orbits { r#type, rank } => {
            let st = parse_type(r#type, *rank).map_err(usage)?;
            Ok((cmd_orbits(st).map_err(domain)?, EXIT_OK))
        }
        Command::Oq {
            r#type,
            rank,
            q,
            family,
        } => {
            let st = parse_type(r#type, *rank).map_err(usage)?;
            let family = parse_family(family).map_err(usage)?;
            Ok((cmd_oq(st, *q, family).map_err(domain)?, EXIT_OK))
        }
        Command::Level {
            r#type,
            rank,
            k,
            p,
            q,
        } => {
            let st = parse_type(r#type, *rank).map_err(usage)?;
            let k = parse_level_expr(k, *p, *q).map_err(usage)?;
            Ok((cmd_level(st, &k).map_err(domain)?, EXIT_OK))
        }
        Command::Charge {
            r#type,
            rank,
            orbit,
            k,
            p,
            q,
        } => {
            let st = parse_type(r#type, *rank).map_err(usage)?;
            let k = parse_level_expr(k, *p, *q).map_err(usage)?;
            Ok((cmd_charge(st, orbit, &k).map_err(domain)?, EXIT_OK))
        }
        Command::Character {
            r#type,
            rank,
            orbit,
            k,
            p,
            q,
        } => {
            let st = parse_type(r#type, *rank).map_err(usage)?;
            let k = parse_level_expr(k, *p, *q).map_err(usage)?;
            Ok((
                cmd_character(st, orbit, &k, cli.order).map_err(domain)?,
                EXIT_OK,
            ))
        }
        Command::Exceptional { r#type, rank } => {
            let st = parse_type(r#type, *rank).map_err(usage)?;
            Ok((cmd_exceptional(st).map_err(domain)?, EXIT_OK))
        }
        Command::Tables { r#type, rank } => {
            let target = match (r#type, rank) {
                (Some(t), Some(r)) => Some(parse_type(t, *r).map_err(usage)?),
                (None, None) => None,
                _ => {
                    return Err((
                        EXIT_USAGE,
                        "tables takes either both a type and a rank, or neither".to_string(),
                    ))
                }
            };
            let (out, clean) = cmd_tables(target).map_err(domain)?;
            Ok((out, if clean { EXIT_OK } else { EXIT_MISMATCH }))
        }
        Command::OrbitData => Ok((cmd_orbit_data().map_err(domain)?, EXIT_OK)),
    }
}

/// Entry point: parse `std::env::args`, execute, print, and return the
/// process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((out, code)) => {
            if cli.json {
                println!("{}", out.record.to_json());
            } else {
                print!("{}", out.text);
            }
            code
        }
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            code
        }
    }
}
