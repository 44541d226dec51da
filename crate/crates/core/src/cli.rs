//! Command-line surface. [`run`] parses arguments, performs one command and
//! returns the JSON report together with the process exit code.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::chartab::{
    has_entry, tables_equivalent, tables_equivalent_with_power_maps, verify_rep_ring_relations, CharacterTable,
};
use crate::dsl::{
    builtin_group, builtin_map, builtin_ring, parse_group, parse_poly, parse_ring, primed_map, print_group,
    restriction_to_m_from, restriction_to_p_from, Provenance,
};
use crate::error::Error;
use crate::graded::{degree_bound_from_env, GradedRing, Order3Action, RingMap, RingPresentation};
use crate::pcgroup::{center, exponent, fingerprint, identify, maximal_subgroups, PcGroup, PcPresentation};
use crate::pipeline::{
    distinguish, exactness_bookkeeping, family_targets, gysin_segment, gysin_series, kunneth_abelian, order81_targets,
    Target, ORDER81_NOT_COMPUTED,
};
use crate::report::{Report, Status};

#[derive(Parser, Debug)]
#[command(name = "pgcoh", version, about = "Cohomology, characters and presentations of a family of 3-groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GroupInput {
    /// Builtin group, e.g. `G(4,1)`, `G'(4)`, `P(5,-1)`, `wreath`
    #[arg(long, conflicts_with = "file")]
    group: Option<String>,
    /// A `.grp` file
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RingInput {
    /// Builtin ring, e.g. `thm10.G`, `thm13.G(5,-1)`
    #[arg(long, conflicts_with = "file")]
    ring: Option<String>,
    /// A `.ring` file
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural invariants of a group
    GroupInfo {
        #[command(flatten)]
        input: GroupInput,
        /// Also list and identify the maximal subgroups
        #[arg(long)]
        maximal: bool,
    },
    /// Exact character table
    Chartab {
        #[command(flatten)]
        input: GroupInput,
        /// Compare with the table of another builtin group
        #[arg(long)]
        compare: Option<String>,
        /// Look for the entry η(2+η^{ε3^{n-3}}), given as `n,eps`
        #[arg(long, value_parser = parse_pair)]
        entry: Option<(i64, i64)>,
    },
    /// Basis and structure of one graded piece
    RingBasis {
        #[command(flatten)]
        input: RingInput,
        #[arg(long)]
        degree: u32,
    },
    /// Structure of every graded piece up to a degree
    Hilbert {
        #[command(flatten)]
        input: RingInput,
        #[arg(long, default_value_t = 12)]
        max_degree: u32,
    },
    /// Check that a ring map respects all relations
    VerifyMap {
        /// `prop7-M`, `prop7-P`, `cor14`, `scale3`, `thm10-variant-proof` or `thm10-variant-stated`
        #[arg(long, conflicts_with = "map")]
        preset: Option<String>,
        /// Builtin map, e.g. `prop7.resM`, `cor14(6)`, `scale3(5,1)`
        #[arg(long)]
        map: Option<String>,
        #[arg(long, default_value_t = 5)]
        n: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        eps: i32,
        /// Also test degreewise bijectivity up to this degree
        #[arg(long)]
        bijective: Option<u32>,
    },
    /// Verify that the primed generators give an isomorphism H*(G(n,-1)) -> H*(G(n,1))
    IsoRing {
        #[arg(long, default_value_t = 5)]
        n: u32,
        #[arg(long, default_value_t = 12)]
        max_degree: u32,
    },
    /// Gysin sequence of the circle kernel of a degree-2 class
    Gysin {
        #[command(flatten)]
        input: RingInput,
        /// Euler class, e.g. `delta1 + beta`
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    /// Separate groups by their low-degree integral cohomology
    Distinguish {
        /// The nine order-81 groups covered by Künneth and Gysin pipelines
        #[arg(long, conflicts_with = "family")]
        order81: bool,
        /// G(n,1) against G(n,-1) through their presented rings
        #[arg(long)]
        family: Option<u32>,
        #[arg(long)]
        max_degree: Option<u32>,
        /// Write the group × degree table as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Integral cohomology of a finite abelian group via Künneth
    Kunneth {
        /// Cyclic factor orders, e.g. `3,27`
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<u64>,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    /// Fixed points and H¹(C₃, -) of an order-3 action on a ring
    FixedPoints {
        /// `y-on-P` (γ ↦ γ−α on thm6.P) or `x-on-M` (τ ↦ τ+γ, γ ↦ γ+β on prop4.M)
        #[arg(long, default_value = "y-on-P")]
        action: String,
        #[arg(long, default_value_t = 12)]
        max_degree: u32,
    },
    /// Representation-ring and λ-relations on the character table of G(n,eps)
    VerifyProp2 {
        #[arg(long, default_value_t = 4)]
        n: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        eps: i32,
    },
    /// Restriction maps from H*(G~) to H*(M~) and H*(P~)
    VerifyProp7 {
        #[arg(long, default_value = "thm10.G")]
        source: String,
    },
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or("expected `n,eps`")?;
    Ok((a.trim().parse().map_err(|_| "bad n")?, b.trim().parse().map_err(|_| "bad eps")?))
}

/// Result of a command before it is wrapped into a [`Report`].
struct Outcome {
    ok: bool,
    provenance: Vec<Provenance>,
    payload: Value,
}

impl Outcome {
    fn new(ok: bool, provenance: Vec<Provenance>, payload: impl Serialize) -> Self {
        Outcome { ok, provenance, payload: serde_json::to_value(payload).expect("payload serializes") }
    }
}

type CmdResult = std::result::Result<Outcome, Error>;

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::BadParameter(format!("cannot read {}: {e}", path.display())))
}

fn file_provenance(path: &Path) -> Provenance {
    Provenance { builtin: path.display().to_string(), encodes: "user file".into(), variants: Vec::new() }
}

fn load_group(input: &GroupInput) -> Result<(PcPresentation, Provenance), Error> {
    match (&input.group, &input.file) {
        (Some(spec), _) => builtin_group(spec),
        (None, Some(path)) => Ok((parse_group(&read_file(path)?)?, file_provenance(path))),
        (None, None) => Err(Error::BadParameter("give --group or --file".into())),
    }
}

fn load_ring(input: &RingInput) -> Result<(RingPresentation, Provenance), Error> {
    match (&input.ring, &input.file) {
        (Some(spec), _) => builtin_ring(spec),
        (None, Some(path)) => Ok((parse_ring(&read_file(path)?)?, file_provenance(path))),
        (None, None) => Err(Error::BadParameter("give --ring or --file".into())),
    }
}

fn ring_provenance(spec: &str) -> Result<Provenance, Error> {
    Ok(builtin_ring(spec)?.1)
}

fn graded(pres: RingPresentation) -> GradedRing {
    GradedRing::new(pres)
}

fn group_info(input: &GroupInput, maximal: bool) -> CmdResult {
    let (pres, prov) = load_group(input)?;
    let g = PcGroup::new(pres.clone())?;
    let mut payload = json!({
        "name": g.name(),
        "presentation": print_group(&pres),
        "order": g.order(),
        "exponent": exponent(&g),
        "center": center(&g)?.to_string(),
        "identified_as": identify(&g)?,
        "fingerprint": fingerprint(&g)?,
    });
    if maximal {
        let subs: Vec<Value> = maximal_subgroups(&g)?
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let sub = PcGroup::new(m.subgroup.presentation(&g, &format!("M{i}"))?)?;
                Ok(json!({
                    "functional": m.functional,
                    "order": m.subgroup.order(),
                    "identified_as": identify(&sub)?,
                }))
            })
            .collect::<Result<_, Error>>()?;
        payload["maximal_subgroups"] = Value::Array(subs);
    }
    Ok(Outcome::new(true, vec![prov], payload))
}

fn chartab(input: &GroupInput, compare: Option<&str>, entry: Option<(i64, i64)>) -> CmdResult {
    let (pres, prov) = load_group(input)?;
    let g = PcGroup::new(pres)?;
    let t = CharacterTable::new(&g)?;
    let mut provenance = vec![prov];
    let mut payload = json!({
        "num_classes": t.num_classes(),
        "degrees": t.degrees(),
        "table": t,
    });
    if let Some(other) = compare {
        let (p2, prov2) = builtin_group(other)?;
        let t2 = CharacterTable::new(&PcGroup::new(p2)?)?;
        provenance.push(prov2);
        payload["comparison"] = json!({
            "with": other,
            "equivalent": tables_equivalent(&t, &t2),
            "equivalent_with_power_maps": tables_equivalent_with_power_maps(&t, &t2),
        });
    }
    if let Some((n, eps)) = entry {
        let n = u32::try_from(n).ok().filter(|&n| n >= 4).ok_or_else(|| Error::BadParameter(format!("bad n {n}")))?;
        if eps != 1 && eps != -1 {
            return Err(Error::BadParameter(format!("eps must be 1 or -1, got {eps}")));
        }
        payload["entry"] = json!({ "n": n, "eps": eps, "found": has_entry(&t, n, eps as i32) });
    }
    Ok(Outcome::new(true, provenance, payload))
}

fn ring_basis(input: &RingInput, degree: u32) -> CmdResult {
    let (pres, prov) = load_ring(input)?;
    let r = graded(pres);
    Ok(Outcome::new(true, vec![prov], r.summary(degree)?))
}

fn hilbert(input: &RingInput, max_degree: u32) -> CmdResult {
    let (pres, prov) = load_ring(input)?;
    let r = graded(pres);
    Ok(Outcome::new(
        true,
        vec![prov],
        json!({ "ring": r.presentation().name(), "pieces": r.hilbert_report(max_degree)? }),
    ))
}

fn check_map(map: &RingMap, bijective: Option<u32>) -> Result<(bool, Value), Error> {
    let target = graded(map.target().clone());
    let v = map.verify(&target)?;
    let mut ok = v.passes;
    let mut payload = json!({
        "source": map.source().name(),
        "target": map.target().name(),
        "verification": v,
    });
    if let Some(d) = bijective {
        let source = graded(map.source().clone());
        let report = map.bijective_report(&source, &target, d)?;
        let all = report.iter().all(|r| r.verdict == crate::graded::DegreeVerdict::Bijective);
        ok &= all;
        payload["bijective"] = json!({ "max_degree": d, "all_degrees": all, "degrees": report });
    }
    Ok((ok, payload))
}

/// The order-81 Gysin table on one reading of the `G̃` ring.
fn order81_table(spec: &str) -> Result<(bool, Value), Error> {
    let r = graded(builtin_ring(spec)?.0);
    let cases = [
        ("G(4,1)", "delta1 - beta"),
        ("G(4,-1)", "delta1 + beta"),
        ("G'(4)", "delta1 + beta + alpha"),
        ("C3 wr C3", "delta1"),
    ];
    // (group, degree, expected order)
    let expected: [(&str, u32, u64); 9] = [
        ("G(4,1)", 3, 3),
        ("G(4,-1)", 3, 9),
        ("G'(4)", 3, 3),
        ("C3 wr C3", 3, 3),
        ("G(4,1)", 4, 27),
        ("G'(4)", 4, 27),
        ("C3 wr C3", 4, 81),
        ("G(4,1)", 5, 3),
        ("G'(4)", 5, 1),
    ];
    let mut rows = Vec::new();
    let mut ok = true;
    for (label, m, want) in expected {
        let xi_text = cases.iter().find(|(l, _)| *l == label).expect("known label").1;
        let xi = parse_poly(r.presentation(), xi_text)?;
        let seg = gysin_segment(&r, &xi, m)?;
        let got = seg.total_order.clone();
        let matches = got == Some(BigInt::from(want));
        ok &= matches;
        rows.push(json!({
            "group": label, "xi": xi_text, "degree": m, "expected_order": want,
            "order": got.map(|o| o.to_string()), "matches": matches,
        }));
    }
    Ok((ok, json!({ "ring": spec, "holds": ok, "rows": rows })))
}

fn thm10_variant(spec: &str) -> CmdResult {
    let mut ok = true;
    let mut maps = Vec::new();
    for map in [restriction_to_m_from(spec)?, restriction_to_p_from(spec)?] {
        let (pass, payload) = check_map(&map, None)?;
        ok &= pass;
        maps.push(payload);
    }
    let (table_ok, table) = order81_table(spec)?;
    ok &= table_ok;
    Ok(Outcome::new(
        ok,
        vec![ring_provenance(spec)?, ring_provenance("prop4.M")?, ring_provenance("thm6.P")?],
        json!({ "restrictions": maps, "order81_gysin_table": table }),
    ))
}

fn verify_map(preset: Option<&str>, map: Option<&str>, n: u32, eps: i32, bijective: Option<u32>) -> CmdResult {
    let spec = match (preset, map) {
        (_, Some(m)) => m.to_string(),
        (Some("prop7-M"), None) => "prop7.resM".into(),
        (Some("prop7-P"), None) => "prop7.resP".into(),
        (Some("cor14"), None) => format!("cor14({n})"),
        (Some("scale3"), None) => format!("scale3({n},{eps})"),
        (Some("thm10-variant-proof"), None) => return thm10_variant("thm10.G"),
        (Some("thm10-variant-stated"), None) => return thm10_variant("thm10.G-stated"),
        (Some(other), None) => return Err(Error::UnknownBuiltin(other.to_string())),
        (None, None) => return Err(Error::BadParameter("give --preset or --map".into())),
    };
    let (m, prov) = builtin_map(&spec)?;
    let (ok, payload) = check_map(&m, bijective)?;
    Ok(Outcome::new(ok, vec![prov], payload))
}

fn iso_ring(n: u32, max_degree: u32) -> CmdResult {
    let map = primed_map(n)?;
    let (ok, mut payload) = check_map(&map, Some(max_degree))?;
    payload["verdict"] = Value::from(if ok {
        format!(
            "isomorphism of the integral cohomology rings of G({n},-1) and G({n},1) verified to degree {max_degree}"
        )
    } else {
        format!("the primed map is not an isomorphism up to degree {max_degree}")
    });
    let provenance = vec![
        ring_provenance(&format!("thm13.G({n},-1)"))?,
        ring_provenance(&format!("thm13.G({n},1)"))?,
        builtin_map(&format!("cor14({n})"))?.1,
    ];
    Ok(Outcome::new(ok, provenance, payload))
}

fn gysin(input: &RingInput, xi: &str, max_degree: u32) -> CmdResult {
    let (pres, prov) =
        if input.ring.is_none() && input.file.is_none() { builtin_ring("thm10.G")? } else { load_ring(input)? };
    let r = graded(pres);
    let x = parse_poly(r.presentation(), xi)?;
    let segments = gysin_series(&r, &x, max_degree + 1)?;
    let bookkeeping = exactness_bookkeeping(&r, &x, max_degree + 1)?;
    let consistent = bookkeeping.iter().all(|c| c.consistent);
    Ok(Outcome::new(
        consistent,
        vec![prov],
        json!({
            "ring": r.presentation().name(),
            "xi": r.presentation().format(&x),
            "max_degree": max_degree,
            "segments": segments,
            "exactness": { "consistent": consistent, "maps": bookkeeping },
        }),
    ))
}

fn distinguish_cmd(order81: bool, family: Option<u32>, max_degree: Option<u32>, csv: Option<&Path>) -> CmdResult {
    let (targets, d, expect_distinct, not_computed): (Vec<Target>, u32, bool, &[&str]) = match (order81, family) {
        (true, _) => (order81_targets(), max_degree.unwrap_or(6), true, ORDER81_NOT_COMPUTED),
        (false, Some(n)) => (family_targets(n), max_degree.unwrap_or(12), false, &[]),
        (false, None) => return Err(Error::BadParameter("give --order81 or --family N".into())),
    };
    let mut provenance = Vec::new();
    for t in &targets {
        if let Target::Gysin { ring, .. } | Target::Ring { ring, .. } = t {
            let p = ring_provenance(ring)?;
            if !provenance.contains(&p) {
                provenance.push(p);
            }
        }
    }
    let result = distinguish(&targets, d)?;
    if let Some(path) = csv {
        std::fs::write(path, result.to_csv())
            .map_err(|e| Error::BadParameter(format!("cannot write {}: {e}", path.display())))?;
    }
    let ok = !expect_distinct || result.all_distinct;
    let not_computed: Vec<Value> =
        not_computed.iter().map(|g| json!({ "group": g, "status": "not computed" })).collect();
    Ok(Outcome::new(
        ok,
        provenance,
        json!({
            "targets": targets,
            "result": result,
            "not_computed": not_computed,
            "csv": csv.map(|p| p.display().to_string()),
        }),
    ))
}

fn kunneth(orders: &[u64], max_degree: u32) -> CmdResult {
    let label = orders.iter().map(|o| format!("C{o}")).collect::<Vec<_>>().join(" x ");
    let big: Vec<BigInt> = orders.iter().map(|&o| BigInt::from(o)).collect();
    Ok(Outcome::new(true, Vec::new(), kunneth_abelian(&label, &big, max_degree)?))
}

/// Coefficients of `(t⁶ − t⁴ + t²)/((1 − t⁶)(1 − t²))` up to `t^max`.
fn y_action_series(max: usize) -> Vec<i64> {
    let mut num = vec![0i64; max + 1];
    for (e, c) in [(2usize, 1i64), (4, -1), (6, 1)] {
        if e <= max {
            num[e] += c;
        }
    }
    // divide by (1 - t^2), then by (1 - t^6): prefix sums with stride
    for stride in [2usize, 6] {
        for i in stride..=max {
            num[i] += num[i - stride];
        }
    }
    num
}

fn fixed_points(action: &str, max_degree: u32) -> CmdResult {
    let (spec, images): (&str, Vec<(&str, &str)>) = match action {
        "y-on-P" => ("thm6.P", vec![("gamma", "gamma - alpha")]),
        "x-on-M" => ("prop4.M", vec![("tau", "tau + gamma"), ("gamma", "gamma + beta")]),
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    };
    let (pres, prov) = builtin_ring(spec)?;
    let r = graded(pres.clone());
    let named: Vec<(&str, crate::graded::Poly)> =
        images.iter().map(|(g, t)| Ok((*g, parse_poly(&pres, t)?))).collect::<Result<_, Error>>()?;
    let act = Order3Action::new(RingMap::from_named(pres.clone(), pres.clone(), &named)?, &r)?;
    let series = (action == "y-on-P").then(|| y_action_series(max_degree as usize));
    let mut ok = true;
    let mut rows = Vec::new();
    for d in 0..=max_degree {
        let fixed = act.fixed_subgroup(&r, d)?;
        let h1 = act.h1_c3(&r, d)?;
        let elementary = h1.group.free_rank() == 0 && h1.group.torsion().iter().all(|t| *t == BigInt::from(3));
        let dim = elementary.then(|| h1.group.torsion().len());
        let mut row = json!({
            "degree": d,
            "fixed": fixed.group.to_string(),
            "fixed_generators": fixed.generators.iter().map(|p| pres.format(p)).collect::<Vec<_>>(),
            "h1": h1.group.to_string(),
            "h1_f3_dimension": dim,
        });
        if let Some(s) = &series {
            let matches = dim.map(|k| k as i64) == Some(s[d as usize]);
            ok &= matches;
            row["expected_dimension"] = Value::from(s[d as usize]);
            row["matches"] = Value::from(matches);
        }
        rows.push(row);
    }
    Ok(Outcome::new(ok, vec![prov], json!({ "action": action, "ring": spec, "degrees": rows })))
}

fn verify_prop2(n: u32, eps: i32) -> CmdResult {
    let report = verify_rep_ring_relations(n, eps)?;
    let (_, prov) = builtin_group(&format!("G({n},{eps})"))?;
    Ok(Outcome::new(report.verified, vec![prov], report))
}

fn verify_prop7(source: &str) -> CmdResult {
    let mut ok = true;
    let mut maps = Vec::new();
    for map in [restriction_to_m_from(source)?, restriction_to_p_from(source)?] {
        let (pass, payload) = check_map(&map, None)?;
        ok &= pass;
        maps.push(payload);
    }
    Ok(Outcome::new(
        ok,
        vec![ring_provenance(source)?, ring_provenance("prop4.M")?, ring_provenance("thm6.P")?],
        json!({ "restrictions": maps }),
    ))
}

fn dispatch(cmd: &Command) -> CmdResult {
    match cmd {
        Command::GroupInfo { input, maximal } => group_info(input, *maximal),
        Command::Chartab { input, compare, entry } => chartab(input, compare.as_deref(), *entry),
        Command::RingBasis { input, degree } => ring_basis(input, *degree),
        Command::Hilbert { input, max_degree } => hilbert(input, *max_degree),
        Command::VerifyMap { preset, map, n, eps, bijective } => {
            verify_map(preset.as_deref(), map.as_deref(), *n, *eps, *bijective)
        }
        Command::IsoRing { n, max_degree } => iso_ring(*n, *max_degree),
        Command::Gysin { input, xi, max_degree } => gysin(input, xi, *max_degree),
        Command::Distinguish { order81, family, max_degree, csv } => {
            distinguish_cmd(*order81, *family, *max_degree, csv.as_deref())
        }
        Command::Kunneth { orders, max_degree } => kunneth(orders, *max_degree),
        Command::FixedPoints { action, max_degree } => fixed_points(action, *max_degree),
        Command::VerifyProp2 { n, eps } => verify_prop2(*n, *eps),
        Command::VerifyProp7 { source } => verify_prop7(source),
    }
}

fn error_status(e: &Error) -> Status {
    match e {
        Error::NotWellDefined(_) | Error::NotAnAction(_) | Error::GeneratorMatchFailed(_) | Error::NotGenuine(_) => {
            Status::VerificationFailed
        }
        _ => Status::UsageError,
    }
}

/// What the binary prints and the status it exits with.
pub struct Invocation {
    pub exit_code: i32,
    /// Written to standard output.
    pub stdout: String,
}

/// Runs one command; `args` excludes the program name.
pub fn run<I: IntoIterator<Item = String>>(args: I) -> Invocation {
    let args: Vec<String> = args.into_iter().collect();
    let argv = std::iter::once("pgcoh".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Invocation { exit_code: 0, stdout: e.to_string() };
            }
            let report = Report::failure(args, Status::UsageError, e.render().to_string());
            return Invocation { exit_code: 2, stdout: report.to_json_string() };
        }
    };
    let report = match dispatch(&cli.command) {
        Ok(out) => {
            let status = if out.ok { Status::Ok } else { Status::VerificationFailed };
            let mut payload = out.payload;
            if let Value::Object(map) = &mut payload {
                map.insert("degree_bound".into(), Value::from(degree_bound_from_env()));
            }
            Report::new(args, status, out.provenance, payload)
        }
        Err(e) => Report::failure(args, error_status(&e), e.to_string()),
    };
    Invocation { exit_code: report.exit_code, stdout: report.to_json_string() }
}
