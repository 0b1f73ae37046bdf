use std::fs;
use std::path::Path;

use dcomplete::catalog::{catalog, catalog_poset};
use dcomplete::classical::{classical_insert_rsk, gt_from_rpp, reading_order, rsk_on_rectangle, ssyt_from_gt, toggle_rpp};
use dcomplete::dstructure::{check_d_complete, find_d_intervals};
use dcomplete::extensions::{collect_linear_extensions, count_linear_extensions_capped};
use dcomplete::format::{parse_filling, parse_matrix, parse_order, parse_poset, write_filling, write_poset};
use dcomplete::hooks::RationalPoint;
use dcomplete::rational::{format_rational, to_f64};
use dcomplete::rsk::{inverse_rsk, rsk as apply_rsk, InsertionOrder};
use dcomplete::suite::{Suite, CRITERIA};
use dcomplete::verify::{closed_form_volume, monte_carlo_volume, verify_multivariate, verify_proctor_capped, PolytopeKind, PolytopeSpec};
use dcomplete::{Analysis, Error, Poset};

pub enum Outcome {
    Ok,
    Failed,
}

impl From<bool> for Outcome {
    fn from(ok: bool) -> Self {
        if ok {
            Outcome::Ok
        } else {
            Outcome::Failed
        }
    }
}

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        // Broken contracts are verification failures; everything else is
        // bad input.
        let code = if matches!(e, Error::Contract(_)) { 1 } else { 2 };
        CliError { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError { code: 2, message: message.into() }
}

type CmdResult = Result<Outcome, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_poset(arg: &str) -> Result<Poset, CliError> {
    match arg.strip_prefix("catalog:") {
        Some(name) => Ok(catalog_poset(name)?),
        None => {
            let path = Path::new(arg);
            Ok(parse_poset(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))?)
        }
    }
}

fn load_analysis(arg: &str) -> Result<Analysis, CliError> {
    Ok(Analysis::new(load_poset(arg)?)?)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn check(poset: &str) -> CmdResult {
    let p = load_poset(poset)?;
    let report = check_d_complete(&p);
    println!(
        "elements={} covers={} d_intervals={} is_d_complete={}",
        p.len(),
        p.cover_pairs().len(),
        find_d_intervals(&p).len(),
        report.is_d_complete
    );
    for v in &report.violations {
        println!("violation axiom={} witness={}", v.axiom, join(&v.witness, ","));
    }
    Ok(report.is_d_complete.into())
}

pub fn diagonals(poset: &str) -> CmdResult {
    let an = load_analysis(poset)?;
    let part = an.diagonals();
    println!("diagonals={}", part.len());
    for d in 0..part.len() {
        println!("diagonal id={d} chain={}", join(part.chain(an.poset(), d), ","));
    }
    for (c, d) in part.adjacent_pairs() {
        println!("adjacent={c},{d}");
    }
    Ok(Outcome::Ok)
}

pub fn hooks(poset: &str) -> CmdResult {
    let an = load_analysis(poset)?;
    for p in an.poset().elements() {
        println!(
            "element={p} name={} diagonal={} hook_vector={} hook_length={}",
            an.poset().label(p),
            an.diagonal_of(p),
            join(an.hook(p).entries(), ","),
            an.hook(p).total()
        );
    }
    Ok(Outcome::Ok)
}

fn insertion_order(an: &Analysis, spec: &str) -> Result<Option<InsertionOrder>, CliError> {
    if spec == "stable" {
        return Ok(None);
    }
    match spec.strip_prefix("given:") {
        Some(file) => {
            let order = parse_order(&read(Path::new(file))?)?;
            if !order.is_valid(an.poset()) {
                return Err(usage(format!("{file}: not a linear extension listed top element first")));
            }
            Ok(Some(InsertionOrder(order)))
        }
        None => Err(usage(format!("--order must be `stable` or `given:<file>`, got {spec:?}"))),
    }
}

pub fn rsk(poset: &str, filling: &Path, order: &str, inverse: bool) -> CmdResult {
    let an = load_analysis(poset)?;
    let input = parse_filling(&read(filling)?, an.len())?;
    let order = insertion_order(&an, order)?;
    let image = if inverse {
        inverse_rsk(&an, &input, order.as_ref())?
    } else {
        apply_rsk(&an, &input, order.as_ref())?
    };
    print!("{}", write_filling(&image));
    Ok(Outcome::Ok)
}

pub fn extensions(poset: &str, cap: u64, count_only: bool) -> CmdResult {
    let p = load_poset(poset)?;
    if count_only {
        println!("extensions={}", count_linear_extensions_capped(&p, cap)?);
        return Ok(Outcome::Ok);
    }
    let all = collect_linear_extensions(&p, cap)?;
    println!("extensions={}", all.len());
    for t in &all {
        println!("extension={}", join(t.as_slice(), " "));
    }
    Ok(Outcome::Ok)
}

pub fn verify_proctor(poset: &str, cap: u64) -> CmdResult {
    let an = load_analysis(poset)?;
    let c = verify_proctor_capped(&an, cap)?;
    println!(
        "extensions={} hook_product={} factorial={} ok={}",
        c.extensions, c.hook_product, c.factorial, c.ok
    );
    Ok(c.ok.into())
}

pub fn verify_hlf(poset: &str, points: usize, seed: u64, cap: u64) -> CmdResult {
    let an = load_analysis(poset)?;
    let r = verify_multivariate(&an, points, seed, cap)?;
    println!("seed={seed} points={points} extensions={}", r.extensions);
    for (i, p) in r.points.iter().enumerate() {
        println!(
            "point={i} x={} weight_sum={} hook_side={} ok={}",
            join(p.point.values().iter().map(format_rational), ","),
            format_rational(&p.weight_sum),
            format_rational(&p.hook_side),
            p.ok()
        );
    }
    println!("ok={}", r.ok());
    Ok(r.ok().into())
}

pub fn volume(poset: &str, kind: &str, samples: u64, seed: u64, cap: u64) -> CmdResult {
    let an = load_analysis(poset)?;
    let kind: PolytopeKind = kind.parse()?;
    let x = RationalPoint::ones(an.diagonals().len());
    let exact = closed_form_volume(&an, kind, &x, cap)?;
    let est = monte_carlo_volume(&an, &PolytopeSpec { kind, point: x }, samples, seed)?;
    let exact_f = to_f64(&exact);
    let diff = (est.estimate - exact_f).abs();
    let z = if diff == 0.0 { 0.0 } else { diff / est.std_error_at(exact_f) };
    let ok = z <= 4.0;
    println!(
        "kind={kind} samples={samples} seed={seed} hits={} box_volume={} estimate={} std_error={} exact={} z={z:.3} ok={ok}",
        est.hits,
        est.box_volume,
        est.estimate,
        est.std_error,
        format_rational(&exact)
    );
    Ok(ok.into())
}

pub fn classical_rsk(matrix: &Path) -> CmdResult {
    let m = parse_matrix(&read(matrix)?).map_err(|e| usage(format!("{}: {e}", matrix.display())))?;
    let (p, q) = classical_insert_rsk(&m);
    let rpp = toggle_rpp(&m, &reading_order(m.height(), m.width()))?;
    println!("P={p}");
    println!("Q={q}");
    println!("rpp={}", join(rpp.rows().iter().map(|r| join(r, ",")), "/"));
    let mut ok = rsk_on_rectangle(&m)? == rpp;
    if m.height() == m.width() {
        let (lower, upper) = gt_from_rpp(&rpp)?;
        println!("lower_gt={lower}");
        println!("upper_gt={upper}");
        ok &= ssyt_from_gt(&lower)? == p && ssyt_from_gt(&upper)? == q;
    }
    println!("agree={ok}");
    Ok(ok.into())
}

pub fn suite(seed: u64, criterion: Option<usize>) -> CmdResult {
    let ids: Vec<usize> = match criterion {
        Some(id) if (1..=CRITERIA).contains(&id) => vec![id],
        Some(id) => return Err(usage(format!("criterion must be between 1 and {CRITERIA}, got {id}"))),
        None => (1..=CRITERIA).collect(),
    };
    let suite = Suite::new(seed)?;
    println!("seed={seed} posets={}", suite.len());
    let mut passed = 0;
    for &id in &ids {
        let r = suite.criterion(id);
        println!("{r}");
        passed += usize::from(r.passed);
    }
    println!("passed={passed}/{}", ids.len());
    Ok((passed == ids.len()).into())
}

pub fn gen(names: &[String], all: bool, dir: Option<&Path>) -> CmdResult {
    let entries: Vec<(String, Poset)> = if all {
        if !names.is_empty() {
            return Err(usage("give either names or --all, not both"));
        }
        catalog().into_iter().map(|e| (e.name, e.poset)).collect()
    } else {
        names
            .iter()
            .map(|n| Ok((n.clone(), catalog_poset(n)?)))
            .collect::<Result<_, CliError>>()?
    };
    match dir {
        None => {
            if entries.len() != 1 {
                return Err(usage("printing to standard output needs exactly one poset; use --dir"));
            }
            print!("{}", write_poset(&entries[0].1));
        }
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
            for (name, p) in &entries {
                let path = dir.join(format!("{name}.poset"));
                fs::write(&path, write_poset(p)).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                println!("wrote={}", path.display());
            }
        }
    }
    Ok(Outcome::Ok)
}
