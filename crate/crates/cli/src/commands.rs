use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use catalyst_core::catalysis::{
    classify_catalyst, example3, is_general_catalyst, locc_feasible, mutual_region_scan,
    CatalystReport,
};
use catalyst_core::experiments::io::{
    read_pairs_jsonl, write_curve_csv, write_pairs_jsonl, write_region_csv, PairRecord,
};
use catalyst_core::experiments::{
    fixture_suite, generate_catalyzable_pairs, success_probability_curve, CatalyzablePair,
    PairGenSpec,
};
use catalyst_core::schmidt::{majorizes_check, precedes, tensor_spectrum};
use catalyst_core::search::{CatalystTarget, SearchConfig, SearchRegistry};
use catalyst_core::{Error, OscVector, Tolerance, TransformQuery};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::manifest::RunManifest;
use crate::state::read_state;
use crate::{Cli, Command, GeneratorArgs, GlobalArgs, Mode};

fn verdict(feasible: bool) -> ExitCode {
    if feasible {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

pub fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    if let Some(n) = cli.global.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    let g = &cli.global;
    let tol = g.tolerance()?;
    match &cli.command {
        Command::Check { psi, phi } => check(g, &tol, psi, phi),
        Command::Catalyze {
            psi,
            phi,
            chi,
            chi_prime,
            k,
            mode,
            big_number,
            strategy,
        } => {
            let (mut manifest, q) = load_query(g, &tol, "catalyze", psi, phi)?;
            match (chi, k) {
                (Some(chi), None) => {
                    if strategy.is_some() {
                        return Err(CliError::Usage(
                            "--strategy applies to --k searches only".into(),
                        ));
                    }
                    catalyze_file(g, &tol, &mut manifest, &q, chi, chi_prime.as_deref(), *mode)
                }
                (None, Some(k)) => {
                    let cfg = SearchConfig {
                        tol,
                        ..SearchConfig::new(*k, *big_number, g.seed)
                    };
                    catalyze_search(g, &mut manifest, &q, &cfg, *mode, strategy.as_deref())
                }
                _ => Err(CliError::Usage("give exactly one of --chi and --k".into())),
            }
        }
        Command::Region {
            psi,
            phi,
            chi,
            resolution,
        } => region(g, &tol, [psi, phi, chi], *resolution),
        Command::Curve {
            pairs,
            generator,
            budgets,
        } => curve(g, &tol, pairs.as_deref(), generator, budgets),
        Command::Genpairs { generator } => genpairs(g, &tol, generator),
        Command::Fixtures => fixtures(g, &tol),
        Command::Strategies => {
            let list: Vec<Value> = SearchRegistry::builtin()
                .iter()
                .map(|s| json!({"name": s.name(), "target": s.target(), "description": s.description()}))
                .collect();
            print_json(&list)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn stdout(bytes: &[u8]) -> Result<(), CliError> {
    match io::stdout().lock().write_all(bytes) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            Err(CliError::io(Path::new("<stdout>"), e))
        }
        _ => Ok(()),
    }
}

fn print_json<T: Serialize + ?Sized>(value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_vec_pretty(value)?;
    text.push(b'\n');
    stdout(&text)
}

fn out_dir(g: &GlobalArgs) -> Result<PathBuf, CliError> {
    let dir = g.out.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
    Ok(dir)
}

/// Prints a JSON report; with `--out` it is also saved with a manifest.
fn emit<T: Serialize>(
    g: &GlobalArgs,
    mut manifest: RunManifest,
    stem: &str,
    report: &T,
) -> Result<(), CliError> {
    let mut text = serde_json::to_vec_pretty(report)?;
    text.push(b'\n');
    stdout(&text)?;
    if g.out.is_some() {
        let dir = out_dir(g)?;
        manifest.write_output(&dir, &format!("{stem}.json"), &text)?;
        manifest.finish(&dir, stem)?;
    }
    Ok(())
}

fn load_query(
    g: &GlobalArgs,
    tol: &Tolerance,
    command: &str,
    psi: &Path,
    phi: &Path,
) -> Result<(RunManifest, TransformQuery), CliError> {
    let mut manifest = RunManifest::new(command, g.seed, *tol, Value::Null);
    let (_, psi_v, psi_bytes) = read_state(psi, tol)?;
    let (_, phi_v, phi_bytes) = read_state(phi, tol)?;
    manifest.add_input(psi, &psi_bytes);
    manifest.add_input(phi, &phi_bytes);
    Ok((manifest, TransformQuery::new(psi_v, phi_v)))
}

fn check(g: &GlobalArgs, tol: &Tolerance, psi: &Path, phi: &Path) -> Result<ExitCode, CliError> {
    let (manifest, q) = load_query(g, tol, "check", psi, phi)?;
    let v = majorizes_check(&q.psi, &q.phi, tol);
    let (pp, fp) = q.padded();
    let feasible = v.a_precedes_b();
    let report = json!({
        "feasible": feasible,
        "relation": v.relation,
        "first_violation": v.first_violation,
        "psi_partial_sums": pp.partial_sums(),
        "phi_partial_sums": fp.partial_sums(),
    });
    emit(g, manifest, "check", &report)?;
    Ok(verdict(feasible))
}

fn catalyze_file(
    g: &GlobalArgs,
    tol: &Tolerance,
    manifest: &mut RunManifest,
    q: &TransformQuery,
    chi_path: &Path,
    chi_prime_path: Option<&Path>,
    mode: Mode,
) -> Result<ExitCode, CliError> {
    let (_, chi, bytes) = read_state(chi_path, tol)?;
    manifest.add_input(chi_path, &bytes);
    let report = match (mode, chi_prime_path) {
        (Mode::Standard, Some(_)) => {
            return Err(CliError::Usage("--chi-prime needs --mode general".into()));
        }
        (Mode::Standard, None) => residual_report(q, &chi, chi.clone(), tol)?,
        (Mode::General, Some(path)) => {
            let (_, chi_p, bytes) = read_state(path, tol)?;
            manifest.add_input(path, &bytes);
            residual_report(q, &chi, chi_p, tol)?
        }
        (Mode::General, None) => is_general_catalyst(q, &chi, tol),
    };
    manifest.parameters =
        json!({"mode": mode_name(mode), "chi": chi_path, "chi_prime": chi_prime_path});
    let feasible = report.feasible;
    let out = json!({
        "mode": mode_name(mode),
        "locc_feasible": locc_feasible(q, tol),
        "report": report,
    });
    emit(g, manifest.clone(), "catalyze", &out)?;
    Ok(verdict(feasible))
}

/// Tests one tuple `(χ, χ′)` directly.
fn residual_report(
    q: &TransformQuery,
    chi: &OscVector,
    chi_p: OscVector,
    tol: &Tolerance,
) -> Result<CatalystReport, CliError> {
    match classify_catalyst(q, chi, &chi_p, tol) {
        Ok(class) => Ok(CatalystReport {
            feasible: true,
            classification: Some(class),
            residual: Some(chi_p),
        }),
        Err(Error::NotACatalyst) => Ok(CatalystReport::infeasible()),
        Err(e) => Err(e.into()),
    }
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::General => "general",
        Mode::Standard => "standard",
    }
}

fn catalyze_search(
    g: &GlobalArgs,
    manifest: &mut RunManifest,
    q: &TransformQuery,
    cfg: &SearchConfig,
    mode: Mode,
    strategy: Option<&str>,
) -> Result<ExitCode, CliError> {
    let target = match mode {
        Mode::General => CatalystTarget::General,
        Mode::Standard => CatalystTarget::Standard,
    };
    let registry = SearchRegistry::builtin();
    let name = strategy.unwrap_or(SearchRegistry::default_name(target));
    let outcome = registry.get_for(name, target)?.search(q, cfg)?;
    if let Some(chi) = &outcome.catalyst {
        // re-verify whatever the strategy returned
        let ok = match target {
            CatalystTarget::Standard => precedes(
                &tensor_spectrum(&q.psi, chi),
                &tensor_spectrum(&q.phi, chi),
                &cfg.tol,
            ),
            CatalystTarget::General => is_general_catalyst(q, chi, &cfg.tol).feasible,
        };
        if !ok {
            return Err(CliError::Usage(format!(
                "strategy `{name}` returned an invalid catalyst"
            )));
        }
    }
    manifest.parameters =
        json!({"mode": mode_name(mode), "k": cfg.k, "M": cfg.big_number, "strategy": name});
    let success = outcome.is_success();
    let out = json!({
        "mode": mode_name(mode),
        "strategy": name,
        "k": cfg.k,
        "outcome": outcome,
    });
    emit(g, manifest.clone(), "catalyze", &out)?;
    Ok(verdict(success))
}

fn state_or(
    path: Option<&PathBuf>,
    default: &[f64],
    tol: &Tolerance,
    manifest: &mut RunManifest,
) -> Result<OscVector, CliError> {
    match path {
        Some(p) => {
            let (_, v, bytes) = read_state(p, tol)?;
            manifest.add_input(p, &bytes);
            Ok(v)
        }
        None => Ok(OscVector::new(default, tol)?),
    }
}

fn region(
    g: &GlobalArgs,
    tol: &Tolerance,
    files: [&Option<PathBuf>; 3],
    resolution: usize,
) -> Result<ExitCode, CliError> {
    if resolution < 1 {
        return Err(CliError::Usage("--resolution must be at least 1".into()));
    }
    let mut manifest = RunManifest::new("region", g.seed, *tol, json!({"resolution": resolution}));
    let psi = state_or(files[0].as_ref(), &example3::PSI, tol, &mut manifest)?;
    let phi = state_or(files[1].as_ref(), &example3::PHI, tol, &mut manifest)?;
    let chi = state_or(files[2].as_ref(), &example3::CHI, tol, &mut manifest)?;
    manifest.parameters = json!({
        "resolution": resolution,
        "psi": psi,
        "phi": phi,
        "chi": chi,
    });
    let grid = mutual_region_scan(&psi, &phi, &chi, resolution, tol);
    let mut csv = Vec::new();
    write_region_csv(&mut csv, &grid)?;
    let dir = out_dir(g)?;
    let path = manifest.write_output(&dir, "region.csv", &csv)?;
    manifest.finish(&dir, "region")?;
    print_json(&json!({
        "resolution": resolution,
        "valid_cells": grid.valid_count(),
        "feasible_cells": grid.feasible_count(),
        "csv": path,
    }))?;
    Ok(ExitCode::SUCCESS)
}

fn pair_spec(g: &GlobalArgs, gen: &GeneratorArgs) -> PairGenSpec {
    PairGenSpec {
        n: gen.n,
        k: gen.k,
        count: gen.count,
        seed: g.seed,
        max_rejections: gen.max_rejections,
    }
}

fn curve(
    g: &GlobalArgs,
    tol: &Tolerance,
    pairs_path: Option<&Path>,
    gen: &GeneratorArgs,
    budgets: &[u64],
) -> Result<ExitCode, CliError> {
    let spec = pair_spec(g, gen);
    let mut manifest = RunManifest::new("curve", g.seed, *tol, Value::Null);
    let pairs: Vec<CatalyzablePair> = match pairs_path {
        Some(path) => {
            let bytes = fs::read(path).map_err(|e| CliError::io(path, e))?;
            manifest.add_input(path, &bytes);
            let file = File::open(path).map_err(|e| CliError::io(path, e))?;
            let pairs: Vec<CatalyzablePair> = read_pairs_jsonl(BufReader::new(file))?
                .into_iter()
                .map(PairRecord::into_pair)
                .collect();
            if let Some(bad) = pairs.iter().find(|p| !p.verify(tol)) {
                return Err(CliError::Usage(format!(
                    "{}: pair {} is not certified by its witness",
                    path.display(),
                    bad.index
                )));
            }
            manifest.parameters = json!({"k": gen.k, "budgets": budgets, "pairs": path});
            pairs
        }
        None => {
            manifest.parameters = json!({"k": gen.k, "budgets": budgets, "generator": spec});
            generate_catalyzable_pairs(&spec, tol)?
        }
    };
    let points = success_probability_curve(&pairs, gen.k, budgets, g.seed, tol)?;
    let mut csv = Vec::new();
    write_curve_csv(&mut csv, &points)?;
    let dir = out_dir(g)?;
    manifest.write_output(&dir, "curve.csv", &csv)?;
    manifest.finish(&dir, "curve")?;
    print_json(&points)?;
    Ok(ExitCode::SUCCESS)
}

fn genpairs(g: &GlobalArgs, tol: &Tolerance, gen: &GeneratorArgs) -> Result<ExitCode, CliError> {
    let spec = pair_spec(g, gen);
    let mut manifest = RunManifest::new("genpairs", g.seed, *tol, serde_json::to_value(spec)?);
    let pairs = generate_catalyzable_pairs(&spec, tol)?;
    let mut jsonl = Vec::new();
    write_pairs_jsonl(&mut jsonl, &pairs, spec.seed)?;
    let dir = out_dir(g)?;
    let path = manifest.write_output(&dir, "pairs.jsonl", &jsonl)?;
    manifest.finish(&dir, "pairs")?;
    let attempts = pairs.last().map_or(0, |p| p.attempt + 1);
    print_json(&json!({
        "pairs": pairs.len(),
        "attempts": attempts,
        "acceptance_rate": pairs.len() as f64 / attempts as f64,
        "archive": path,
    }))?;
    Ok(ExitCode::SUCCESS)
}

fn fixtures(g: &GlobalArgs, tol: &Tolerance) -> Result<ExitCode, CliError> {
    let report = fixture_suite(tol);
    let manifest = RunManifest::new("fixtures", g.seed, *tol, Value::Null);
    emit(g, manifest, "fixtures", &report)?;
    for f in &report.fixtures {
        eprintln!("{} {}", if f.passed { "pass" } else { "FAIL" }, f.name);
    }
    Ok(verdict(report.all_passed()))
}
