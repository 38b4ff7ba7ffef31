use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use std::path::{Path, PathBuf};
use tamedeg_core::bloc::{Calibration, ClassificationRun, GoldenRow};
use tamedeg_core::degen::{DeformationPoset, TubeFilter};
use tamedeg_core::io::{self, Caps, QuiverSpec, RunConfig, RunFile};
use tamedeg_core::tube::{BlocRecord, TubeCat};
use tamedeg_core::{Catalog, Indec, ModuleSum, Quiver, TubeId};

/// Degenerations of representations of tame quivers.
#[derive(Parser)]
#[command(name = "tamedeg", version)]
struct Cli {
    /// Accepted for scripts; every run is deterministic.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct QuiverArgs {
    /// Quiver type such as `E~6`, `D~8`, `A~3` or `A3`.
    #[arg(long = "type")]
    ty: Option<String>,
    /// Sink vertex (1-based).
    #[arg(long, default_value_t = 1)]
    sink: usize,
    /// Source vertex for `A~n` (1-based).
    #[arg(long)]
    source: Option<usize>,
    /// Quiver file with `vertices N` and `arrow s t` lines; overrides `--type`.
    #[arg(long)]
    quiver: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct CapArgs {
    /// Largest number of deformations enumerated for one target.
    #[arg(long, default_value_t = Caps::default().max_elements)]
    max_elements: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// `[X,Y]` and `Ext(X,Y)` for two indecomposables.
    Hom {
        #[command(flatten)]
        q: QuiverArgs,
        x: String,
        y: String,
    },
    /// Hom and ext dimensions between all given modules, one row per pair.
    Homtable {
        #[command(flatten)]
        q: QuiverArgs,
        modules: Vec<String>,
    },
    /// Deformation poset of `U + V`, in a quiver or in a standalone tube.
    Poset {
        #[command(flatten)]
        q: QuiverArgs,
        /// Work in the tube of period `p`, given as `p=4`; modules are `E{s}:{l}`.
        #[arg(long)]
        tube: Option<String>,
        /// Only deformations inside the tube of `U` and `V`.
        #[arg(long)]
        tube_only: bool,
        /// Write the Hasse diagram as Graphviz DOT here; nonsplit extensions of a same-tube pair are bold.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write elements, codimensions and covers as JSON here.
        #[arg(long)]
        json: Option<PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
        u: String,
        v: String,
    },
    /// Building blocs `M < U + tau^k I(v)` over a range of `k`.
    Classify {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Consistency checks over the blocs of a run file written by `classify --json`.
    Audit {
        run_file: PathBuf,
        /// Also re-verify minimality of every bloc.
        #[arg(long)]
        verify_minimal: bool,
    },
    /// Extension middle terms of `0 -> U -> M -> V -> 0` in one tube.
    Extposet {
        #[command(flatten)]
        q: QuiverArgs,
        /// Standalone tube `p=N`; modules are then `E{s}:{l}`.
        #[arg(long)]
        tube: Option<String>,
        u: String,
        v: String,
    },
    /// `e^n(X)` for the simples of tube `mu` (1-based).
    Eshift {
        #[command(flatten)]
        q: QuiverArgs,
        #[arg(long)]
        tube: u8,
        #[arg(long, default_value_t = 1)]
        times: u32,
        x: String,
    },
    /// Image of a bloc `M < U + V` under the periodic shift.
    PeriodicShift {
        #[command(flatten)]
        q: QuiverArgs,
        /// Tube used by the shift (1-based); found from `M` when omitted.
        #[arg(long)]
        tube: Option<u8>,
        u: String,
        v: String,
        m: String,
    },
}

#[derive(Args, Clone)]
struct RunArgs {
    #[command(flatten)]
    q: QuiverArgs,
    /// Summand `U`; defaults to `P(sink)`.
    #[arg(long)]
    u: Option<String>,
    /// Shifts `k` of the targets `tau^k I(v)`: `K` for `0..=K`, `A..B` for
    /// `A..=B`; an empty range gives an empty table.
    #[arg(long, allow_hyphen_values = true)]
    vrange: String,
    /// Only blocs inside this non-homogeneous tube (1-based).
    #[arg(long)]
    tube: Option<u8>,
    /// Write the versioned run file here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Do not relabel tube modules through the table calibration.
    #[arg(long)]
    no_calibration: bool,
}

/// Exit codes: 2 for unusable input, 3 for an exceeded cap, 4 for a failed
/// internal invariant or audit.
fn exit_code(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<tamedeg_core::Error>() {
        Some(tamedeg_core::Error::Cap(_)) => 3,
        Some(tamedeg_core::Error::Internal(_)) => 4,
        _ if e.downcast_ref::<AuditFailed>().is_some() => 4,
        _ => 2,
    }
}

#[derive(Debug)]
struct AuditFailed(usize);

impl std::fmt::Display for AuditFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} audit violations", self.0)
    }
}

impl std::error::Error for AuditFailed {}

fn main() {
    let cli = Cli::parse();
    let mut out = String::new();
    match run(cli.cmd, &mut out) {
        Ok(()) => print!("{out}"),
        Err(e) => {
            print!("{out}");
            eprintln!("error: {e:#}");
            std::process::exit(exit_code(&e));
        }
    }
}

fn run(cmd: Cmd, out: &mut String) -> Result<()> {
    match cmd {
        Cmd::Hom { q, x, y } => {
            let cat = catalog(&q, false)?;
            let (x, y) = (indec(&cat, &x)?, indec(&cat, &y)?);
            out.push_str(&format!("hom {}\next {}\n", cat.hom(&x, &y), cat.ext(&x, &y)));
        }
        Cmd::Homtable { q, modules } => {
            let cat = catalog(&q, false)?;
            let xs = modules.iter().map(|m| indec(&cat, m)).collect::<Result<Vec<_>>>()?;
            out.push_str("X\tY\thom\text\n");
            for x in &xs {
                for y in &xs {
                    out.push_str(&format!("{x}\t{y}\t{}\t{}\n", cat.hom(x, y), cat.ext(x, y)));
                }
            }
        }
        Cmd::Poset { q, tube, tube_only, dot, json, caps, u, v } => {
            let (poset, bold) = match tube {
                Some(p) => tube_poset(&p, &u, &v, caps.max_elements)?,
                None => quiver_poset(&q, tube_only, caps.max_elements, &u, &v)?,
            };
            out.push_str(&format!("target {}\n", poset.target));
            out.push_str(&format!("elements {}\ncovers {}\n", poset.elements.len(), poset.covers.len()));
            for (i, m) in poset.elements.iter().enumerate() {
                let mark = if bold[i] { "\textension" } else { "" };
                out.push_str(&format!("{}\t{m}{mark}\n", poset.codims[i]));
            }
            if let Some(p) = dot {
                write(&p, &io::emit_dot(&poset, &bold))?;
            }
            if let Some(p) = json {
                write(&p, &io::poset_json(&poset))?;
            }
        }
        Cmd::Classify { run } => {
            let (file, cat) = classify(&run)?;
            out.push_str(&table(&cat, &file));
            if let Some(p) = &run.json {
                write(p, &io::emit_json(&file))?;
            }
        }
        Cmd::Audit { run_file, verify_minimal } => {
            let text = std::fs::read_to_string(&run_file).with_context(|| format!("reading {}", run_file.display()))?;
            let file = io::parse_run(&text)?;
            let cat = Catalog::new(file.config.validate()?)?;
            if cat.quiver().to_text() != file.run.quiver {
                bail!(tamedeg_core::Error::Parse("run file quiver does not match its configuration".into()));
            }
            let rep = cat.audit_blocs(&file.run.blocs, verify_minimal)?;
            out.push_str("check\tapplicable\tviolations\n");
            for c in &rep.checks {
                out.push_str(&format!("{}\t{}\t{}\n", c.name, c.applicable, c.violations.len()));
            }
            for v in rep.violations() {
                out.push_str(&format!("violation {}: {} < {} + {}: {}\n", v.check, v.m, v.u, v.v, v.detail));
            }
            let n = rep.violations().count();
            if n > 0 {
                return Err(AuditFailed(n).into());
            }
        }
        Cmd::Extposet { q, tube, u, v } => {
            let e = match tube {
                Some(p) => {
                    let t = TubeCat::new(period(&p)?)?;
                    t.extension_poset(&tube_indec(&t, &u)?, &tube_indec(&t, &v)?)?
                }
                None => {
                    let cat = catalog(&q, false)?;
                    cat.extension_poset(&indec(&cat, &u)?, &indec(&cat, &v)?)?
                }
            };
            out.push_str(&format!("U {}\nV {}\nr {}\n", e.u, e.v, e.r));
            for (m, x) in e.s_set.iter().zip(&e.middle) {
                out.push_str(&format!("{m}\t{x}\n"));
            }
            match e.min_codim {
                Some(c) => out.push_str(&format!("minimal codim {c}\n")),
                None => out.push_str("split only\n"),
            }
        }
        Cmd::Eshift { q, tube, times, x } => {
            let cat = catalog(&q, true)?;
            let x = indec(&cat, &x)?;
            out.push_str(&format!("{}\n", cat.generic_extension_pow(&x, nonhom(&cat, tube)?, times)?));
        }
        Cmd::PeriodicShift { q, tube, u, v, m } => {
            let cat = catalog(&q, true)?;
            let (u, v) = (indec(&cat, &u)?, indec(&cat, &v)?);
            let m = ModuleSum::parse(&m)?;
            let n = ModuleSum::from_counts([(u, 1), (v, 1)]);
            let b = BlocRecord::direct(u, v, m.clone(), cat.codim(&n, &m)?);
            let mu = match tube {
                Some(t) => nonhom(&cat, t)?,
                None => cat.shift_tube(&b).ok_or_else(|| anyhow!("no tube satisfies the shift hypothesis for {m}"))?,
            };
            let s = cat.periodic_shift(&b, mu)?;
            out.push_str(&format!("{}\t{}\t{}\t{}\n", s.u, s.v, s.m, s.codim));
        }
    }
    Ok(())
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn spec(q: &QuiverArgs, extended: bool) -> Result<QuiverSpec> {
    if let Some(path) = &q.quiver {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let quiver = Quiver::from_text(&text)?;
        return Ok(QuiverSpec::Arrows {
            vertices: quiver.vertex_count(),
            arrows: quiver.arrows().iter().map(|&(s, t)| (s + 1, t + 1)).collect(),
        });
    }
    let Some(ty) = &q.ty else { bail!(tamedeg_core::Error::Parse("give --type or --quiver".into())) };
    // Commands that need tubes read a Dynkin-looking name as its extended type.
    let ty = if extended && !ty.contains('~') && ty.len() > 1 { format!("{}~{}", &ty[..1], &ty[1..]) } else { ty.clone() };
    Ok(QuiverSpec::Named { ty, sink: q.sink, source: q.source })
}

fn catalog(q: &QuiverArgs, extended: bool) -> Result<Catalog> {
    let quiver = spec(q, extended)?.resolve()?;
    if extended && !quiver.is_extended() {
        bail!(tamedeg_core::Error::NotExtended);
    }
    Ok(Catalog::new(quiver)?)
}

fn indec(cat: &Catalog, s: &str) -> Result<Indec> {
    let m = ModuleSum::parse(s)?;
    let [(x, 1)] = m.items() else { bail!(tamedeg_core::Error::Parse(format!("{s:?} is not indecomposable"))) };
    cat.validate(x)?;
    Ok(*x)
}

fn nonhom(cat: &Catalog, t: u8) -> Result<TubeId> {
    if t == 0 || t as usize > cat.tubes().len() {
        bail!(tamedeg_core::Error::Parse(format!("no tube {t}")));
    }
    Ok(TubeId::NonHom(t - 1))
}

fn period(p: &str) -> Result<u32> {
    p.strip_prefix("p=")
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| tamedeg_core::Error::Parse(format!("expected p=N, got {p:?}")).into())
}

/// `E{s}:{l}` with 1-based socle `s`, or any text form of a tube module.
fn tube_indec(t: &TubeCat, s: &str) -> Result<Indec> {
    let bad = || tamedeg_core::Error::Parse(format!("bad tube module {s:?}"));
    let x = match s.strip_prefix('E').and_then(|r| r.split_once(':')) {
        Some((a, b)) => {
            let (a, b): (u32, u32) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
            if a == 0 || a > t.period() || b == 0 {
                return Err(bad().into());
            }
            t.module(a - 1, b)
        }
        None => ModuleSum::parse(s)?.summands().first().copied().ok_or_else(bad)?,
    };
    t.validate(&ModuleSum::single(x))?;
    Ok(x)
}

fn tube_poset(p: &str, u: &str, v: &str, cap: usize) -> Result<(DeformationPoset, Vec<bool>)> {
    let t = TubeCat::new(period(p)?)?;
    let (u, v) = (tube_indec(&t, u)?, tube_indec(&t, v)?);
    let n = ModuleSum::from_counts([(u, 1), (v, 1)]);
    let poset = t.deformation_poset(&n, cap)?;
    let bold = poset
        .elements
        .iter()
        .map(|m| Ok(*m != n && t.is_extension_regular_pair(m, &u, &v)?))
        .collect::<Result<Vec<bool>>>()?;
    Ok((poset, bold))
}

fn quiver_poset(q: &QuiverArgs, tube_only: bool, cap: usize, u: &str, v: &str) -> Result<(DeformationPoset, Vec<bool>)> {
    let cat = catalog(q, false)?;
    let (u, v) = (indec(&cat, u)?, indec(&cat, v)?);
    let n = ModuleSum::from_counts([(u, 1), (v, 1)]);
    let filter = if tube_only {
        match (u.tube(), v.tube()) {
            (Some(a), Some(b)) if a == b => TubeFilter::Only(a),
            _ => bail!(tamedeg_core::Error::Precondition("--tube-only needs U and V in one tube".into())),
        }
    } else {
        TubeFilter::Any
    };
    let poset = cat.deformation_poset(&n, filter, &|_| true, cap)?;
    let same_tube = u.tube().is_some() && u.tube() == v.tube();
    let bold = poset
        .elements
        .iter()
        .map(|m| Ok(same_tube && *m != n && cat.is_extension_regular_pair(m, &u, &v)?))
        .collect::<Result<Vec<bool>>>()?;
    Ok((poset, bold))
}

/// Inclusive shift range; `None` when empty.
fn vrange(s: &str) -> Result<Option<(u32, u32)>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(None);
    }
    let bad = || tamedeg_core::Error::Parse(format!("bad range {s:?}"));
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (0, num(s)?),
    };
    Ok((a <= b).then_some((a, b)))
}

fn classify(args: &RunArgs) -> Result<(RunFile, Catalog)> {
    let spec = spec(&args.q, true)?;
    let range = vrange(&args.vrange)?;
    let config = RunConfig {
        quiver: spec.clone(),
        caps: Caps { max_shift: range.map_or(0, |r| r.1), ..Caps::default() },
    };
    let cat = Catalog::new(config.validate()?)?;
    if !cat.is_extended() {
        bail!(tamedeg_core::Error::NotExtended);
    }
    let u = match &args.u {
        Some(s) => indec(&cat, s)?,
        None => {
            if args.q.sink == 0 || args.q.sink > cat.n() {
                bail!(tamedeg_core::Error::Parse(format!("no vertex {}", args.q.sink)));
            }
            Indec::preproj(args.q.sink - 1, 0)
        }
    };
    let targets: Vec<Indec> = match range {
        Some((a, b)) => (a..=b).flat_map(|k| (0..cat.n()).map(move |v| Indec::preinj(v, k))).collect(),
        None => Vec::new(),
    };
    let tube = args.tube.map(|t| nonhom(&cat, t)).transpose()?;
    let run = if targets.is_empty() {
        ClassificationRun { quiver: cat.quiver().to_text(), u, targets, tube, blocs: Vec::new() }
    } else {
        cat.classify_run(&u, &targets, tube)?
    };
    let calibration = if args.no_calibration { None } else { calibration(&cat, &spec)? };
    Ok((RunFile::new(config, calibration, run), cat))
}

/// The first calibration reproducing every table row of this quiver.
fn calibration(cat: &Catalog, spec: &QuiverSpec) -> Result<Option<Calibration>> {
    let QuiverSpec::Named { ty, sink, .. } = spec else { return Ok(None) };
    let rows = GoldenRow::all();
    let mine: Vec<&GoldenRow> = rows.iter().filter(|r| &r.ty == ty && r.sink == *sink).collect();
    if mine.is_empty() {
        return Ok(None);
    }
    Ok(Calibration::fit(cat, &mine)?.into_iter().next())
}

/// Columns: quiver, `U`, `V`, the shift `k` of `V = tau^k I(v)`, `M`, its
/// codimension and its table label (`-` outside calibrated tubes).
fn table(cat: &Catalog, f: &RunFile) -> String {
    let q = match &f.config.quiver {
        QuiverSpec::Named { ty, .. } => ty.clone(),
        QuiverSpec::Arrows { .. } => "-".into(),
    };
    let mut s = String::from("Q\tU\tV\tk\tM\tcodim\tlabel\n");
    for b in &f.run.blocs {
        let label = f.calibration.as_ref().and_then(|c| c.sum_label(cat, &b.m)).unwrap_or_else(|| "-".into());
        let k = match b.v {
            Indec::Preinj { k, .. } => k.to_string(),
            _ => "-".into(),
        };
        s.push_str(&format!("{q}\t{}\t{}\t{k}\t{}\t{}\t{label}\n", b.u.display(), b.v.display(), b.m, b.codim));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(vrange("1").unwrap(), Some((0, 1)));
        assert_eq!(vrange("2..3").unwrap(), Some((2, 3)));
        assert_eq!(vrange("3..2").unwrap(), None);
        assert_eq!(vrange("").unwrap(), None);
        assert!(vrange("x").is_err());
    }
}
