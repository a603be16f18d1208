//! `darkgallery`: construct, verify and render guard placements.
//!
//! Exit status is 0 when the placement is verified, 2 when verification
//! finds a violating witness and 1 on usage or input errors. Errors are
//! written to stderr as `{"error": {"kind": ..., "message": ...}}`.

mod builtins;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use darkgallery_core::convex::{construct_certified, place_wedge, Regime};
use darkgallery_core::darkness::GuardSet;
use darkgallery_core::geom::Point2;
use darkgallery_core::io::{
    exact_certificate, sampled_certificate, CertificateDocument, Metadata, PlacementDocument,
    Region, VerificationMode,
};
use darkgallery_core::sampling::Sampler;
use darkgallery_core::simple::{comb_cover, fisk_cover};
use darkgallery_core::svg::{render, RenderOptions};
use darkgallery_core::Error;
use serde_json::{json, Value};

use builtins::Shape;

const DEFAULT_GRID: usize = 40;
const DEFAULT_COUNT: usize = 2000;

#[derive(Parser)]
#[command(
    name = "darkgallery",
    version,
    about = "Guard placements where guards block guards"
)]
struct Cli {
    /// Output style for summaries and certificates.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Place guards covering a shape to depth k, with a certificate.
    Construct(ConstructArgs),
    /// Certify the depth of a placement.
    Verify(VerifyArgs),
    /// Draw a placement as SVG.
    Render(RenderArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Region file, or one of: triangle, square, wedge, pentagon, hexagon,
    /// heptagon, octagon, comb:<s>, random-convex:<n>, random-simple:<n>.
    #[arg(long)]
    shape: String,
    /// Required coverage depth.
    #[arg(long)]
    k: usize,
    /// Seed for random shapes.
    #[arg(long)]
    seed: Option<u64>,
    /// Write the placement here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Grid resolution of the sampled certificate for simple polygons.
    #[arg(long, default_value_t = DEFAULT_GRID)]
    grid: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Sample,
}

#[derive(Args)]
struct VerifyArgs {
    /// Region file (a region or a placement), or a fixture name.
    #[arg(long)]
    region: String,
    /// Guards file (a placement or a list of points), or a fixture name.
    #[arg(long)]
    guards: String,
    /// Report points hidden from at least j guards.
    #[arg(long)]
    j: Option<usize>,
    /// Required depth.
    #[arg(long)]
    k: Option<usize>,
    /// Exact for convex polygons and wedges (default), sample for simple polygons.
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Grid resolution in sample mode.
    #[arg(long, conflicts_with = "seed")]
    grid: Option<usize>,
    /// Seed for random samples instead of a grid.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of random samples.
    #[arg(long, requires = "seed")]
    count: Option<usize>,
    /// Also write the certificate here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    /// Placement file or fixture name.
    #[arg(long)]
    placement: String,
    /// SVG file to write.
    #[arg(long)]
    out: PathBuf,
    /// Draw every dark ray.
    #[arg(long)]
    show_dark_rays: bool,
    /// World window `xmin,ymin,xmax,ymax`.
    #[arg(long, value_parser = parse_zoom, allow_hyphen_values = true)]
    zoom: Option<Zoom>,
    /// Image width in pixels.
    #[arg(long, default_value_t = 800.0)]
    width: f64,
}

#[derive(Clone, Copy)]
struct Zoom([f64; 4]);

fn parse_zoom(s: &str) -> Result<Zoom, String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("bad zoom window {s:?}: {e}"))?;
    match v[..] {
        [x0, y0, x1, y1] if x0 < x1 && y0 < y1 && v.iter().all(|t| t.is_finite()) => {
            Ok(Zoom([x0, y0, x1, y1]))
        }
        _ => Err(format!(
            "zoom window must be xmin,ymin,xmax,ymax with min < max, got {s:?}"
        )),
    }
}

struct Failure {
    kind: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            kind: e.kind().into(),
            message: e.to_string(),
        }
    }
}

fn failure(kind: &str, message: impl Into<String>) -> Failure {
    Failure {
        kind: kind.into(),
        message: message.into(),
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return report(failure("usage", e.to_string().trim_end())),
    };
    if let Err(f) = configure_threads() {
        return report(f);
    }
    let outcome = match &cli.command {
        Command::Construct(a) => construct(a, cli.format),
        Command::Verify(a) => verify(a, cli.format),
        Command::Render(a) => render_cmd(a, cli.format),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(f) => report(f),
    }
}

fn report(f: Failure) -> ExitCode {
    let v = json!({ "error": { "kind": f.kind, "message": f.message } });
    eprintln!("{v}");
    ExitCode::from(1)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("DARKGALLERY_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        failure(
            "usage",
            format!("DARKGALLERY_THREADS must be a positive integer, got {v:?}"),
        )
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| failure("io", e.to_string()))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| failure("io", format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| failure("io", format!("{}: {e}", path.display())))
}

fn parse_json(text: &str, what: &str) -> Result<Value, Failure> {
    serde_json::from_str(text).map_err(|e| failure("invalid_input", format!("{what}: {e}")))
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value, what: &str) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| failure("invalid_input", format!("{what}: {e}")))
}

/// A region from a region document or from the region of a placement.
fn region_from_json(v: Value) -> Result<Region, Failure> {
    match v.get("region") {
        Some(r) => from_value(r.clone(), "region"),
        None => from_value(v, "region"),
    }
}

/// Guards from a placement, `{"guards": [...]}` or a bare list of points.
fn guards_from_json(v: Value) -> Result<Vec<Point2>, Failure> {
    match v {
        Value::Array(_) => from_value(v, "guards"),
        Value::Object(ref o) if o.contains_key("guards") => {
            from_value(o["guards"].clone(), "guards")
        }
        _ => Err(failure(
            "invalid_input",
            "guards file must hold a placement or a list of points",
        )),
    }
}

/// Parsed JSON from a file, or the named fixture placement if no such file exists.
fn load(arg: &str, what: &str) -> Result<Value, Failure> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Some(doc) = darkgallery_core::io::fixture_placement(arg) {
            return parse_json(&doc.to_json(), what);
        }
        return Err(failure(
            "io",
            format!(
                "{arg}: no such file or fixture (fixtures: {})",
                darkgallery_core::io::FIXTURE_NAMES
            ),
        ));
    }
    parse_json(&read(path)?, what)
}

fn load_shape(arg: &str, seed: u64) -> Result<Shape, Failure> {
    if !Path::new(arg).exists() {
        return match builtins::shape(arg, seed) {
            Some(s) => Ok(s?),
            None => Err(failure(
                "io",
                format!(
                    "{arg}: no such file or shape (shapes: {})",
                    builtins::SHAPE_NAMES
                ),
            )),
        };
    }
    let v = parse_json(&read(Path::new(arg))?, "shape")?;
    Ok(Shape::Region(region_from_json(v)?))
}

fn construct(a: &ConstructArgs, format: Format) -> Outcome {
    let seed = a.seed.unwrap_or(0);
    let k = a.k;
    let mut params = BTreeMap::new();
    params.insert("k".to_string(), json!(k));
    params.insert("shape".to_string(), json!(a.shape));
    let sampler = Sampler::Grid { resolution: a.grid };

    let (region, guards, construction, certificate) = match load_shape(&a.shape, seed)? {
        Shape::Region(Region::Convex(p)) => {
            let (plan, guards, _) = construct_certified(&p, k)?;
            params.insert("n".to_string(), json!(plan.n));
            let name = match plan.regime {
                Regime::VertexGuards => "vertex_guards",
                Regime::Plus1 => "scaffold_prefix",
                Regime::Plus2 => "general_position",
            };
            let cert =
                exact_certificate(&p.clone().into(), &guards, shortfall(&guards, k), Some(k))?;
            (Region::Convex(p), guards, name, cert)
        }
        Shape::Region(Region::Wedge(w)) => {
            let guards = place_wedge(&w, k)?;
            let cert =
                exact_certificate(&w.clone().into(), &guards, shortfall(&guards, k), Some(k))?;
            (Region::Wedge(w), guards, "wedge", cert)
        }
        Shape::Region(Region::Simple(p)) => {
            params.insert("n".to_string(), json!(p.len()));
            let guards = fisk_cover(&p, k)?;
            let region = Region::Simple(p);
            let cert =
                sampled_certificate(&region, &guards, &sampler, shortfall(&guards, k), Some(k))?;
            (region, guards, "fisk", cert)
        }
        Shape::Comb(c) => {
            params.insert("n".to_string(), json!(c.polygon.len()));
            params.insert("spikes".to_string(), json!(c.spike_count));
            let (guards, name) = if k >= 2 {
                (comb_cover(&c, k)?, "comb")
            } else {
                (fisk_cover(&c.polygon, k)?, "fisk")
            };
            let region = Region::Simple(c.polygon);
            let cert =
                sampled_certificate(&region, &guards, &sampler, shortfall(&guards, k), Some(k))?;
            (region, guards, name, cert)
        }
    };

    let metadata = Metadata {
        construction: construction.into(),
        parameters: params,
        seed: a.seed,
    };
    let mut doc = PlacementDocument::new(region, &guards, metadata);
    let verified = certificate.verified;
    doc.certificate = Some(certificate.clone());
    match &a.out {
        Some(path) => {
            write(path, &doc.to_json())?;
            match format {
                Format::Json => print!("{}", certificate.to_json()),
                Format::Text => {
                    println!("wrote {} guards to {}", guards.len(), path.display());
                    print_certificate(&certificate);
                }
            }
        }
        None => print!("{}", doc.to_json()),
    }
    Ok(verified)
}

/// Darkness at which a point drops below depth `k`.
fn shortfall(guards: &GuardSet, k: usize) -> Option<usize> {
    Some(guards.len().saturating_sub(k) + 1)
}

fn verify(a: &VerifyArgs, format: Format) -> Outcome {
    let region = region_from_json(load(&a.region, "region")?)?;
    let guards = GuardSet::new(guards_from_json(load(&a.guards, "guards")?)?)?;
    let mode = a.mode.unwrap_or(match region {
        Region::Simple(_) => Mode::Sample,
        _ => Mode::Exact,
    });
    let cert = match mode {
        Mode::Exact => {
            let convex = region.convex().ok_or_else(|| {
                Error::UnsupportedMode(
                    "exact verification needs a convex polygon or wedge; use --mode sample".into(),
                )
            })?;
            exact_certificate(&convex, &guards, a.j, a.k)?
        }
        Mode::Sample => {
            let sampler = match a.seed {
                Some(seed) => Sampler::Random {
                    seed,
                    count: a.count.unwrap_or(DEFAULT_COUNT),
                },
                None => Sampler::Grid {
                    resolution: a.grid.unwrap_or(DEFAULT_GRID),
                },
            };
            sampled_certificate(&region, &guards, &sampler, a.j, a.k)?
        }
    };
    if let Some(path) = &a.out {
        write(path, &cert.to_json())?;
    }
    match format {
        Format::Json => print!("{}", cert.to_json()),
        Format::Text => print_certificate(&cert),
    }
    Ok(cert.verified)
}

fn render_cmd(a: &RenderArgs, format: Format) -> Outcome {
    let v = load(&a.placement, "placement")?;
    let doc: PlacementDocument = from_value(v, "placement")?;
    if !(a.width.is_finite() && a.width > 0.0) {
        return Err(failure("usage", "width must be positive"));
    }
    let opts = RenderOptions {
        show_dark_rays: a.show_dark_rays,
        zoom: a.zoom.map(|z| z.0),
        width: a.width,
    };
    write(&a.out, &render(&doc, &opts))?;
    match format {
        Format::Json => println!(
            "{}",
            json!({ "out": a.out.display().to_string(), "guards": doc.guards.len() })
        ),
        Format::Text => println!("wrote {}", a.out.display()),
    }
    Ok(true)
}

fn print_certificate(c: &CertificateDocument) {
    let mode = match c.mode {
        VerificationMode::Exact => "exact",
        VerificationMode::Sampled => "sampled",
    };
    println!("mode: {mode}");
    if let Some(n) = c.sample_count {
        println!("samples: {n}");
    }
    println!("region: {}", c.region_kind);
    println!("guards: {}", c.guard_count);
    println!("min_depth: {}", c.min_depth);
    println!("max_darkness: {} at {}", c.max_darkness, c.witness.point);
    if let (Some(j), Some(has)) = (c.j, c.has_j_dark) {
        println!("has_{j}_dark: {has} ({} points)", c.j_dark_count);
        for d in c.j_dark_witnesses.iter().take(8) {
            println!("  {} darkness {}", d.point, d.darkness);
        }
    }
    if let Some(k) = c.target_depth {
        println!("target_depth: {k}");
    }
    println!("verified: {}", c.verified);
}
