use std::fs;
use std::path::{Path, PathBuf};

use zcs_core::{
    bounds as bound_report, build_zcs, exhaustive_max_set_size, from_json, max_zcz_width, parse_v1,
    render_v1, to_json, verify_zcs, BoundReport, ConstructionParams, FormatError, Optimality,
    SearchSpec, ZcsFamily,
};

#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("{0}")]
    Verification(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            _ => 2,
        }
    }
}

impl From<zcs_core::Error> for Failure {
    fn from(e: zcs_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<zcs_core::ParamError> for Failure {
    fn from(e: zcs_core::ParamError) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|source| Failure::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|source| Failure::Io {
        path: path.to_owned(),
        source,
    })
}

fn load(path: &Path) -> Result<ZcsFamily, Failure> {
    parse_v1(&read(path)?).map_err(|source| Failure::Format {
        path: path.to_owned(),
        source,
    })
}

fn render(family: &ZcsFamily) -> Result<String, Failure> {
    render_v1(family).map_err(|e| Failure::Input(e.to_string()))
}

pub struct ConstructRequest {
    pub q: u32,
    pub b: u32,
    pub m: usize,
    pub n: usize,
    pub k: Option<usize>,
    pub blocks: Option<String>,
    pub beta: Option<String>,
    pub out: Option<PathBuf>,
}

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Failure::Input(format!("{what}: '{}' is not a non-negative integer", t.trim())))
        })
        .collect()
}

/// `"1,3;2"` → `[[1, 3], [2]]`.
pub fn parse_blocks(text: &str) -> Result<Vec<Vec<usize>>, Failure> {
    text.split(';').map(|block| parse_list(block, "--blocks")).collect()
}

fn default_blocks(k: usize, m: usize) -> Result<Vec<Vec<usize>>, Failure> {
    if k == 0 || k > m {
        return Err(Failure::Input(format!("k must satisfy 1 <= k <= m (k={k}, m={m})")));
    }
    let mut blocks: Vec<Vec<usize>> = (1..k).map(|g| vec![g]).collect();
    blocks.push((k..=m).collect());
    Ok(blocks)
}

pub fn construct(req: &ConstructRequest) -> Outcome {
    let blocks = match (&req.blocks, req.k) {
        (Some(text), k) => {
            let blocks = parse_blocks(text)?;
            if let Some(k) = k.filter(|&k| k != blocks.len()) {
                return Err(Failure::Input(format!(
                    "k={k} does not match the number of blocks ({})",
                    blocks.len()
                )));
            }
            blocks
        }
        (None, Some(k)) => default_blocks(k, req.m)?,
        (None, None) => return Err(Failure::Input("one of --blocks or --k is required".into())),
    };
    let beta = match &req.beta {
        Some(text) => parse_list(text, "--beta")?
            .into_iter()
            .map(|v| u32::try_from(v).map_err(|_| Failure::Input(format!("--beta: {v} is too large"))))
            .collect::<Result<_, _>>()?,
        None => vec![0; req.m + 1],
    };
    let params = ConstructionParams::new(req.q, req.b, req.m, req.n, blocks, beta)?;
    let family = build_zcs(&params)?;
    let text = render(&family)?;
    let z = params.flock_size();
    let report = verify_zcs(&family, z)?;
    let bound = bound_report(family.flock_size(), family.seq_len(), z)?;
    let summary = format!(
        "M={} N={} L={} Z={} q={}\n{}",
        family.set_size(),
        family.flock_size(),
        family.seq_len(),
        z,
        family.q(),
        verdict_line(&family, z, report.ok, &bound)
    );
    match &req.out {
        Some(path) => {
            write(path, &text)?;
            println!("{summary}");
        }
        None => {
            print!("{text}");
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn verdict_line(family: &ZcsFamily, z: usize, ok: bool, b: &BoundReport) -> String {
    if !ok {
        return format!("not a ZCS at Z={z}");
    }
    let (m, nl) = (family.set_size(), family.flock_size() * family.seq_len());
    let verdict = if b.is_optimal(m) {
        Optimality::Optimal
    } else {
        Optimality::Suboptimal
    };
    let relation = if b.is_optimal(m) { "=" } else { "<" };
    format!("ZCS ok, Z={z}, {verdict} ({m} {relation} ⌊{nl}/{z}⌋)")
}

/// Decimal rendering of `n/d` to four places, rounding half up.
pub fn decimal4(n: u64, d: u64) -> String {
    let scaled = (n as u128 * 10_000 * 2 + d as u128) / (2 * d as u128);
    format!("{}.{:04}", scaled / 10_000, scaled % 10_000)
}

const BOUND_HEADER: &str = "Z\ttheorem1\tfan\twelch_feng";

fn bound_row(b: &BoundReport) -> String {
    format!(
        "{}\t{}\t{}\t{}",
        b.z,
        b.theorem1,
        b.fan,
        decimal4(*b.welch_feng.numer(), *b.welch_feng.denom())
    )
}

pub fn verify(path: &Path, z: Option<usize>) -> Outcome {
    let family = load(path)?;
    let measured = max_zcz_width(&family);
    let (m, n, l) = (family.set_size(), family.flock_size(), family.seq_len());
    println!("M={m} N={n} L={l} q={}", family.q());
    println!("measured_Z={measured}");
    let z = match z.or(family.claimed_z()) {
        Some(z) => z,
        None if measured > 0 => measured,
        None => return Err(Failure::Verification("no ZCZ width: the zero-shift cross-correlations do not vanish".into())),
    };
    let report = verify_zcs(&family, z)?;
    let bound = bound_report(n, l, z)?;
    println!("{BOUND_HEADER}");
    println!("{}", bound_row(&bound));
    if !report.ok {
        let first = report
            .failures
            .first()
            .map_or_else(|| "energy mismatch".to_string(), |w| format!("witness {w}"));
        return Err(Failure::Verification(format!("not a ZCS at Z={z}: {first}")));
    }
    println!("{}", verdict_line(&family, z, true, &bound));
    if bound.exceeds_fan(m) {
        println!("exceeds fan bound ({m} > {})", bound.fan);
    }
    Ok(())
}

pub fn bounds(n: usize, l: usize, z: Option<usize>) -> Outcome {
    let widths: Vec<usize> = match z {
        Some(z) => vec![z],
        None => (1..=l).collect(),
    };
    let rows = widths
        .into_iter()
        .map(|z| bound_report(n, l, z).map(|b| bound_row(&b)))
        .collect::<Result<Vec<_>, _>>()?;
    println!("{BOUND_HEADER}");
    for row in rows {
        println!("{row}");
    }
    Ok(())
}

pub struct SearchRequest {
    pub q: u32,
    pub n: usize,
    pub l: usize,
    pub z: usize,
    pub cap: u64,
    pub seed: u64,
    pub allow_partial: bool,
    pub out: Option<PathBuf>,
}

pub fn search(req: &SearchRequest) -> Outcome {
    let spec = SearchSpec {
        max_candidates: req.cap,
        seed: req.seed,
        ..SearchSpec::new(req.q, req.n, req.l, req.z)
    };
    if !spec.within_cap() && !req.allow_partial {
        let size = spec
            .space_size()
            .map_or_else(|| "more than 2^64".to_string(), |s| s.to_string());
        return Err(Failure::Input(format!(
            "search space has {size} candidate flocks, above the cap of {}; pass --allow-partial or raise --cap",
            req.cap
        )));
    }
    let r = exhaustive_max_set_size(&spec)?;
    println!("q={} N={} L={} Z={}", req.q, req.n, req.l, req.z);
    println!("candidates={} admissible={}", r.candidates_examined, r.admissible_flocks);
    println!("best_M={}", r.best_m);
    println!("bound={}", r.bound);
    println!("exhaustive={}", r.proven_exhaustive);
    if let Some(path) = &req.out {
        match &r.witness {
            Some(w) => write(path, &render(w)?)?,
            None => eprintln!("no admissible flock; nothing written to {}", path.display()),
        }
    }
    Ok(())
}

pub fn export_json(path: &Path) -> Outcome {
    println!("{}", to_json(&load(path)?));
    Ok(())
}

pub fn import_json(path: &Path, out: Option<&Path>) -> Outcome {
    let family = from_json(&read(path)?).map_err(|source| Failure::Format {
        path: path.to_owned(),
        source,
    })?;
    let text = render(&family)?;
    match out {
        Some(p) => write(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
