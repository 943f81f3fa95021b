use std::fmt::Write as _;

use hecke_core::abacus::{render_abacus, AbacusDisplay};
use hecke_core::blocks::{
    base_tuple, block_invariants, block_key, core_block_of, enumerate_block, is_empty_block, BlockKey,
};
use hecke_core::branching::{i_induce_specht, i_restrict_specht, induce_specht, restrict_specht};
use hecke_core::crystal::build_crystal;
use hecke_core::scopes::{consistency_report, morita_classes, Direction};
use hecke_core::{Bound, Content, Error, Multipartition, QuiverData};
use serde_json::{json, Value};

use crate::args::{AbacusArgs, BlockInfoArgs, BranchArgs, Common, CrystalArgs, Format, Mode, ScopesArgs};
use crate::config::Config;
use crate::error::CliError;

const DEFAULT_E: i64 = 2;
const DEFAULT_NMAX: usize = 4;

/// Settings shared by every subcommand after merging flags over the config file.
pub struct RunConfig {
    pub quiver: QuiverData,
    pub format: Format,
    pub bound: Bound,
}

impl RunConfig {
    /// `mp_level` is the level of a multipartition given on the command line,
    /// used when neither a level nor a multicharge is supplied.
    pub fn resolve(common: &Common, config: &Config, mp_level: Option<usize>) -> Result<Self, CliError> {
        let e = config.pick(common.e, "e")?.unwrap_or(DEFAULT_E);
        let level = config.pick(common.level, "level")?;
        let kappa = match config.pick_list(common.kappa.clone(), "kappa")? {
            Some(k) => {
                if let Some(l) = level.filter(|&l| l != k.len()) {
                    return Err(CliError::Usage(format!(
                        "--level {l} does not match a multicharge of length {}",
                        k.len()
                    )));
                }
                k
            }
            None => vec![0; level.or(mp_level).unwrap_or(1)],
        };
        let format = match config.pick::<String>(None, "format")? {
            _ if common.format.is_some() => common.format.unwrap(),
            Some(f) => parse_format(&f)?,
            None => Format::Text,
        };
        let max_size = config.pick(common.bound, "bound")?.unwrap_or(Bound::default().max_size);
        Ok(RunConfig {
            quiver: QuiverData::new(e, kappa)?,
            format,
            bound: Bound { max_size, ..Bound::default() },
        })
    }
}

fn parse_format(s: &str) -> Result<Format, CliError> {
    match s {
        "json" => Ok(Format::Json),
        "dot" => Ok(Format::Dot),
        "text" => Ok(Format::Text),
        other => Err(CliError::Usage(format!("unknown format {other:?}"))),
    }
}

pub fn parse_mp(s: &str) -> Result<Multipartition, CliError> {
    serde_json::from_str(s).map_err(|e| CliError::Usage(format!("invalid multipartition {s:?}: {e}")))
}

fn mp_arg(flag: &Option<String>, config: &Config) -> Result<Multipartition, CliError> {
    let raw = flag
        .clone()
        .or_else(|| config.raw("mp").map(str::to_string))
        .ok_or_else(|| CliError::Usage("a multipartition is required (--mp)".into()))?;
    parse_mp(&raw)
}

fn mp_level(flag: &Option<String>, config: &Config) -> Option<usize> {
    let raw = flag.clone().or_else(|| config.raw("mp").map(str::to_string))?;
    parse_mp(&raw).ok().map(|m| m.level())
}

/// Dense counts `"2,3,1,2"` or sparse `"0:2,-1:1"` pairs.
fn parse_content(items: &[String], q: &QuiverData) -> Result<Content, CliError> {
    let bad = |t: &str| CliError::Usage(format!("invalid content entry {t:?}"));
    if items.iter().any(|t| t.contains(':')) {
        let mut map = std::collections::BTreeMap::new();
        for t in items {
            let (i, c) = t.split_once(':').ok_or_else(|| bad(t))?;
            let i: i64 = i.trim().parse().map_err(|_| bad(t))?;
            let c: u64 = c.trim().parse().map_err(|_| bad(t))?;
            *map.entry(i).or_insert(0) += c;
        }
        let content = Content::from_map(map);
        content.check(q)?;
        Ok(content)
    } else {
        let counts: Vec<u64> = items
            .iter()
            .map(|t| t.trim().parse().map_err(|_| bad(t)))
            .collect::<Result<_, _>>()?;
        if q.is_affine() && counts.len() > q.e() as usize {
            return Err(CliError::Usage(format!(
                "content lists {} counts but e = {}",
                counts.len(),
                q.e()
            )));
        }
        Ok(Content::from_dense(&counts))
    }
}

fn no_dot(format: Format, what: &str) -> Result<(), CliError> {
    if format == Format::Dot {
        return Err(CliError::Usage(format!("{what} has no dot output")));
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialise");
    s.push('\n');
    s
}

fn signed_map<'a>(it: impl Iterator<Item = (&'a i64, &'a i64)>) -> String {
    it.map(|(i, d)| format!("{i}:{d}")).collect::<Vec<_>>().join(" ")
}

fn tuple(v: &[i64]) -> String {
    format!("({})", v.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
}

pub fn block_info(common: &Common, config: &Config, args: &BlockInfoArgs) -> Result<String, CliError> {
    let run = RunConfig::resolve(common, config, mp_level(&args.mp, config))?;
    no_dot(run.format, "block-info")?;
    let q = &run.quiver;
    let from_mp = |raw: &str| -> Result<BlockKey, CliError> {
        let l = parse_mp(raw)?;
        l.check(q)?;
        Ok(block_key(&l, q))
    };
    let from_content = |items: &[String]| -> Result<BlockKey, CliError> {
        Ok(BlockKey::new(q.clone(), parse_content(items, q)?)?)
    };
    let key = if let Some(raw) = &args.mp {
        from_mp(raw)?
    } else if let Some(items) = &args.content {
        from_content(items)?
    } else if let Some(raw) = config.raw("mp") {
        from_mp(raw)?
    } else if let Some(c) = config.raw("content") {
        from_content(&c.split(',').map(str::to_string).collect::<Vec<_>>())?
    } else {
        return Err(CliError::Usage("block-info needs --mp or --content".into()));
    };
    run.bound.check(key.size(), q.level())?;
    let bound = &run.bound;
    if is_empty_block(&key, bound)? {
        return Err(Error::EmptyBlock.into());
    }
    let inv = block_invariants(&key)?;
    let core = if q.is_affine() {
        let (core, m) = core_block_of(&key, bound)?;
        let data = base_tuple(&core, bound)?;
        Some((core, m, data))
    } else {
        None
    };
    let members = if config.flag(args.members, "members") {
        Some(enumerate_block(&key, bound)?)
    } else {
        None
    };

    if run.format == Format::Json {
        let mut v = json!({
            "key": key,
            "invariants": { "weight": inv.weight, "hub": inv.hub },
            "core": core.as_ref().map(|(c, m, d)| json!({
                "key": c,
                "m": m,
                "multicharge": d.multicharge,
                "base_tuple": d.base_tuple,
                "K": d.k,
            })),
        });
        if let Some(ms) = &members {
            v["members"] = json!(ms);
        }
        return Ok(pretty(&v));
    }
    let mut s = String::new();
    let _ = writeln!(s, "e = {}, kappa = {}", q.e(), tuple(q.kappa()));
    let _ = writeln!(s, "content: {} (n = {})", key.content(), key.size());
    let _ = writeln!(s, "weight: {}", inv.weight);
    let _ = writeln!(s, "hub: {}", signed_map(inv.hub.iter()));
    match &core {
        Some((c, m, d)) => {
            let _ = writeln!(s, "core: {} (m = {m})", c.content());
            let _ = writeln!(s, "multicharge: {}", tuple(&d.multicharge));
            let _ = writeln!(s, "base tuple: {}", tuple(&d.base_tuple));
            let ks: Vec<(i64, i64)> = d.k.iter().enumerate().map(|(i, &k)| (i as i64, k)).collect();
            let _ = writeln!(s, "K: {}", signed_map(ks.iter().map(|(i, k)| (i, k))));
        }
        None => {
            let _ = writeln!(s, "core: every block is core when e = 0");
        }
    }
    if let Some(ms) = members {
        let _ = writeln!(s, "members ({}):", ms.len());
        for m in ms {
            let _ = writeln!(s, "  {m}");
        }
    }
    Ok(s)
}

pub fn crystal(common: &Common, config: &Config, args: &CrystalArgs) -> Result<String, CliError> {
    let run = RunConfig::resolve(common, config, None)?;
    let n_max = config.pick(args.nmax, "nmax")?.unwrap_or(DEFAULT_NMAX);
    let g = build_crystal(&run.quiver, n_max, &run.bound)?;
    Ok(match run.format {
        Format::Json => pretty(&g.to_json()),
        Format::Dot => g.to_dot(),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "vertices: {}, edges: {}", g.vertex_count(), g.arrows().len());
            for n in 0..=n_max {
                let vs: Vec<String> = g.vertices_of_size(n).iter().map(|v| v.to_string()).collect();
                let _ = writeln!(s, "n={n}: {}", vs.join(" "));
            }
            for a in g.arrows() {
                let _ = writeln!(s, "{} -{}-> {}", a.from, a.i, a.to);
            }
            s
        }
    })
}

pub fn branch(common: &Common, config: &Config, args: &BranchArgs) -> Result<String, CliError> {
    let run = RunConfig::resolve(common, config, mp_level(&args.mp, config))?;
    no_dot(run.format, "branch")?;
    let q = &run.quiver;
    let l = mp_arg(&args.mp, config)?;
    l.check(q)?;
    run.bound.check(l.size() + 1, q.level())?;
    let mode = match config.raw("mode") {
        _ if args.mode.is_some() => args.mode.unwrap(),
        Some("induce") => Mode::Induce,
        Some("restrict") | None => Mode::Restrict,
        Some(other) => return Err(CliError::Usage(format!("unknown mode {other:?}"))),
    };
    let residue = config.pick(args.residue, "residue")?;
    if let Some(i) = residue {
        if !q.is_residue(i) {
            return Err(Error::InvalidResidue(i).into());
        }
    }
    let sum = match (mode, residue) {
        (Mode::Induce, Some(i)) => i_induce_specht(&l, q, i),
        (Mode::Induce, None) => induce_specht(&l, q),
        (Mode::Restrict, Some(i)) => i_restrict_specht(&l, q, i),
        (Mode::Restrict, None) => restrict_specht(&l, q),
    };
    Ok(match run.format {
        Format::Json => pretty(&sum.to_json()),
        _ => format!("{sum}\n"),
    })
}

fn direction_tag(d: Direction) -> &'static str {
    match d {
        Direction::FSide => "F",
        Direction::ESide => "E",
        Direction::Identity => "id",
    }
}

pub fn scopes(common: &Common, config: &Config, args: &ScopesArgs) -> Result<String, CliError> {
    let run = RunConfig::resolve(common, config, None)?;
    let q = &run.quiver;
    let n_max = config.pick(args.nmax, "nmax")?.unwrap_or(DEFAULT_NMAX);
    let classes = morita_classes(q, n_max, &run.bound)?;
    if run.format == Format::Dot {
        return Ok(classes.to_dot());
    }
    let report = consistency_report(q, 0..=n_max, &run.bound)?;
    if run.format == Format::Json {
        return Ok(pretty(&json!({
            "e": q.e(),
            "kappa": q.kappa(),
            "n_max": n_max,
            "classes": classes.classes,
            "consistency": { "tally": report.tally, "anomalies": report.anomalies },
        })));
    }
    let mut s = String::new();
    let _ = writeln!(s, "e = {}, kappa = {}, n <= {n_max}", q.e(), tuple(q.kappa()));
    let _ = writeln!(s, "classes: {}", classes.classes.len());
    for (k, c) in classes.classes.iter().enumerate() {
        let _ = writeln!(
            s,
            "class {}: weight {}, {} block(s){}",
            k + 1,
            c.weight,
            c.members.len(),
            if c.open_at_boundary { ", open at boundary" } else { "" }
        );
        for m in &c.members {
            let _ = writeln!(s, "  n={}: {}", m.size(), m.content());
        }
        for w in &c.witnesses {
            let _ = writeln!(
                s,
                "  witness: {} -> {} (i = {}, {}, k = {}, webster = {}, alice = {})",
                w.source.content(),
                w.target.content(),
                w.i,
                direction_tag(w.direction),
                w.k,
                w.criteria.webster,
                w.criteria.alice
            );
        }
    }
    let t = report.tally;
    let _ = writeln!(
        s,
        "consistency: both = {}, alice only = {}, webster only = {}, neither = {}",
        t.both, t.alice_only, t.webster_only, t.neither
    );
    let _ = writeln!(s, "anomalies: {}", report.anomalies.len());
    if !report.anomalies.is_empty() {
        let _ = writeln!(s, "  content | i | delta | m | K_i | k");
        for a in &report.anomalies {
            let _ = writeln!(
                s,
                "  {} | {} | {} | {} | {} | {}",
                a.key.content(),
                a.i,
                a.alice.delta,
                a.alice.m,
                a.alice.k_i,
                a.webster.k
            );
        }
    }
    Ok(s)
}

pub fn abacus(common: &Common, config: &Config, args: &AbacusArgs) -> Result<String, CliError> {
    let run = RunConfig::resolve(common, config, mp_level(&args.mp, config))?;
    no_dot(run.format, "abacus")?;
    let q = &run.quiver;
    let l = mp_arg(&args.mp, config)?;
    let display = AbacusDisplay::new(&l, q)?;
    let window = display.default_window();
    let top = config.pick(args.top, "top")?.unwrap_or(*window.start());
    let bottom = config.pick(args.bottom, "bottom")?.unwrap_or(*window.end());
    let text = render_abacus(&display, top..=bottom)?;
    Ok(match run.format {
        Format::Json => pretty(&json!({
            "betas": display.betas(),
            "runner_levels": display.runner_levels(),
            "window": [top, bottom],
            "display": text,
        })),
        _ => text,
    })
}
