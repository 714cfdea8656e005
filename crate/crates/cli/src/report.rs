//! Report assembly and rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use kaehler_core::different::{
    different_inclusions, kaehler_cross_check, kaehler_different, noether_different, noether_different_colon,
    GradedIdealView,
};
use kaehler_core::scheme::{BoundaryCase, SchemeSpec};
use kaehler_core::structure::{
    cb_rank_criterion, classify_with, conductor, genpos_equivalence_check, ClassificationReport, ConductorProfile,
    Route,
};
use kaehler_core::Error;
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Hilbert,
    Kaehler,
    Noether,
    Conductor,
    Classify,
    Report,
}

pub struct Options {
    pub max_degree: Option<usize>,
    pub cross_check: bool,
    pub timings: bool,
    pub parallel: bool,
}

#[derive(Serialize)]
pub struct Report {
    pub input_sha256: String,
    pub command: String,
    pub field: String,
    pub n: usize,
    pub warnings: Vec<String>,
    pub hilbert: HilbertOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kaehler: Option<IdealOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub noether: Option<IdealOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conductor: Option<ConductorOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_checks: Option<BTreeMap<String, serde_json::Value>>,
    pub consistency_failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

#[derive(Serialize)]
pub struct ComponentOut {
    pub point: Option<Vec<String>>,
    pub multiplicity: usize,
    pub residue_degree: usize,
    pub gorenstein: bool,
}

#[derive(Serialize)]
pub struct HilbertOut {
    pub values: Vec<usize>,
    pub regularity_index: usize,
    pub initial_degree: usize,
    pub degree: usize,
    pub generic_position: bool,
    pub boundary_case: &'static str,
    pub reduced: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentOut>>,
}

#[derive(Serialize)]
pub struct IdealOut {
    pub generators: Vec<String>,
    pub hf: Vec<usize>,
    pub hp: usize,
    pub ri: usize,
    pub principal: bool,
}

#[derive(Serialize)]
pub struct ConductorOut {
    pub dims: Vec<usize>,
    pub len_tilde_over_r: usize,
    pub len_r_over_f: usize,
    pub len_tilde_over_f: usize,
    pub point_degrees: Option<Vec<usize>>,
    pub cb: bool,
}

#[derive(Serialize)]
pub struct RouteOut {
    pub name: &'static str,
    pub applicable: bool,
    pub value: bool,
}

#[derive(Serialize)]
pub struct ClassificationOut {
    pub generic_position: bool,
    pub cb: bool,
    pub point_degrees: Option<Vec<usize>>,
    pub locally_gorenstein: bool,
    pub arith_gorenstein: bool,
    pub arith_gorenstein_criterion: Option<&'static str>,
    pub locally_ci: bool,
    pub ci: bool,
    pub kaehler_at_regularity: usize,
    pub noether_at_regularity: usize,
    pub ags_lengths: [usize; 2],
    pub residue_degree_sum: usize,
    pub routes: BTreeMap<&'static str, Vec<RouteOut>>,
    pub consistency_failures: Vec<String>,
}

fn boundary_name(b: BoundaryCase) -> &'static str {
    match b {
        BoundaryCase::LowerBinomial => "lower_binomial",
        BoundaryCase::StrictlyBetween => "strictly_between",
        BoundaryCase::None => "none",
    }
}

fn hilbert_out(x: &SchemeSpec, opts: &Options) -> HilbertOut {
    let r = x.regularity_index();
    let top = opts.max_degree.unwrap_or(r + 1);
    let gp = x.generic_position_check();
    let components = x.has_components().then(|| {
        x.components
            .iter()
            .map(|c| ComponentOut {
                point: c.coords.as_ref().map(|p| p.iter().map(|s| s.to_string()).collect()),
                multiplicity: c.multiplicity(),
                residue_degree: c.kappa(),
                gorenstein: c.local.is_gorenstein(),
            })
            .collect()
    });
    HilbertOut {
        values: (0..=top).map(|i| x.hilbert.value(i)).collect(),
        regularity_index: r,
        initial_degree: x.initial_degree(),
        degree: x.degree(),
        generic_position: gp.is_generic,
        boundary_case: boundary_name(gp.boundary_case),
        reduced: x.is_reduced(),
        components,
    }
}

fn ideal_out(v: &GradedIdealView, opts: &Options) -> IdealOut {
    let top = opts.max_degree.unwrap_or(v.ri + 1);
    IdealOut {
        generators: v.minimal_generators.iter().map(|g| g.to_string()).collect(),
        hf: v.values(top),
        hp: v.hp,
        ri: v.ri,
        principal: v.is_principal(),
    }
}

fn conductor_out(c: &ConductorProfile, x: &SchemeSpec) -> ConductorOut {
    let r = x.regularity_index();
    ConductorOut {
        dims: c.dims(),
        len_tilde_over_r: c.len_tilde_over_r,
        len_r_over_f: c.len_r_over_f,
        len_tilde_over_f: c.len_tilde_over_f,
        point_degrees: c.point_degrees.clone(),
        cb: c.pieces[..r].iter().all(|p| p.is_zero()),
    }
}

fn routes(list: &[Route]) -> Vec<RouteOut> {
    list.iter()
        .map(|r| RouteOut {
            name: r.name,
            applicable: r.applicable,
            value: r.value,
        })
        .collect()
}

fn classification_out(c: &ClassificationReport) -> ClassificationOut {
    let mut all = BTreeMap::new();
    all.insert("locally_gorenstein", routes(&c.locally_gorenstein_routes));
    all.insert("arith_gorenstein", routes(&c.arith_gorenstein_routes));
    all.insert("locally_ci", routes(&c.locally_ci_routes));
    all.insert("ci", routes(&c.ci_routes));
    ClassificationOut {
        generic_position: c.is_generic,
        cb: c.is_cb,
        point_degrees: c.point_degrees.clone(),
        locally_gorenstein: c.is_locally_gorenstein,
        arith_gorenstein: c.is_arith_gorenstein,
        arith_gorenstein_criterion: c.arith_gorenstein_criterion,
        locally_ci: c.is_locally_ci,
        ci: c.is_ci,
        kaehler_at_regularity: c.ci_witness,
        noether_at_regularity: c.noether_at_r,
        ags_lengths: [c.ags_lengths.0, c.ags_lengths.1],
        residue_degree_sum: c.residue_degree_sum,
        routes: all,
        consistency_failures: c.consistency_failures.clone(),
    }
}

struct Clock {
    enabled: bool,
    entries: BTreeMap<String, f64>,
}

impl Clock {
    fn time<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            self.entries.insert(name.into(), start.elapsed().as_secs_f64());
        }
        out
    }
}

/// Runs `command` and everything it depends on.
pub fn run(command: Command, x: &SchemeSpec, input_sha256: String, opts: &Options) -> Result<Report, CliError> {
    let mut clock = Clock {
        enabled: opts.timings,
        entries: BTreeMap::new(),
    };
    let wants = |c: Command| command == Command::Report || command == c;
    let need_k = wants(Command::Kaehler) || wants(Command::Classify);
    let need_n = wants(Command::Noether) || wants(Command::Classify);
    let need_c = wants(Command::Conductor) || wants(Command::Classify);

    let (kaehler, noether) = if need_k && need_n && opts.parallel {
        let (k, n) = clock.time("differents", || rayon::join(|| kaehler_different(x), || noether_different(x)));
        (Some(k?), Some(n?))
    } else {
        let k = if need_k { Some(clock.time("kaehler", || kaehler_different(x))?) } else { None };
        let n = if need_n { Some(clock.time("noether", || noether_different(x))?) } else { None };
        (k, n)
    };
    let cond = if need_c { Some(clock.time("conductor", || conductor(x))?) } else { None };
    let classification = match (&kaehler, &noether, &cond) {
        (Some(k), Some(n), Some(c)) if wants(Command::Classify) => {
            Some(clock.time("classify", || classify_with(x, k, n, c))?)
        }
        _ => None,
    };

    let mut failures: Vec<String> = classification
        .as_ref()
        .map(|c| c.consistency_failures.clone())
        .unwrap_or_default();
    let cross_checks = if opts.cross_check {
        Some(clock.time("cross_checks", || cross_checks(x, kaehler.as_ref(), noether.as_ref(), &mut failures))?)
    } else {
        None
    };

    let show_k = wants(Command::Kaehler);
    let show_n = wants(Command::Noether);
    let show_c = wants(Command::Conductor);
    Ok(Report {
        input_sha256,
        command: format!("{command:?}").to_lowercase(),
        field: x.field.to_string(),
        n: x.n,
        warnings: x.warnings.clone(),
        hilbert: hilbert_out(x, opts),
        kaehler: kaehler.as_ref().filter(|_| show_k).map(|k| ideal_out(k, opts)),
        noether: noether.as_ref().filter(|_| show_n).map(|n| ideal_out(n, opts)),
        conductor: cond.as_ref().filter(|_| show_c).map(|c| conductor_out(c, x)),
        classification: classification.as_ref().map(classification_out),
        cross_checks,
        consistency_failures: failures,
        timings: opts.timings.then_some(clock.entries),
    })
}

/// Redundant routes: generator sets, the Gröbner colon route for `ϑ_N`,
/// the inclusion chain, and the point-set criteria whose hypotheses hold.
fn cross_checks(
    x: &SchemeSpec,
    kaehler: Option<&GradedIdealView>,
    noether: Option<&GradedIdealView>,
    failures: &mut Vec<String>,
) -> Result<BTreeMap<String, serde_json::Value>, Error> {
    use serde_json::json;
    let mut out = BTreeMap::new();
    if let Some(k) = kaehler {
        let same = kaehler_cross_check(x)?;
        if same == Some(false) {
            failures.push("ϑ_X differs between the input generators and the Gröbner basis".into());
        }
        out.insert("kaehler_input_generators".into(), json!(same));
        if let Some(n) = noether {
            let inc = different_inclusions(x, k, n);
            if !(inc.kaehler_in_noether && inc.noether_pow_in_kaehler) {
                failures.push(format!("inclusion chain ϑ_N^n ⊆ ϑ_X ⊆ ϑ_N fails: {inc:?}"));
            }
            out.insert(
                "inclusions".into(),
                json!({"kaehler_in_noether": inc.kaehler_in_noether, "noether_power_in_kaehler": inc.noether_pow_in_kaehler}),
            );
        }
    }
    if let Some(n) = noether {
        let colon = noether_different_colon(x)?;
        let same = colon.same_ideal(n);
        if !same {
            failures.push("ϑ_N differs between the linear-algebra and colon routes".into());
        }
        out.insert("noether_colon_route".into(), json!(same));
    }
    if x.is_reduced() {
        let g = genpos_equivalence_check(x, false)?;
        if !g.consistent {
            failures.push(format!("generic-position equivalence fails: {g:?}"));
        }
        out.insert(
            "generic_position_equivalence".into(),
            json!({
                "generic_boundary": g.generic_boundary,
                "kaehler_pattern": g.kaehler_pattern,
                "cb_conductor_power": g.cb_conductor_power,
                "applicable": g.applicable,
                "consistent": g.consistent,
            }),
        );
    }
    match cb_rank_criterion(x) {
        Ok(rc) => {
            if !rc.consistent {
                failures.push(format!("rank criterion disagrees with the conductor: {rc:?}"));
            }
            out.insert(
                "rank_criterion".into(),
                json!({"t": rc.t, "delta": rc.delta, "rank": rc.rank, "augmented_ranks": rc.augmented_ranks,
                       "sufficient_cb": rc.sufficient_cb, "equivalence": rc.is_equivalence, "consistent": rc.consistent}),
            );
        }
        Err(Error::Hypothesis(why)) => {
            out.insert("rank_criterion".into(), json!({"skipped": why}));
        }
        Err(e) => return Err(e),
    }
    Ok(out)
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn render_text(r: &Report) -> String {
    let mut s = String::new();
    let h = &r.hilbert;
    let _ = writeln!(s, "input sha256 {}", r.input_sha256);
    let _ = writeln!(s, "field {}, n = {}, degree {}", r.field, r.n, h.degree);
    for w in &r.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    let _ = writeln!(s, "HF_X: {} ...", join(&h.values));
    let _ = writeln!(
        s,
        "r_X = {}, alpha_X = {}, generic position: {}, reduced: {}",
        h.regularity_index, h.initial_degree, h.generic_position, h.reduced
    );
    if let Some(cs) = &h.components {
        for (j, c) in cs.iter().enumerate() {
            let p = c.point.as_ref().map_or("non-rational".into(), |p| format!("({})", p.join(" : ")));
            let _ = writeln!(
                s,
                "  p{}: {p}, multiplicity {}, residue degree {}, Gorenstein {}",
                j + 1,
                c.multiplicity,
                c.residue_degree,
                c.gorenstein
            );
        }
    }
    for (name, ideal) in [("Kähler different", &r.kaehler), ("Noether different", &r.noether)] {
        if let Some(i) = ideal {
            let _ = writeln!(s, "{name}: HF {} ..., HP {}, ri {}", join(&i.hf), i.hp, i.ri);
            for g in &i.generators {
                let _ = writeln!(s, "  generator {g}");
            }
        }
    }
    if let Some(c) = &r.conductor {
        let _ = writeln!(s, "conductor: dims {}, CB {}", join(&c.dims), c.cb);
        let _ = writeln!(
            s,
            "  l(R~/R) = {}, l(R/F) = {}, l(R~/F) = {}",
            c.len_tilde_over_r, c.len_r_over_f, c.len_tilde_over_f
        );
        if let Some(d) = &c.point_degrees {
            let _ = writeln!(s, "  point degrees {}", join(d));
        }
    }
    if let Some(c) = &r.classification {
        let _ = writeln!(s, "generic position: {}", c.generic_position);
        let _ = writeln!(s, "Cayley-Bacharach: {}", c.cb);
        let _ = writeln!(s, "locally Gorenstein: {}", c.locally_gorenstein);
        let _ = writeln!(
            s,
            "arithmetically Gorenstein: {}{}",
            c.arith_gorenstein,
            c.arith_gorenstein_criterion.map(|n| format!(" ({n})")).unwrap_or_default()
        );
        let _ = writeln!(s, "locally complete intersection: {}", c.locally_ci);
        let _ = writeln!(s, "complete intersection: {} (HF(ϑ_X)(r_X) = {})", c.ci, c.kaehler_at_regularity);
        let _ = writeln!(s, "HF(ϑ_N)(r_X) = {}", c.noether_at_regularity);
        let _ = writeln!(s, "AGS lengths: l(R~/R) = {}, l(R/F) = {}", c.ags_lengths[0], c.ags_lengths[1]);
    }
    if let Some(cc) = &r.cross_checks {
        for (k, v) in cc {
            let _ = writeln!(s, "cross-check {k}: {v}");
        }
    }
    if let Some(t) = &r.timings {
        for (k, v) in t {
            let _ = writeln!(s, "time {k}: {v:.3}s");
        }
    }
    if r.consistency_failures.is_empty() {
        let _ = writeln!(s, "consistency: ok");
    } else {
        for f in &r.consistency_failures {
            let _ = writeln!(s, "CONSISTENCY FAILURE: {f}");
        }
    }
    s
}
