//! Subcommand implementations. Each returns a [`Report`] that can be
//! printed as JSON or TSV.

use critlink_core::affine::{self, AffineRoot, AffineWeight, WeightOffset};
use critlink_core::cartan::{FiniteRoot, FiniteRootSystem, FiniteWeight};
use critlink_core::charalg::{
    antidominant_mult_table, q_character_f, restricted_verma_character, simple_restricted_character,
    subgeneric_mult_table, verma_character, FKind, FormalCharacter, ModuleKind, MultiplicityTable,
    QSeries, Truncation,
};
use critlink_core::linkage::{
    arrow_down, arrow_up, block_window_capped, casimir_scalar, classify, critical_tests, kk_successors,
    BlockWindow, Genericity, WindowBounds, DEFAULT_MEMBER_CAP,
};
use critlink_core::pbw::{
    build_pbw_module_capped, chain_embedding_check, hom_dim_verma, restricted_quotient_oracle,
    singular_scan, subgeneric_invariant_check, AlgebraSpec, Lowering, PBWModule, Raising,
    DEFAULT_MAX_DIM,
};
use critlink_core::{Error, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::weight::{format_q, weight_to_json};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

/// Everything a command needs besides its own options.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub rs: FiniteRootSystem,
    pub weight: Option<AffineWeight>,
    pub depth: u32,
    pub height: u32,
    pub format: Format,
    pub cap: Option<usize>,
    pub seed: u64,
}

impl RunConfig {
    fn weight(&self) -> Result<&AffineWeight, CliError> {
        self.weight
            .as_ref()
            .ok_or_else(|| CliError::Usage("this command needs --weight".into()))
    }

    fn truncation(&self) -> Truncation {
        Truncation::new(self.depth, self.height)
    }

    fn window_bounds(&self) -> WindowBounds {
        WindowBounds::new(self.depth, self.height)
    }

    fn window(&self, lambda: &AffineWeight) -> Result<BlockWindow, CliError> {
        Ok(block_window_capped(
            &self.rs,
            lambda,
            self.window_bounds(),
            self.cap.unwrap_or(DEFAULT_MEMBER_CAP),
        )?)
    }

    fn module(&self, lambda: &AffineWeight) -> Result<PBWModule, CliError> {
        let spec = AlgebraSpec::new(self.rs.cartan_type())?;
        Ok(build_pbw_module_capped(
            &spec,
            lambda,
            self.truncation(),
            self.cap.unwrap_or(DEFAULT_MAX_DIM),
        )?)
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                Error::UnsupportedType { .. } | Error::Dimension { .. } => 2,
                Error::Integrity(_) => 1,
                Error::Resource { .. } => 3,
                Error::Domain(_) | Error::OutOfBounds(_) => 4,
            },
        }
    }
}

/// Command output. `ok == false` means a mathematical mismatch (exit 1).
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub ok: bool,
}

impl Report {
    fn new(command: &'static str, json: Value, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        Report {
            command,
            json,
            header,
            rows,
            ok: true,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut v = json!({ "schema_version": SCHEMA_VERSION, "command": self.command });
                if let (Value::Object(out), Value::Object(body)) = (&mut v, &self.json) {
                    out.extend(body.clone());
                }
                v["ok"] = json!(self.ok);
                format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
            }
            Format::Tsv => {
                let mut s = self.header.join("\t");
                s.push('\n');
                for row in &self.rows {
                    s.push_str(&row.join("\t"));
                    s.push('\n');
                }
                s
            }
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }
}

fn offset_str(o: &WeightOffset) -> String {
    o.0.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn finite_str(w: &FiniteWeight) -> String {
    w.coords().iter().map(format_q).collect::<Vec<_>>().join(",")
}

fn root_str(alpha: &FiniteRoot) -> String {
    alpha
        .simple_coords()
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn genericity_str(g: Genericity) -> &'static str {
    match g {
        Genericity::Generic => "generic",
        Genericity::Subgeneric => "subgeneric",
        Genericity::Other => "other",
    }
}

pub fn classify_cmd(cfg: &RunConfig) -> Result<Report, CliError> {
    let lambda = cfg.weight()?;
    let rs = &cfg.rs;
    let c = classify(rs, lambda);
    let t = critical_tests(rs, lambda)?;
    let tests = json!({
        "shift_preserves_block": t.shift_preserves_block,
        "delta_linked": t.delta_linked,
        "imaginary_integral": t.imaginary_integral,
        "critical_level": t.critical_level,
        "finite_factorization": t.finite_factorization,
    });
    let image: Vec<Value> = c
        .finite_image
        .iter()
        .map(|w| json!(w.coords().iter().map(format_q).collect::<Vec<_>>()))
        .collect();
    let body = json!({
        "algebra": rs.cartan_type().to_string(),
        "weight": weight_to_json(lambda),
        "classification": {
            "critical": c.is_critical,
            "genericity": genericity_str(c.genericity),
            "subgeneric_root": c.subgeneric_root.as_ref().map(|a| a.simple_coords().to_vec()),
            "regular": c.is_regular,
            "regular_full_weyl": c.is_regular_full_weyl,
            "dominant": c.is_dominant,
            "antidominant": c.is_antidominant,
            "finite_image": image,
            "casimir": format_q(&casimir_scalar(rs, lambda)),
        },
        "critical_tests": tests,
        "consistent": t.all_agree(),
    });
    let rows = vec![
        vec!["critical".into(), c.is_critical.to_string()],
        vec!["genericity".into(), genericity_str(c.genericity).into()],
        vec![
            "subgeneric_root".into(),
            c.subgeneric_root.as_ref().map_or("-".into(), root_str),
        ],
        vec!["regular".into(), c.is_regular.to_string()],
        vec!["regular_full_weyl".into(), c.is_regular_full_weyl.to_string()],
        vec!["dominant".into(), c.is_dominant.to_string()],
        vec!["antidominant".into(), c.is_antidominant.to_string()],
        vec!["image_size".into(), c.finite_image.len().to_string()],
        vec!["casimir".into(), format_q(&casimir_scalar(rs, lambda))],
        vec!["shift_preserves_block".into(), t.shift_preserves_block.to_string()],
        vec!["delta_linked".into(), t.delta_linked.to_string()],
        vec!["imaginary_integral".into(), t.imaginary_integral.to_string()],
        vec!["critical_level".into(), t.critical_level.to_string()],
        vec!["finite_factorization".into(), t.finite_factorization.to_string()],
    ];
    let mut r = Report::new("classify", body, vec!["key", "value"], rows);
    r.ok = t.all_agree();
    Ok(r)
}

pub fn block_cmd(cfg: &RunConfig) -> Result<Report, CliError> {
    let lambda = cfg.weight()?;
    let rs = &cfg.rs;
    let window = cfg.window(lambda)?;
    let positives: Vec<FiniteRoot> = rs.positive_roots().to_vec();
    let mut rows = Vec::new();
    let mut members = Vec::new();
    for (o, w) in window.members() {
        let c = classify(rs, w);
        let mut arrows = Vec::new();
        for alpha in &positives {
            if let Ok(up) = arrow_up(rs, w, alpha) {
                if up != *w && window.contains(rs, &up) {
                    let target = affine::offset(rs, window.base(), &up).expect("same lattice");
                    arrows.push((root_str(alpha), offset_str(&target)));
                }
            }
        }
        let arrow_text = if arrows.is_empty() {
            "-".to_string()
        } else {
            arrows
                .iter()
                .map(|(a, t)| format!("{a}:{t}"))
                .collect::<Vec<_>>()
                .join(";")
        };
        rows.push(vec![
            offset_str(o),
            finite_str(&w.finite),
            format_q(&w.level),
            format_q(&w.delta),
            c.is_dominant.to_string(),
            c.is_antidominant.to_string(),
            arrow_text,
        ]);
        members.push(json!({
            "offset": o.0,
            "weight": weight_to_json(w),
            "dominant": c.is_dominant,
            "antidominant": c.is_antidominant,
            "arrow_up": arrows
                .iter()
                .map(|(a, t)| json!({ "root": a, "target": t }))
                .collect::<Vec<_>>(),
        }));
    }
    let body = json!({
        "algebra": rs.cartan_type().to_string(),
        "base": weight_to_json(window.base()),
        "bounds": { "delta_depth": cfg.depth, "finite_height": cfg.height },
        "critical": window.is_critical(),
        "members": members,
    });
    Ok(Report::new(
        "block",
        body,
        vec!["offset", "finite", "level", "delta", "dominant", "antidominant", "arrow_up"],
        rows,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharKind {
    Verma,
    ResVerma,
    Simple,
}

fn character_report(command: &'static str, kind: &str, ch: &FormalCharacter) -> Report {
    let t = ch.truncation();
    let rows = ch
        .terms()
        .iter()
        .map(|(o, c)| vec![offset_str(o), c.to_string()])
        .collect();
    let body = json!({
        "kind": kind,
        "base": weight_to_json(ch.base()),
        "region": { "delta_depth": t.delta_depth, "finite_height": t.finite_height },
        "terms": ch.terms().iter().map(|(o, c)| json!([o.0, c])).collect::<Vec<_>>(),
    });
    Report::new(command, body, vec!["offset", "coefficient"], rows)
}

pub fn char_cmd(cfg: &RunConfig, kind: CharKind) -> Result<Report, CliError> {
    let lambda = cfg.weight()?;
    let rs = &cfg.rs;
    let t = cfg.truncation();
    let (name, ch) = match kind {
        CharKind::Verma => ("verma", verma_character(rs, lambda, t)?),
        CharKind::ResVerma => ("resverma", restricted_verma_character(rs, lambda, t)?),
        CharKind::Simple => {
            let window = cfg.window(lambda)?;
            ("simple", simple_restricted_character(rs, lambda, &window, t)?)
        }
    };
    let mut r = character_report("char", name, &ch);
    if kind == CharKind::Simple {
        r.ok = ch.is_nonnegative();
    }
    Ok(r)
}

fn kind_str(k: ModuleKind) -> &'static str {
    match k {
        ModuleKind::Verma => "verma",
        ModuleKind::Restricted => "restricted",
    }
}

fn table_report(table: &MultiplicityTable, source: &str) -> Report {
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for (kind, gamma, nu, e) in table.iter() {
        let prov = format!("{:?}", e.provenance);
        rows.push(vec![
            kind_str(kind).into(),
            gamma.to_string(),
            nu.to_string(),
            e.value.to_string(),
            prov.clone(),
        ]);
        entries.push(json!({
            "kind": kind_str(kind),
            "gamma": weight_to_json(gamma),
            "nu": weight_to_json(nu),
            "value": e.value,
            "provenance": prov,
        }));
    }
    let body = json!({ "source": source, "entries": entries });
    Report::new("mult", body, vec!["kind", "gamma", "nu", "value", "provenance"], rows)
}

pub fn mult_cmd(cfg: &RunConfig) -> Result<Report, CliError> {
    let lambda = cfg.weight()?;
    let rs = &cfg.rs;
    let c = classify(rs, lambda);
    if !c.is_critical {
        return Err(Error::Domain(format!("{lambda} is not critical")).into());
    }
    let window = cfg.window(lambda)?;
    if c.genericity == Genericity::Subgeneric {
        Ok(table_report(&subgeneric_mult_table(rs, &window)?, "subgeneric"))
    } else if c.is_antidominant {
        Ok(table_report(&antidominant_mult_table(rs, lambda, &window)?, "antidominant"))
    } else {
        Err(Error::Domain("multiplicity tables need a subgeneric class or an anti-dominant weight".into()).into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleCheck {
    Singvec,
    Hom,
    Restricted,
    Subgeneric,
    Chain,
    Matrices,
}

pub fn oracle_cmd(cfg: &RunConfig, check: OracleCheck, n: u32) -> Result<Report, CliError> {
    let lambda = cfg.weight()?;
    let rs = &cfg.rs;
    let spec = AlgebraSpec::new(rs.cartan_type())?;
    let bounds = cfg.truncation();
    match check {
        OracleCheck::Singvec => {
            let m = cfg.module(lambda)?;
            let scan = singular_scan(&m, cfg.depth)?;
            let rows = scan
                .iter()
                .map(|r| {
                    vec![
                        offset_str(&r.offset),
                        r.dim.to_string(),
                        r.sing_dim.to_string(),
                        r.expected.to_string(),
                        r.matches().to_string(),
                    ]
                })
                .collect();
            let body = json!({
                "check": "singvec",
                "rows": scan.iter().map(|r| json!({
                    "offset": r.offset.0,
                    "dim": r.dim,
                    "sing_dim": r.sing_dim,
                    "expected_p": r.expected,
                    "match": r.matches(),
                })).collect::<Vec<_>>(),
            });
            let mut r = Report::new(
                "oracle",
                body,
                vec!["offset", "dim", "sing_dim", "expected_p", "match"],
                rows,
            );
            r.ok = scan.iter().all(|row| row.matches());
            Ok(r)
        }
        OracleCheck::Hom => {
            let mut rows = Vec::new();
            let mut out = Vec::new();
            for k in 0..=cfg.depth {
                let mu = lambda.shift_delta(&-Q::from_integer(k.into()));
                let d = hom_dim_verma(&spec, lambda, &mu, bounds)?;
                rows.push(vec![k.to_string(), d.to_string()]);
                out.push(json!({ "n": k, "hom_dim": d }));
            }
            let body = json!({ "check": "hom", "rows": out });
            Ok(Report::new("oracle", body, vec!["n", "hom_dim"], rows))
        }
        OracleCheck::Restricted => {
            let m = cfg.module(lambda)?;
            let depth = if n == 0 { cfg.depth } else { n };
            let rep = restricted_quotient_oracle(&m, depth)?;
            let t = rep.region;
            let mut rows: Vec<Vec<String>> = Vec::new();
            for o in t.offsets(1) {
                rows.push(vec![
                    offset_str(&o),
                    rep.character.coefficient(&o).unwrap_or(0).to_string(),
                    rep.expected.coefficient(&o).unwrap_or(0).to_string(),
                ]);
            }
            let body = json!({
                "check": "restricted",
                "depth": depth,
                "region": { "delta_depth": t.delta_depth, "finite_height": t.finite_height },
                "character_match": rep.character_match,
                "singular_dims": rep.singular_dims,
                "quotient_invariants": rep.quotient_invariants,
                "character": rep.character.terms().iter().map(|(o, c)| json!([o.0, c])).collect::<Vec<_>>(),
            });
            let mut r = Report::new("oracle", body, vec!["offset", "quotient", "expected"], rows);
            r.ok = rep.passed();
            Ok(r)
        }
        OracleCheck::Subgeneric => {
            let (a, b) = subgeneric_invariant_check(&spec, lambda, n, bounds)?;
            let body = json!({ "check": "subgeneric", "n": n, "verma": a, "arrow_image": b });
            let mut r = Report::new(
                "oracle",
                body,
                vec!["n", "verma", "arrow_image"],
                vec![vec![n.to_string(), a.to_string(), b.to_string()]],
            );
            r.ok = a == b;
            Ok(r)
        }
        OracleCheck::Chain => {
            let rep = chain_embedding_check(&spec, lambda, n, bounds)?;
            let body = json!({
                "check": "chain",
                "n": n,
                "top_singular_dim": rep.top_singular_dim,
                "image_dim": rep.image_dim,
                "target_dim": rep.target_dim,
                "image_singular": rep.image_singular,
            });
            let rows = vec![vec![
                n.to_string(),
                rep.top_singular_dim.to_string(),
                rep.image_dim.to_string(),
                rep.target_dim.to_string(),
                rep.image_singular.to_string(),
            ]];
            let mut r = Report::new(
                "oracle",
                body,
                vec!["n", "top_singular_dim", "image_dim", "target_dim", "image_singular"],
                rows,
            );
            r.ok = rep.passed();
            Ok(r)
        }
        OracleCheck::Matrices => matrices(cfg, lambda),
    }
}

fn matrices(cfg: &RunConfig, lambda: &AffineWeight) -> Result<Report, CliError> {
    let m = cfg.module(lambda)?;
    let mut rows = Vec::new();
    let mut out = Vec::new();
    let ops: [(&str, Option<Raising>, Option<Lowering>); 4] = [
        ("e1", Some(Raising::E1), None),
        ("e0", Some(Raising::E0), None),
        ("f1", None, Some(Lowering::F1)),
        ("f0", None, Some(Lowering::F0)),
    ];
    for o in m.offsets() {
        for (name, r, l) in &ops {
            let mat = match (r, l) {
                (Some(r), _) => m.raising_matrix(*r, &o),
                (_, Some(l)) => m.lowering_matrix(*l, &o),
                _ => unreachable!(),
            };
            let Ok(mat) = mat else { continue };
            let triples: Vec<(usize, usize, String)> =
                mat.triples().map(|(i, j, v)| (i, j, format_q(v))).collect();
            for (i, j, v) in &triples {
                rows.push(vec![offset_str(&o), name.to_string(), i.to_string(), j.to_string(), v.clone()]);
            }
            out.push(json!({
                "offset": o.0,
                "operator": name,
                "shape": [mat.rows(), mat.cols()],
                "triples": triples.iter().map(|(i, j, v)| json!([i, j, v])).collect::<Vec<_>>(),
            }));
        }
    }
    let body = json!({ "check": "matrices", "matrices": out });
    Ok(Report::new("oracle", body, vec!["offset", "operator", "row", "col", "value"], rows))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QKind {
    Verma,
    Simple,
}

fn qseries_json(s: &QSeries) -> Value {
    json!({
        "truncation": format_q(s.truncation()),
        "terms": s.terms().map(|(e, c)| json!([format_q(e), c.to_string()])).collect::<Vec<_>>(),
    })
}

pub fn qchar_cmd(cfg: &RunConfig, kind: QKind, terms: u32) -> Result<Report, CliError> {
    let lambda = cfg.weight()?;
    let fk = match kind {
        QKind::Verma => FKind::Verma,
        QKind::Simple => FKind::Simple,
    };
    let s = q_character_f(&cfg.rs, lambda, fk, terms)?;
    let rows = s.terms().map(|(e, c)| vec![format_q(e), c.to_string()]).collect();
    let body = json!({
        "kind": if kind == QKind::Verma { "verma" } else { "simple" },
        "series": qseries_json(&s),
    });
    Ok(Report::new("qchar", body, vec!["exponent", "coefficient"], rows))
}

pub fn roots_cmd(cfg: &RunConfig) -> Result<Report, CliError> {
    let rs = &cfg.rs;
    let gram = rs.form_gram();
    let gram_rows: Vec<Vec<String>> = (0..gram.rows())
        .map(|i| gram.row(i).iter().map(format_q).collect())
        .collect();
    let positives: Vec<Vec<i64>> = rs
        .positive_roots()
        .iter()
        .map(|a| a.simple_coords().to_vec())
        .collect();
    let body = json!({
        "type": rs.cartan_type().to_string(),
        "rank": rs.rank(),
        "dual_coxeter": rs.dual_coxeter(),
        "cartan_matrix": rs.cartan_matrix(),
        "positive_roots": positives,
        "gram": gram_rows,
    });
    let rows = rs
        .positive_roots()
        .iter()
        .map(|a| vec![root_str(a), a.height().to_string()])
        .collect();
    Ok(Report::new("roots", body, vec!["root", "height"], rows))
}

fn random_q(rng: &mut ChaCha8Rng) -> Q {
    Q::new(rng.gen_range(-8i64..=8).into(), rng.gen_range(1i64..=4).into())
}

fn random_weight(rng: &mut ChaCha8Rng, rank: usize) -> AffineWeight {
    AffineWeight::new(
        FiniteWeight((0..rank).map(|_| random_q(rng)).collect()),
        random_q(rng),
        random_q(rng),
    )
}

fn random_critical_integral(rng: &mut ChaCha8Rng, rs: &FiniteRootSystem) -> AffineWeight {
    let f: Vec<i64> = (0..rs.rank()).map(|_| rng.gen_range(-6..=6)).collect();
    AffineWeight::new(
        FiniteWeight::from_ints(&f),
        Q::from_integer((-rs.dual_coxeter()).into()),
        Q::from_integer(rng.gen_range(-3i64..=3).into()),
    )
}

/// Seeded randomized consistency checks on the weight combinatorics.
pub fn selftest_cmd(cfg: &RunConfig, cases: usize) -> Result<Report, CliError> {
    let rs = &cfg.rs;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let roots = rs.roots();
    let positives = rs.positive_roots().to_vec();
    let mut tallies: Vec<(&'static str, usize, usize)> = vec![
        ("form_invariance", 0, 0),
        ("reflection_involution", 0, 0),
        ("critical_tests_agree", 0, 0),
        ("arrows_inverse", 0, 0),
        ("casimir_linkage", 0, 0),
    ];
    let mut record = |k: usize, ok: bool| {
        tallies[k].1 += 1;
        if !ok {
            tallies[k].2 += 1;
        }
    };
    for _ in 0..cases {
        let l = random_weight(&mut rng, rs.rank());
        let m = random_weight(&mut rng, rs.rank());
        let beta = AffineRoot::real(roots[rng.gen_range(0..roots.len())].clone(), rng.gen_range(-3..=3));
        let dot = rng.gen_bool(0.5);

        let before = affine::affine_form(rs, &l, &m)?;
        let sl = affine::reflect(rs, &l, &beta, false)?;
        let sm = affine::reflect(rs, &m, &beta, false)?;
        record(0, affine::affine_form(rs, &sl, &sm)? == before);

        let once = affine::reflect(rs, &l, &beta, dot)?;
        record(1, affine::reflect(rs, &once, &beta, dot)? == l);

        record(2, critical_tests(rs, &l)?.all_agree());

        let c = random_critical_integral(&mut rng, rs);
        let alpha = &positives[rng.gen_range(0..positives.len())];
        let up = arrow_up(rs, &c, alpha)?;
        let down = arrow_down(rs, &c, alpha)?;
        record(
            3,
            arrow_down(rs, &up, alpha)? == c && arrow_up(rs, &down, alpha)? == c,
        );

        let k = casimir_scalar(rs, &c);
        record(
            4,
            kk_successors(rs, &c, WindowBounds::new(2, 4))
                .iter()
                .all(|(nu, _)| casimir_scalar(rs, nu) == k),
        );
    }
    let ok = tallies.iter().all(|t| t.2 == 0);
    let rows = tallies
        .iter()
        .map(|(n, r, f)| vec![n.to_string(), r.to_string(), f.to_string()])
        .collect();
    let body = json!({
        "seed": cfg.seed,
        "cases": cases,
        "checks": tallies
            .iter()
            .map(|(n, r, f)| json!({ "name": n, "runs": r, "failures": f }))
            .collect::<Vec<_>>(),
    });
    let mut r = Report::new("selftest", body, vec!["check", "runs", "failures"], rows);
    r.ok = ok;
    Ok(r)
}
