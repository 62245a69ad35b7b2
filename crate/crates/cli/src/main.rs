//! `tforce`: batch front end over the JSON encodings of `tforce-core`.
//!
//! Every subcommand prints one JSON document on stdout. Exit status 0 means
//! success, 1 a domain error (`{"error": code, "detail": ...}`), 2 a parse
//! error.

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use tforce::coding::{
    check_coding_pair, iso_b, iso_b_inv, iso_phi_inv, iso_phi_prefix, parity_tail_analysis,
    t_parity_samples, CodingPair, CodingReport, CodingSamples, Mutated, Mutation, TParity,
};
use tforce::forcing::{
    axiom_a_refine, decided_cohen_prefix, extend_for_cohen, graft_one, quasi_pure_refine,
    refute_pure_decision, BuiltinOracle,
};
use tforce::gen::{self, GenParams};
use tforce::hechler::{mod2_samples, HechlerMod2};
use tforce::ideals::{all_zero_branch, non2_branch, IdealSetSpec};
use tforce::tree::{
    branch, build_antichain_condition, leq, leq_n, meet, OddPredicate, DEFAULT_ORACLE_DEPTH,
};
use tforce::{BranchSelector, Digit3, EventualReal, ForcingError, TCondition, Word2, Word3};

const DEFAULT_SEED: u64 = 7;

#[derive(Parser)]
#[command(name = "tforce", version, about = "Exact computations with ternary tree-forcing conditions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A condition, as a file path or inline JSON.
#[derive(Args)]
struct CondArg {
    #[arg(long)]
    cond: String,
}

#[derive(Args)]
struct SetArgs {
    /// `Nn` or `Mn`.
    #[arg(long)]
    set: String,
    #[arg(long, default_value_t = 0)]
    n: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Poset {
    T,
    Hechler,
}

#[derive(Clone, Copy, ValueEnum)]
enum MutationArg {
    TruncatedPhiStar,
    ShiftedAlignment,
    FlippedRealizer,
}

impl From<MutationArg> for Mutation {
    fn from(m: MutationArg) -> Mutation {
        match m {
            MutationArg::TruncatedPhiStar => Mutation::TruncatedPhiStar,
            MutationArg::ShiftedAlignment => Mutation::ShiftedAlignment,
            MutationArg::FlippedRealizer => Mutation::FlippedRealizer,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining conditions; `--strict` also forbids forced 2s.
    Validate {
        #[command(flatten)]
        cond: CondArg,
        #[arg(long)]
        strict: bool,
    },
    /// Canonical form.
    Normalize {
        #[command(flatten)]
        cond: CondArg,
    },
    /// Tree membership of `--node`, or set membership of `--real`.
    Member {
        #[arg(long)]
        cond: Option<String>,
        #[arg(long)]
        node: Option<String>,
        #[arg(long)]
        set: Option<String>,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long)]
        real: Option<String>,
    },
    /// Membership of `--real` in `N_n` or `M_n`.
    MemberSet {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        real: String,
    },
    Restrict {
        #[command(flatten)]
        cond: CondArg,
        #[arg(long)]
        node: String,
    },
    /// Is `--cond` below `--other`? With `--n`, also `≤_n`.
    Leq {
        #[command(flatten)]
        cond: CondArg,
        #[arg(long)]
        other: String,
        #[arg(long)]
        n: Option<usize>,
    },
    Meet {
        #[command(flatten)]
        cond: CondArg,
        #[arg(long)]
        other: String,
    },
    /// The condition coding an odd-level predicate `{"table":"01","tail":"1"}`.
    Antichain {
        #[arg(long)]
        pred: String,
    },
    /// The branch following a selector (default: 0 at every split).
    Branch {
        #[command(flatten)]
        cond: CondArg,
        #[arg(long)]
        selector: Option<String>,
    },
    /// Nodes of a given length.
    Nodes {
        #[command(flatten)]
        cond: CondArg,
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_DEPTH)]
        limit: usize,
    },
    ExtendCohen {
        #[command(flatten)]
        cond: CondArg,
        #[arg(long)]
        sigma: String,
    },
    RefutePd {
        #[command(flatten)]
        cond: CondArg,
    },
    Graft {
        #[command(flatten)]
        cond: CondArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        pj: String,
    },
    AxiomA {
        #[command(flatten)]
        cond: CondArg,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "identity")]
        oracle: String,
    },
    QuasiPure {
        #[command(flatten)]
        cond: CondArg,
        #[arg(long)]
        stages: usize,
        #[arg(long, default_value = "identity")]
        oracle: String,
    },
    /// A refinement avoiding `N_n` or `M_n`.
    Witness {
        #[command(flatten)]
        set: SetArgs,
        #[command(flatten)]
        cond: CondArg,
    },
    /// A branch in `H` with code 0 beyond the decided prefix, and a branch
    /// with no late 2.
    ComeagerBranch {
        #[command(flatten)]
        cond: CondArg,
    },
    /// Index of a binary word, or with `--index` the word of an index.
    IsoB {
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        index: Option<u64>,
    },
    /// Increasing sequence of a ternary word ending in 2.
    IsoPhi {
        #[arg(long)]
        word: String,
    },
    IsoPhiInv {
        #[arg(long)]
        seq: String,
    },
    CheckCodingPair {
        #[arg(long, value_enum, default_value = "t")]
        poset: Poset,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum)]
        mutation: Option<MutationArg>,
    },
    #[command(subcommand)]
    Demo(Demo),
}

#[derive(Subcommand)]
enum Demo {
    /// Random distinct odd-level predicates give incompatible conditions.
    Antichain {
        #[arg(long, default_value_t = 50)]
        pairs: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Cohen extension and the failure of pure decision on a random condition.
    #[command(name = "lemma23")]
    Cohen {
        #[arg(long, default_value = "0110")]
        sigma: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Avoiding `M_n` and `N_n`, and hitting their unions, on a random condition.
    #[command(name = "lemma24")]
    Ideals {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// One Axiom A step on a random condition.
    AxiomA {
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value = "next-split-0")]
        oracle: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Round trips through the increasing-sequence correspondence.
    IsoRoundtrip {
        #[arg(long, default_value_t = 20)]
        cases: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

enum Failure {
    Parse(String),
    Domain(ForcingError),
}

impl From<ForcingError> for Failure {
    fn from(e: ForcingError) -> Failure {
        match e {
            ForcingError::Parse(msg) => Failure::Parse(msg),
            other => Failure::Domain(other),
        }
    }
}

type Outcome = Result<Value, Failure>;

/// The argument itself, or the contents of the file it names.
fn source(arg: &str) -> Result<String, Failure> {
    let path = Path::new(arg);
    if !arg.trim_start().starts_with(['{', '[', '"']) && path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_owned())
    }
}

fn load<T: DeserializeOwned>(arg: &str) -> Result<T, Failure> {
    let text = source(arg)?;
    serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{arg}: {e}")))
}

/// A word given bare (`0110`), as a JSON string, or wrapped as `{"<key>": ...}`.
fn load_word<W: std::str::FromStr<Err = ForcingError>>(arg: &str, key: &str) -> Result<W, Failure> {
    let text = source(arg)?;
    let raw = match serde_json::from_str::<Value>(&text) {
        Ok(Value::String(s)) => s,
        Ok(Value::Object(map)) => match map.get(key) {
            Some(Value::String(s)) => s.clone(),
            _ => return Err(Failure::Parse(format!("expected {{\"{key}\": \"...\"}}"))),
        },
        Ok(Value::Number(n)) => n.to_string(),
        _ => text.trim().to_owned(),
    };
    Ok(raw.parse()?)
}

fn load_cond(arg: &str) -> Result<TCondition, Failure> {
    let p: TCondition = load(arg)?;
    p.require_valid(false)?;
    Ok(p)
}

fn load_seq(arg: &str) -> Result<Vec<u64>, Failure> {
    let text = source(arg)?;
    match serde_json::from_str::<Value>(&text) {
        Ok(Value::Object(map)) if map.contains_key("incr") => {
            serde_json::from_value(map["incr"].clone()).map_err(|e| Failure::Parse(e.to_string()))
        }
        Ok(v @ Value::Array(_)) => serde_json::from_value(v).map_err(|e| Failure::Parse(e.to_string())),
        _ => Err(Failure::Parse(format!("expected {{\"incr\": [...]}}, got {arg}"))),
    }
}

fn oracle(name: &str) -> Result<BuiltinOracle, Failure> {
    Ok(name.parse()?)
}

fn set_spec(args: &SetArgs) -> Result<IdealSetSpec, Failure> {
    Ok(IdealSetSpec::parse(&args.set, args.n)?)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn member_set(spec: IdealSetSpec, real: &str) -> Outcome {
    let z: EventualReal = load(real)?;
    Ok(json!({ "set": spec.to_string(), "member": spec.contains(&z) }))
}

fn coding_report<P: CodingPair>(
    cp: P,
    samples: &CodingSamples<P::Symbol, P::Condition>,
    mutation: Option<Mutation>,
) -> CodingReport {
    match mutation {
        None => check_coding_pair(&cp, samples),
        Some(mutation) => check_coding_pair(&Mutated { inner: cp, mutation }, samples),
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Validate { cond, strict } => {
            let p: TCondition = load(&cond.cond)?;
            Ok(to_value(&p.validate(strict)))
        }
        Command::Normalize { cond } => {
            let p: TCondition = load(&cond.cond)?;
            Ok(to_value(&p.normalized()?))
        }
        Command::Member { cond, node, set, n, real } => match (cond, node, set, real) {
            (Some(c), Some(t), None, None) => {
                let p = load_cond(&c)?;
                let t: Word3 = load_word(&t, "word3")?;
                Ok(json!({ "member": p.member(&t) }))
            }
            (None, None, Some(s), Some(r)) => member_set(IdealSetSpec::parse(&s, n)?, &r),
            _ => Err(Failure::Parse("member needs --cond with --node, or --set with --real".into())),
        },
        Command::MemberSet { set, real } => member_set(set_spec(&set)?, &real),
        Command::Restrict { cond, node } => {
            let p = load_cond(&cond.cond)?;
            let t: Word3 = load_word(&node, "word3")?;
            Ok(to_value(&p.restrict(&t)?))
        }
        Command::Leq { cond, other, n } => {
            let q = load_cond(&cond.cond)?;
            let p = load_cond(&other)?;
            let mut out = json!({ "leq": leq(&q, &p) });
            if let Some(n) = n {
                out["leq_n"] = json!(leq_n(&q, &p, n));
            }
            Ok(out)
        }
        Command::Meet { cond, other } => {
            let p = load_cond(&cond.cond)?;
            let q = load_cond(&other)?;
            Ok(match meet(&p, &q) {
                Ok(m) => json!({ "compatible": true, "meet": m }),
                Err(reason) => json!({ "compatible": false, "incompatible": reason }),
            })
        }
        Command::Antichain { pred } => {
            let a: OddPredicate = load(&pred)?;
            Ok(to_value(&build_antichain_condition(&a)))
        }
        Command::Branch { cond, selector } => {
            let p = load_cond(&cond.cond)?;
            let sel = match selector {
                Some(s) => load(&s)?,
                None => BranchSelector::constant(Digit3::ZERO),
            };
            Ok(to_value(&branch(&p, &sel)))
        }
        Command::Nodes { cond, depth, limit } => {
            let p = load_cond(&cond.cond)?;
            let nodes = p.nodes_at_depth_limited(depth, limit)?;
            Ok(json!({ "depth": depth, "count": nodes.len(), "nodes": nodes }))
        }
        Command::ExtendCohen { cond, sigma } => {
            let p = load_cond(&cond.cond)?;
            let sigma: Word2 = load_word(&sigma, "word2")?;
            let q = extend_for_cohen(&p, &sigma)?;
            let want = decided_cohen_prefix(&p).concat(&sigma);
            let decided = decided_cohen_prefix(&q);
            Ok(json!({
                "q": q,
                "decided": decided,
                "expected": want,
                "decided_matches": decided == want,
                "leq": leq(&q, &p),
            }))
        }
        Command::RefutePd { cond } => {
            let q = load_cond(&cond.cond)?;
            let pair = refute_pure_decision(&q)?;
            Ok(json!({
                "k": pair.k,
                "q0": pair.q0,
                "q1": pair.q1,
                "decided0": decided_cohen_prefix(&pair.q0),
                "decided1": decided_cohen_prefix(&pair.q1),
            }))
        }
        Command::Graft { cond, k, pj } => {
            let q = load_cond(&cond.cond)?;
            let p_j = load_cond(&pj)?;
            let g = graft_one(&q, k, &p_j)?;
            Ok(json!({ "q": g, "leq_k": leq_n(&g, &q, k), "strict": g.is_strict() }))
        }
        Command::AxiomA { cond, k, oracle: name } => {
            let p = load_cond(&cond.cond)?;
            let out = axiom_a_refine(&p, k, &oracle(&name)?)?;
            let mut v = to_value(&out);
            v["leq_k"] = json!(leq_n(&out.q, &p, k));
            Ok(v)
        }
        Command::QuasiPure { cond, stages, oracle: name } => {
            let p = load_cond(&cond.cond)?;
            Ok(to_value(&quasi_pure_refine(&p, stages, &oracle(&name)?)?))
        }
        Command::Witness { set, cond } => {
            let spec = set_spec(&set)?;
            let p = load_cond(&cond.cond)?;
            let q = spec.witness(&p)?;
            Ok(json!({ "set": spec.to_string(), "q": q, "leq": leq(&q, &p) }))
        }
        Command::ComeagerBranch { cond } => {
            let p = load_cond(&cond.cond)?;
            let z = all_zero_branch(&p)?;
            let from = decided_cohen_prefix(&p).len();
            let non2 = non2_branch(&p)?;
            Ok(json!({
                "branch": z,
                "code": parity_tail_analysis(&z)?,
                "in_m": IdealSetSpec::Mn(from).contains(&z),
                "m_index": from,
                "non2_branch": non2,
                "in_n": IdealSetSpec::Nn(p.stem().len()).contains(&non2),
                "n_index": p.stem().len(),
            }))
        }
        Command::IsoB { word, index } => match (word, index) {
            (Some(w), None) => {
                let w: Word2 = load_word(&w, "word2")?;
                Ok(json!({ "word2": w, "index": iso_b(&w)? }))
            }
            (None, Some(i)) => Ok(json!({ "word2": iso_b_inv(i), "index": i })),
            _ => Err(Failure::Parse("iso-b needs exactly one of --word, --index".into())),
        },
        Command::IsoPhi { word } => {
            let x: Word3 = load_word(&word, "word3")?;
            Ok(json!({ "incr": iso_phi_prefix(&x)? }))
        }
        Command::IsoPhiInv { seq } => {
            let s = load_seq(&seq)?;
            Ok(json!({ "word3": iso_phi_inv(&s)? }))
        }
        Command::CheckCodingPair { poset, samples, seed, mutation } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mutation = mutation.map(Mutation::from);
            let report = match poset {
                Poset::T => coding_report(TParity, &t_parity_samples(&mut rng, samples), mutation),
                Poset::Hechler => {
                    coding_report(HechlerMod2, &mod2_samples(&mut rng, samples), mutation)
                }
            };
            Ok(json!({
                "passed": report.passed(),
                "kind": report.kind,
                "samples": report.samples,
                "counterexamples": report.counterexamples,
            }))
        }
        Command::Demo(demo) => run_demo(demo),
    }
}

fn run_demo(demo: Demo) -> Outcome {
    match demo {
        Demo::Antichain { pairs, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut reports = Vec::with_capacity(pairs);
            while reports.len() < pairs {
                let a = gen::random_odd_predicate(&mut rng, 6, 6);
                let b = gen::random_odd_predicate(&mut rng, 6, 6);
                let Some(first) = a.first_difference(&b, 40) else {
                    continue;
                };
                let outcome = meet(&build_antichain_condition(&a), &build_antichain_condition(&b));
                reports.push(json!({
                    "a": a,
                    "b": b,
                    "first_difference": first,
                    "incompatible": outcome.err(),
                }));
            }
            let all = reports.iter().all(|r| !r["incompatible"].is_null());
            Ok(json!({ "pairs": pairs, "all_incompatible": all, "results": reports }))
        }
        Demo::Cohen { sigma, seed } => {
            let sigma: Word2 = load_word(&sigma, "word2")?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = gen::random_condition(&mut rng, &GenParams::strict());
            let q = extend_for_cohen(&p, &sigma)?;
            let want = decided_cohen_prefix(&p).concat(&sigma);
            let pair = refute_pure_decision(&p)?;
            Ok(json!({
                "p": p,
                "decided_p": decided_cohen_prefix(&p),
                "sigma": sigma,
                "q": q,
                "decided_q": decided_cohen_prefix(&q),
                "decided_matches": decided_cohen_prefix(&q) == want,
                "leq": leq(&q, &p),
                "pure_decision_failure": {
                    "k": pair.k,
                    "decided0": decided_cohen_prefix(&pair.q0),
                    "decided1": decided_cohen_prefix(&pair.q1),
                    "q0": pair.q0,
                    "q1": pair.q1,
                },
            }))
        }
        Demo::Ideals { n, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = gen::random_condition(&mut rng, &GenParams::strict());
            let mn = IdealSetSpec::Mn(n);
            let nn = IdealSetSpec::Nn(n);
            let qm = mn.witness(&p)?;
            let qn = nn.witness(&p)?;
            let sample = |q: &TCondition, spec: IdealSetSpec, rng: &mut ChaCha8Rng| {
                (0..20)
                    .filter(|_| spec.contains(&branch(q, &gen::random_h_selector(rng))))
                    .count()
            };
            let hits_m = sample(&qm, mn, &mut rng);
            let hits_n = sample(&qn, nn, &mut rng);
            let z = all_zero_branch(&p)?;
            let from = decided_cohen_prefix(&p).len();
            let non2 = non2_branch(&p)?;
            Ok(json!({
                "p": p,
                "n": n,
                "m_witness": { "q": qm, "decided": decided_cohen_prefix(&qm), "sampled_branches_in_set": hits_m },
                "n_witness": { "q": qn, "sampled_branches_in_set": hits_n },
                "comeager_branch": { "z": z, "m_index": from, "in_m": IdealSetSpec::Mn(from).contains(&z) },
                "non2_branch": { "z": non2, "n_index": p.stem().len(), "in_n": IdealSetSpec::Nn(p.stem().len()).contains(&non2) },
            }))
        }
        Demo::AxiomA { k, oracle: name, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = gen::random_condition(&mut rng, &GenParams::strict());
            let out = axiom_a_refine(&p, k, &oracle(&name)?)?;
            let below = out
                .nodes
                .iter()
                .zip(&out.witnesses)
                .all(|(t, p_j)| out.q.restrict(t).is_ok_and(|r| leq(&r, p_j)));
            let predense = (0..20)
                .filter(|_| {
                    let r = gen::random_refinement(&mut rng, &out.q, false);
                    out.predense_witness(&r).is_some()
                })
                .count();
            Ok(json!({
                "p": p,
                "k": k,
                "q": out.q,
                "leq_k": leq_n(&out.q, &p, k),
                "witnesses": out.witnesses.len(),
                "restrictions_below_witnesses": below,
                "sampled_refinements_meeting_e": predense,
                "lenient": out.lenient,
            }))
        }
        Demo::IsoRoundtrip { cases, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut results = Vec::with_capacity(cases);
            for _ in 0..cases {
                let mut x = Word3::new();
                for _ in 0..rng.gen_range(1..=8) {
                    for bit in gen::random_word2(&mut rng, 6).iter() {
                        x.push(Digit3::from_bit(*bit));
                    }
                    x.push(Digit3::TWO);
                }
                let s = iso_phi_prefix(&x)?;
                let back = iso_phi_inv(&s)?;
                results.push(json!({ "word3": x, "incr": s, "roundtrip": back == x }));
            }
            let all = results.iter().all(|r| r["roundtrip"] == json!(true));
            Ok(json!({ "cases": cases, "all_roundtrip": all, "results": results }))
        }
    }
}

fn emit(v: &Value) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{v}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(v) => {
            emit(&v);
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            emit(&json!({ "error": e.code(), "detail": e.to_string() }));
            ExitCode::from(1)
        }
        Err(Failure::Parse(detail)) => {
            emit(&json!({ "error": "parse", "detail": detail }));
            ExitCode::from(2)
        }
    }
}
