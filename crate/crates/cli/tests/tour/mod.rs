//! The command tour over the three example graphs, shared by the golden-file
//! tests and the acceptance run.

#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use leavitt_cli::{run, Outcome};

pub struct Step {
    pub name: &'static str,
    pub args: Vec<String>,
    pub code: i32,
    /// File in the work directory that receives stdout.
    pub save: Option<&'static str>,
}

fn step(name: &'static str, code: i32, save: Option<&'static str>, args: &[&str]) -> Step {
    Step { name, args: args.iter().map(|s| s.to_string()).collect(), code, save }
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

struct Example {
    tag: &'static str,
    name: &'static str,
    depth: &'static str,
    g0: &'static str,
    probe: &'static str,
}

const EXAMPLES: [Example; 3] = [
    Example { tag: "ex51", name: "EX51", depth: "3", g0: "v_0,v_1,v_2,v_3", probe: "u_1" },
    Example { tag: "ex52", name: "EX52", depth: "4", g0: "v,w", probe: "b^2" },
    Example { tag: "ex53", name: "EX53", depth: "3", g0: "v#0,w#0", probe: "w#1" },
];

pub fn steps() -> Vec<Step> {
    let mut out = Vec::new();
    for ex in &EXAMPLES {
        let g = format!("@work/{}.g", ex.tag);
        let leak = |s: String| -> &'static str { Box::leak(s.into_boxed_str()) };
        let name = |suffix: &str| leak(format!("{}_{suffix}", ex.tag));
        let file = |suffix: &str| leak(format!("{}.{suffix}", ex.tag));
        out.push(step(
            name("fixture"),
            0,
            Some(leak(format!("{}.g", ex.tag))),
            &["fixture", ex.name, "--depth", ex.depth],
        ));
        out.push(step(name("fixture_g0"), 0, None, &["fixture", ex.name, "--depth", ex.depth, "--emit-g0"]));
        out.push(step(
            name("expected"),
            0,
            Some(file("expected")),
            &["fixture", ex.name, "--depth", ex.depth, "--emit-expected"],
        ));
        out.push(step(name("cg_validate"), 0, None, &["cg-validate", &g, "--g0", ex.g0]));
        out.push(step(name("cg_contract"), 0, Some(file("contracted")), &["cg-contract", &g, "--g0", ex.g0]));
        out.push(step(
            name("cg_verify"),
            0,
            None,
            &["cg-verify", &g, "--g0", ex.g0, "--ring", "Zmod:4", "--maxlen", "4", "--samples", "200", "--seed", "7"],
        ));
        out.push(step(name("morita"), 0, None, &["morita", &g, "--set", ex.g0, "--samples", "50", "--seed", "3"]));
        out.push(step(name("full"), 0, None, &["full", &g, "--set", ex.g0]));
        out.push(step(name("closure"), 0, None, &["closure", &g, "--set", ex.probe]));
        out.push(step(name("quotient"), 0, None, &["quotient", &g, "--set", ex.probe]));
    }
    out.extend([
        step("ex51_collapse", 0, None, &["collapse", "@work/ex51.g", "--seg", "u_1,u_2,u_3"]),
        step("ex52_desing", 0, Some("ex52_desing.g"), &["desing", "@in/ex52_F.mg", "--depth", "4"]),
        step("ex52_desing_g0", 0, None, &["desing", "@in/ex52_F.mg", "--depth", "4", "--emit-g0"]),
        step("ex52_desing_contract", 0, None, &["cg-contract", "@work/ex52_desing.g", "--g0", "v,w"]),
        step("ex53_delay", 0, Some("ex53_delay.g"), &["delay-in", "@in/ex53_F.g", "--d", "@in/ex53.delay"]),
        step("ex53_delay_g0", 0, None, &["delay-in", "@in/ex53_F.g", "--d", "@in/ex53.delay", "--emit-g0"]),
        step("ex53_delay_contract", 0, None, &["cg-contract", "@work/ex53_delay.g", "--g0", "v#0,w#0"]),
        step("ex53_nf", 0, None, &["nf", "@work/ex53.g", "--expr", "s(e_2)*sx(e_2) + s(e_3.w~2.w~1)*sx(e_1)"]),
        step(
            "ex53_reduce",
            0,
            Some("ex53.cert"),
            &["reduce", "@work/ex53.g", "--expr", "s(e_3.w~2) - 2*s(e_2)*sx(e_1)"],
        ),
        step(
            "ex53_verify_cert",
            0,
            None,
            &["verify-cert", "@work/ex53.g", "--expr", "s(e_3.w~2) - 2*s(e_2)*sx(e_1)", "--cert", "@work/ex53.cert"],
        ),
        step(
            "ex53_verify_cert_wrong",
            1,
            None,
            &["verify-cert", "@work/ex53.g", "--expr", "s(e_2)", "--cert", "@work/ex53.cert"],
        ),
        step("par_relation", 0, None, &["nf", "@in/par.g", "--expr", "p(v) - s(e)*sx(e) - s(f)*sx(f)"]),
        step("par_nf_mod4", 0, None, &["nf", "@in/par.g", "--ring", "Zmod:4", "--expr", "3*s(e)*sx(e) + 2*s(e)*sx(e)"]),
        step("par_mul", 0, None, &["mul", "@in/par.g", "--lhs", "s(e) + s(f)", "--rhs", "sx(e) - sx(f)"]),
        step("par_quotient_empty", 0, None, &["quotient", "@in/par.g", "--set", ""]),
        step("loop_grade", 0, None, &["grade", "@in/loop.g", "--expr", "s(a.a) + sx(a) + 2*s(a)*sx(a)", "--deg", "-1"]),
        step("loop_reduce", 0, None, &["reduce", "@in/loop.g", "--expr", "sx(a.a) + 3*p(v)"]),
        step("loop_cg_validate", 1, None, &["cg-validate", "@in/loop.g", "--g0", ""]),
        step("iso_full", 0, None, &["full", "@in/iso.g", "--set", "a"]),
        step("pend_quotient", 0, None, &["quotient", "@in/pend.g", "--set", "a"]),
        step("pend_closure", 0, None, &["closure", "@in/pend.g", "--set", "v"]),
        step("bad_expr", 2, None, &["nf", "@in/par.g", "--expr", "s(e"]),
        step("bad_vertex", 2, None, &["full", "@in/par.g", "--set", "q"]),
        step("bad_fixture", 2, None, &["fixture", "EX54", "--depth", "3"]),
    ]);
    out
}

/// The text compared against a golden file.
pub fn rendered(out: &Outcome) -> String {
    let mut s = out.stdout.clone();
    if !out.stderr.is_empty() {
        s.push_str("--- stderr\n");
        s.push_str(&out.stderr);
    }
    s
}

pub struct Ran {
    pub name: &'static str,
    pub expected_code: i32,
    pub outcome: Outcome,
}

/// Runs every step with `@in/` and `@work/` resolved.
pub fn run_tour(work: &Path) -> Vec<Ran> {
    let inputs = golden_dir().join("inputs");
    let mut ran = Vec::new();
    for s in steps() {
        let mut argv = vec!["leavitt".to_string()];
        for a in &s.args {
            let a = match (a.strip_prefix("@in/"), a.strip_prefix("@work/")) {
                (Some(f), _) => inputs.join(f).display().to_string(),
                (_, Some(f)) => work.join(f).display().to_string(),
                _ => a.clone(),
            };
            argv.push(a);
        }
        let outcome = run(argv);
        if let Some(f) = s.save {
            fs::write(work.join(f), &outcome.stdout).expect("write work file");
        }
        ran.push(Ran { name: s.name, expected_code: s.code, outcome });
    }
    ran
}

/// Mismatches against the golden files, one message per failing step.
/// With `bless`, missing or stale golden files are rewritten instead.
pub fn check(work: &Path, bless: bool) -> Vec<String> {
    let mut problems = Vec::new();
    for r in run_tour(work) {
        let path = golden_dir().join(format!("{}.out", r.name));
        let got = rendered(&r.outcome);
        if r.outcome.code != r.expected_code {
            problems.push(format!("{}: exit {} (expected {})\n{got}", r.name, r.outcome.code, r.expected_code));
        }
        if bless {
            fs::write(&path, &got).expect("write golden file");
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(want) if want == got => {}
            Ok(want) => problems.push(format!("{}: output differs\n--- want\n{want}--- got\n{got}", r.name)),
            Err(e) => problems.push(format!("{}: {e}", path.display())),
        }
    }
    let same = |a: &str, b: &str| fs::read(work.join(a)).ok() == fs::read(work.join(b)).ok();
    for tag in ["ex51", "ex52", "ex53"] {
        if !same(&format!("{tag}.contracted"), &format!("{tag}.expected")) {
            problems.push(format!("{tag}: cg-contract output differs from --emit-expected"));
        }
    }
    problems
}
