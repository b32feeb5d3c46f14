//! Golden-file cases for the `tropikit` binary.

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
}

/// One case per subcommand, plus error paths. The transform cases are large
/// enough to run in parallel.
#[rustfmt::skip]
pub const CASES: &[Case] = &[
    Case { name: "axioms_maxplus", args: &["axioms", "--semiring", "maxplus", "--trials", "500", "--seed", "7"] },
    Case { name: "axioms_deformed", args: &["axioms", "--semiring", "deformed:0.5", "--trials", "500", "--seed", "7"] },
    Case { name: "sp_graph3", args: &["sp", "--graph", "graph3.txt"] },
    Case { name: "sp_negcycle", args: &["sp", "--graph", "negcycle.txt"] },
    Case { name: "bellman_jacobi", args: &["bellman", "--h", "H.tsv", "--f", "F.tsv"] },
    Case { name: "bellman_gauss_seidel", args: &["bellman", "--h", "H.tsv", "--f", "F.tsv", "--method", "gauss-seidel"] },
    Case { name: "bellman_star", args: &["bellman", "--h", "H.tsv", "--f", "F.tsv", "--method", "star"] },
    Case { name: "interval_bellman_all_pairs", args: &["interval-bellman", "--graph", "ladder.txt"] },
    Case { name: "interval_bellman_star", args: &["interval-bellman", "--graph", "ladder.txt", "--method", "star"] },
    Case { name: "interval_bellman_target", args: &["interval-bellman", "--graph", "ladder.txt", "--target", "3"] },
    Case { name: "newton_poly", args: &["newton", "--poly", "poly.txt"] },
    Case { name: "tropcurve_line", args: &["tropcurve", "--poly", "line.txt"] },
    Case { name: "tropcurve_conic", args: &["tropcurve", "--poly", "conic.txt"] },
    Case { name: "amoeba_h01", args: &["amoeba", "--h", "0.1", "--samples", "5000"] },
    Case { name: "legendre_parabola", args: &["legendre", "--input", "parabola.txt", "--xi-start", "-3", "--xi-step", "0.125", "--xi-count", "49"] },
    Case { name: "convolve_bumps", args: &["convolve", "--left", "bumps.txt", "--right", "steps.txt"] },
    Case { name: "hopflax_quadratic", args: &["hopflax", "--input", "quadratic.txt", "--t", "1", "--m", "1"] },
    Case { name: "dequant_demo", args: &["dequant-demo", "--h", "1,0.1,0.01", "--u", "0", "--v", "0"] },
    Case { name: "parse_error", args: &["sp", "--graph", "poly.txt"] },
];

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn golden_path(case: &Case) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{}.out", case.name))
}

/// Runs the binary from the fixture directory and renders exit status,
/// stdout and stderr into one transcript.
pub fn transcript(case: &Case, threads: Option<usize>) -> String {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tropikit"));
    cmd.args(case.args)
        .current_dir(fixtures())
        .env_remove("TROPIKIT_THREADS");
    if let Some(n) = threads {
        cmd.env("TROPIKIT_THREADS", n.to_string());
    }
    let out = cmd.output().expect("binary runs");
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().map_or("signal".into(), |c| c.to_string()),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr),
    )
}
