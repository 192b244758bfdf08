#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the binary from the fixtures directory so file arguments are bare
/// names.
pub fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_gwprob"))
        .args(args)
        .current_dir(fixtures())
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// Golden cases on H: file stem and arguments. Every subcommand appears at
/// least once.
#[rustfmt::skip]
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("paths", &["paths", "--graph", "h.json", "--max-len", "2"]),
    ("paths_table", &["paths", "--graph", "h.json", "--max-len", "1", "--format", "table"]),
    ("reduce_ck", &["reduce", "--graph", "h.json", "--word", "e1 e1*", "--mode", "ck"]),
    ("reduce_toeplitz", &["reduce", "--graph", "h.json", "--word", "e1 e1*", "--mode", "toeplitz"]),
    ("reduce_range", &["reduce", "--graph", "h.json", "--word", "e1* e1"]),
    ("reduce_zero", &["reduce", "--graph", "h.json", "--word", "e1 e1"]),
    ("reduce_table", &["reduce", "--graph", "h.json", "--word", "e1 e2 e2*", "--format", "table"]),
    ("lattice", &["lattice", "--graph", "h.json", "--word", "e1 e2 e2* e1*"]),
    ("lattice_empty", &["lattice", "--graph", "h.json", "--word", "e1 e1"]),
    ("lattice_table", &["lattice", "--graph", "h.json", "--word", "e1 e1*", "--format", "table"]),
    ("expect", &["expect", "--var", "mixed.json"]),
    ("expect_table", &["expect", "--var", "mixed.json", "--format", "table"]),
    ("expect_zero", &["expect", "--var", "a_e1.json"]),
    ("moment", &["moment", "--var", "sym_loop.json", "-n", "4"]),
    ("moment_d", &["moment", "--var", "sym_e1.json", "-n", "2", "--d", "d_v1.json", "--d", "d_half.json"]),
    ("cumulant", &["cumulant", "--var", "sym_loop.json", "-n", "2"]),
    ("cumulant_contributions", &["cumulant", "--var", "sym_e1.json", "-n", "4", "--contributions"]),
    ("cumulant_table", &["cumulant", "--var", "sym_e1.json", "-n", "2", "--contributions", "--format", "table"]),
    ("free", &["free", "--var", "a_e1.json", "--var2", "b_e2.json", "--max-order", "4"]),
    ("free_witness", &["free", "--var", "loop.json", "--var2", "loop_sq.json", "--max-order", "4"]),
    ("classify", &["classify", "--var", "sym_e1.json", "--max-order", "6"]),
    ("classify_edge", &["classify", "--var", "a_e1.json", "--max-order", "4"]),
    ("classify_table", &["classify", "--var", "sym_loop.json", "--max-order", "6", "--format", "table"]),
    ("compress", &["compress", "--var", "mixed.json", "--vertices", "v1"]),
    ("compress_both", &["compress", "--var", "mixed.json", "--vertices", "v1,v2"]),
    ("series_moment", &["series", "--var", "sym_loop.json", "--vertex", "v1", "--order", "4", "--kind", "moment"]),
    ("series_rtransform", &["series", "--var", "sym_loop.json", "--vertex", "v1", "--order", "4", "--kind", "rtransform"]),
    ("series_table", &["series", "--var", "sym_loop.json", "--vertex", "v1", "--order", "4", "--format", "table"]),
    ("oracle", &["oracle", "--graph", "h.json", "--trunc", "4"]),
    ("nc_debug", &["nc-debug", "6"]),
    ("nc_debug_table", &["nc-debug", "4", "--format", "table"]),
];

/// Invocations and their required exit codes.
#[rustfmt::skip]
pub const EXIT_CODES: &[(&[&str], i32)] = &[
    (&["--help"], 0),
    (&["--version"], 0),
    (&["paths", "--help"], 0),
    (&["paths", "--graph", "h.json"], 1),
    (&["frobnicate"], 1),
    (&["reduce", "--graph", "h.json", "--word", "e1", "--mode", "weak"], 1),
    (&["paths", "--graph", "bad.json", "--max-len", "1"], 2),
    (&["expect", "--var", "missing.json"], 2),
    (&["reduce", "--graph", "h.json", "--word", "e1**"], 2),
    (&["expect", "--var", "unknown_vertex.json"], 3),
    (&["reduce", "--graph", "h.json", "--word", "e1.e1"], 3),
    (&["compress", "--var", "mixed.json", "--vertices", "v9"], 3),
    (&["series", "--var", "sym_loop.json", "--vertex", "v9", "--order", "2"], 3),
    (&["cumulant", "--var", "sym_e1.json", "-n", "9"], 3),
    (&["classify", "--var", "sym_e1.json", "--max-order", "10"], 3),
    (&["nc-debug", "11"], 3),
    (&["moment", "--var", "sym_e1.json", "-n", "2", "--d", "d_v1.json"], 3),
];
