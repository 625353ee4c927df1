//! One line per acceptance criterion; exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use bott8::brauer_wall::{bw_cycle, cycle_rings, fractal_dimension, verify_theorem3, CLOCK_RINGS};
use bott8::classify::{algebra_type, division_ring_of, radon_hurwitz};
use bott8::spin_reps::{bw_rep_walk, quotient_structure, rep_field, rep_label, HalfInt, RepField};
use bott8::tensor_iso::{block_matrix_form, graded_tensor_check, karoubi_check, BLOCK_SAMPLE_SEED};
use bott8::verify;
use bott8::Signature;

const BIN: &str = env!("CARGO_BIN_EXE_bott8");

const FIELD_TAGS: &str = "r00 q01 q02 r03 r04 r10 r11 q12 q13 r14 q20 r21 r22 q23 q24 \
    q30 q31 r32 r33 q34 r40 q41 q42 r43 r44 \
    q45 q46 r47 r48 r54 r55 q56 q57 r58 q64 r65 r66 q67 q68 \
    q74 q75 r76 r77 q78 r84 q85 q86 r87 r88 \
    r28,28 q28,29 q28,30 r28,31 r28,32 r29,28 r29,29 q29,30 q29,31 r29,32 \
    q30,28 r30,29 r30,30 q30,31 q30,32 q31,28 q31,29 r31,30 r31,31 q31,32 \
    r32,28 q32,29 q32,30 r32,31 r32,32";

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn signatures(max_n: u32) -> Vec<Signature> {
    (0..=max_n)
        .flat_map(|n| (0..=n).map(move |p| Signature::new(p, n - p)))
        .collect()
}

fn all_pass(checks: &[verify::Check]) -> (bool, String) {
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    (failed.is_empty(), format!("{} checks, failed: {:?}", checks.len(), failed))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let sigs = signatures(9);
    let bad: Vec<String> = sigs
        .iter()
        .filter(|s| {
            division_ring_of(s.p, s.q).map(|r| r.ring) != Ok(algebra_type(s.p, s.q).ring)
        })
        .map(|s| s.to_string())
        .collect();
    let secs = start.elapsed().as_secs_f64();
    outcome(
        sigs.len() == 55 && bad.is_empty() && secs <= 60.0,
        format!("{} algebras, mismatches {:?}, {secs:.1} s", sigs.len(), bad),
    )
}

fn criterion_2() -> Outcome {
    let base: Vec<i64> = (0..8).map(radon_hurwitz).collect();
    let period = (-16..=64).all(|i| radon_hurwitz(i + 8) == radon_hurwitz(i) + 4);
    outcome(base == [0, 1, 2, 2, 3, 3, 3, 3] && period, format!("r_0..7 = {base:?}, period holds: {period}"))
}

fn criterion_3() -> Outcome {
    let out = Command::new(BIN).args(["verify", "theorem3", "--qmax", "24"]).output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    let sequences = ["0,0,0,1,1,2,3,4,4", "4,4,5,5,6,7,8,8", "8,8,9,9,10,11,12,12"];
    let listed = sequences.iter().all(|s| text.contains(&format!(": {s}\n")));
    let long = verify_theorem3(64).map(|r| r.passed()).unwrap_or(false);
    outcome(
        out.status.code() == Some(0) && listed && long,
        format!("exit {:?}, sequences listed: {listed}, shift holds to q = 64: {long}", out.status.code()),
    )
}

fn criterion_4() -> Outcome {
    let cycles = (0..=7).all(|r| cycle_rings(&bw_cycle(r)) == CLOCK_RINGS);
    let d = fractal_dimension();
    let dim_ok = (d - 63f64.ln() / 8f64.ln()).abs() < 1e-15 && (d - 1.9924).abs() <= 1e-4;
    outcome(cycles && dim_ok, format!("cycles 0..7 read the octet: {cycles}, dimension {d:.6}"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let sigs = signatures(3);
    let mut bad = Vec::new();
    for a in &sigs {
        for b in &sigs {
            let ok = graded_tensor_check(*a, *b)
                .map(|m| m.is_full_rank() && m.rank == 1 << (a.n() + b.n()))
                .unwrap_or(false);
            if !ok {
                bad.push(format!("{a}⊗̂{b}"));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        bad.is_empty() && secs <= 30.0,
        format!("{} pairs, failures {bad:?}, {secs:.2} s", sigs.len() * sigs.len()),
    )
}

fn criterion_6() -> Outcome {
    let cases = [
        ((1, 1), (0, 2), (1, 3), true),
        ((1, 1), (2, 0), (3, 1), true),
        ((0, 2), (1, 1), (1, 3), false),
    ];
    let results: Vec<bool> = cases
        .iter()
        .map(|&(a, b, t, positive)| {
            karoubi_check(Signature::new(a.0, a.1), Signature::new(b.0, b.1))
                .map(|c| c.positive == positive && c.map.source == Signature::new(t.0, t.1) && c.map.is_full_rank())
                .unwrap_or(false)
        })
        .collect();
    outcome(results.iter().all(|x| *x), format!("{results:?}"))
}

fn criterion_7() -> Outcome {
    let (ok, detail) = all_pass(&verify::even());
    outcome(ok, detail)
}

fn criterion_8() -> Outcome {
    let checks = verify::phipsi(BLOCK_SAMPLE_SEED);
    let structure = checks[0].passed;
    let block = block_matrix_form(1, 3).map(|r| (r.samples, r.failures));
    outcome(
        structure && block == Ok((100, 0)),
        format!("{}; block products {:?}", checks[0].detail, block),
    )
}

/// Symmetric spintensor components of rank `k` in two indices, counted by
/// enumerating every index tuple and counting distinct sorted ones.
fn symmetric_components(k: u32) -> u64 {
    let mut seen = BTreeSet::new();
    for bits in 0u32..1 << k {
        let mut tuple: Vec<u8> = (0..k).map(|i| 1 + ((bits >> i) & 1) as u8).collect();
        tuple.sort_unstable();
        seen.insert(tuple);
    }
    seen.len() as u64
}

fn criterion_9() -> Outcome {
    let degrees = (0..=12u32).all(|k| {
        (0..=12u32).all(|r| rep_label(k, r).degree() == symmetric_components(k) * symmetric_components(r))
    });
    let tags = FIELD_TAGS.split_whitespace().all(|tok| {
        let field = if tok.starts_with('r') {
            RepField::Real
        } else {
            RepField::Quaternionic
        };
        let rest = &tok[1..];
        let (k, r): (u32, u32) = match rest.split_once(',') {
            Some((a, b)) => (a.parse().unwrap(), b.parse().unwrap()),
            None => (rest[..1].parse().unwrap(), rest[1..].parse().unwrap()),
        };
        rep_field(HalfInt(k), HalfInt(r)) == field
    });
    let tag_count = FIELD_TAGS.split_whitespace().count();
    let walk_one: Vec<String> = bw_rep_walk(1).unwrap().iter().map(|s| s.label.to_string()).collect();
    let cycle_one = walk_one == verify::WALK_CYCLE_ONE;
    let ends = |n: u32, prev: &str, last: &str| {
        let w = bw_rep_walk(n).unwrap();
        let k = w.len();
        w[k - 2].label.to_string() == prev && w[k - 1].label.to_string() == last
    };
    let cycle_two = ends(2, "ετ^r_{0,7/2}", "τ^r_{0,4}");
    let cycle_eight = ends(8, "ετ^r_{0,31/2}", "τ^r_{0,16}");
    let periodic = (0..=32u32).all(|a| {
        (0..=32u32).all(|b| {
            let f = rep_field(HalfInt(a), HalfInt(b));
            rep_field(HalfInt(a + 4), HalfInt(b)) == f && rep_field(HalfInt(a), HalfInt(b + 4)) == f
        })
    });
    outcome(
        degrees && tags && tag_count == 74 && cycle_one && cycle_two && cycle_eight && periodic,
        format!(
            "degrees {degrees}, {tag_count} tags {tags}, walks {cycle_one}/{cycle_two}/{cycle_eight}, periodic {periodic}"
        ),
    )
}

fn criterion_10() -> Outcome {
    let results: Vec<String> = [1u32, 3, 5, 7]
        .iter()
        .map(|&q| match quotient_structure(q) {
            Ok(s) if s.kernel_dim == 1 << (q - 1) && s.quotient_dim == 1 << (q - 1) => format!("q={q} ok"),
            Ok(s) => format!("q={q} kernel {} quotient {}", s.kernel_dim, s.quotient_dim),
            Err(e) => format!("q={q} {e}"),
        })
        .collect();
    let (ok, _) = all_pass(&verify::quotient());
    outcome(ok && results.iter().all(|r| r.ends_with("ok")), results.join(", "))
}

fn criterion_11() -> Outcome {
    let start = Instant::now();
    let checks = verify::numeric(verify::DEFAULT_SEED, 1000).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let (ok, detail) = all_pass(&checks);
    outcome(ok && secs <= 5.0, format!("{detail}, {secs:.2} s"))
}

fn criterion_12() -> Outcome {
    let run = |fmt: &str| {
        Command::new(BIN)
            .args(["verify", "all", "--seed", "20240601", "--format", fmt])
            .output()
            .unwrap()
    };
    let (a, b) = (run("text"), run("text"));
    let (c, d) = (run("json"), run("json"));
    let same = a.stdout == b.stdout && c.stdout == d.stdout;
    let exit_ok = [&a, &b, &c, &d].iter().all(|o| o.status.code() == Some(0));
    outcome(
        same && exit_ok && !a.stdout.is_empty(),
        format!("{} text bytes, {} json bytes, identical: {same}", a.stdout.len(), c.stdout.len()),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("classification oracle agreement", criterion_1),
        ("Radon-Hurwitz numbers", criterion_2),
        ("idempotent count sequences", criterion_3),
        ("Brauer-Wall cycles and fractal dimension", criterion_4),
        ("Chevalley graded tensor witnesses", criterion_5),
        ("Karoubi witnesses", criterion_6),
        ("even-subalgebra isomorphisms", criterion_7),
        ("phi/psi factorization and block matrices", criterion_8),
        ("representation layer", criterion_9),
        ("quotient structure", criterion_10),
        ("numeric layer", criterion_11),
        ("determinism", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        if !o.passed {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {} ({})",
            i + 1,
            if o.passed { "PASS" } else { "FAIL" },
            name,
            o.detail
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
