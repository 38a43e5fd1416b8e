//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use phibound_core::clique::is_balanced_complete_multipartite;
use phibound_core::degree::{maclaurin_check, power_sum_identity_check, ExactRatio};
use phibound_core::generate::{generate, Family, Probability};
use phibound_core::report::{analyze, BoundReport};
use phibound_core::sweep::{oracle_check, run_sweep, SweepSpec};
use phibound_core::{parse_graph6, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CORPUS_SEED: u64 = 2024;
const RANDOM_PER_N: usize = 500;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Criterion-1 corpus (every labeled graph, n = 1..5) and criterion-2
/// corpus (500 seeded G(n, 1/2) per n = 6..10), analyzed.
struct Corpora {
    exhaustive: Vec<BoundReport>,
    random: Vec<BoundReport>,
    exhaustive_time: Duration,
}

impl Corpora {
    fn build() -> Result<Self, String> {
        let start = Instant::now();
        let (exhaustive, _) =
            run_sweep(&SweepSpec::exhaustive(1..=5)).map_err(|e| e.to_string())?;
        let exhaustive_time = start.elapsed();
        let (random, _) = run_sweep(&SweepSpec::random(
            6..=10,
            RANDOM_PER_N,
            Probability::half(),
            CORPUS_SEED,
        ))
        .map_err(|e| e.to_string())?;
        Ok(Corpora {
            exhaustive,
            random,
            exhaustive_time,
        })
    }

    fn all(&self) -> impl Iterator<Item = &BoundReport> {
        self.exhaustive.iter().chain(&self.random)
    }
}

fn chain_ok(r: &BoundReport) -> bool {
    match (r.omega, r.chi) {
        (Some(omega), Some(chi)) => {
            r.lb_ceil_15 <= r.lb_ceil_16 && r.lb_ceil_16 <= r.phi && r.phi <= omega && omega <= chi
        }
        _ => false,
    }
}

fn criterion_1(c: &Corpora) -> Outcome {
    ensure(c.exhaustive.len() == 1 + 2 + 8 + 64 + 1024, || {
        format!("expected 1099 graphs, got {}", c.exhaustive.len())
    })?;
    for r in &c.exhaustive {
        let all = chain_ok(r)
            && r.eq14_ok
            && r.eq13_ok == Some(true)
            && r.eq212_ok
            && r.eq213_ok
            && r.eq416_ok == Some(true)
            && r.cor41_all_ok
            && r.cor42_all_ok
            && r.anomalies.is_empty()
            && r.skipped.is_empty();
        ensure(all, || {
            format!("anomaly on {}: {:?}", r.graph_id, r.anomalies)
        })?;
    }
    ensure(c.exhaustive_time < Duration::from_secs(60), || {
        format!("took {:?}", c.exhaustive_time)
    })?;
    Ok(format!(
        "1099 labeled graphs, 0 anomalies, {:.2?}",
        c.exhaustive_time
    ))
}

fn criterion_2(c: &Corpora) -> Outcome {
    let summary = oracle_check(10, RANDOM_PER_N, CORPUS_SEED, None).map_err(|e| e.to_string())?;
    ensure(summary.checked == 1099 + 5 * RANDOM_PER_N, || {
        format!("checked {} graphs", summary.checked)
    })?;
    ensure(summary.mismatches.is_empty(), || {
        format!(
            "{} mismatches, first {}",
            summary.mismatches.len(),
            summary.mismatches[0]
        )
    })?;
    // the analyzed corpora carry their own oracle cross-check
    let mut crossed = 0;
    for r in c.all() {
        ensure(r.phi_oracle == Some(r.phi), || {
            format!("{}: greedy {} oracle {:?}", r.graph_id, r.phi, r.phi_oracle)
        })?;
        crossed += 1;
    }
    Ok(format!(
        "{} graphs via oracle-check, {crossed} via reports, 0 mismatches",
        summary.checked
    ))
}

fn equality_sides(g: &Graph, phi: usize) -> (BigUint, BigUint) {
    let n = BigUint::from(g.n());
    let sum_d2: BigUint = g.degrees().iter().map(|&d| BigUint::from(d * d)).sum();
    let phi_b = BigUint::from(phi);
    let phi1 = BigUint::from(phi - 1);
    (&phi_b * &phi_b * sum_d2, &n * &n * &n * &phi1 * &phi1)
}

fn criterion_3(c: &Corpora) -> Outcome {
    let mut positives = 0;
    for r in c.all() {
        let g = parse_graph6(&r.graph_id).map_err(|e| e.to_string())?;
        let n = g.n();
        let structural =
            n % r.phi == 0 && g.degrees().iter().all(|&d| d * r.phi == n * (r.phi - 1));
        let (lhs, rhs) = equality_sides(&g, r.phi);
        ensure(r.eq16_equality == (lhs == rhs), || {
            format!(
                "{}: reported equality disagrees with recomputation",
                r.graph_id
            )
        })?;
        ensure(r.eq16_equality == structural, || {
            format!(
                "{}: equality {} but structure {}",
                r.graph_id, r.eq16_equality, structural
            )
        })?;
        positives += usize::from(r.eq16_equality);
    }
    for (n, k) in [(4, 2), (6, 2), (6, 3), (8, 4), (9, 3)] {
        let g = generate(&Family::Turan { n, r: k }).map_err(|e| e.to_string())?;
        let report = analyze(&g).map_err(|e| e.to_string())?;
        let (lhs, rhs) = equality_sides(&g, report.phi);
        ensure(report.phi == k, || {
            format!("T({n},{k}): phi = {}", report.phi)
        })?;
        ensure(lhs == rhs && report.eq16_equality, || {
            format!("T({n},{k}): {lhs} != {rhs}")
        })?;
        ensure(
            report
                .equality
                .is_some_and(|v| v.divisibility_ok && v.regular_ok),
            || format!("T({n},{k}): classifier verdict {:?}", report.equality),
        )?;
        positives += 1;
    }
    Ok(format!(
        "0 violations, {positives} equality instances incl. 5 Turan graphs"
    ))
}

fn criterion_4(c: &Corpora) -> Outcome {
    let mut tight = 0;
    for r in c.all() {
        if r.eq416_equality != Some(true) {
            continue;
        }
        tight += 1;
        let g = parse_graph6(&r.graph_id).map_err(|e| e.to_string())?;
        let omega = r.omega.expect("equality implies omega");
        ensure(
            g.is_regular() && is_balanced_complete_multipartite(&g, omega),
            || {
                format!(
                    "{}: clique bound tight but not regular balanced complete {omega}-partite",
                    r.graph_id
                )
            },
        )?;
        ensure(
            r.extremal
                .is_some_and(|v| v.eq417 && v.regular && v.complete_multipartite),
            || format!("{}: classifier verdict {:?}", r.graph_id, r.extremal),
        )?;
    }
    ensure(tight > 0, || "no tight instances in corpus".to_string())?;
    Ok(format!(
        "{tight} tight instances, all regular complete multipartite"
    ))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut instances = 0;
    for t in 0..1000 {
        let len = rng.gen_range(1..=10);
        let xs: Vec<u64> = (0..len).map(|_| rng.gen_range(0..=20)).collect();
        ensure(
            power_sum_identity_check(&xs).map_err(|e| e.to_string())?,
            || format!("tuple {t} {xs:?}: power sums"),
        )?;
        let rs: Vec<ExactRatio> = xs.iter().map(|&x| ExactRatio::from_integer(x)).collect();
        for s in 1..=len {
            let out = maclaurin_check(&rs, s).map_err(|e| e.to_string())?;
            ensure(out.holds, || format!("{xs:?} s={s}: inequality fails"))?;
            if s >= 2 {
                ensure(out.equality == out.all_equal, || {
                    format!(
                        "{xs:?} s={s}: equality {} all-equal {}",
                        out.equality, out.all_equal
                    )
                })?;
            }
            instances += 1;
        }
    }
    Ok(format!(
        "1000 tuples, {instances} (tuple, s) instances, 0 violations"
    ))
}

/// Brute force: smallest number of blocks over all set partitions whose
/// blocks satisfy the degree condition.
fn brute_phi(g: &Graph) -> usize {
    fn go(g: &Graph, v: usize, blocks: &mut Vec<Vec<usize>>, best: &mut usize) {
        if blocks.len() >= *best {
            return;
        }
        if v == g.n() {
            let n = g.n();
            if blocks
                .iter()
                .all(|b| b.iter().all(|&u| g.degree(u) + b.len() <= n))
            {
                *best = blocks.len();
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(v);
            go(g, v + 1, blocks, best);
            blocks[i].pop();
        }
        blocks.push(vec![v]);
        go(g, v + 1, blocks, best);
        blocks.pop();
    }
    let mut best = usize::MAX;
    go(g, 0, &mut Vec::new(), &mut best);
    best
}

fn brute_omega(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&m| {
            (0..n).all(|u| (u + 1..n).all(|v| m >> u & m >> v & 1 == 0 || g.has_edge(u, v)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn brute_chi(g: &Graph) -> usize {
    let n = g.n();
    (1..=n)
        .find(|&k| {
            (0..k.pow(n as u32)).any(|code| {
                let color = |v: usize| code / k.pow(v as u32) % k;
                g.edges().all(|(u, v)| color(u) != color(v))
            })
        })
        .unwrap_or(0)
}

fn criterion_6() -> Outcome {
    // (family, phi, omega, chi, lb_ceil_16, eq16, eq13 tight, eq416 tight)
    let goldens = [
        (Family::Cycle { n: 5 }, 2, 2, 3, 2, false, false, false),
        (Family::Complete { n: 4 }, 4, 4, 4, 4, true, true, true),
        (Family::Star { n: 4 }, 2, 2, 2, 2, false, false, false),
        (Family::Turan { n: 6, r: 3 }, 3, 3, 3, 3, true, true, true),
    ];
    for (family, phi, omega, chi, lb, eq16, eq13, eq416) in goldens {
        let g = generate(&family).map_err(|e| e.to_string())?;
        ensure(
            (brute_phi(&g), brute_omega(&g), brute_chi(&g)) == (phi, omega, chi),
            || format!("{family:?}: golden disagrees with brute force"),
        )?;
        let r = analyze(&g).map_err(|e| e.to_string())?;
        let got = (r.phi, r.omega, r.chi, r.lb_ceil_16, r.eq16_equality);
        ensure(got == (phi, Some(omega), Some(chi), lb, eq16), || {
            format!("{family:?}: got {got:?}")
        })?;
        ensure(
            r.eq13_equality == Some(eq13) && r.eq416_equality == Some(eq416),
            || {
                format!(
                    "{family:?}: eq13 {:?} eq416 {:?}",
                    r.eq13_equality, r.eq416_equality
                )
            },
        )?;
        ensure(r.is_clean(), || format!("{family:?}: {:?}", r.anomalies))?;
    }
    Ok("C5, K4, star(4), T(6,3) match brute-force goldens".to_string())
}

fn run_cli_sweep(out: &std::path::Path, threads: Option<usize>) -> Result<Vec<u8>, String> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_phibound"));
    cmd.args([
        "sweep", "--mode", "random", "--n", "10", "--count", "100", "--p", "1/2", "--seed", "7",
    ])
    .arg("--out")
    .arg(out);
    if let Some(k) = threads {
        cmd.args(["--threads", &k.to_string()]);
    }
    let status = cmd.output().map_err(|e| e.to_string())?;
    ensure(status.status.success(), || {
        format!(
            "sweep exited with {:?}: {}",
            status.status.code(),
            String::from_utf8_lossy(&status.stderr)
        )
    })?;
    std::fs::read(out).map_err(|e| e.to_string())
}

fn criterion_7() -> Outcome {
    let dir = std::env::temp_dir().join(format!("phibound-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let runs = [None, None, Some(1), Some(4)];
    let mut outputs = Vec::new();
    for (i, threads) in runs.iter().enumerate() {
        outputs.push(run_cli_sweep(&dir.join(format!("run{i}.csv")), *threads)?);
    }
    let _ = std::fs::remove_dir_all(&dir);
    ensure(outputs.windows(2).all(|w| w[0] == w[1]), || {
        "CSV differs between runs".to_string()
    })?;
    let rows = outputs[0].iter().filter(|&&b| b == b'\n').count() - 1;
    ensure(rows == 100, || format!("{rows} data rows"))?;
    Ok(format!(
        "4 runs (default, default, 1 and 4 threads) byte-identical, {rows} rows"
    ))
}

fn main() -> ExitCode {
    let corpora = Corpora::build();
    let with_corpora = |f: fn(&Corpora) -> Outcome| match &corpora {
        Ok(c) => f(c),
        Err(e) => Err(format!("corpus construction failed: {e}")),
    };
    let results: Vec<(&str, Outcome)> = vec![
        (
            "1 exhaustive sweep n<=5, zero anomalies",
            with_corpora(criterion_1),
        ),
        ("2 phi_exact == phi_oracle", with_corpora(criterion_2)),
        ("3 equality characterization", with_corpora(criterion_3)),
        (
            "4 tight clique bound => balanced complete multipartite",
            with_corpora(criterion_4),
        ),
        ("5 Maclaurin and power-sum identities", criterion_5()),
        ("6 fixed-point regressions", criterion_6()),
        ("7 sweep determinism", criterion_7()),
    ];
    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("[PASS] criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
