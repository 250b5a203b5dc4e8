//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::collections::VecDeque;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kbgp::corpus::standard_corpus;
use kbgp::*;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

/// Exact optima of the corpus for k = 3, 4, 5 (None when k > n).
struct Corpus {
    graphs: Vec<Graph>,
    opt: Vec<[Option<usize>; 3]>,
}

impl Corpus {
    fn build() -> Corpus {
        let graphs = standard_corpus();
        let opt = graphs
            .iter()
            .map(|g| [3, 4, 5].map(|k| (g.n() >= k).then(|| exact_opt(g, k).unwrap().0)))
            .collect();
        Corpus { graphs, opt }
    }
}

/// `size <= num/den * opt`.
fn within(size: usize, opt: usize, num: usize, den: usize) -> bool {
    size * den <= num * opt
}

/// Breadth-first components of `G[keep]`, written independently of the
/// library's traversal.
fn pieces(g: &Graph, keep: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if !keep[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if keep[y] && !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.push(comp);
    }
    out
}

fn adjacent(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|&x| g.neighbors(x).iter().any(|y| b.contains(y)))
}

fn mask(n: usize, vs: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    vs.iter().for_each(|&v| m[v] = true);
    m
}

/// Every structure property of a four-part stall, checked from scratch.
/// Returns the first failing item.
fn structure_properties(g: &Graph, p: &Partition) -> Result<(), String> {
    let n = g.n();
    let v: Vec<Vec<usize>> = p.to_lists();
    let s: Vec<usize> = v.iter().map(Vec::len).collect();
    if !(s[0] <= s[1] && s[1] <= s[2] && s[2] <= s[3] && 5 * s[3] > 2 * n) {
        return Err("sizes out of order or largest part within 2n/5".into());
    }
    if !(5 * s[0] < n && 10 * s[1] < 3 * n && 5 * (s[0] + s[1]) < 2 * n && !adjacent(g, &v[0], &v[1])) {
        return Err("item 1".into());
    }
    for i in 0..2 {
        if adjacent(g, &v[i], &v[2]) && s[i] + s[2] < s[3] {
            return Err("item 2".into());
        }
        for &u in &v[3] {
            if !g.neighbors(u).iter().any(|y| v[i].contains(y)) {
                continue;
            }
            let mut keep = mask(n, &v[3]);
            keep[u] = false;
            let comps = pieces(g, &keep);
            let bad = comps.len() < 2
                || comps.iter().any(|c| {
                    c.len() > s[i] || adjacent(g, c, &v[i]) || (adjacent(g, c, &v[2]) && c.len() + s[2] < s[3])
                });
            if bad {
                return Err("item 3".into());
            }
        }
        if adjacent(g, &v[i], &v[2]) && 3 * s[i] < s[3] {
            for &x in &v[2] {
                if !g.neighbors(x).iter().any(|y| v[i].contains(y)) {
                    continue;
                }
                let mut keep = mask(n, &v[2]);
                keep[x] = false;
                let comps = pieces(g, &keep);
                if comps.len() < 2 || comps.iter().any(|c| c.len() > s[i] || adjacent(g, c, &v[i])) {
                    return Err("item 4".into());
                }
            }
        }
    }
    if 6 * s[1] < s[3] && !(s[1] + s[2] >= s[3] && 2 * s[3] < n && 12 * s[1] < n && 3 * s[2] > n) {
        return Err("item 5".into());
    }
    for j in 2..4 {
        if adjacent(g, &v[0], &v[j]) && adjacent(g, &v[1], &v[j]) {
            let small: Vec<usize> = v[0].iter().chain(&v[1]).copied().collect();
            let hubs = v[j].iter().filter(|&&x| g.neighbors(x).iter().any(|y| small.contains(y))).count();
            if hubs != 1 {
                return Err("item 6".into());
            }
        }
    }
    Ok(())
}

/// Each logged step must leave a feasible partition with a strictly better
/// rank. Split steps only need the largest part not to grow.
fn trace_ok(g: &Graph, sol: &Solution) -> Result<(), String> {
    for (i, r) in sol.trace.iter().enumerate() {
        if let Err(e) = check_feasible(g, r.parts_after.parts()) {
            return Err(format!("step {i}: {e}"));
        }
        if r.parts_after.rank() != r.rank_after {
            return Err(format!("step {i}: logged rank differs from parts"));
        }
        let improved = match r.kind {
            OpKind::Split => r.rank_after.largest() <= r.rank_before.largest(),
            _ => better_than(&r.rank_after, &r.rank_before).unwrap_or(false),
        };
        if !improved {
            return Err(format!("step {i}: {:?} from {} to {}", r.kind, r.rank_before, r.rank_after));
        }
        if i > 0 && sol.trace[i - 1].rank_after != r.rank_before {
            return Err(format!("step {i}: does not continue from the previous step"));
        }
    }
    match sol.trace.last() {
        Some(r) if r.parts_after != sol.partition => Err("final partition differs from the last step".into()),
        _ => Ok(()),
    }
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let g = generate(&GeneratorSpec::new(Family::Path, 12, 0)).unwrap();
    let (opt, _) = exact_opt(&g, 3).unwrap();
    let size = approx3(&g).unwrap().size();
    let took = start.elapsed();
    outcome(
        opt == 4 && size <= 6 && took < Duration::from_secs(1),
        format!("P12: OPT = {opt}, approx3 = {size}, {took:.2?}"),
    )
}

fn criterion2(c: &Corpus) -> Outcome {
    let start = Instant::now();
    let (mut runs, mut bad) = (0, 0);
    for (g, opt) in c.graphs.iter().zip(&c.opt) {
        let Some(opt) = opt[0] else { continue };
        runs += 1;
        if !within(approx3(g).unwrap().size(), opt, 3, 2) {
            bad += 1;
        }
    }
    let took = start.elapsed();
    outcome(
        bad == 0 && took < Duration::from_secs(300),
        format!("approx3 <= 3/2 OPT on {runs} graphs: {bad} violations, {took:.2?}"),
    )
}

fn criterion3(c: &Corpus) -> Outcome {
    let (mut runs, mut ratio_bad, mut half_bad) = (0, 0, 0);
    for (g, opt) in c.graphs.iter().zip(&c.opt) {
        for (k, opt) in [(4, opt[1]), (5, opt[2])] {
            let Some(opt) = opt else { continue };
            runs += 1;
            let sol = approx_k(g, k).unwrap();
            if !within(sol.size(), opt, k, 2) {
                ratio_bad += 1;
            }
            let optimal = matches!(
                sol.certificate.kind,
                CertificateKind::StarOptimal { .. } | CertificateKind::OracleExact
            ) && verify_certificate(g, &sol.partition, &sol.certificate).is_ok();
            if 2 * sol.size() > g.n() && !optimal {
                half_bad += 1;
            }
        }
    }
    outcome(
        ratio_bad == 0 && half_bad == 0,
        format!("approx_k (k = 4, 5) on {runs} runs: {ratio_bad} ratio violations, {half_bad} above n/2 without an optimality certificate"),
    )
}

fn criterion4(c: &Corpus) -> Outcome {
    let (mut runs, mut bad, mut rejected) = (0, 0, 0);
    for (g, opt) in c.graphs.iter().zip(&c.opt) {
        let Some(opt) = opt[1] else { continue };
        runs += 1;
        let sol = approx4(g).unwrap();
        if !within(sol.size(), opt, 24, 13) {
            bad += 1;
        }
        if verify_certificate(g, &sol.partition, &sol.certificate).is_err() {
            rejected += 1;
        }
    }
    outcome(
        bad == 0 && rejected == 0,
        format!("approx4 <= 24/13 OPT on {runs} graphs: {bad} violations, {rejected} rejected certificates"),
    )
}

fn criterion5() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for f in [Family::DoubleStarCase1, Family::DoubleStarCase2, Family::BiStarCase3] {
        for seed in 0..50u64 {
            count += 1;
            let n = 15 + (seed as usize % 5) * 7;
            let spec = GeneratorSpec::new(f, n, seed);
            let (g, p) = match case_instance(&spec) {
                Ok(x) => x,
                Err(e) => {
                    failures.push(format!("{spec}: {e}"));
                    continue;
                }
            };
            match classify_case(&g, &p) {
                Ok((s, _)) if Some(s.case) == f.case() => {}
                Ok((s, _)) => failures.push(format!("{spec}: classified as case {}", s.case)),
                Err(e) => failures.push(format!("{spec}: {e}")),
            }
            if let Err(item) = structure_properties(&g, &p) {
                failures.push(format!("{spec}: {item}"));
            }
            match approx4_from(&g, p) {
                Ok(sol) => {
                    if verify_certificate(&g, &sol.partition, &sol.certificate).is_err() {
                        failures.push(format!("{spec}: certificate rejected"));
                    }
                }
                Err(e) => failures.push(format!("{spec}: {e}")),
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("{count} case-family stalls: {} failures {:?}", failures.len(), failures.iter().take(3).collect::<Vec<_>>()),
    )
}

fn criterion6(c: &Corpus) -> Outcome {
    let (mut worst3, mut worst4) = (0.0f64, 0.0f64);
    let mut bad = 0;
    for g in &c.graphs {
        let n = g.n();
        if n >= 3 {
            let ops = approx3(g).unwrap().ops();
            worst3 = worst3.max(ops as f64 / n as f64);
            bad += usize::from(ops > 5 * n);
        }
        if n >= 4 {
            let ops = approx4(g).unwrap().ops();
            worst4 = worst4.max(ops as f64 / (n * n) as f64);
            bad += usize::from(ops > 5 * n * n);
        }
    }
    outcome(
        bad == 0,
        format!("operation counts: max approx3 ops/n = {worst3:.3}, max approx4 ops/n^2 = {worst4:.4}, {bad} over budget"),
    )
}

fn criterion7() -> Outcome {
    let mut failures = Vec::new();
    for n in 5..=14 {
        for k in [3, 4] {
            let gen = |f| generate(&GeneratorSpec::new(f, n, 0)).unwrap();
            for (f, want) in [
                (Family::Path, n.div_ceil(k)),
                (Family::Cycle, n.div_ceil(k)),
                (Family::Star, n - k + 1),
            ] {
                let got = exact_opt(&gen(f), k).unwrap().0;
                if got != want {
                    failures.push(format!("{f} n={n} k={k}: {got} != {want}"));
                }
            }
            let star = gen(Family::Star);
            let size = if k == 3 { approx3(&star) } else { approx4(&star) }.unwrap().size();
            if size != n - k + 1 {
                failures.push(format!("star n={n} k={k}: approx size {size}"));
            }
        }
    }
    outcome(failures.is_empty(), format!("paths, cycles, stars for n in 5..=14: {} failures {failures:?}", failures.len()))
}

fn criterion8(c: &Corpus) -> Outcome {
    let mut steps = 0;
    let mut failures = Vec::new();
    let mut check = |g: &Graph, sol: &Solution, what: &str| {
        steps += sol.trace.len();
        if let Err(e) = trace_ok(g, sol) {
            failures.push(format!("{what}: {e}"));
        }
    };
    for g in &c.graphs {
        let n = g.n();
        if n >= 3 {
            check(g, &approx3(g).unwrap(), "approx3");
        }
        for k in [4, 5] {
            if n >= k {
                check(g, &approx_k(g, k).unwrap(), "approx_k");
            }
        }
        if n >= 4 {
            check(g, &approx4(g).unwrap(), "approx4");
        }
    }
    // Larger generated graphs exercise the bridge and rebalance steps.
    for f in Family::ALL {
        for n in [15, 24, 40] {
            for seed in 0..10 {
                let spec = GeneratorSpec::new(f, n, seed);
                let g = generate(&spec).unwrap();
                check(&g, &approx3(&g).unwrap(), "approx3");
                check(&g, &approx_k(&g, 6).unwrap(), "approx_k");
                check(&g, &approx4(&g).unwrap(), "approx4");
                if f.case().is_some() {
                    let (g, p) = case_instance(&spec).unwrap();
                    check(&g, &approx4_from(&g, p).unwrap(), "approx4 from stall");
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("{steps} logged steps: {} violations {:?}", failures.len(), failures.iter().take(3).collect::<Vec<_>>()),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = Corpus::build();
    println!(
        "corpus: {} graphs with exact optima for k = 3, 4, 5 ({:.2?})",
        corpus.graphs.len(),
        start.elapsed()
    );
    let results = [
        ("1", criterion1()),
        ("2", criterion2(&corpus)),
        ("3", criterion3(&corpus)),
        ("4", criterion4(&corpus)),
        ("5", criterion5()),
        ("6", criterion6(&corpus)),
        ("7", criterion7()),
        ("8", criterion8(&corpus)),
    ];
    let mut all = true;
    for (id, r) in &results {
        all &= r.ok;
        println!("criterion {id}: {} {}", if r.ok { "PASS" } else { "FAIL" }, r.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
