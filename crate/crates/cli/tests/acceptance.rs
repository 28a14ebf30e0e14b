//! Acceptance criteria, one line each. Runs as a plain binary under
//! `cargo test` (`harness = false`) and exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wallgraph::finite_field::count_points_for;
use wallgraph::{
    arrangement_of, census, char_poly, count_points, eliminate, enumerate_central, graph_of, graph_rank,
    interpolate_chi, is_central, region_counts, ArrangementSpace, CharPoly, ColoredGraph, Level, ParityDsu,
};
use wallgraph_testkit as oracle;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn space(n: usize) -> ArrangementSpace {
    ArrangementSpace::new(n).expect("valid dimension")
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn chi_and_regions(n: usize, coeffs: &[i64], regions: i64, bounded: i64, budget: Duration) -> Outcome {
    let (res, took) = timed(|| {
        let chi = char_poly(&space(n)).map_err(|e| e.to_string())?;
        let rc = region_counts(&chi, n);
        Ok::<_, String>((chi, rc))
    });
    let (chi, rc) = res?;
    ensure(chi.coeffs() == coeffs, || format!("chi = {chi}, expected {}", CharPoly::new(coeffs.to_vec())))?;
    ensure((rc.regions, rc.bounded) == (regions, bounded), || {
        format!("regions/bounded = {}/{}, expected {regions}/{bounded}", rc.regions, rc.bounded)
    })?;
    ensure(took < budget, || format!("took {took:?}, budget {budget:?}"))?;
    Ok(format!("chi = {chi}, regions {}, bounded {}, {took:?}", rc.regions, rc.bounded))
}

fn ac1() -> Outcome {
    chi_and_regions(2, &[6, -5, 1], 12, 2, Duration::from_millis(1))
}

fn ac2() -> Outcome {
    chi_and_regions(3, &[-27, 27, -9, 1], 64, 8, Duration::from_millis(10))
}

fn ac3() -> Outcome {
    let table = census(&space(3)).map_err(|e| e.to_string())?;
    let expected: BTreeMap<(usize, usize), u64> =
        [((0, 0), 1), ((1, 1), 9), ((2, 2), 33), ((3, 2), 6), ((3, 3), 51), ((4, 3), 30), ((5, 3), 6)].into();
    ensure(table.by_size_rank() == expected, || format!("size/rank table {:?}", table.by_size_rank()))?;
    for (eps, nu, r) in [(0, 2, 12), (2, 1, 18), (1, 3, 12), (2, 3, 6)] {
        ensure(table.r(eps, nu) == r, || format!("r({eps},{nu}) = {}, expected {r}", table.r(eps, nu)))?;
    }
    Ok("size x rank table and r(0,2)=12 r(2,1)=18 r(1,3)=12 r(2,3)=6".into())
}

fn ac4() -> Outcome {
    let mut summary = Vec::new();
    for n in 2..=4 {
        let s = space(n);
        let (res, took) = timed(|| -> Result<(usize, usize), String> {
            let (mut central, mut total) = (0, 0);
            for bits in 0..1u64 << s.len() {
                let b = s.from_bits(bits).map_err(|e| e.to_string())?;
                let elim = eliminate(&b.associated_matrix::<i64>());
                total += 1;
                match graph_of(&b) {
                    Ok(g) => {
                        let graph_says = is_central(&g);
                        ensure(graph_says == elim.consistent, || format!("n={n} {b}: graph {graph_says}, matrix {}", elim.consistent))?;
                        if graph_says {
                            central += 1;
                            ensure(graph_rank(&g) == elim.rank_a, || {
                                format!("n={n} {b}: graph rank {} vs elimination {}", graph_rank(&g), elim.rank_a)
                            })?;
                        }
                    }
                    Err(_) => ensure(!elim.consistent, || format!("n={n} {b}: double color but consistent"))?,
                }
            }
            Ok((central, total))
        });
        let (central, total) = res?;
        if n == 4 {
            ensure(took < Duration::from_secs(10), || format!("n=4 sweep took {took:?}"))?;
        }
        summary.push(format!("n={n}: {central}/{total} central ({took:?})"));
    }
    Ok(summary.join("; "))
}

fn ac5() -> Outcome {
    let primes = [5u64, 7, 11, 13, 17];
    let mut notes = Vec::new();
    for n in 2..=4 {
        let chi = char_poly(&space(n)).map_err(|e| e.to_string())?;
        let (counts, took) = timed(|| count_points_for(n, &primes));
        let counts = counts.map_err(|e| e.to_string())?;
        for c in &counts {
            let at = chi.eval(&(c.q as i64));
            ensure(at == c.count as i64, || format!("n={n} q={}: chi(q)={at}, points={}", c.q, c.count))?;
        }
        let interpolated: CharPoly = interpolate_chi(n, &counts[..=n]).map_err(|e| e.to_string())?;
        ensure(interpolated == chi, || format!("n={n}: interpolated {interpolated}, engine {chi}"))?;
        notes.push(format!("n={n} ok ({took:?})"));
    }
    let (c, took) = timed(|| count_points(4, 17));
    c.map_err(|e| e.to_string())?;
    ensure(took < Duration::from_secs(60), || format!("n=4 q=17 took {took:?}"))?;
    notes.push(format!("n=4 q=17 count in {took:?}"));
    Ok(notes.join("; "))
}

fn ac6() -> Outcome {
    let mut notes = Vec::new();
    for n in 1..=4 {
        let brute: BTreeMap<u64, usize> = oracle::brute_central_sets(n);
        let mut visited = BTreeMap::new();
        let mut dup = None;
        enumerate_central(&space(n), |b, r| {
            if visited.insert(b.bits(), r).is_some() {
                dup = Some(b.bits());
            }
        })
        .map_err(|e| e.to_string())?;
        ensure(dup.is_none(), || format!("n={n}: {dup:?} visited twice"))?;
        ensure(visited == brute, || format!("n={n}: visited {} sets, brute force {}", visited.len(), brute.len()))?;
        notes.push(format!("n={n}: {}", visited.len()));
    }
    Ok(format!("visited == brute force ({})", notes.join(", ")))
}

fn ac7() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_wallgraph");
    let mut notes = Vec::new();
    for fmt in ["json", "text"] {
        let mut outputs = Vec::new();
        for jobs in ["1", "8"] {
            let (out, took) = timed(|| Command::new(bin).args(["chi", "--n", "5", "--jobs", jobs, "--format", fmt]).output());
            let out = out.map_err(|e| e.to_string())?;
            ensure(out.status.success(), || format!("jobs={jobs} exited {:?}", out.status))?;
            ensure(took < Duration::from_secs(300), || format!("jobs={jobs} took {took:?}"))?;
            notes.push(format!("{fmt}/jobs={jobs} {took:?}"));
            outputs.push(out.stdout);
        }
        ensure(outputs[0] == outputs[1], || format!("{fmt} output differs between --jobs 1 and --jobs 8"))?;
    }
    Ok(format!("byte-identical; {}", notes.join(", ")))
}

fn ac8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);

    // rollback restores identical state
    for _ in 0..2_000 {
        let mut d = ParityDsu::new(8);
        let mut marks = Vec::new();
        for _ in 0..rng.gen_range(1..60) {
            if rng.gen_bool(0.2) {
                marks.push((d.checkpoint(), d.clone()));
            }
            d.relate(rng.gen_range(0..9), rng.gen_range(0..9), rng.gen_range(0..2));
        }
        while let Some((cp, snapshot)) = marks.pop() {
            d.rollback(cp);
            ensure(d == snapshot, || "rollback left a different state".into())?;
        }
        d.rollback(0);
        ensure(d == ParityDsu::new(8), || "full rollback did not reset".into())?;
    }

    // bijection round trip
    for n in 1..=4 {
        let s = space(n);
        for bits in 0..1u64 << s.len() {
            let b = s.from_bits(bits).map_err(|e| e.to_string())?;
            if let Ok(g) = graph_of(&b) {
                let back = arrangement_of(&g, &s).map_err(|e| e.to_string())?;
                ensure(back == b, || format!("round trip {b} -> {back}"))?;
            }
        }
    }

    // downward closure
    let rounds = 100_000;
    for _ in 0..rounds {
        let n = rng.gen_range(1..=8);
        let spec = oracle::planted_central(&mut rng, n);
        let mut g = ColoredGraph::new(n);
        for &(a, b) in &spec.edges {
            g.add_edge(a, b).map_err(|e| e.to_string())?;
        }
        for &(v, c) in &spec.colors {
            g.set_color(v, Level::from_value(c)).map_err(|e| e.to_string())?;
        }
        ensure(is_central(&g), || format!("planted graph not central: {spec:?}"))?;
        for _ in 0..rng.gen_range(1..=4) {
            let edges: Vec<_> = g.edges().iter().copied().collect();
            let colored: Vec<_> = g.colors().keys().copied().collect();
            if edges.is_empty() && colored.is_empty() {
                break;
            }
            if !edges.is_empty() && (colored.is_empty() || rng.gen_bool(0.5)) {
                let (a, b) = edges[rng.gen_range(0..edges.len())];
                g.remove_edge(a, b);
            } else {
                g.set_color(colored[rng.gen_range(0..colored.len())], None).map_err(|e| e.to_string())?;
            }
            ensure(is_central(&g), || format!("deletion broke centrality: {g:?}"))?;
        }
    }
    Ok(format!("rollback x2000, bijection n<=4, downward closure x{rounds}"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1", "chi(J_2) = t^2-5t+6, regions 12, bounded 2, < 1 ms", ac1),
        ("AC2", "chi(J_3) = t^3-9t^2+27t-27, regions 64, bounded 8, < 10 ms", ac2),
        ("AC3", "n=3 census table and r(eps,nu) spot values", ac3),
        ("AC4", "graph centrality <=> matrix consistency, graph rank = elimination rank, n=2..4", ac4),
        ("AC5", "F_q point counts equal chi(q), interpolation reproduces chi, n=2..4", ac5),
        ("AC6", "pruned DFS visits exactly the brute-force central sets, n<=4", ac6),
        ("AC7", "chi --n 5 --jobs 8 byte-identical to --jobs 1, < 5 min", ac7),
        ("AC8", "rollback, bijection and downward-closure property suites", ac8),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (id, title, check) in criteria {
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panicked".into()))
        });
        match result {
            Ok(detail) => println!("{id} PASS  {title}  [{detail}]"),
            Err(why) => {
                failed += 1;
                println!("{id} FAIL  {title}  [{why}]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
