//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero if any fails.
//!
//! Expected values are recomputed here from first principles (brute-force
//! enumeration, closed forms evaluated inline) rather than taken from the
//! library.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gallai::containers::{verify_cover, CoverConfig, RainbowHypergraph};
use gallai::counting::{
    count_gallai, count_gallai_naive, lower_bound_two_color, red_once_count, Coloring, CountConfig,
};
use gallai::extremal::extremal_search;
use gallai::graph::{all_graphs, canonical_form, edge_index, full_mask, max_k_partite_edges, t_far, Graph};
use gallai::stability::{greedy_book_family, majority_color_check, peel, remove_low_degree, supersaturation_check};
use gallai::templates::{Palette, Template, TriangleMode};
use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::{One, Pow};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if $cond {
        } else {
            return Err(format!($($msg)+));
        }
    };
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn within(start: Instant, limit: Duration, what: &str) -> std::result::Result<(), String> {
    let spent = start.elapsed();
    if spent > limit {
        return Err(format!("{what} took {spent:?}, limit {limit:?}"));
    }
    Ok(())
}

/// Every coloring of `K_n` with colors `1..=r`, indexed by pair, visited in
/// odometer order.
fn for_each_kn_coloring(n: usize, r: u8, mut visit: impl FnMut(&[u8])) {
    let m = n * n.saturating_sub(1) / 2;
    let mut colors = vec![1u8; m];
    loop {
        visit(&colors);
        let mut i = 0;
        loop {
            if i == m {
                return;
            }
            if colors[i] < r {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

fn kn_triangles(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([edge_index(n, a, b), edge_index(n, a, c), edge_index(n, b, c)]);
            }
        }
    }
    out
}

fn no_rainbow(colors: &[u8], tris: &[[usize; 3]]) -> bool {
    tris.iter().all(|&[x, y, z]| {
        let (x, y, z) = (colors[x], colors[y], colors[z]);
        x == y || x == z || y == z
    })
}

fn distinct_colors(colors: &[u8]) -> usize {
    let mut seen = 0u32;
    for &c in colors {
        seen |= 1 << c;
    }
    seen.count_ones() as usize
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(0.5) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn random_template(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Template {
    let pairs = n * (n - 1) / 2;
    let palettes = (0..pairs)
        .map(|_| Palette::from_mask(rng.random_range(1..1u16 << r)))
        .collect();
    Template::new(n, r, palettes).unwrap()
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let cfg = CountConfig::default();
    let mut classes = 0;
    for n in 1..=5 {
        for g in all_graphs(n).map_err(|e| e.to_string())? {
            classes += 1;
            for r in [3, 4] {
                let fast = count_gallai(&g, r).map_err(|e| e.to_string())?;
                let slow = count_gallai_naive(&g, r, &cfg).map_err(|e| e.to_string())?;
                ensure!(fast == slow, "{g:?}, r={r}: pruned {fast} vs naive {slow}");
            }
        }
    }
    ensure!(
        classes == 52,
        "expected 52 classes on <= 5 vertices, enumerated {classes}"
    );
    let k6 = Graph::complete(6).unwrap();
    let fast = count_gallai(&k6, 3).map_err(|e| e.to_string())?;
    let slow = count_gallai_naive(&k6, 3, &cfg).map_err(|e| e.to_string())?;
    ensure!(fast == slow, "K6, r=3: pruned {fast} vs naive {slow}");
    within(start, Duration::from_secs(300), "oracle comparison")?;
    Ok(format!(
        "52 classes x r in {{3,4}} and K6 agree; K6 count {fast}; {:.1?}",
        start.elapsed()
    ))
}

fn criterion_2() -> Check {
    let k3 = Graph::complete(3).unwrap();
    for r in 3..=6u64 {
        let expected = r.pow(3) - r * (r - 1) * (r - 2);
        let got = count_gallai(&k3, r as usize).map_err(|e| e.to_string())?;
        ensure!(got == big(expected), "K3, r={r}: {got} != {expected}");
    }
    for q in 0..=5u32 {
        let book = Graph::book(q as usize).unwrap();
        for r in 1..=5u64 {
            let expected = big(r) * big(3 * r - 2).pow(q);
            let got = count_gallai(&book, r as usize).map_err(|e| e.to_string())?;
            ensure!(got == expected, "book {q}, r={r}: {got} != {expected}");
        }
    }
    let mut triangle_free = 0;
    for n in 1..=6 {
        for g in all_graphs(n).map_err(|e| e.to_string())? {
            let has_triangle = (0..n).any(|a| {
                (a + 1..n).any(|b| (b + 1..n).any(|c| g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)))
            });
            if has_triangle {
                continue;
            }
            triangle_free += 1;
            for r in 2..=5usize {
                let expected = big(r as u64).pow(g.edge_count() as u32);
                let got = count_gallai(&g, r).map_err(|e| e.to_string())?;
                ensure!(got == expected, "triangle-free {g:?}, r={r}: {got} != {expected}");
            }
        }
    }
    Ok(format!(
        "K3 r=3..6, books q<=5 r<=5, {triangle_free} triangle-free classes on <= 6 vertices"
    ))
}

fn criterion_3() -> Check {
    for n in 2..=5usize {
        let tris = kn_triangles(n);
        for r in [3u8, 4] {
            let mut filtered = 0u64;
            for_each_kn_coloring(n, r, |c| {
                if distinct_colors(c) <= 2 && no_rainbow(c, &tris) {
                    filtered += 1;
                }
            });
            let m = choose(n as u64, 2);
            let formula = big(choose(r as u64, 2)) * ((BigUint::one() << m) - 2u32) + r as u32;
            ensure!(
                big(filtered) == formula,
                "n={n}, r={r}: enumeration {filtered} vs formula {formula}"
            );
            let lib = lower_bound_two_color(n as u64, r as u64).map_err(|e| e.to_string())?;
            ensure!(lib == formula, "n={n}, r={r}: library {lib} vs formula {formula}");
        }
    }
    let k6 = count_gallai(&Graph::complete(6).unwrap(), 3).map_err(|e| e.to_string())?;
    let bound = big(3) * ((BigUint::one() << 15u32) - 2u32) + 3u32;
    ensure!(k6 >= bound, "count(K6, 3) = {k6} < {bound}");
    Ok(format!(
        "filtered counts match for n<=5, r in {{3,4}}; count(K6,3) = {k6} >= {bound}"
    ))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let mut seen = Vec::new();
    for n in [4usize, 5] {
        let tris = kn_triangles(n);
        let mut filtered = 0u64;
        // Color 1 is red.
        for_each_kn_coloring(n, 3, |c| {
            if c.iter().filter(|&&x| x == 1).count() == 1 && distinct_colors(c) == 3 && no_rainbow(c, &tris) {
                filtered += 1;
            }
        });
        let m = choose(n as u64, 2);
        let formula = m * ((1u64 << (m - (n as u64 - 1))) - 2);
        ensure!(
            filtered == formula,
            "n={n}: enumeration {filtered} vs formula {formula}"
        );
        let lib = red_once_count(n as u64).map_err(|e| e.to_string())?;
        ensure!(lib == big(formula), "n={n}: library {lib} vs formula {formula}");
        seen.push(filtered);
    }
    within(start, Duration::from_secs(60), "red-once enumeration")?;
    Ok(format!("n=4: {}, n=5: {}", seen[0], seen[1]))
}

fn criterion_5() -> Check {
    let start = Instant::now();
    for n in 3..=8usize {
        for r in 3..=5usize {
            let h = RainbowHypergraph::build(n, r).map_err(|e| e.to_string())?;
            let (nn, rr) = (n as u64, r as u64);
            let v = rr * choose(nn, 2);
            let e = rr * (rr - 1) * (rr - 2) * choose(nn, 3);
            let d = (rr - 1) * (rr - 2) * (nn - 2);

            // Degrees and co-degrees straight from the edge list.
            let mut degree = vec![0u64; h.vertex_count()];
            let mut pair_degree: HashMap<(u32, u32), u64> = HashMap::new();
            let mut triples: HashMap<[u32; 3], u64> = HashMap::new();
            for edge in h.edges() {
                let mut t = *edge;
                t.sort_unstable();
                for &x in &t {
                    degree[x as usize] += 1;
                }
                for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                    *pair_degree.entry((t[i], t[j])).or_default() += 1;
                }
                *triples.entry(t).or_default() += 1;
            }
            let delta2 = pair_degree.values().copied().max().unwrap_or(0);
            let delta3 = triples.values().copied().max().unwrap_or(0);
            ensure!(
                h.vertex_count() as u64 == v,
                "n={n} r={r}: v={} expected {v}",
                h.vertex_count()
            );
            ensure!(
                h.edges().len() as u64 == e,
                "n={n} r={r}: e={} expected {e}",
                h.edges().len()
            );
            ensure!(degree.iter().all(|&x| x == d), "n={n} r={r}: not {d}-regular");
            ensure!(delta2 == rr - 2, "n={n} r={r}: delta2={delta2} expected {}", rr - 2);
            ensure!(delta3 == 1, "n={n} r={r}: delta3={delta3}");

            let stats = h.degree_stats();
            ensure!(
                stats.v == v
                    && stats.e == e
                    && stats.d.to_integer() == d
                    && stats.delta2 == rr - 2
                    && stats.delta3 == 1,
                "n={n} r={r}: library stats {stats:?}"
            );
        }
    }
    within(start, Duration::from_secs(60), "hypergraph statistics")?;
    Ok(format!("18 shapes match the closed forms; {:.1?}", start.elapsed()))
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let table = extremal_search(5, 10, &CountConfig::default(), None).map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(600), "extremal search")?;
    ensure!(table.authoritative, "budget exhausted on {:?}", table.failures);
    ensure!(
        table.rows.len() == 34,
        "expected 34 classes on 5 vertices, got {}",
        table.rows.len()
    );
    let k23 = canonical_form(&Graph::complete_bipartite(2, 3).unwrap()).map_err(|e| e.to_string())?;
    ensure!(table.argmax == vec![k23.clone()], "argmax {:?}", table.argmax);
    // K_{2,3} is triangle-free with six edges.
    let expected = big(10).pow(6u32);
    let got = table.row(&k23).and_then(|r| r.count.clone());
    ensure!(got.as_ref() == Some(&expected), "count of K_2,3 is {got:?}");
    let runner_up = table
        .rows
        .iter()
        .filter(|r| r.form != k23)
        .filter_map(|r| r.count.clone())
        .max()
        .unwrap_or_default();
    ensure!(runner_up < expected, "runner-up {runner_up} not below {expected}");
    Ok(format!(
        "argmax {{{}}} with count {expected}; runner-up {runner_up}; {:.1?}",
        k23.as_str(),
        start.elapsed()
    ))
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cfg = CountConfig::default();
    for _ in 0..20 {
        let n = rng.random_range(1..=6);
        let r = rng.random_range(2..=5usize);
        let g = random_graph(&mut rng, n);
        let i = rng.random_range(1..r as u8);
        let j = rng.random_range(i + 1..=r as u8);
        let p = Template::uniform(n, r, Palette::from_colors(&[i, j])).unwrap();
        let got = p.count_ga(&g, &cfg).map_err(|e| e.to_string())?;
        let expected = BigUint::one() << g.edge_count();
        ensure!(got == expected, "{g:?} with {{{i},{j}}}, r={r}: {got} != {expected}");
    }
    for n in 1..=8usize {
        for r in 3..=5usize {
            let expected = big((r * (r - 1) * (r - 2)) as u64 * choose(n as u64, 3));
            let got = Template::full(n, r).unwrap().rt_count();
            ensure!(got == expected, "RT(full), n={n} r={r}: {got} != {expected}");
        }
    }
    for k in 0..100 {
        let n = rng.random_range(3..=9);
        let r = if k % 2 == 0 { 4 } else { rng.random_range(3..=6) };
        let p = random_template(&mut rng, n, r);
        let mut modes = vec![TriangleMode::Complete, TriangleMode::DenseGeneric];
        if r == 4 {
            modes.push(TriangleMode::Dense4);
        }
        for mode in modes {
            let tally = p.classify_triangles(mode).map_err(|e| e.to_string())?;
            ensure!(
                tally.total() == big(choose(n as u64, 3)),
                "{mode} tally on n={n} sums to {}",
                tally.total()
            );
        }
    }
    Ok("two-color templates give 2^e on 20 graphs; RT(full) closed form; 100 tallies complete".into())
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let n = 5;
    let tris = kn_triangles(n);
    let k5 = Graph::complete(n).unwrap();
    let cfg = CountConfig::default();
    let mut tightest = f64::INFINITY;
    for k in 0..100 {
        let r = 3 + k % 2;
        let p = random_template(&mut rng, n, r);
        let lists: Vec<Vec<u8>> = p.palettes().iter().map(|q| q.colors().collect()).collect();
        // Constrained enumeration over the product of palettes.
        let mut pick = vec![0usize; lists.len()];
        let mut colors: Vec<u8> = lists.iter().map(|l| l[0]).collect();
        let mut count = 0u64;
        'outer: loop {
            if no_rainbow(&colors, &tris) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == lists.len() {
                    break 'outer;
                }
                pick[i] += 1;
                if pick[i] < lists[i].len() {
                    colors[i] = lists[i][pick[i]];
                    break;
                }
                pick[i] = 0;
                colors[i] = lists[i][0];
                i += 1;
            }
        }
        let product: BigUint = lists.iter().map(|l| big(l.len() as u64)).product();
        ensure!(big(count) <= product, "template {k}: {count} > product {product}");
        let lib = p.count_ga(&k5, &cfg).map_err(|e| e.to_string())?;
        ensure!(lib == big(count), "template {k}: count_ga {lib} vs enumeration {count}");
        let bound = p.product_log_bound().edge_sum;
        let exact = lists.iter().map(|l| (l.len() as f64).log2()).sum::<f64>();
        ensure!(
            (bound - exact).abs() < 1e-9,
            "template {k}: edge_sum {bound} vs {exact}"
        );
        if count > 0 {
            tightest = tightest.min(exact - (count as f64).log2());
        }
    }
    Ok(format!("100 templates on K5; smallest slack {tightest:.3} bits"))
}

/// `e(G) - max bipartite subgraph` by trying every 2-partition.
fn bipartite_defect(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 0;
    for side in 0..1u64 << n.saturating_sub(1) {
        let cut = g
            .edges()
            .iter()
            .filter(|e| (side >> e.u & 1) != (side >> e.v & 1))
            .count();
        best = best.max(cut);
    }
    g.edge_count() - best
}

fn criterion_9() -> Check {
    let start = Instant::now();
    // The bound is n/(2 e^4) (e + t - n^2/4), and e^4 > 54.5981.
    let mut far_pairs = 0;
    for n in 1..=7usize {
        for g in all_graphs(n).map_err(|e| e.to_string())? {
            let defect = bipartite_defect(&g);
            let lib_defect = g.edge_count() - max_k_partite_edges(&g, 2).map_err(|e| e.to_string())?;
            ensure!(defect == lib_defect, "{g:?}: defect {defect} vs library {lib_defect}");
            let triangles = (0..n)
                .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| (a, b, c))))
                .filter(|&(a, b, c)| g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c))
                .count();
            for t in 1..=g.edge_count().max(1) {
                let far = defect >= t;
                ensure!(
                    t_far(&g, 2, t).map_err(|e| e.to_string())? == far,
                    "{g:?}, t={t}: t_far mismatch"
                );
                let rep = supersaturation_check(&g, 2, t).map_err(|e| e.to_string())?;
                ensure!(rep.cliques == big(triangles as u64), "{g:?}: triangle count");
                if !far {
                    continue;
                }
                far_pairs += 1;
                // 8 e^4 T >= 4n (e + t) - n^3.
                let rhs = 4 * n as i64 * (g.edge_count() + t) as i64 - (n * n * n) as i64;
                let lhs_low = 8.0 * 54.5981 * triangles as f64;
                ensure!(
                    lhs_low >= rhs as f64,
                    "{g:?}, t={t}: {triangles} triangles below the bound"
                );
                ensure!(rep.ok, "{g:?}, t={t}: library reports failure (bound {})", rep.bound);
            }
        }
    }
    within(start, Duration::from_secs(600), "supersaturation sweep")?;
    Ok(format!("{far_pairs} (G, t) pairs with t_far; {:.1?}", start.elapsed()))
}

fn majority_oracle(colors: &[u8], n: usize, r: usize, tris: &[[usize; 3]], p: i64, q: i64) -> (bool, bool) {
    let mono = tris
        .iter()
        .filter(|&&[x, y, z]| colors[x] == colors[y] && colors[y] == colors[z])
        .count() as i64;
    let mut per = vec![0i64; r + 1];
    for &c in colors {
        per[c as usize] += 1;
    }
    let deficit = colors.len() as i64 - per.iter().copied().max().unwrap_or(0);
    let c3 = choose(n as u64, 3) as i64;
    let c2 = choose(n as u64, 2) as i64;
    let rr = r as i64;
    (mono * q >= (q - p) * c3, deficit * q <= 4 * rr * rr * p * c2)
}

fn criterion_10() -> Check {
    let grid: Vec<(i64, i64)> = (1..10).map(|k| (k, 20)).chain([(49, 100)]).collect();
    let mut hypotheses = 0u64;
    let mut checked = 0u64;
    for n in 1..=6usize {
        for g in all_graphs(n).map_err(|e| e.to_string())? {
            let edges = g.edges();
            let tris: Vec<[usize; 3]> = (0..n)
                .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| (a, b, c))))
                .filter(|&(a, b, c)| g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c))
                .map(|(a, b, c)| {
                    let pos = |x, y| edges.iter().position(|e| (e.u, e.v) == (x, y)).unwrap();
                    [pos(a, b), pos(a, c), pos(b, c)]
                })
                .collect();
            for bits in 0..1u64 << edges.len() {
                let colors: Vec<u8> = (0..edges.len()).map(|i| 1 + (bits >> i & 1) as u8).collect();
                let c = Coloring::new(&g, 2, colors.clone()).unwrap();
                for &(p, q) in &grid {
                    let (hyp, concl) = majority_oracle(&colors, n, 2, &tris, p, q);
                    let rep = majority_color_check(&g, &c, Rational64::new(p, q)).map_err(|e| e.to_string())?;
                    ensure!(
                        rep.hypothesis_ok == hyp && rep.conclusion_ok == concl,
                        "{g:?} {colors:?} eps={p}/{q}: library disagrees with oracle"
                    );
                    ensure!(!hyp || concl, "counterexample: {g:?} {colors:?} eps={p}/{q}");
                    hypotheses += hyp as u64;
                    checked += 1;
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut random_hyp = 0u64;
    for _ in 0..10_000 {
        let n = rng.random_range(9..=12usize);
        let g = Graph::complete(n).unwrap();
        let tris = kn_triangles(n);
        let base = rng.random_range(1..=3u8);
        let flip = rng.random_range(0.0..0.08);
        let colors: Vec<u8> = (0..n * (n - 1) / 2)
            .map(|_| {
                if rng.random_bool(flip) {
                    rng.random_range(1..=3u8)
                } else {
                    base
                }
            })
            .collect();
        // Feasible eps: 4/n - 4/n^2 <= eps < 1/2.
        let q = (n * n) as i64 * 10;
        let low = (4 * n as i64 - 4) * 10;
        let p = rng.random_range(low..q / 2);
        let (hyp, concl) = majority_oracle(&colors, n, 3, &tris, p, q);
        let rep = majority_color_check(
            &g,
            &Coloring::new(&g, 3, colors.clone()).unwrap(),
            Rational64::new(p, q),
        )
        .map_err(|e| e.to_string())?;
        ensure!(rep.eps_in_range, "n={n}, eps={p}/{q} should be feasible");
        ensure!(
            rep.hypothesis_ok == hyp && rep.conclusion_ok == concl,
            "n={n}: library disagrees with oracle"
        );
        ensure!(!hyp || concl, "counterexample at n={n}, eps={p}/{q}: {colors:?}");
        random_hyp += hyp as u64;
    }
    Ok(format!(
        "{checked} exhaustive (coloring, eps) pairs, {hypotheses} meet the hypothesis; 10000 random, {random_hyp} meet it; no counterexample"
    ))
}

fn criterion_11() -> Check {
    let fam = greedy_book_family(&Graph::complete_bipartite(3, 3).unwrap(), 1).map_err(|e| e.to_string())?;
    ensure!(fam.books.is_empty(), "K_3,3 yielded {} books", fam.books.len());
    let fam = greedy_book_family(&Graph::book(5).unwrap(), 5).map_err(|e| e.to_string())?;
    ensure!(
        fam.books.len() == 1 && fam.books[0].pages.len() == 5,
        "book 5 yielded {:?}",
        fam.books
    );

    for n in 3..=10usize {
        let g = Graph::complete(n).unwrap();
        let p = Template::uniform(n, 3, Palette::from_colors(&[1, 2])).unwrap();
        let trace = peel(&g, &p, Rational64::new(1, 4)).map_err(|e| e.to_string())?;
        ensure!(
            trace.removed.is_empty(),
            "K{n}: peel removed {:?}",
            trace.removed_vertices()
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.random_range(2..=12usize);
        let g = random_graph(&mut rng, n);
        let cands = rng.random_range(0..=full_mask(n));
        let res = remove_low_degree(&g, cands).map_err(|e| e.to_string())?;
        let n2 = res.alive.count_ones() as u64;
        let e2 = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| res.alive >> a & 1 == 1 && res.alive >> b & 1 == 1 && g.has_edge(a, b))
            .count() as u64;
        let lhs = 2 * g.edge_count() as u64;
        let rhs = 2 * e2 + choose(n as u64, 2) - choose(n2, 2);
        ensure!(lhs <= rhs, "n={n}: 2e(G)={lhs} > {rhs}");
        ensure!(
            res.inequality_holds && res.residual.edge_count() as u64 == e2,
            "library report inconsistent"
        );
        ensure!(
            res.removed_order.iter().all(|&v| cands >> v & 1 == 1),
            "removed a non-candidate"
        );
    }
    Ok("books on K_3,3 and B5, peel on K3..K10, 100 low-degree instances".into())
}

fn criterion_12() -> Check {
    let cfg = CoverConfig::default();
    let two_color = |n: usize| -> Vec<Template> {
        [[1, 2], [1, 3], [2, 3]]
            .iter()
            .map(|pair| Template::uniform(n, 3, Palette::from_colors(pair)).unwrap())
            .collect()
    };

    let cert = verify_cover(&two_color(3), 3, 3, &cfg).map_err(|e| e.to_string())?;
    ensure!(
        cert.coverage.exhaustive && cert.coverage_ok(),
        "n=3 coverage failed: {:?}",
        cert.coverage
    );
    // Independent: every Gallai 3-coloring of K3 uses at most two colors.
    let tris = kn_triangles(3);
    let mut gallai_k3 = 0;
    let mut bad = false;
    for_each_kn_coloring(3, 3, |c| {
        if no_rainbow(c, &tris) {
            gallai_k3 += 1;
            bad |= distinct_colors(c) > 2;
        }
    });
    ensure!(
        !bad && gallai_k3 == 21 && cert.coverage.checked == 21,
        "K3 has {gallai_k3} Gallai colorings"
    );

    let family = two_color(4);
    let cert = verify_cover(&family, 4, 3, &cfg).map_err(|e| e.to_string())?;
    let witness = cert
        .coverage
        .uncovered
        .clone()
        .ok_or("n=4: no uncovered coloring reported")?;
    let colors = witness.colors().to_vec();
    ensure!(
        colors.len() == 6 && no_rainbow(&colors, &kn_triangles(4)),
        "witness {colors:?} is not Gallai on K4"
    );
    ensure!(
        distinct_colors(&colors) == 3,
        "witness {colors:?} does not use three colors"
    );
    for t in &family {
        let inside = t
            .palettes()
            .iter()
            .zip(&colors)
            .all(|(p, &c)| p.mask() >> (c - 1) & 1 == 1);
        ensure!(!inside, "witness {colors:?} lies in a member");
    }

    let full = Template::full(4, 3).unwrap();
    let cert = verify_cover(std::slice::from_ref(&full), 4, 3, &cfg).map_err(|e| e.to_string())?;
    let (_, rt) = cert.rt_witness().ok_or("full template passes property (ii)")?;
    // Rainbow choices: 3! per triangle of K4.
    let mut rt_brute = 0u64;
    for _ in kn_triangles(4) {
        for a in 1..=3 {
            for b in 1..=3 {
                for c in 1..=3 {
                    rt_brute += (a != b && a != c && b != c) as u64;
                }
            }
        }
    }
    let lhs = big(rt_brute).pow(3u32) * 4u32;
    let rhs = big(choose(4, 3)).pow(3u32);
    ensure!(
        rt_brute == 24 && rt.rt == big(24),
        "RT(full) = {} / brute {rt_brute}",
        rt.rt
    );
    ensure!(
        rt.lhs == lhs && rt.rhs == rhs && lhs > rhs,
        "witness {} > {} not reproduced",
        rt.lhs,
        rt.rhs
    );
    ensure!(cert.coverage_ok(), "full template must cover everything");
    Ok(format!(
        "K3 covered (21 colorings); K4 witness {colors:?}; full template 24^3*4 = {lhs} > {rhs}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("oracle equivalence", criterion_1),
        ("closed forms", criterion_2),
        ("two-color lower bound", criterion_3),
        ("red-once formula", criterion_4),
        ("hypergraph statistics", criterion_5),
        ("extremal (5, 10)", criterion_6),
        ("template identities", criterion_7),
        ("entropy bound", criterion_8),
        ("supersaturation sweep", criterion_9),
        ("monochromatic majority", criterion_10),
        ("algorithm mechanics", criterion_11),
        ("cover certification", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
