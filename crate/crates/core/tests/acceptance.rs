//! Acceptance run: one PASS/FAIL line per criterion, each with its time limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use specht_core::tableau::{column_standard_tableaux, row_standard_tableaux};
use specht_core::{
    border_strips, char_table, char_table_with, expand, mn_char, normalized_skew_shapes, polytabloid, run_suite,
    skew_char_trace, Method, Partition, Permutation, SkewShape, SkewTableau, Straightener,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, u64, Box<dyn Fn() -> Outcome>);

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn t(s: &str) -> SkewTableau {
    s.parse().unwrap()
}

fn suite(name: &str, budget: usize) -> Outcome {
    let report = run_suite(name, budget).map_err(|e| e.to_string())?;
    if report.passed() {
        Ok(())
    } else {
        Err(format!(
            "{} failures, first: {:?}",
            report.failures.len(),
            report.failures[0]
        ))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn worked_character_value() -> Outcome {
    let la = p("4,4,4");
    let value = mn_char(&la, &p("5,5,2")).map_err(|e| e.to_string())?;
    ensure(value == BigInt::from(2), || format!("chi = {value}"))?;
    let strips = border_strips(&la, 5);
    ensure(strips == vec![(p("4,3"), 1), (p("3,3,1"), 2)], || {
        format!("strips {strips:?}")
    })?;
    // Both factors from the trace engine: strip sign at the 5-cycle times χ^μ(5,2).
    let rest = Permutation::class_representative(&p("5,2"));
    let mut total = BigInt::zero();
    for (mu, ht) in &strips {
        let strip = SkewShape::new(la.clone(), mu.clone()).unwrap();
        let sign = skew_char_trace(&strip, &Permutation::long_cycle(5)).unwrap();
        let expected = if ht % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        ensure(sign == expected, || format!("{strip}: trace {sign}, height {ht}"))?;
        total += sign * skew_char_trace(&SkewShape::straight(mu.clone()), &rest).unwrap();
    }
    ensure(total == BigInt::from(2), || format!("two-strip sum {total}"))
}

fn straightening_golden() -> Outcome {
    let v = specht_core::straighten(&t("1,2,5/4,3,7/6,8"));
    // Printed order: the (2,2) group, then the (3,1) group.
    let listed = [
        "1,3,5/2,4,7/6,8",
        "1,2,5/3,4,7/6,8",
        "1,3,5/2,6,7/4,8",
        "1,2,5/3,6,7/4,8",
        "1,4,5/2,6,7/3,8",
    ];
    let rendered: String = listed
        .iter()
        .map(|s| format!("{:+} {s}\n", v.coefficient(&t(s))))
        .collect();
    let golden = "\
-1 1,3,5/2,4,7/6,8
+1 1,2,5/3,4,7/6,8
+1 1,3,5/2,6,7/4,8
-1 1,2,5/3,6,7/4,8
-1 1,4,5/2,6,7/3,8
";
    ensure(rendered == golden && v.len() == 5, || {
        format!("got {} terms\n{rendered}", v.len())
    })?;
    let shapes: Vec<Vec<usize>> = listed.iter().map(|s| t(s).m_shape(4).parts().to_vec()).collect();
    let expected = [[2, 2, 0], [2, 2, 0], [3, 1, 0], [3, 1, 0], [3, 1, 0]];
    ensure(shapes == expected, || format!("4-shapes {shapes:?}"))
}

fn vanishing_off_strips() -> Outcome {
    suite("skew-ncycle", 6)?;
    let mut connected = 0;
    let mut disconnected = 0;
    for n in 1..=6 {
        for s in normalized_skew_shapes(n) {
            if s.is_border_strip() {
                continue;
            }
            let v = skew_char_trace(&s, &Permutation::long_cycle(n)).unwrap();
            ensure(v.is_zero(), || format!("{s}: trace {v}"))?;
            if s.is_connected() {
                connected += 1;
            } else {
                disconnected += 1;
            }
        }
    }
    ensure(connected > 0 && disconnected > 0, || "no cases".into())
}

fn engines_agree() -> Outcome {
    suite("mn-vs-trace", 6)?;
    for n in 4..=6 {
        let mn = char_table(n);
        let tr = char_table_with(n, Method::Trace);
        ensure(mn == tr, || format!("tables differ at n={n}"))?;
        ensure(tr.rows_orthonormal() && tr.columns_orthogonal(), || {
            format!("orthogonality n={n}")
        })?;
    }
    Ok(())
}

fn random_oracle(count: usize) -> Outcome {
    let shapes: Vec<SkewShape> = (7..=8).flat_map(normalized_skew_shapes).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut engine = Straightener::new();
    for _ in 0..count {
        let s = &shapes[rng.gen_range(0..shapes.len())];
        let mut fill: Vec<usize> = (1..=s.size()).collect();
        fill.shuffle(&mut rng);
        let mut it = fill.into_iter();
        let x = SkewTableau::from_fn(s.clone(), |_| it.next().unwrap()).unwrap();
        let v = engine.straighten(&x);
        ensure(v.terms().iter().all(|(s, _)| s.is_standard()), || {
            format!("{x}: non-standard support")
        })?;
        ensure(expand(&v) == polytabloid(&x), || format!("{x}: expansion differs"))?;
    }
    Ok(())
}

fn figure_orders() -> Outcome {
    let chain = ["1,3/2,4", "1,2/3,4", "2,1/3,4", "1,2/4,3", "2,1/4,3", "3,1/4,2"].map(t);
    let mut all = column_standard_tableaux(&"2,2".parse().unwrap());
    all.sort_by(|a, b| {
        if a == b {
            std::cmp::Ordering::Equal
        } else if a.column_order_greater(b).unwrap() {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    ensure(all == chain, || {
        format!("chain {:?}", all.iter().map(|x| x.to_string()).collect::<Vec<_>>())
    })?;

    let names = [
        ".,1,2/3,4",
        ".,1,3/2,4",
        ".,1,4/2,3",
        ".,2,3/1,4",
        ".,2,4/1,3",
        ".,3,4/1,2",
    ];
    let nodes = names.map(t);
    let rs = row_standard_tableaux(&"3,2/1".parse().unwrap());
    ensure(rs.len() == 6 && rs.iter().all(|x| nodes.contains(x)), || {
        "row-standard set".into()
    })?;
    let strictly = |a: &SkewTableau, b: &SkewTableau| a != b && a.dominates(b).unwrap();
    let mut covers = Vec::new();
    for a in &nodes {
        for b in &nodes {
            if strictly(a, b) && !nodes.iter().any(|c| strictly(a, c) && strictly(c, b)) {
                covers.push((a.to_string(), b.to_string()));
            }
        }
    }
    let expected: Vec<(String, String)> = [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)]
        .iter()
        .map(|&(i, j)| (names[i].to_string(), names[j].to_string()))
        .collect();
    ensure(covers == expected, || format!("covers {covers:?}"))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            "chi^(4,4,4)(5,5,2) = 2 with its two-strip decomposition",
            1,
            Box::new(worked_character_value),
        ),
        (
            "straightening golden output and 4-shapes",
            1,
            Box::new(straightening_golden),
        ),
        (
            "unique trace-contributing tableau on strips, n <= 7",
            60,
            Box::new(|| suite("unique-trace-tableau", 7)),
        ),
        (
            "n-cycle trace vanishes off border strips, n <= 6",
            60,
            Box::new(vanishing_off_strips),
        ),
        (
            "border-strip and trace engines agree, n <= 6",
            120,
            Box::new(engines_agree),
        ),
        (
            "hook values at the n-cycle square-sum to n, n <= 10",
            5,
            Box::new(|| suite("hook-orthogonality", 10)),
        ),
        (
            "restriction to S_m x S_n, k <= 7",
            120,
            Box::new(|| suite("restriction", 7)),
        ),
        (
            "sign and trivial multiplicities detect strips, |λ| <= 7",
            120,
            Box::new(|| suite("pieri-young", 7)),
        ),
        (
            "leading term of straightening is the row sort, n <= 6",
            120,
            Box::new(|| suite("dominance-lemma", 6)),
        ),
        (
            "expansion oracle: exhaustive n <= 6 and 1000 random n in 7..=8",
            120,
            Box::new(|| suite("straighten-oracle", 6).and_then(|_| random_oracle(1000))),
        ),
        (
            "column-order chain on (2,2) and dominance covers on (3,2)/(1)",
            1,
            Box::new(figure_orders),
        ),
    ];

    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome =
            outcome.and_then(|_| ensure(elapsed <= Duration::from_secs(*limit), || format!("exceeded {limit} s")));
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({:.2?}, limit {limit} s)", i + 1, elapsed),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({:.2?}, limit {limit} s): {why}", i + 1, elapsed);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
