//! Acceptance criteria. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line; exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use partition_identities::certify::{certify, CertifiedMap};
use partition_identities::identity::{failures, lhs, verify, Oracle, PathSelection, VerifyConfig};
use partition_identities::partition::enumerate_partitions;
use partition_identities::series::{euler_p, partition_numbers, SeriesTables};
use partition_identities::statistics::{self, count, count_where, StatisticFamily as F};
use partition_identities::{Counter, IdentityId, Partition, SignedCounter, Statement};

type Outcome = Result<String, String>;
type Criterion = (u32, Duration, fn() -> Outcome);

fn criterion_1() -> Outcome {
    let tables = SeriesTables::new(10);
    let stmt = Statement::Identity(IdentityId::C410);
    let v = lhs(&tables, stmt, 3, None, 10).map_err(|e| e.to_string())?;
    let o = lhs(&Oracle::new(), stmt, 3, None, 10).map_err(|e| e.to_string())?;
    if v == SignedCounter::from(2) && o == v {
        Ok("lhs(C410, n=10, m=3) = 2".into())
    } else {
        Err(format!("lhs(C410, n=10, m=3) = {v} (oracle {o}), expected 2"))
    }
}

fn criterion_2() -> Outcome {
    let lambda = Partition::from_parts(vec![7, 7, 4, 2, 1, 1]).unwrap();
    match lambda.mex() {
        3 => Ok("mex(7,7,4,2,1,1) = 3".into()),
        other => Err(format!("mex(7,7,4,2,1,1) = {other}, expected 3")),
    }
}

fn criterion_3() -> Outcome {
    let p = partition_numbers(35);
    let p_at = |x: i64| if x < 0 { Counter::from(0u32) } else { p[x as usize].clone() };
    let mut checked = 0;
    for n in 0..=35u32 {
        for m in 1..=6u32 {
            let want_s: Counter = (1..=n / m)
                .map(|j| p_at(i64::from(n) - i64::from(m * j)) * j)
                .sum();
            let got_s = statistics::stat_s(m, n).unwrap();
            if got_s != want_s {
                return Err(format!("stat_s({m},{n}) = {got_s}, sum gives {want_s}"));
            }
            for r in 0..m {
                let want_a: Counter = (0..=n)
                    .map(|j| m * j + r)
                    .take_while(|&part| part <= n)
                    .map(|part| p_at(i64::from(n - part)) * part)
                    .sum();
                let got_a = statistics::stat_a(r, m, n).unwrap();
                if got_a != want_a {
                    return Err(format!("stat_a({r},{m},{n}) = {got_a}, sum gives {want_a}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (r,m,n) tuples and all s_m sums agree with enumeration"))
}

fn criterion_4() -> Outcome {
    let config = VerifyConfig {
        n_min: 0,
        n_max: 80,
        m_min: 1,
        m_max: 5,
        r: None,
        oracle_cutoff: 30,
        paths: PathSelection::Both,
    };
    let tables = SeriesTables::new(80);
    let reports = verify(&Statement::all_identities(), &config, &tables, &Oracle::new())
        .map_err(|e| e.to_string())?;
    if let Some(bad) = failures(&reports).next() {
        return Err(format!(
            "{} m={} r={:?} n={}: lhs={} rhs={} path={}",
            bad.statement, bad.m, bad.r, bad.n, bad.lhs, bad.rhs, bad.path
        ));
    }
    for id in [IdentityId::C47i, IdentityId::C62i] {
        if id.convention().is_none() {
            return Err(format!("{} has no recorded convention", id.name()));
        }
    }
    let both = reports.iter().filter(|r| r.oracle.is_some()).count();
    Ok(format!(
        "{} tuples equal ({both} on both routes), conventions recorded for C47i and C62i",
        reports.len()
    ))
}

fn criterion_5() -> Outcome {
    let mut parts = Vec::new();
    for (map, n_max) in [
        (CertifiedMap::Psi, 25),
        (CertifiedMap::PsiEven, 30),
        (CertifiedMap::PhiBz, 25),
    ] {
        let c = certify(map, n_max);
        if !c.passed() {
            return Err(format!(
                "{map} up to {n_max}: {} violations, first {}",
                c.violations,
                c.counterexample.unwrap_or_default()
            ));
        }
        parts.push(format!("{map} {} instances", c.instances));
    }
    Ok(parts.join(", "))
}

fn criterion_6() -> Outcome {
    let p = partition_numbers(30);
    let mut failed = Vec::new();
    let mut claim = |label: &str, check: &dyn Fn(u32) -> Option<String>| {
        if let Some(detail) = (0..=30).find_map(check) {
            failed.push(format!("{label}: {detail}"));
        }
    };
    let same = |a: F, b: F| {
        move |n: u32| {
            let (x, y) = (count(a, n).unwrap(), count(b, n).unwrap());
            (x != y).then(|| format!("n={n}: {}={x} vs {}={y}", a.name(), b.name()))
        }
    };
    claim("C(n) = #{mex odd}", &same(F::CCrank, F::MexOdd));
    claim("D(n) = #{crank < 0}", &same(F::DCrank, F::CrankNegative));
    claim("R(n) = #{rank < 0}", &same(F::RRank, F::RankNegative));
    claim("G(n) = #{rank <= -2}", &|n| {
        let x = count(F::GEden, n).unwrap();
        let y = count_where(n, |l| l.rank() <= -2);
        (x != y).then(|| format!("n={n}: {x} vs {y}"))
    });
    claim("G(n) = sum (-1)^(j+1) p(n - 3j(j+1)/2)", &|n| {
        let sum: i64 = (1..)
            .map(|j: i64| (j, 3 * j * (j + 1) / 2))
            .take_while(|&(_, s)| s <= i64::from(n))
            .map(|(j, s)| {
                let v = i64::try_from(&p[(i64::from(n) - s) as usize]).unwrap();
                if j % 2 == 1 { v } else { -v }
            })
            .sum();
        let g = i64::try_from(count(F::GEden, n).unwrap()).unwrap();
        (g != sum).then(|| format!("n={n}: G={g}, sum={sum}"))
    });
    claim("q_even(n) = q(n/2)", &|n| {
        let x = count(F::QEven, n).unwrap();
        let y = if n % 2 == 0 { count(F::Q, n / 2).unwrap() } else { Counter::from(0u32) };
        (x != y).then(|| format!("n={n}: {x} vs {y}"))
    });
    claim("q_odd(n) = p_e(n,2) - p_o(n,2)", &|n| {
        let x = SignedCounter::from(count(F::QOdd, n).unwrap());
        let y = statistics::signed_count(F::Pe2MinusPo2, n).unwrap();
        (x != y).then(|| format!("n={n}: {x} vs {y}"))
    });
    // crank(1) = -1, so #{crank > 0} and #{crank < 0} differ at n = 1 under
    // any crank convention that also keeps C(1) = #{mex odd} = 0.
    if failed.is_empty() {
        Ok("seven count identities hold for n <= 30".into())
    } else {
        Err(failed.join("; "))
    }
}

fn criterion_7() -> Outcome {
    for n in 0..=60 {
        let fast = euler_p(n);
        let slow = Counter::from(enumerate_partitions(n).count());
        if fast != slow {
            return Err(format!("n={n}: recurrence {fast}, enumeration {slow}"));
        }
    }
    Ok(format!("p(n) agrees for n <= 60, p(60) = {}", euler_p(60)))
}

fn criterion_8() -> Outcome {
    let dir = std::env::temp_dir().join(format!("partid-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut artifacts = Vec::new();
    for run in 0..2 {
        let path = dir.join(format!("run{run}.csv"));
        let status = Command::new(env!("CARGO_BIN_EXE_partid"))
            .args(["verify", "--identities", "all", "--n-max", "30", "--m-max", "4"])
            .arg("--output")
            .arg(&path)
            .stderr(std::process::Stdio::null())
            .status()
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("run {run} exited with {status}"));
        }
        artifacts.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    let _ = std::fs::remove_dir_all(&dir);
    if artifacts[0] == artifacts[1] {
        Ok(format!("two runs produced identical {}-byte CSV", artifacts[0].len()))
    } else {
        Err("the two CSV artifacts differ".into())
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, Duration::from_secs(1), criterion_1),
        (2, Duration::from_secs(1), criterion_2),
        (3, Duration::from_secs(60), criterion_3),
        (4, Duration::from_secs(300), criterion_4),
        (5, Duration::from_secs(120), criterion_5),
        (6, Duration::from_secs(60), criterion_6),
        (7, Duration::from_secs(30), criterion_7),
        (8, Duration::from_secs(300), criterion_8),
    ];
    let mut all_passed = true;
    for (id, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (verdict, detail) = match outcome {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {elapsed:.2?}, limit {limit:?}")),
            Err(d) => ("FAIL", d),
        };
        all_passed &= verdict == "PASS";
        println!("criterion {id}: {verdict} [{:.2}s] {detail}", elapsed.as_secs_f64());
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
