//! End-to-end acceptance gate. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;

use hodge_core::diamond_file::{parse_diamond, write_diamond};
use hodge_core::ledger::{rhl_check, StringKind};
use hodge_core::validators::{check_euler, check_hodge_symmetry, check_poincare, check_salamon};
use hodge_core::{
    e_series, goettsche, h_series, macdonald_sym, pipeline, schur_dim_oracle, sym_power,
    HodgeDiamond, Partition, VirtualDiamond,
};

struct Run {
    code: i32,
    stdout: String,
}

fn hodge(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_hodge"))
        .args(args)
        .output()
        .expect("spawn hodge");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
    }
}

/// Rebuilds a full diamond of complex dimension `dim` from the rows
/// `h^{d,0}, h^{d−1,1}, …, h^{0,d}` for every even `d ≤ dim`, using
/// `h^{p,q} = h^{dim−p, dim−q}` for the upper half.
fn from_full_rows(dim: u32, rows: &[&[i64]]) -> VirtualDiamond {
    let mut entries = BTreeMap::new();
    for (i, row) in rows.iter().enumerate() {
        let d = 2 * i as u32;
        assert_eq!(row.len(), d as usize + 1, "row {d}");
        for (j, &m) in row.iter().enumerate() {
            let (p, q) = (d - j as u32, j as u32);
            entries.insert((p, q), m);
            entries.insert((dim - p, dim - q), m);
        }
    }
    VirtualDiamond::from_entries(entries.into_iter().map(|((p, q), m)| (p, q, m))).unwrap()
}

fn table_101() -> VirtualDiamond {
    from_full_rows(
        10,
        &[
            &[1],
            &[1, 21, 1],
            &[1, 22, 254, 22, 1],
            &[1, 22, 276, 2277, 276, 22, 1],
            &[1, 22, 276, 2530, 16469, 2530, 276, 22, 1],
            &[1, 21, 254, 2277, 16469, 87560, 16469, 2277, 254, 21, 1],
        ],
    )
}

fn table_99() -> VirtualDiamond {
    from_full_rows(
        8,
        &[
            &[1],
            &[2, 42, 2],
            &[3, 84, 907, 84, 3],
            &[2, 84, 1350, 9870, 1350, 84, 2],
            &[1, 42, 907, 9870, 55596, 9870, 907, 42, 1],
        ],
    )
}

fn table_100() -> VirtualDiamond {
    from_full_rows(
        8,
        &[
            &[1],
            &[1, 21, 1],
            &[2, 42, 464, 42, 2],
            &[1, 42, 675, 4935, 675, 42, 1],
            &[1, 21, 464, 4935, 27914, 4935, 464, 21, 1],
        ],
    )
}

/// The printed half diamond of the ten-dimensional OG10 manifolds.
const OG10_HALF_ROWS: [&[i64]; 6] = [
    &[1],
    &[1, 22],
    &[1, 22, 254],
    &[1, 23, 276, 2299],
    &[1, 22, 276, 2531, 16490],
    &[1, 22, 254, 2299, 16490, 88024],
];

/// Full diamond from the half-diamond rows `h^{d,0}, …, h^{d−⌊d/2⌋,⌊d/2⌋}`,
/// completed by Hodge symmetry and Serre duality.
fn from_half_rows(dim: u32, rows: &[&[i64]]) -> VirtualDiamond {
    let mut entries = BTreeMap::new();
    for (i, row) in rows.iter().enumerate() {
        let d = 2 * i as u32;
        for (j, &m) in row.iter().enumerate() {
            let (p, q) = (d - j as u32, j as u32);
            for (a, b) in [(p, q), (q, p), (dim - p, dim - q), (dim - q, dim - p)] {
                entries.insert((a, b), m);
            }
        }
    }
    VirtualDiamond::from_entries(entries.into_iter().map(|((p, q), m)| (p, q, m))).unwrap()
}

fn write_temp(dir: &Path, name: &str, d: &VirtualDiamond) -> String {
    let path = dir.join(name);
    std::fs::write(&path, write_diamond(d)).unwrap();
    path.to_str().unwrap().to_owned()
}

fn diamond_from_json(v: &Value) -> VirtualDiamond {
    let triples = v.as_array().expect("diamond array").iter().map(|e| {
        let t = e.as_array().expect("entry triple");
        (
            t[0].as_u64().unwrap() as u32,
            t[1].as_u64().unwrap() as u32,
            t[2].as_i64().unwrap(),
        )
    });
    VirtualDiamond::from_entries(triples).unwrap()
}

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, what: impl Into<String>) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn criterion_1() -> Check {
    let run = hodge(&["hilb", "--n", "5"]);
    ensure(run.code == 0, format!("hilb exited {}", run.code))?;
    let d = parse_diamond(&run.stdout).map_err(|e| e.to_string())?;
    ensure(d == table_101(), "hilb --n 5 differs from the S^[5] table")?;
    ensure(
        d.get(5, 5) == 87560 && d.get(4, 4) == 16469 && d.get(3, 3) == 2277 && d.get(1, 1) == 21,
        "diagonal entries",
    )
}

fn criterion_2() -> Check {
    let dir = tempfile::tempdir().unwrap();
    let m = hodge(&["hilb", "--n", "2"]);
    ensure(m.code == 0, "hilb --n 2")?;
    let m_path = dir.path().join("m.txt");
    std::fs::write(&m_path, &m.stdout).unwrap();
    let m_path = m_path.to_str().unwrap();

    let sq = hodge(&["tensor", m_path, m_path]);
    let sq = parse_diamond(&sq.stdout).map_err(|e| e.to_string())?;
    ensure(sq == table_99(), "M'⊗M' differs from its table")?;
    ensure(sq.get(4, 4) == 55596 && sq.get(2, 2) == 907, "M'⊗M' entries")?;

    for engine in ["series", "macdonald"] {
        let s2 = hodge(&["sym", "--n", "2", "--engine", engine, m_path]);
        let s2 = parse_diamond(&s2.stdout).map_err(|e| e.to_string())?;
        ensure(s2 == table_100(), format!("Sym²M' ({engine}) differs from its table"))?;
        ensure(s2.get(4, 4) == 27914 && s2.get(3, 3) == 4935, "Sym²M' entries")?;
    }
    ensure(*pipeline::m_prime_sq().unwrap() == table_99(), "pipeline M'²")?;
    ensure(*pipeline::sym2_m_prime().unwrap() == table_100(), "pipeline Sym²M'")
}

fn criterion_3() -> Check {
    let run = hodge(&["og10"]);
    ensure(run.code == 0, format!("og10 exited {}", run.code))?;
    let b_line = run.stdout.lines().find(|l| l.starts_with("b: ")).ok_or("no b-line")?;
    ensure(b_line.starts_with("b: 1 24 300 2899 22150 126156"), format!("b-line `{b_line}`"))?;
    let odd = run.stdout.lines().find(|l| l.starts_with("odd b: ")).ok_or("no odd b-line")?;
    ensure(odd["odd b: ".len()..].split(' ').all(|x| x == "0"), "odd Betti numbers")?;

    let rows: Vec<Vec<i64>> = run
        .stdout
        .lines()
        .skip(1)
        .take_while(|l| !l.starts_with("b: "))
        .map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect())
        .collect();
    let expected: Vec<Vec<i64>> = OG10_HALF_ROWS.iter().map(|r| r.to_vec()).collect();
    ensure(rows == expected, format!("half diamond {rows:?}"))?;
    ensure(rows[2] == [1, 22, 254], "degree-4 row")?;

    let json = hodge(&["og10", "--format", "json"]);
    let v: Value = serde_json::from_str(&json.stdout).map_err(|e| e.to_string())?;
    let d = diamond_from_json(&v["diamond"]);
    ensure(d == from_half_rows(10, &OG10_HALF_ROWS), "JSON diamond vs printed table")?;
    ensure(
        d.get(5, 5) == 88024
            && d.get(4, 4) == 16490
            && d.get(3, 3) == 2299
            && d.get(2, 2) == 254
            && d.get(3, 1) == 22,
        "named entries",
    )?;
    ensure(*pipeline::og10_diamond().unwrap() == d, "library vs CLI")
}

fn criterion_4() -> Check {
    let m = pipeline::og10_diamond().map_err(|e| e.to_string())?;
    let n = goettsche(&HodgeDiamond::k3(), 5).map_err(|e| e.to_string())?;
    ensure(pipeline::schur_formula_og10() == *m, "OG10 Schur formula vs pipeline")?;
    ensure(pipeline::schur_formula_hilbert5() == *n, "S^[5] Schur formula vs Goettsche")?;
    let run = hodge(&["theorem-b", "--output", "json"]);
    ensure(run.code == 0, format!("theorem-b exited {}", run.code))?;
    let v: Value = serde_json::from_str(&run.stdout).map_err(|e| e.to_string())?;
    ensure(v["ok"] == true, "theorem-b reports a mismatch")?;
    ensure(diamond_from_json(&v["og10"]["schur_formula"]) == *m, "CLI OG10 formula")?;
    ensure(diamond_from_json(&v["hilbert5"]["schur_formula"]) == *n, "CLI S^[5] formula")
}

fn criterion_5() -> Check {
    let report = pipeline::plethysm_identities();
    ensure(report.identities.len() == 4, "four identities")?;
    for id in &report.identities {
        ensure(id.holds, format!("{} fails as diamonds", id.name))?;
        ensure(id.lhs == id.rhs, format!("{} lhs ≠ rhs", id.name))?;
        ensure(id.dims_match, format!("{} dimension shadow", id.name))?;
    }
    let dim = |parts: &[u32]| schur_dim_oracle(24, &Partition::new(parts.to_vec()).unwrap());
    ensure(dim(&[2, 1]) == 4600 && dim(&[3]) == 2600, "hook-content values")?;
    ensure(report.identities[0].lhs_dim == 7200, "300·24 = 7200")?;
    let shadows: Vec<u64> = report.identities.iter().map(|c| c.oracle_dim).collect();
    let expected = vec![
        dim(&[2, 1]) + dim(&[3]),
        dim(&[3, 1]) + dim(&[4]),
        dim(&[2, 2]) + dim(&[3, 1]) + dim(&[4]),
        dim(&[2, 2]) + dim(&[4]),
    ];
    ensure(shadows == expected, format!("shadows {shadows:?}"))?;
    let lhs: Vec<i64> = report.identities.iter().map(|c| c.lhs_dim).collect();
    ensure(lhs == [7200, 2600 * 24, 300 * 300, 300 * 301 / 2], format!("lhs dims {lhs:?}"))
}

fn criterion_6() -> Check {
    let m = pipeline::og10_diamond().map_err(|e| e.to_string())?;
    let sal = check_salamon(&m, 5);
    ensure(sal.ok && sal.lhs == 630780 && sal.rhs == 630780, format!("OG10 Salamon {sal:?}"))?;
    let s2 = goettsche(&HodgeDiamond::k3(), 2).unwrap();
    ensure(check_salamon(&s2, 2).ok, "S^[2] Salamon")?;
    let k3 = check_salamon(&HodgeDiamond::k3(), 1);
    ensure(k3.ok && k3.lhs == 22 && k3.rhs == 22, format!("K3 Salamon {k3:?}"))?;
    let e = check_euler(&m, 176904);
    ensure(e.ok && e.actual == 176904, "Euler number")?;
    ensure(check_hodge_symmetry(&m), "Hodge symmetry")?;
    ensure(check_poincare(&m, 10), "Poincaré duality")?;

    let dir = tempfile::tempdir().unwrap();
    let og = hodge(&["og10", "--output", "json"]);
    let v: Value = serde_json::from_str(&og.stdout).map_err(|e| e.to_string())?;
    let file = write_temp(dir.path(), "og10.txt", &diamond_from_json(&v["diamond"]));
    let run = hodge(&["validate", &file, "--dim", "10", "--euler", "176904", "--output", "json"]);
    ensure(run.code == 0, format!("validate exited {}", run.code))?;
    let r: Value = serde_json::from_str(&run.stdout).map_err(|e| e.to_string())?;
    ensure(r["ok"] == true, "validate report")?;
    ensure(r["report"]["salamon"]["lhs"] == 630780, "validate Salamon value")
}

fn small_diamond(max_mult: i64) -> impl Strategy<Value = VirtualDiamond> {
    prop::collection::btree_map((0u32..=2, 0u32..=2), -max_mult..=max_mult, 0..6).prop_map(|m| {
        VirtualDiamond::from_entries(m.into_iter().map(|((p, q), v)| (p, q, v))).unwrap()
    })
}

fn surface_box() -> impl Strategy<Value = HodgeDiamond> {
    prop::collection::btree_map((0u32..=2, 0u32..=2), 0i64..=3, 0..6).prop_map(|m| {
        VirtualDiamond::from_entries(m.into_iter().map(|((p, q), v)| (p, q, v)))
            .unwrap()
            .to_diamond()
            .unwrap()
    })
}

fn property<S: Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Check {
    let mut runner = TestRunner::new(Config { cases: 64, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn criterion_7() -> Check {
    property(surface_box(), |x| {
        for n in 0..=4 {
            prop_assert_eq!(sym_power(&x, n), macdonald_sym(&x, n).unwrap(), "n = {}", n);
        }
        Ok(())
    })?;
    property(surface_box(), |v| {
        let (h, e) = (h_series(&v, 6), e_series(&v, 6));
        for k in 1..=6 {
            let sum: VirtualDiamond = (0..=k)
                .map(|i| {
                    let term = e.coeff(i) * h.coeff(k - i);
                    if i % 2 == 0 { term } else { -term }
                })
                .sum();
            prop_assert!(sum.is_zero(), "k = {}", k);
        }
        Ok(())
    })?;
    property((small_diamond(4), small_diamond(4), small_diamond(4)), |(a, b, c)| {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &VirtualDiamond::unit(), a.clone());
        prop_assert_eq!(&a + &(-&a), VirtualDiamond::zero());
        Ok(())
    })?;
    property(small_diamond(50), |d| {
        prop_assert_eq!(parse_diamond(&write_diamond(&d)).unwrap(), d);
        Ok(())
    })?;
    let s5 = goettsche(&HodgeDiamond::k3(), 5).unwrap();
    ensure(parse_diamond(&write_diamond(&s5)).unwrap() == *s5, "S^[5] round-trip")?;
    for kind in StringKind::ALL {
        ensure(rhl_check(&kind.build(hodge_core::ledger::Offset::NONE)), format!("rhl {kind}"))?;
    }
    for g in 0..=8u32 {
        let sum: u64 = (0..=2 * g).map(|b| binom(2 * g, b)).sum();
        ensure(sum == 1 << (2 * g), format!("binomial sum g = {g}"))?;
    }
    for kind in StringKind::ALL {
        let s = kind.build(hodge_core::ledger::Offset::NONE);
        let sum: u64 = s.terms.iter().map(|t| t.lambda_rank).sum();
        ensure(sum == 1 << (2 * s.g), format!("string ranks {kind}"))?;
    }
    Ok(())
}

fn binom(n: u32, k: u32) -> u64 {
    (0..u64::from(k)).fold(1, |acc, i| acc * (u64::from(n) - i) / (i + 1))
}

fn criterion_8() -> Check {
    let run = hodge(&["ledger", "solve", "--output", "json"]);
    ensure(run.code == 0, format!("ledger solve exited {}", run.code))?;
    let v: Value = serde_json::from_str(&run.stdout).map_err(|e| e.to_string())?;
    ensure(v["status"] == "consistent", "status")?;
    let mut eps: Vec<u64> = v["epsilons"].as_array().unwrap().iter().map(|e| e.as_u64().unwrap()).collect();
    eps.sort_unstable();
    ensure(eps == [0, 1], format!("epsilons {eps:?}"))?;
    for s in v["solutions"].as_array().unwrap() {
        ensure(s["og10"]["epsilon"] == s["hilbert5"]["epsilon"], "ε_M̃ = ε_N")?;
    }
    let perturbed = hodge(&["ledger", "solve", "--og10", "1:0,2:0,5:0", "--output", "json"]);
    ensure(perturbed.code == 1, format!("perturbed exited {}", perturbed.code))?;
    let p: Value = serde_json::from_str(&perturbed.stdout).map_err(|e| e.to_string())?;
    ensure(p["status"] == "inconsistent", format!("perturbed status {}", p["status"]))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 Goettsche S^[5] table", criterion_1),
        ("2 Kunneth and Sym^2 of M'", criterion_2),
        ("3 OG10 Betti and Hodge numbers", criterion_3),
        ("4 Schur-functor formulas", criterion_4),
        ("5 plethysm identities", criterion_5),
        ("6 validators", criterion_6),
        ("7 property suite", criterion_7),
        ("8 ledger epsilon solver", criterion_8),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(()) => println!("PASS criterion {name}"),
            Err(why) => {
                println!("FAIL criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("acceptance: all {} criteria passed", criteria.len());
}
