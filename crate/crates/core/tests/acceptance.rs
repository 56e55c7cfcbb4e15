//! Exit criteria. Every check is exact; runtime budgets are pinned below.
//! Run with `cargo test -p delpezzo-core --test acceptance -- --nocapture` to
//! see one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use delpezzo::dp3::{
    self, classify, cone_position, degeneration, euler_characteristic, families, k_cubed,
    k_cubed_adjunction, odp_count, odp_intersection, shokurov_closed_form, smooth_pic2,
    ConePosition, DP3Family, Route, Verdict,
};
use delpezzo::ruled::RuledClass;
use delpezzo::scroll::{
    base_locus, mult_at_least, mult_subscroll, mult_subscroll_oracle, DivisorClass, Scroll,
};
use delpezzo::special::{dp2_report, picard_rank_two_witness, CurveSystem};
use delpezzo::Error;

const MAX_D1: i64 = 20;
const N_MIN: i64 = -60;
const N_MAX: i64 = 60;

const CLASSIFY_BUDGET: Duration = Duration::from_secs(5);
const ORACLE_BUDGET: Duration = Duration::from_secs(30);
const DP2_BUDGET: Duration = Duration::from_secs(5);
const DP2_SEEDS: u64 = 100;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fam(d1: i64, d2: i64, d3: i64, n: i64) -> DP3Family {
    DP3Family::new(d1, d2, d3, n).unwrap()
}

fn full_range() -> impl Iterator<Item = DP3Family> {
    families(MAX_D1, N_MIN, N_MAX).unwrap()
}

fn smooth_family_set(pred: impl Fn(&DP3Family) -> bool) -> BTreeSet<DP3Family> {
    full_range().filter(|f| smooth_pic2(f) && pred(f)).collect()
}

fn within(budget: Duration, start: Instant) -> Result<(), String> {
    let elapsed = start.elapsed();
    if elapsed < budget {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, budget {budget:?}"))
    }
}

fn c1_unique_rational() -> Outcome {
    let start = Instant::now();
    let head = classify(&fam(0, 0, 0, 1));
    if head.verdict != Verdict::Rational {
        return Err(format!("(0,0,0,1) classified {:?}", head.verdict));
    }
    let rational: Vec<_> = full_range()
        .map(|f| classify(&f))
        .filter(|r| r.smooth_pic2 && r.verdict == Verdict::Rational)
        .map(|r| r.family)
        .collect();
    within(CLASSIFY_BUDGET, start)?;
    if rational == [fam(0, 0, 0, 1)] {
        Ok(format!("1 rational family in {:?}", start.elapsed()))
    } else {
        Err(format!("rational families: {rational:?}"))
    }
}

fn c2_shokurov_exceptions() -> Outcome {
    let got = smooth_family_set(|f| !dp3::shokurov_nonruled(f).unwrap());
    let want: BTreeSet<_> = [fam(0, 0, 0, 1), fam(1, 0, 0, 0)].into();
    if got == want {
        Ok("{(0,0,0,1), (1,0,0,0)}".into())
    } else {
        Err(format!("got {got:?}"))
    }
}

fn c3_chi_fibre() -> Outcome {
    let got = smooth_family_set(|f| euler_characteristic(f) == -14);
    let want: BTreeSet<_> = [fam(0, 0, 0, 1), fam(2, 1, 1, -2)].into();
    if got == want {
        Ok("{(0,0,0,1), (2,1,1,-2)}".into())
    } else {
        Err(format!("got {got:?}"))
    }
}

fn c4_identities() -> Outcome {
    let mut checked = 0usize;
    for f in full_range() {
        if euler_characteristic(&f) != -4 * k_cubed(&f) - 54 {
            return Err(format!("{f}: euler != -4 K^3 - 54"));
        }
        if k_cubed(&f) != k_cubed_adjunction(&f) {
            return Err(format!("{f}: K^3 closed form != adjunction"));
        }
        if odp_count(&f) != odp_intersection(&f) {
            return Err(format!("{f}: odp closed form != C.Z on F_d3"));
        }
        if !smooth_pic2(&f) {
            continue;
        }
        let d = degeneration(&f).unwrap();
        if d.mu + d.ks2 != 8 {
            return Err(format!("{f}: mu + K_S^2 = {}", d.mu + d.ks2));
        }
        if d.shokurov != shokurov_closed_form(&f) {
            return Err(format!("{f}: effectivity route disagrees with the inequality"));
        }
        let coeff = 3 * f.d1 + 6 * f.d2 - 2 * f.d3 + 3 * f.n - 4;
        if d.two_k_plus_delta != RuledClass::new(1, coeff) {
            return Err(format!("{f}: 2K + Delta = {}", d.two_k_plus_delta));
        }
        if d.odp <= 0 {
            return Err(format!("{f}: odp = {}", d.odp));
        }
        checked += 1;
    }
    Ok(format!("{checked} smooth families, zero failures"))
}

fn scrolls(max_rank: usize, max_d1: i64) -> Vec<Scroll> {
    fn extend(prefix: &mut Vec<i64>, remaining: usize, cap: i64, out: &mut Vec<Scroll>) {
        if remaining == 1 {
            prefix.push(0);
            out.push(Scroll::new(prefix.clone()).unwrap());
            prefix.pop();
            return;
        }
        for d in 0..=cap {
            prefix.push(d);
            extend(prefix, remaining - 1, d, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for k in 2..=max_rank {
        extend(&mut Vec::new(), k, max_d1, &mut out);
    }
    out
}

fn c5_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut cases = 0usize;
    for s in scrolls(5, 6) {
        for a in -1..=6 {
            for b in -20..=20 {
                let cls = DivisorClass::new(a, b);
                let bl = base_locus(&s, cls);
                for j in 2..=s.rank() {
                    let y = s.subscroll(j).unwrap();
                    cases += 1;
                    let closed = mult_subscroll(&s, cls, y);
                    let oracle = mult_subscroll_oracle(&s, cls, y);
                    if closed != oracle {
                        return Err(format!("{s} {cls} Y{j}: {closed:?} vs {oracle:?}"));
                    }
                    let Ok(m) = closed else {
                        if closed != Err(Error::EmptySystem { a, b }) || bl.is_ok() {
                            return Err(format!("{s} {cls}: inconsistent empty system"));
                        }
                        continue;
                    };
                    for q in 1..=(a as u64 + 1) {
                        if (m >= q) != mult_at_least(&s, cls, y, q) {
                            return Err(format!("{s} {cls} Y{j}: criterion fails at q = {q}"));
                        }
                    }
                    let in_base = bl.as_ref().unwrap().is_some_and(|first| first <= y);
                    if in_base != (m >= 1) {
                        return Err(format!("{s} {cls} Y{j}: base locus disagrees with mult"));
                    }
                }
            }
        }
    }
    within(ORACLE_BUDGET, start)?;
    Ok(format!("{cases} cases in {:?}", start.elapsed()))
}

fn c6_known_nonrational() -> Outcome {
    let expected = [
        (fam(0, 0, 0, 2), Route::ShokurovConicBundle),
        (fam(1, 0, 0, 0), Route::CubicThreefold),
        (fam(2, 1, 1, -2), Route::ShokurovConicBundle),
        (fam(1, 1, 1, -1), Route::ShokurovConicBundle),
    ];
    for (f, route) in expected {
        let r = classify(&f);
        if r.verdict != Verdict::Nonrational || r.route != route {
            return Err(format!("{f}: {:?} via {:?}", r.verdict, r.route));
        }
    }
    Ok("4 families with expected routes".into())
}

fn c7_dp2() -> Outcome {
    let start = Instant::now();
    let mut good = 0;
    for seed in 1..=DP2_SEEDS {
        let r = dp2_report(seed).map_err(|e| format!("seed {seed}: {e}"))?;
        let ok = r.discriminant_degree == 8
            && r.mu == 8
            && r.xi_class == RuledClass::new(6, 8)
            && r.two_k_plus_xi == RuledClass::new(2, 4)
            && r.two_k_plus_xi_effective
            && r.nonruled;
        if !ok {
            return Err(format!("seed {seed}: {r:?}"));
        }
        good += 1;
    }
    within(DP2_BUDGET, start)?;
    Ok(format!("{good} seeds, mu = 8, Xi = 6s + 8f, 2K + Xi = 2s + 4f"))
}

fn c8_picard() -> Outcome {
    let subsets = CurveSystem::split_fibres().invariant_disjoint_subsets();
    if picard_rank_two_witness() && subsets.is_empty() {
        Ok("no invariant disjoint subset among 6 proper orbit unions".into())
    } else {
        Err(format!("found {subsets:?}"))
    }
}

fn negative_inside_count(max_d1: i64) -> usize {
    // n < 0 with smooth_pic2 forces n >= -d1.
    families(max_d1, -max_d1.max(1), -1)
        .unwrap()
        .filter(|f| smooth_pic2(f) && cone_position(f) == ConePosition::Inside)
        .count()
}

fn c9_infinite_series() -> Outcome {
    let count = negative_inside_count(5);
    if count < 5 {
        return Err(format!("only {count} families with d1 <= 5"));
    }
    for bound in 2..=10i64 {
        let c = negative_inside_count(2 * bound);
        if c < (bound - 1) as usize {
            return Err(format!("B = {bound}: {c} families"));
        }
    }
    Ok(format!("{count} families with n < 0, smooth, Inside, d1 <= 5"))
}

fn c10_dp4() -> Outcome {
    let hits: Vec<i64> = (-200..=200).filter(|&e| dp3::dp4_rational(e)).collect();
    if hits == [-8, -4, 0] {
        Ok("true exactly on {0, -4, -8}".into())
    } else {
        Err(format!("true on {hits:?}"))
    }
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("1 unique rational family", c1_unique_rational),
        ("2 smooth families outside the conic-bundle criterion", c2_shokurov_exceptions),
        ("3 smooth families with euler = -14", c3_chi_fibre),
        ("4 identity suite", c4_identities),
        ("5 multiplicity oracle equivalence", c5_oracle_equivalence),
        ("6 known nonrational families", c6_known_nonrational),
        ("7 dp2 double cover", c7_dp2),
        ("8 split-fibre orbit check", c8_picard),
        ("9 negative-n families inside the cone", c9_infinite_series),
        ("10 dp4 criterion", c10_dp4),
    ];
    println!();
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                println!("FAIL  {name}: {detail}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
