//! Acceptance criteria, one line each: `PASS` or `FAIL`, the criterion, the
//! time taken against its budget and what was covered.
//!
//! Positional arguments select criteria by number; flags are ignored.
//! `SHIFTED_CHAINS_THETA_BUDGET_SECS` overrides the budget of criterion 6.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use shifted_chains::bijections::{theta, theta_inv};
use shifted_chains::formulas::saturated_count;
use shifted_chains::lattice::{chain_length, covers, degree, degree_formula, filling, join_meet};
use shifted_chains::oracles::{count_saturated_chains, enumerate_tableaux};
use shifted_chains::tableaux::{count_weak, shape_of};
use shifted_chains::verify::{self, check_theta_instance, Tally};
use shifted_chains::{Multichain, Path, Step, TableauClass};

type Check = std::result::Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn(Duration) -> Check,
}

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/fixtures/{}", env!("CARGO_MANIFEST_DIR"), name)).unwrap()
}

fn p(s: &str) -> Path {
    s.parse().unwrap()
}

fn down_paths(n: usize) -> impl Iterator<Item = Path> {
    Path::all_of_length(n).filter(|p| p.first() == Some(Step::Down))
}

fn tally_result(tally: Tally, what: &str) -> Check {
    match tally.failure {
        None => Ok(format!("{} instances, {}", tally.instances, what)),
        Some(msg) => Err(format!("counterexample after {} instances: {}", tally.instances, msg)),
    }
}

fn worked_multichain(_: Duration) -> Check {
    let chain = Multichain::parse_text(&fixture("duduud_k11.chain")).map_err(|e| e.to_string())?;
    let t = theta(&chain).map_err(|e| e.to_string())?;
    let expected = vec![vec![1, 2, 6, 7, 8, 9], vec![6, 6, 9, 11], vec![8]];
    if t.rows() != expected.as_slice() {
        return Err(format!("θ gives {}", t));
    }
    let back = theta_inv(&t, 11).map_err(|e| e.to_string())?;
    if back != chain {
        return Err(format!("θ⁻¹ gives\n{}", back.to_text()));
    }
    Ok("rows 1,2,6,7,8,9 / 6,6,9,11 / 8 and the multichain recovered".into())
}

fn shape_encoding(_: Duration) -> Check {
    let parts = shape_of(&p("duduud")).map_err(|e| e.to_string())?.parts().to_vec();
    if parts != [6, 4, 1] {
        return Err(format!("shape_of(duduud) = {:?}", parts));
    }
    let mut count = 0;
    for n in 1..=12 {
        let top = Path::all_up(n);
        for q in down_paths(n) {
            let size = shape_of(&q).map_err(|e| e.to_string())?.size() as u64;
            let l = chain_length(&q, &top).map_err(|e| e.to_string())?;
            if size != l {
                return Err(format!("|λ({})| = {} but l = {}", q, size, l));
            }
            count += 1;
        }
    }
    Ok(format!("{} paths up to length 12", count))
}

fn f_threeway(_: Duration) -> Check {
    tally_result(verify::f_threeway(10), "all paths up to length 10")
}

fn prop_identities(_: Duration) -> Check {
    let two = verify::prop2(10);
    let two_n = two.instances;
    tally_result(two, "")?;
    let three = verify::prop3(10);
    let three_n = three.instances;
    tally_result(three, "")?;
    Ok(format!("{} Dyck a with |a| <= 8, {} Dyck prefixes with |duP| <= 10", two_n, three_n))
}

fn hook(_: Duration) -> Check {
    let q = p("duduud");
    let listed = BigUint::from(enumerate_tableaux(&shape_of(&q).unwrap(), TableauClass::Standard, 0, false).len());
    let formula = saturated_count(&q).map_err(|e| e.to_string())?;
    let chains = count_saturated_chains(&q);
    if formula != 198u32.into() || listed != formula || chains != formula {
        return Err(format!("duduud: formula {}, listed tableaux {}, saturated chains {}", formula, listed, chains));
    }
    tally_result(verify::hook(9), "shapes λ(P) with |P| <= 9, and 198 for duduud")
}

fn theta_budget(default: Duration) -> Duration {
    std::env::var("SHIFTED_CHAINS_THETA_BUDGET_SECS")
        .ok()
        .and_then(|s| s.parse::<u64>().ok())
        .map_or(default, Duration::from_secs)
}

fn theta_sweep(budget: Duration) -> Check {
    let deadline = Instant::now() + budget;
    let mut tally = Tally::new();
    let (mut done, mut total) = (0u64, 0u64);
    let mut chains = BigUint::default();
    let mut complete_n = 0;
    let mut stopped = false;
    for n in 1..=7 {
        let before = done;
        for q in down_paths(n) {
            for k in 1..=n + 2 {
                total += 1;
                if stopped {
                    continue;
                }
                if check_theta_instance(&q, k, &mut tally, Some(deadline)) {
                    done += 1;
                    chains += count_weak(&shape_of(&q).unwrap(), k as u32);
                } else if tally.failed() {
                    return tally_result(tally, "");
                } else {
                    stopped = true;
                }
            }
        }
        if !stopped || done - before == (1 << (n - 1)) * (n as u64 + 2) {
            complete_n = n;
        }
    }
    let coverage = format!("{} of {} (P, k) pairs ({} multichains), complete through n = {}", done, total, chains, complete_n);
    if stopped {
        Err(format!("deadline reached after {}", coverage))
    } else {
        Ok(coverage)
    }
}

fn bijections(_: Duration) -> Check {
    let mut tally = Tally::new();
    verify::split_suite(9, &mut tally);
    verify::strip_suite(8, &mut tally);
    verify::prime_suite(8, &mut tally);
    verify::prefix_suite(10, &mut tally);
    tally_result(tally, "split <= 9, strip <= 8, prime <= 8, prefix <= 10")
}

fn degree_check(_: Duration) -> Check {
    let mut count = 0;
    for n in 1..=14 {
        for q in Path::all_of_length(n).filter(|q| !q.is_all_up()) {
            let joined = covers(&q).into_iter().reduce(|a, b| join_meet(&a, &b).unwrap().0).unwrap();
            if joined != filling(&q) {
                return Err(format!("join of the covers of {} is {}, filling is {}", q, joined, filling(&q)));
            }
            let (iterated, formula) = (degree(&q), degree_formula(&q));
            if iterated != formula {
                return Err(format!("δ({}): {} fillings but the formula gives {}", q, iterated, formula));
            }
            count += 1;
        }
    }
    Ok(format!("{} paths up to length 14", count))
}

fn valleys(_: Duration) -> Check {
    tally_result(verify::type_v(10), "Dyck a with |a| <= 10")
}

fn run_binary(args: &[&str]) -> std::result::Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_shifted-chains")).args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{:?} exited with {:?}: {}", args, out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    Ok(out.stdout)
}

fn determinism(_: Duration) -> Check {
    let dir = std::env::temp_dir().join(format!("shifted-chains-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let chain = format!("{}/tests/fixtures/duduud_k11.chain", env!("CARGO_MANIFEST_DIR"));
    let tableau = dir.join("staircase.json");
    std::fs::write(&tableau, "[[1,2,6,7,8,9],[6,6,9,11],[8]]").map_err(|e| e.to_string())?;
    let tableau = tableau.to_str().unwrap().to_string();
    let mut commands: Vec<Vec<&str>> = Vec::new();
    for format in ["svg", "tikz"] {
        commands.push(vec!["figure", "--object", "path", "--path", "duduud", "--format", format]);
        commands.push(vec!["figure", "--object", "path", "--path", "duduud", "--labels", &tableau, "--format", format]);
        commands.push(vec!["figure", "--object", "tableau", "--input", &tableau, "--format", format]);
        commands.push(vec!["figure", "--object", "multichain", "--input", &chain, "--format", format]);
    }
    for format in ["table", "json"] {
        commands.push(vec!["enumerate", "--kind", "interval", "--path", "dudud", "--to", "uuudu", "--format", format]);
        commands.push(vec!["enumerate", "--kind", "min-chains", "--path", "duddud", "--format", format]);
        commands.push(vec!["enumerate", "--kind", "multichains", "--path", "dudu", "--k", "3", "--format", format]);
        commands.push(vec!["enumerate", "--kind", "type-v", "--path", "uududd", "--format", format]);
        for class in ["weak", "increasing"] {
            commands.push(vec!["enumerate", "--kind", "tableaux", "--shape", "3,1", "--class", class, "--max", "4", "--format", format]);
        }
        commands.push(vec!["enumerate", "--kind", "tableaux", "--shape", "4,2,1", "--class", "standard", "--format", format]);
    }
    for args in &commands {
        let first = run_binary(args)?;
        let second = run_binary(args)?;
        if first != second {
            return Err(format!("{:?} differs between runs", args));
        }
        if first.is_empty() {
            return Err(format!("{:?} printed nothing", args));
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("{} commands run twice", commands.len()))
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "worked multichain of duduud", budget: Duration::from_secs(1), run: worked_multichain },
        Criterion { id: 2, name: "shape encoding", budget: Duration::from_secs(10), run: shape_encoding },
        Criterion { id: 3, name: "three-way f agreement", budget: Duration::from_secs(300), run: f_threeway },
        Criterion { id: 4, name: "prime and prefix sum identities", budget: Duration::from_secs(600), run: prop_identities },
        Criterion { id: 5, name: "standard tableaux product formula", budget: Duration::from_secs(120), run: hook },
        Criterion { id: 6, name: "θ round trips and classifications", budget: theta_budget(Duration::from_secs(300)), run: theta_sweep },
        Criterion { id: 7, name: "tableau decompositions", budget: Duration::from_secs(600), run: bijections },
        Criterion { id: 8, name: "degree formula", budget: Duration::from_secs(30), run: degree_check },
        Criterion { id: 9, name: "type-V support", budget: Duration::from_secs(60), run: valleys },
        Criterion { id: 10, name: "deterministic output", budget: Duration::from_secs(600), run: determinism },
    ];
    let selected: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failures = 0;
    for c in criteria.iter().filter(|c| selected.is_empty() || selected.contains(&c.id)) {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| (c.run)(c.budget)))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = started.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > c.budget => Err("over budget".to_string()),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!(
            "{} criterion {:>2}: {} ({:.2}s of {}s): {}",
            tag,
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
            detail
        );
        if outcome.is_err() {
            failures += 1;
        }
    }
    if failures > 0 {
        println!("{} criteria failed", failures);
        std::process::exit(1);
    }
}
