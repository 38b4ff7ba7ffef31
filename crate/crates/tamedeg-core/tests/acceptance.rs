//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
//! criterion fails.

mod common;

use common::Check;
use std::time::Instant;

fn all(parts: Vec<(&str, Check)>) -> Check {
    let mut out = Vec::new();
    for (name, c) in parts {
        out.push(format!("{name}: {}", c.map_err(|e| format!("{name}: {e}"))?));
    }
    Ok(out.join("; "))
}

fn audits(structure: bool) -> Check {
    let mut parts = Vec::new();
    for (name, sink) in [("A~3", 1), ("E~6", 3)] {
        let cat = common::catalog(name, sink, None);
        let c = common::audit_run(&cat).and_then(|blocs| {
            if structure {
                common::structure_audit(&cat, &blocs)
            } else {
                common::theorem_audit(&cat, &blocs)
            }
        });
        parts.push((name, c));
    }
    all(parts)
}

fn main() {
    let criteria: Vec<(&str, Box<dyn Fn() -> Check>)> = vec![
        (
            "golden table",
            Box::new(|| all(["E~6", "D~8", "E~7", "E~8"].into_iter().map(|t| (t, common::golden_table(t))).collect())),
        ),
        ("codimension one or two", Box::new(|| audits(false))),
        ("extension posets in tubes", Box::new(|| common::extension_posets(4, 12))),
        ("degeneration tests agree", Box::new(|| common::degeneration_tests("E~6"))),
        (
            "hom and ext against oracles",
            Box::new(|| {
                let mut parts = vec![("tubes", common::tube_homs(4, 12))];
                for sink in 1..=3 {
                    parts.push(("A3", common::quiver_homs(&common::catalog("A3", sink, None), 24)));
                }
                for (sink, source) in [(1, None), (1, Some(2)), (2, Some(1)), (3, None)] {
                    parts.push(("A~2", common::quiver_homs(&common::catalog("A~2", sink, source), 24)));
                }
                all(parts)
            }),
        ),
        ("structure audits", Box::new(|| audits(true))),
        ("periodicity", Box::new(|| common::periodicity(10))),
        ("defect one", Box::new(|| common::defect_one(&common::catalog("A~3", 1, None), 2))),
        ("tube poset of E1(10)+E3(10)", Box::new(common::figure_poset)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = run();
        let secs = t.elapsed().as_secs_f32();
        match r {
            Ok(s) => println!("PASS {} {name} ({secs:.1}s): {s}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.1}s): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
