use std::path::PathBuf;
use std::process::{Command, Output};

use gridfloer::record::{parse_records, Record};
use gridfloer::{parse_batch, parse_grid};

fn corpus(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gridfloer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn unknot_on_smallest_grid() {
    let o = run(&["unknot", &corpus("unknot2.grid")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "unknot: true\n");
}

#[test]
fn genus_of_trefoil() {
    let o = run(&["genus", &corpus("trefoil.grid")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "genus: 1\n");
}

#[test]
fn genus_of_link_is_invalid_input() {
    let o = run(&["genus", &corpus("two_component.grid")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("NotAKnot"));
    let o = run(&["genus", "--format", "records", &corpus("two_component.grid")]);
    let recs = parse_records(&stdout(&o)).unwrap();
    assert!(matches!(&recs[..], [Record::Error { grid: 0, message }] if message.contains("NotAKnot")));
}

#[test]
fn malformed_input_and_flags_exit_one() {
    assert_eq!(run(&["validate", "--grid", "n=2;O=0,1;X=0,1"]).status.code(), Some(1));
    assert_eq!(run(&["validate", "--grid", "n=2;O=0,1"]).status.code(), Some(1));
    assert_eq!(run(&["validate", "/nonexistent/file.grid"]).status.code(), Some(1));
    assert_eq!(run(&["genus", "--no-such-flag", &corpus("trefoil.grid")]).status.code(), Some(1));
    assert_eq!(run(&["move", "twist:3", &corpus("trefoil.grid")]).status.code(), Some(1));
    let o = run(&["validate", "--grid", "n=2;O=0,1;X=0,1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("SharedCell"));
}

#[test]
fn max_n_refuses_large_grids() {
    let big = run(&["random", "11", "--seed", "3"]);
    let text = stdout(&big).replace('\n', ";");
    let o = run(&["homology", "--grid", &text]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("factorial"));
    // cheap verbs are not limited
    assert_eq!(run(&["info", "--grid", &text]).status.code(), Some(0));
}

#[test]
fn batch_output_follows_input_order_for_any_job_count() {
    let file = corpus("regression.grid");
    for verb in ["report", "homology", "hfk", "info", "verify"] {
        for format in ["text", "records"] {
            let one = run(&[verb, "--jobs", "1", "--format", format, &file]);
            let eight = run(&[verb, "--jobs", "8", "--format", format, &file]);
            assert_eq!(one.stdout, eight.stdout, "{verb} {format}");
            assert_eq!(one.status.code(), eight.status.code());
        }
    }
}

#[test]
fn records_round_trip_for_every_verb() {
    let file = corpus("knots.grid");
    let n_grids = parse_batch(&std::fs::read_to_string(&file).unwrap()).len();
    for verb in ["validate", "info", "homology", "hfk", "unknot", "genus", "fibered", "alexander", "verify", "report"] {
        let o = run(&[verb, "--format", "records", &file]);
        assert_eq!(o.status.code(), Some(0), "{verb}");
        let text = stdout(&o);
        let recs = parse_records(&text).unwrap();
        let again: String = recs.iter().map(|r| r.to_line() + "\n").collect();
        assert_eq!(again, text, "{verb}");
        let mut grids: Vec<usize> = recs.iter().map(record_grid).collect();
        grids.dedup();
        assert_eq!(grids, (0..n_grids).collect::<Vec<_>>(), "{verb}");
    }
}

fn record_grid(r: &Record) -> usize {
    match *r {
        Record::Valid { grid, .. }
        | Record::Info { grid, .. }
        | Record::Rank { grid, .. }
        | Record::Unknot { grid, .. }
        | Record::Genus { grid, .. }
        | Record::Fibered { grid, .. }
        | Record::Alexander { grid, .. }
        | Record::Report { grid, .. }
        | Record::Check { grid, .. }
        | Record::Grid { grid, .. }
        | Record::Error { grid, .. } => grid,
    }
}

#[test]
fn move_output_is_a_grid_file() {
    let o = run(&["move", "stabilize:2", &corpus("trefoil.grid")]);
    assert_eq!(o.status.code(), Some(0));
    let g = parse_grid(&stdout(&o)).unwrap();
    assert_eq!(g.size(), 6);
    let o = run(&["genus", "--grid", &stdout(&o).replace('\n', ";")]);
    assert_eq!(stdout(&o), "genus: 1\n");
    let o = run(&["move", "destabilize:0", &corpus("trefoil.grid")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn random_is_seeded_and_valid() {
    let a = run(&["random", "6", "--seed", "42", "--count", "3", "--knot"]);
    let b = run(&["random", "6", "--seed", "42", "--count", "3", "--knot"]);
    assert_eq!(a.stdout, b.stdout);
    let grids = parse_batch(&stdout(&a));
    assert_eq!(grids.len(), 3);
    for g in grids {
        assert_eq!(gridfloer::link_summary(&g.unwrap()).component_count, 1);
    }
    assert_eq!(run(&["random", "1"]).status.code(), Some(1));
}

#[test]
fn text_verbs_on_figure_eight() {
    let f = corpus("figure_eight.grid");
    assert_eq!(stdout(&run(&["alexander", &f])), "alexander: -q + 3 - q^-1\n");
    assert_eq!(stdout(&run(&["fibered", &f])), "fibered: true\n");
    let v = stdout(&run(&["verify", &f]));
    assert_eq!(v.lines().count(), 5);
    assert!(v.lines().all(|l| l.contains(": ok (")));
}
