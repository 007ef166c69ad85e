use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hallalg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// JSON lines with the timing field removed.
fn untimed(s: &str) -> Vec<serde_json::Value> {
    s.lines()
        .map(|l| {
            let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
            if let Some(m) = v.as_object_mut() {
                m.remove("elapsed_ms");
            }
            v
        })
        .collect()
}

#[test]
fn verify_xi_json() {
    let o = run(&["verify", "xi", "--n", "8", "--format", "json"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with(r#"{"check":"xi","params":{"n":8},"status":"pass","#));
}

#[test]
fn hallnum_jordan() {
    let o = run(&["hallnum", "--quiver", "c1", "--q", "2", "--L", "(1,1)", "--M", "(1)", "--N", "(1)"]);
    assert_eq!(stdout(&o).trim(), "3");
    let o = run(&["hallnum", "--quiver", "c1", "--symbolic", "--L", "(1,1)", "--M", "(1)", "--N", "(1)"]);
    assert_eq!(stdout(&o).trim(), "q + 1");
}

#[test]
fn isoclasses_kronecker() {
    let o = run(&["isoclasses", "--quiver", "k2", "--q", "2", "--d", "1,1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    let o = run(&["isoclasses", "--quiver", "k2", "--q", "2", "--d", "1,1", "--format", "json"]);
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn hallpoly_segments() {
    let o = run(&["hallpoly", "--quiver", "cr:2", "--L", "S1[2]", "--M", "S1[1]", "--N", "S2[1]"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn primitive_and_fourier() {
    let o = run(&["primitive", "--quiver", "cr:2", "--family", "cyclic_pnr", "--n", "1", "--q", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = run(&["fourier", "--quiver", "a2", "--q", "3", "--d", "1,1", "--format", "json"]);
    assert!(o.status.success());
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0]["image"]["terms"][0]["coeff"]["b"].is_array());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "xi"]).status.code(), Some(2));
    assert_eq!(run(&["isoclasses", "--quiver", "q9"]).status.code(), Some(2));
    assert_eq!(run(&["isoclasses", "--quiver", "k2", "--d", "5,5"]).status.code(), Some(2));
    assert_eq!(run(&["primitive", "--family", "cyclic_cn", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn warm_cache_matches_cold() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let cmds: [&[&str]; 3] = [
        &["isoclasses", "--quiver", "k2", "--q", "3", "--d", "2,1", "--format", "json", "--cache-dir", d],
        &["verify", "associativity", "--quiver", "k2", "--q", "2", "--n", "3", "--format", "json", "--cache-dir", d],
        &["fourier", "--quiver", "k2", "--q", "2", "--d", "1,1", "--format", "json", "--cache-dir", d],
    ];
    for args in cmds {
        let cold = run(args);
        assert!(cold.status.success());
        let warm = run(args);
        assert_eq!(untimed(&stdout(&cold)), untimed(&stdout(&warm)));
    }
    assert!(fs::read_dir(dir.path()).unwrap().count() > 0);

    // damage every file; results must not change
    for entry in fs::read_dir(dir.path()).unwrap() {
        let p = entry.unwrap().path();
        let text = fs::read_to_string(&p).unwrap().replace("\"sizes\":[1", "\"sizes\":[2");
        fs::write(&p, text).unwrap();
    }
    let again = run(cmds[0]);
    let cold = run(&cmds[0][..cmds[0].len() - 2]);
    assert_eq!(untimed(&stdout(&again)), untimed(&stdout(&cold)));

    // stale version stamps are ignored too
    for entry in fs::read_dir(dir.path()).unwrap() {
        let p = entry.unwrap().path();
        let text = fs::read_to_string(&p).unwrap().replacen("version ", "version 0.0.0-", 1);
        fs::write(&p, text).unwrap();
    }
    assert_eq!(untimed(&stdout(&run(cmds[0]))), untimed(&stdout(&cold)));
}
