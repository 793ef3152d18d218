use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use madic::cli::{CodeJson, DistanceJson, ExportJson, PolyJson};
use madic::field::FieldCtx;
use madic::reference::{self, printed};

fn madic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_madic")).args(args).output().unwrap()
}

/// Runs a whitespace-separated command line.
fn sh(cmd: &str) -> Output {
    madic(&cmd.split_whitespace().collect::<Vec<_>>())
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!("{}-{name}", std::process::id()))
}

const LEN13_RING: &str = "--q 3 --s 3 --p 13 --m 4 --slots 0,1,2 --a 7 --family even-I --alpha-power 2";

#[test]
fn classes_text_and_json() {
    let out = sh("classes --p 13 --m 4");
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("# p = 13, m = 4, b = 2, a = 2"), "{text}");
    assert!(text.contains("Q_0 = {1, 3, 9}"));
    let out = sh("--output json classes --p 13 --m 3 --b 2");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        v["classes"],
        serde_json::json!([[1, 5, 8, 12], [2, 3, 10, 11], [4, 6, 7, 9]])
    );
    assert_eq!(v["params"]["b"], 2);
}

#[test]
fn invalid_m_is_a_validation_error() {
    let out = sh("classes --p 13 --m 5");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("must be at least 2 and divide p - 1"));
}

#[test]
fn field_code_is_one_of_the_printed_generators() {
    let out = sh("--output json field-code --q 7 --p 19 --m 6 --family even-I --index 0");
    assert!(out.status.success());
    let code: CodeJson = serde_json::from_slice(&out.stdout).unwrap();
    let f = FieldCtx::prime(7).unwrap();
    let printed_gens: Vec<Vec<u64>> = printed::LEN19_GENERATORS
        .iter()
        .map(|t| {
            let g = reference::parse_field_poly(&f, t).unwrap();
            g.coeffs().iter().map(|c| c.0 as u64).collect()
        })
        .collect();
    let PolyJson::Field(g) = &code.generator else {
        panic!("field generator expected")
    };
    assert_eq!(g.len(), 17);
    assert!(printed_gens.contains(g));
    let report = code.distance_report.unwrap();
    assert_eq!(report.d_min, Some(15));
    assert_eq!(code.params.b, 2);
    assert_eq!(code.params.alpha_power, Some(1));
    assert!(code.params.splitting_modulus.is_some());
}

#[test]
fn odd_like_generator_is_cubic() {
    let out = sh("--output json field-code --q 7 --p 19 --m 6 --family odd-I --no-distance");
    assert!(out.status.success(), "{}", stderr(&out));
    let code: CodeJson = serde_json::from_slice(&out.stdout).unwrap();
    let PolyJson::Field(g) = &code.generator else { panic!() };
    assert_eq!(g.len(), 4);
    assert!(code.distance_report.is_none());
}

#[test]
fn non_residue_q_is_explained() {
    let out = sh("field-code --q 2 --p 7 --m 3");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("q = 2 is not an m-adic residue modulo 7"));
}

#[test]
fn cap_exceeded_exits_with_two() {
    let out = sh("field-code --q 7 --p 19 --m 6 --family odd-I");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("exceeds the cap"));
    let out = sh("field-code --q 3 --p 13 --m 4 --cap 10");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ring_code_reproduces_the_length_13_example() {
    let out = sh(&format!("--output json ring-code {LEN13_RING}"));
    assert!(out.status.success(), "{}", stderr(&out));
    let code: CodeJson = serde_json::from_slice(&out.stdout).unwrap();
    let f = FieldCtx::prime(3).unwrap();
    for (comp, coeffs) in code.components.iter().zip(printed::LEN13_E) {
        let e = reference::poly_from_supports(&f, 13, &printed::LEN13_L, &coeffs);
        let e: Vec<u64> = e.coeffs().iter().map(|c| c.0 as u64).collect();
        assert_eq!(comp.idempotent, e);
    }
    let PolyJson::Ring(g) = &code.generator else { panic!() };
    assert_eq!(g.len(), 11);
    assert!(g.iter().all(|c| c.len() == 3));
    // Away from the misprinted x^2 coefficient the printed g_0 is reproduced.
    for (i, row) in printed::LEN13_G0.iter().enumerate() {
        if i != 2 {
            assert_eq!(&g[i], &row.to_vec(), "x^{i}");
        }
    }
    assert_eq!(code.distance_report.unwrap().d_min, Some(9));
    assert_eq!(code.params.crt_points, Some(vec![0, 1, 2]));
}

#[test]
fn constant_slots_lift_a_field_code() {
    let out = sh("--output json ring-code --q 3 --s 3 --p 13 --m 4 --slots 0,0,0");
    let code: CodeJson = serde_json::from_slice(&out.stdout).unwrap();
    let PolyJson::Ring(e) = &code.idempotent else { panic!() };
    assert!(e.iter().all(|c| c[1] == 0 && c[2] == 0));
}

#[test]
fn incompatible_s_is_rejected() {
    let out = sh("ring-code --q 3 --s 4 --p 13 --m 4");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("(s - 1) | (q - 1)"));
}

#[test]
fn ring_chain_follows_the_multiplier() {
    let out = sh(&format!("--output json ring-code --chain {LEN13_RING}"));
    let chain: Vec<CodeJson> = serde_json::from_slice(&out.stdout).unwrap();
    let slots: Vec<Vec<usize>> = chain.iter().map(|c| c.params.slots.clone().unwrap()).collect();
    assert_eq!(slots, vec![vec![0, 1, 2], vec![3, 0, 1], vec![2, 3, 0]]);
}

#[test]
fn exported_code_round_trips_through_distance() {
    for cmd in [
        "--output json field-code --q 3 --p 13 --m 4 --family odd-II --index 1".to_string(),
        format!("--output json ring-code --method exhaustive {LEN13_RING}"),
    ] {
        let out = sh(&cmd);
        assert!(out.status.success());
        let original: CodeJson = serde_json::from_slice(&out.stdout).unwrap();
        let path = scratch("code.json");
        fs::write(&path, &out.stdout).unwrap();
        let again = madic(&["--output", "json", "distance", "--input", path.to_str().unwrap()]);
        assert!(again.status.success(), "{}", stderr(&again));
        let result: DistanceJson = serde_json::from_slice(&again.stdout).unwrap();
        assert_eq!(result.matches_input, Some(true));
        assert_eq!(Some(result.distance_report), original.distance_report);
        assert_eq!(result.params, original.params);
    }
}

#[test]
fn tampered_export_is_rejected() {
    let out = sh("--output json field-code --q 3 --p 13 --m 4");
    let mut code: CodeJson = serde_json::from_slice(&out.stdout).unwrap();
    if let PolyJson::Field(g) = &mut code.generator {
        g[0] = (g[0] + 1) % 3;
    }
    let path = scratch("tampered.json");
    fs::write(&path, serde_json::to_vec(&code).unwrap()).unwrap();
    let again = madic(&["distance", "--input", path.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(1));
    assert!(stderr(&again).contains("do not match"));
}

#[test]
fn distance_from_parameters() {
    let out = sh("distance --q 3 --p 13 --m 4 --s 3 --slots 0,1,2 --method exhaustive");
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("parameters: [13,3,9] (exhaustive, 19683 codewords enumerated)"));
    let out = sh("distance --q 3 --p 13");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--m"));
}

#[test]
fn export_writes_every_family() {
    let path = scratch("export.json");
    let out = madic(&[
        "export",
        "--q",
        "3",
        "--p",
        "13",
        "--m",
        "4",
        "--s",
        "3",
        "--distances",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: ExportJson = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc.field_codes.len(), 16);
    assert_eq!(doc.ring_codes.len(), 12);
    assert!(doc.ring_codes.iter().all(|c| c.distance_report.is_some()));
    // Any exported ring code re-analyzes to the same report.
    let one = scratch("one.json");
    fs::write(&one, serde_json::to_vec(&doc.ring_codes[5]).unwrap()).unwrap();
    let again = madic(&["--output", "json", "distance", "--input", one.to_str().unwrap()]);
    let result: DistanceJson = serde_json::from_slice(&again.stdout).unwrap();
    assert_eq!(result.matches_input, Some(true));
}

#[test]
fn griesmer_verb() {
    let out = sh("--output json griesmer --n 19 --k 3 --d 15 --q 7");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["bound_n"], 19);
    assert_eq!(v["attained"], true);
    let out = sh("griesmer --n 13 --k 4 --d 6 --q 3");
    assert!(stdout(&out).contains("attained: false"));
}

#[test]
fn verify_paper_reports_errata() {
    let out = sh("verify-paper");
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("* length-13 ring generators g_2 = g_3"));
    let out = sh("--output json verify-paper");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let g23 = v["errata"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["item"] == "length-13 ring generators g_2 = g_3")
        .unwrap();
    assert!(g23["computed"].as_str().unwrap().contains("g_3 = 1+"));
}

#[test]
fn output_is_deterministic() {
    let cmd = format!("ring-code {LEN13_RING}");
    assert_eq!(sh(&cmd).stdout, sh(&cmd).stdout);
}

#[test]
fn help_exits_cleanly() {
    let out = sh("--help");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verify-paper"));
}
