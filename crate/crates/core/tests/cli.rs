use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use xmodhopf::cli::{emit_report, parse_spec, run_pipeline, ReportDocument, ReportFormat, RunError, Stage};
use xmodhopf::exactlin::Field;

fn spec_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("specs").join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(spec_path(name)).unwrap()
}

fn xmodhopf(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_xmodhopf"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn bundled_aut_z3_runs_end_to_end() {
    let spec = parse_spec(&read("aut_z3.toml"), 200).unwrap();
    assert_eq!(spec.stages, Stage::ALL.to_vec());
    assert_eq!(spec.targets, vec!["autz3".to_string()]);
    let out = run_pipeline(&spec, &spec.stages).unwrap();
    let failed: Vec<_> = out.report.failures().map(|r| r.id.clone()).collect();
    assert!(failed.is_empty(), "{failed:?}");
    for prefix in [
        "xmod.",
        "2group.",
        "trialgebra.",
        "cotrialgebra.",
        "limits.",
        "peter_weyl.",
        "coend.",
        "rep.",
    ] {
        assert!(out.report.records.iter().any(|r| r.id.starts_with(prefix)), "{prefix}");
    }
    assert_eq!(out.timings.len(), Stage::ALL.len());
}

#[test]
fn structured_report_round_trips() {
    let spec = parse_spec(&read("aut_z3.toml"), 200).unwrap();
    let out = run_pipeline(&spec, &[Stage::Validate, Stage::Build2Group]).unwrap();
    let json = emit_report(&out.report, ReportFormat::Json, Some(&out.timings));
    let doc: ReportDocument = serde_json::from_str(&json).unwrap();
    assert_eq!(doc.records, out.report.records);
    assert_eq!(doc.summary.total, doc.records.len());
    assert_eq!(doc.summary.passed, doc.records.iter().filter(|r| r.passed).count());
    assert_eq!(doc.timings.unwrap().len(), 2);
    // the timing-free document is a fixed point of parse then emit
    let plain = emit_report(&out.report, ReportFormat::Json, None);
    let again: ReportDocument = serde_json::from_str(&plain).unwrap();
    assert_eq!(serde_json::to_string_pretty(&again).unwrap() + "\n", plain);
    assert!(emit_report(&out.report, ReportFormat::Text, None).ends_with(" checks, 0 failures\n"));
}

#[test]
fn skip_and_overrides() {
    let text = read("aut_z3.toml").replace(
        "xmod = \"autz3\"",
        "xmod = \"autz3\"\nskip = [\"xmod\", \"2group.autz3.hom\"]",
    );
    let spec = parse_spec(&text, 200).unwrap();
    let out = run_pipeline(&spec, &[Stage::Validate, Stage::Build2Group]).unwrap();
    assert!(!out.report.is_empty());
    assert!(out
        .report
        .records
        .iter()
        .all(|r| !r.id.starts_with("xmod.") && !r.id.starts_with("2group.autz3.hom.")));
    let spec = spec.with_field(Field::Prime(2));
    assert!(matches!(
        run_pipeline(&spec, &[Stage::Trialgebra]),
        Err(RunError::Precondition(_))
    ));
    // fields that only matter to later stages do not block earlier ones
    assert!(run_pipeline(&spec, &[Stage::Validate]).is_ok());
}

#[test]
fn spec_errors_carry_locations() {
    let cases = [
        ("[groups.A]\ncyclic = 2\ncyclic = 3\n", "line"),
        ("[groups.A]\ncyclic = 2\nsymmetric = 3\n", "groups.A"),
        ("[groups.A]\ntable = [[0, 1], [0, 1]]\n", "groups.A.table"),
        ("[groups.A]\ncyclic = 2\n[xmods.x]\nkind = \"module\"\ng = \"A\"\nh = \"B\"\naction = [[0]]\n", "xmods.x.h"),
        ("[groups.A]\ncyclic = 2\n[xmods.x]\nkind = \"widget\"\nh = \"A\"\n", "xmods.x.kind"),
        ("[groups.A]\ncyclic = 2\n[xmods.x]\nkind = \"explicit\"\ng = \"A\"\nh = \"A\"\naction = [[0, 1]]\nboundary = [0, 1]\n", "xmods.x"),
        ("[groups.A]\ncyclic = 2\n[limits.l]\ng = \"A\"\nh = \"A\"\nk = \"A\"\ns = [1, 0]\nt = [0, 1]\n", "limits.l.s"),
        ("[pipeline]\nstages = [\"everything\"]\n", "pipeline.stages"),
        ("field = \"fp:9\"\n", "field"),
        ("[groups.A]\ncyclic = 300\n", "groups.A"),
    ];
    for (text, loc) in cases {
        let e = parse_spec(text, 200).unwrap_err();
        assert!(e.location.starts_with(loc), "{text:?}: {e}");
    }
}

#[test]
fn exit_codes() {
    let path = |n: &str| spec_path(n).to_str().unwrap().to_string();
    let (code, out, _) = xmodhopf(&["validate", &path("aut_z3.toml")]);
    assert_eq!(code, 0);
    assert!(out.ends_with(" checks, 0 failures\n"));
    let (code, out, _) = xmodhopf(&["full", "--report", "json", &path("corrupt_boundary.toml")]);
    assert_eq!(code, 1);
    let doc: ReportDocument = serde_json::from_str(&out).unwrap();
    assert!(doc
        .records
        .iter()
        .any(|r| r.id == "xmod.bad.boundary.homomorphism" && !r.passed));
    let dir = std::env::temp_dir().join(format!("xmodhopf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let broken = dir.join("broken.toml");
    std::fs::write(&broken, "[groups.A]\ncyclic = 2\nwhatever = 1\n").unwrap();
    let (code, _, err) = xmodhopf(&["validate", broken.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
    let (code, _, err) = xmodhopf(&["--field", "fp:2", "trialgebra", &path("aut_z3.toml")]);
    assert_eq!(code, 3, "{err}");
    let (code, _, _) = xmodhopf(&["peter-weyl", &path("trivial.toml")]);
    assert_eq!(code, 0);
    std::fs::write(&broken, read("aut_z3.toml").replace("prime = 7", "prime = 5")).unwrap();
    let (code, _, err) = xmodhopf(&["peter-weyl", broken.to_str().unwrap()]);
    assert_eq!(code, 3, "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn trivial_instance_is_fast() {
    let start = Instant::now();
    let (code, out, _) = xmodhopf(&["full", spec_path("trivial.toml").to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(start.elapsed() < Duration::from_secs(1));
}

#[test]
fn full_s3_pipeline_passes() {
    let (code, out, _) = xmodhopf(&["full", "--report", "json", spec_path("a3_s3.toml").to_str().unwrap()]);
    let doc: ReportDocument = serde_json::from_str(&out).unwrap();
    let failed: Vec<_> = doc.records.iter().filter(|r| !r.passed).map(|r| &r.id).collect();
    assert!(failed.is_empty(), "{failed:?}");
    assert_eq!(code, 0);
    for prefix in ["trialgebra.a3s3.", "cotrialgebra.a3s3.dual.", "rep.a3s3.", "coend.S3."] {
        assert!(doc.records.iter().any(|r| r.id.starts_with(prefix)), "{prefix}");
    }
}
