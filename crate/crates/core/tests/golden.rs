//! Byte-for-byte regression fixtures from seeded reference runs.

use std::path::Path;

use dynembed::embedding::{build_static_embedding, export_embedding, import_embedding};
use dynembed::harness::{
    generate_instance, parse_ratio_csv, run_dynamic_eval, stream_rng, write_ratio_csv, ExperimentConfig, Mode, Stream,
};

fn fixture(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)).unwrap()
}

#[test]
fn seeded_n10_embedding_export() {
    let cfg = ExperimentConfig {
        n: 10,
        max_weight: 20,
        seed: 10,
        ..Default::default()
    };
    let inst = generate_instance(&cfg, &mut stream_rng(cfg.seed, Stream::Instance)).unwrap();
    let built =
        build_static_embedding(&inst.graph, &cfg.decomposition, &mut stream_rng(cfg.seed, Stream::Algorithm)).unwrap();
    let text = export_embedding(&built.embedding);
    let expected = fixture("embedding_n10.txt");
    assert_eq!(text, expected);
    let back = import_embedding(&expected, &cfg.decomposition).unwrap();
    assert_eq!(export_embedding(&back), expected);
}

#[test]
fn seeded_n20_ratio_csv() {
    let cfg = ExperimentConfig {
        mode: Mode::DynamicEval,
        n: 20,
        max_weight: 50,
        updates: 50,
        seed: 20,
        ..Default::default()
    };
    let run = run_dynamic_eval(&cfg).unwrap();
    let mut out = Vec::new();
    write_ratio_csv(&run.series, &mut out).unwrap();
    let expected = fixture("ratios_n20_q50.csv");
    assert_eq!(String::from_utf8(out).unwrap(), expected);
    let parsed = parse_ratio_csv(expected.as_bytes()).unwrap();
    assert_eq!(parsed.rows.len(), 51);
    assert!(parsed.exact_monotone());
}
