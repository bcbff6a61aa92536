//! Configuration parsing, table serialization, decoding and verification
//! through the library interface.

use std::sync::OnceLock;

use code_core::{parse_vector, ErrorPattern};
use decoder_cli::{
    decode, exit_code, predict_weight, verify_exhaustive, BuildOptions, CodeConfig, DecodeStatus, DecoderError,
    DecoderTables, Received,
};
use decoding_ideals::{Flavor, Variant};
use mpoly::Elem;

fn fixture_text(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}.conf", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

fn fixture(name: &str) -> CodeConfig {
    CodeConfig::parse(&fixture_text(name), name).unwrap()
}

fn hermitian() -> &'static DecoderTables {
    static TABLES: OnceLock<DecoderTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let options = BuildOptions { evaluator: true, ..BuildOptions::default() };
        DecoderTables::build(&fixture("hermitian_q2"), &options).unwrap()
    })
}

fn vector(tables: &DecoderTables, text: &str) -> Vec<Elem> {
    parse_vector(tables.code().field(), text).unwrap()
}

fn pattern(tables: &DecoderTables, entries: &[(usize, &str)]) -> ErrorPattern {
    let field = tables.code().field();
    ErrorPattern::new(entries.iter().map(|&(j, v)| (j, field.parse_elem(v).unwrap())).collect()).unwrap()
}

const HERMITIAN_T0: &str = "
[field] p=2 k=2
[ring] vars=x,y
[variety] gen=y^2+y+x^3
[code] L=1 L=x t=0
";

#[test]
fn fixture_configs_parse() {
    let config = fixture("hermitian_q2");
    assert_eq!(config.name, "hermitian_q2");
    assert_eq!(config.field.order(), 4);
    assert_eq!(config.functions.len(), 5);
    assert_eq!(config.t, 2);
    assert_eq!(config.points.as_ref().map(Vec::len), Some(8));
    assert_eq!(config.ghost, Some(vec![config.field.one(), config.field.one()]));
    for name in ["sdg_curve_f8", "sdg_surface1_f4", "sdg_surface2_f4", "norm_trace_f8"] {
        let config = fixture(name);
        assert_eq!(config.t, 1, "{name}");
        assert_eq!(config.ideal, Some(Variant::Fl), "{name}");
        assert_eq!(config.code().unwrap().n(), 32, "{name}");
    }
    assert_eq!(fixture("mds_f7").code().unwrap().n(), 5);
}

#[test]
fn config_render_reads_back() {
    for name in ["hermitian_q2", "sdg_surface2_f4", "mds_f7"] {
        let config = fixture(name);
        assert_eq!(CodeConfig::parse(&config.render(), "other").unwrap(), config, "{name}");
    }
}

#[test]
fn config_name_defaults_to_the_given_one() {
    assert_eq!(CodeConfig::parse(HERMITIAN_T0, "plain").unwrap().name, "plain");
}

#[test]
fn config_values_may_contain_spaces() {
    let text = HERMITIAN_T0.replace("gen=y^2+y+x^3", "gen=y^2 + y + x^3");
    assert_eq!(CodeConfig::parse(&text, "c").unwrap(), CodeConfig::parse(HERMITIAN_T0, "c").unwrap());
}

fn config_error_line(text: &str) -> usize {
    match CodeConfig::parse(text, "c") {
        Err(DecoderError::Config { line, .. }) => line,
        other => panic!("expected a configuration error, got {other:?}"),
    }
}

#[test]
fn config_errors_carry_line_numbers() {
    assert_eq!(config_error_line(&HERMITIAN_T0.replace("gen=y^2+y+x^3", "gen=y^2+z")), 4);
    assert_eq!(config_error_line(&HERMITIAN_T0.replace("[code]", "[cdoe]")), 5);
    assert_eq!(config_error_line(&HERMITIAN_T0.replace("t=0", "t=two")), 5);
    assert_eq!(config_error_line(&format!("{HERMITIAN_T0}[decoder] ghost=(0,0,0)\n")), 6);
    assert_eq!(config_error_line("x=1\n"), 1);
}

#[test]
fn config_rejects_a_bad_primitive_polynomial() {
    let text = HERMITIAN_T0.replace("k=2", "k=2 primitive=1,0,1");
    assert!(matches!(CodeConfig::parse(&text, "c"), Err(DecoderError::Config { line: 2, .. })));
}

#[test]
fn stuffed_tables_need_the_ghost_point_ideal() {
    let options = BuildOptions { flavor: Some(Flavor::Stuffed), ..BuildOptions::default() };
    let err = DecoderTables::build(&fixture("sdg_surface1_f4"), &options).unwrap_err();
    assert_eq!(err.exit_code(), exit_code::INVALID_INPUT);
}

#[test]
fn tables_read_back_identically() {
    let tables = hermitian();
    let reread = DecoderTables::from_text(&tables.to_text()).unwrap();
    assert_eq!(&reread, tables);
    assert_eq!(reread.to_text(), tables.to_text());

    let weak = DecoderTables::build(&fixture("sdg_curve_f8"), &BuildOptions::default()).unwrap();
    assert_eq!(weak.flavor(), Flavor::Weak);
    assert_eq!(DecoderTables::from_text(&weak.to_text()).unwrap(), weak);
}

#[test]
fn corrupted_tables_are_rejected() {
    let text = hermitian().to_text();
    let broken = text.replace("version=1", "version=7");
    assert!(DecoderTables::from_text(&broken).is_err());
    let cut = &text[..text.find("[locators]").unwrap()];
    assert!(DecoderTables::from_text(cut).is_err());
}

#[test]
fn hermitian_tables_have_the_expected_shape() {
    let tables = hermitian();
    assert_eq!(tables.flavor(), Flavor::Stuffed);
    assert_eq!(tables.metadata().ideal, Variant::Star);
    assert_eq!(tables.metadata().basis_size, 32);
    assert_eq!(tables.locators().unwrap().degrees(), &[2, 2]);
    assert_eq!(tables.evaluator().unwrap().t(), 2);
}

#[test]
fn hermitian_worked_syndromes_decode() {
    let tables = hermitian();
    let cases = [
        ("0,1,1,1,0", pattern(tables, &[(5, "1"), (6, "1")])),
        ("g^2,0,g,0,0", pattern(tables, &[(0, "1"), (1, "g")])),
        ("g^2,g^2,1,g^2,1", pattern(tables, &[(2, "g^2")])),
    ];
    for (syndrome, expected) in cases {
        let s = vector(tables, syndrome);
        let result = decode(tables, Received::Syndrome(&s)).unwrap();
        assert_eq!(result.status, DecodeStatus::Corrected, "{syndrome}");
        assert_eq!(result.pattern.as_ref(), Some(&expected), "{syndrome}");
        assert_eq!(result.consistent, vec![expected], "{syndrome}");
    }
}

#[test]
fn received_word_is_corrected() {
    let tables = hermitian();
    let code = tables.code();
    let zero = code.field().zero();
    let error = pattern(tables, &[(1, "g"), (4, "1")]);
    let word = error.to_vector(code.n());
    let result = decode(tables, Received::Word(&word)).unwrap();
    assert_eq!(result.status, DecodeStatus::Corrected);
    assert_eq!(result.pattern, Some(error));
    assert_eq!(result.corrected_word, Some(vec![zero; code.n()]));
}

#[test]
fn zero_syndrome_means_no_error() {
    let tables = hermitian();
    let s = vec![tables.code().field().zero(); 5];
    let result = decode(tables, Received::Syndrome(&s)).unwrap();
    assert_eq!(result.status, DecodeStatus::NoError);
    assert_eq!(result.pattern, Some(ErrorPattern::empty()));
}

#[test]
fn syndromes_of_three_errors_are_not_corrected_as_something_else() {
    let tables = hermitian();
    let code = tables.code();
    let error = pattern(tables, &[(0, "1"), (3, "g"), (7, "1")]);
    let s = code.pattern_syndrome(&error).unwrap();
    let result = decode(tables, Received::Syndrome(&s)).unwrap();
    match result.status {
        DecodeStatus::NotCorrectable => assert_eq!(result.pattern, None),
        DecodeStatus::Corrected => {
            let found = result.pattern.unwrap();
            assert!(found.weight() <= 2);
            assert_eq!(code.pattern_syndrome(&found).unwrap(), s);
        }
        other => panic!("unexpected status {other}"),
    }
}

#[test]
fn wrong_syndrome_length_is_an_input_error() {
    let tables = hermitian();
    let s = vector(tables, "1,1");
    let err = decode(tables, Received::Syndrome(&s)).unwrap_err();
    assert_eq!(err.exit_code(), exit_code::INVALID_INPUT);
}

#[test]
fn evaluator_predicts_the_worked_weights() {
    let tables = hermitian();
    for (syndrome, weight) in [("0,1,1,1,0", 2), ("g^2,0,g,0,0", 2), ("g^2,g^2,1,g^2,1", 1)] {
        let prediction = predict_weight(tables, &vector(tables, syndrome)).unwrap();
        assert_eq!(prediction.weight, weight, "{syndrome}");
    }
    let prediction = predict_weight(tables, &vector(tables, "g^2,0,g,0,0")).unwrap();
    let mut values = prediction.values;
    values.sort();
    let mut expected = vector(tables, "1,g");
    expected.sort();
    assert_eq!(values, expected);
}

#[test]
fn missing_evaluator_is_reported() {
    let tables = DecoderTables::build(&fixture("sdg_surface1_f4"), &BuildOptions::default()).unwrap();
    let s = vec![tables.code().field().zero(); tables.code().r()];
    assert_eq!(predict_weight(&tables, &s), Err(DecoderError::EvaluatorMissing));
}

#[test]
fn hermitian_verification_is_exhaustive() {
    let report = verify_exhaustive(hermitian());
    assert_eq!(report.total, 277);
    assert_eq!(report.exact, 277);
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn weak_hermitian_locators_still_decode_every_error() {
    let options = BuildOptions { flavor: Some(Flavor::Weak), ..BuildOptions::default() };
    let tables = DecoderTables::build(&fixture("hermitian_q2"), &options).unwrap();
    assert_eq!(tables.flavor(), Flavor::Weak);
    let report = verify_exhaustive(&tables);
    assert_eq!(report.exact, 277);
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn single_error_fixtures_verify() {
    for (name, total) in [("sdg_curve_f8", 225), ("sdg_surface1_f4", 97), ("sdg_surface2_f4", 97), ("norm_trace_f8", 225)]
    {
        let tables = DecoderTables::build(&fixture(name), &BuildOptions::default()).unwrap();
        let report = verify_exhaustive(&tables);
        assert_eq!(report.total, total, "{name}");
        assert!(report.passed(), "{name}: {}", report.summary());
    }
}

#[test]
fn swapped_coordinate_order_decodes_the_same() {
    let options = BuildOptions { coordinate_order: Some(vec!["y".into(), "x".into()]), ..BuildOptions::default() };
    let tables = DecoderTables::build(&fixture("sdg_curve_f8"), &options).unwrap();
    assert_eq!(tables.coordinate_order(), &[1, 0]);
    assert!(verify_exhaustive(&tables).passed());
}

#[test]
fn codes_without_error_correction_have_trivial_tables() {
    let config = CodeConfig::parse(HERMITIAN_T0, "t0").unwrap();
    let tables = DecoderTables::build(&config, &BuildOptions::default()).unwrap();
    assert!(tables.locators().is_none());
    let report = verify_exhaustive(&tables);
    assert_eq!((report.total, report.exact), (1, 1));
    assert!(report.passed());
    let s = vector(&tables, "1,0");
    assert_eq!(decode(&tables, Received::Syndrome(&s)).unwrap().status, DecodeStatus::NotCorrectable);
    assert_eq!(predict_weight(&tables, &s).unwrap().weight, 0);
    assert_eq!(DecoderTables::from_text(&tables.to_text()).unwrap(), tables);
}
