use doublekit::verify::{Gen, InstanceSpec};
use doublekit_cli::{exec_command, parse_session, run_session, Command, Session, Value};
use proptest::prelude::*;

/// Session text for a random hom, a random germ and a random complex, as written by the
/// verifier's replay recorder.
fn drawn_session(seed: u64) -> String {
    let spec = InstanceSpec::default();
    let mut g = Gen::new(&spec, seed);
    let f = g.hom();
    let r = f.hom.domain().ring().clone();
    let t = doublekit::PolyRing::new(["t", "u"]).unwrap();
    g.monomial_germ(&r, &t, 3);
    let mut text = g.replay.text();
    text.push_str(&format!(
        "run member {} {};\nrun double {};\nrun verify P3.9-a --trials 2 --seed {seed};\n",
        f.domain,
        doublekit::ModuleElement::zero(&r, f.hom.domain().rank()),
        f.name
    ));
    text
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_then_parse_is_identity(seed in any::<u64>()) {
        let text = drawn_session(seed);
        let s = parse_session(&text).unwrap();
        let printed = s.to_string();
        let again = parse_session(&printed).unwrap();
        prop_assert_eq!(&s, &again);
        prop_assert_eq!(printed, again.to_string());
    }

    #[test]
    fn commands_print_canonically(seed in any::<u64>()) {
        let s = parse_session(&drawn_session(seed)).unwrap();
        for c in s.commands() {
            let again = Command::parse(&s, &c.to_string()).unwrap();
            prop_assert_eq!(c, &again);
        }
    }
}

#[test]
fn bindings_and_transcript() {
    let s = parse_session(
        "ring R vars x;\nmodule M in R^1 gens [(x)];\nrun double M;\nrun member M_D (x^2, y^2);\n",
    )
    .unwrap();
    assert_eq!(s.len(), 2);
    let t = run_session(&s);
    assert!(t.ok);
    assert_eq!(
        t.stdout,
        "> double M\nring R_D vars x y;\nmodule M_D in R_D^2 gens [(x, y), (0, (y - x)*y)];\n\
         > member M_D (x^2, y^2)\ntrue\n"
    );
    assert!(t.stderr.is_empty());
}

#[test]
fn doubled_bindings_match_doubles() {
    let s = parse_session(
        "ring R vars x1 x2;\nmodule M in R^1 gens [(x1), (x2)];\nmodule N in R^1 gens [(1)];\n\
         hom f : M -> N matrix [[x1]];\n",
    )
    .unwrap();
    let Some(Value::Hom { hom, domain, codomain }) = s.resolve("f_D").unwrap() else {
        panic!("f_D is a hom");
    };
    assert_eq!((domain.as_str(), codomain.as_str()), ("M_D", "N_D"));
    let Some(Value::Module { module, .. }) = s.resolve("M_D").unwrap() else {
        panic!("M_D is a module");
    };
    assert!(hom.domain().module_eq(&module).unwrap());
    let kernel = Command::parse(&s, "kernel f_D").unwrap();
    let out = exec_command(&s, &kernel).unwrap();
    assert!(out.text.starts_with("module ker_f_D in R_D^2 gens ["));
}

#[test]
fn errors_name_the_binding() {
    let s = parse_session("ring R vars x;\nmodule M in R^1 gens [(x)];\nmodule N in R^1 gens [(x^2)];\n")
        .unwrap();
    let e = exec_command(&s, &Command::parse(&s, "colength M N").unwrap()).unwrap_err();
    assert!(e.to_string().contains("M, N: not contained"), "{e}");
}

#[test]
fn parse_errors_report_file_positions() {
    let e = Session::parse("ring R vars x;\n\nrun member M (x);\n").unwrap_err();
    assert_eq!(e.to_string(), "<input>:3:12: unresolved name `M`");
    let e = Session::parse("ring R vars x;\nrun member R (x);\n").unwrap_err();
    assert!(e.to_string().starts_with("<input>:2:12:"), "{e}");
    let e = Session::parse("ring R vars x;\nmodule M in R^1 gens [(x)];\nrun member M (x, ;\n")
        .unwrap_err();
    assert!(e.to_string().starts_with("<input>:3:"), "{e}");
}
