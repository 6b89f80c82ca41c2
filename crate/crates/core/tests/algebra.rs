//! Invariants of the polynomial and module layers on seeded random instances.

use doublekit::module::Matrix;
use doublekit::verify::{Gen, InstanceSpec};
use doublekit::{ModuleElement, Polynomial, Submodule};
use proptest::prelude::*;

fn gen(seed: u64) -> Gen {
    Gen::new(&InstanceSpec::default(), seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(seed in any::<u64>()) {
        let mut g = gen(seed);
        let r = g.ring();
        let (a, b, c) = (g.poly(&r), g.poly(&r), g.poly(&r));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(&r), a.clone());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }
    }

    #[test]
    fn printing_round_trips(seed in any::<u64>()) {
        let mut g = gen(seed);
        let r = g.ring();
        let p = g.poly(&r);
        prop_assert_eq!(Polynomial::parse(&r, &p.to_string()).unwrap(), p);
        let rank = g.rank();
        let h = g.element(&r, rank);
        prop_assert_eq!(ModuleElement::parse(&r, &h.to_string()).unwrap(), h);
    }

    #[test]
    fn generated_members_are_members_with_lifts(seed in any::<u64>()) {
        let mut g = gen(seed);
        let r = g.ring();
        let p = g.rank();
        let m = g.submodule(&r, p);
        let h = g.member_of(&m);
        prop_assert!(m.contains(&h).unwrap());
        let coeffs = m.lift(&h).unwrap().expect("member has a lift");
        let back = ModuleElement::combination(&r, p, &coeffs, m.generators());
        prop_assert_eq!(back, h);
        prop_assert!(m.normal_form(&g.member_of(&m)).unwrap().is_zero());
    }

    #[test]
    fn normal_forms_decide_cosets(seed in any::<u64>()) {
        let mut g = gen(seed);
        let r = g.ring();
        let p = g.rank();
        let m = g.submodule(&r, p);
        let h = g.element(&r, p);
        let nf = m.normal_form(&h).unwrap();
        prop_assert_eq!(m.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(m.contains(&h.sub(&nf)).unwrap());
        prop_assert_eq!(nf.is_zero(), m.contains(&h).unwrap());
        let shifted = h.add(&g.member_of(&m));
        prop_assert_eq!(m.normal_form(&shifted).unwrap(), nf);
    }

    #[test]
    fn groebner_bases_generate_the_module(seed in any::<u64>()) {
        let mut g = gen(seed);
        let r = g.ring();
        let p = g.rank();
        let m = g.submodule(&r, p);
        let gb = Submodule::new(&r, p, m.groebner()).unwrap();
        prop_assert!(gb.module_eq(&m).unwrap());
        prop_assert!(g.regenerate(&m).module_eq(&m).unwrap());
        let n = g.submodule_of(&m);
        prop_assert!(m.contains_module(&n).unwrap());
    }

    #[test]
    fn syzygies_are_relations(seed in any::<u64>()) {
        let mut g = gen(seed);
        let r = g.ring();
        let p = g.rank();
        let m = g.submodule(&r, p);
        for s in m.syzygies().generators() {
            let v = ModuleElement::combination(&r, p, s.components(), m.generators());
            prop_assert!(v.is_zero(), "syzygy {} gives {}", s, v);
        }
    }

    #[test]
    fn kernels_and_images(seed in any::<u64>()) {
        let mut g = gen(seed);
        let f = g.hom().hom;
        for k in f.kernel().generators() {
            prop_assert!(f.apply(k).unwrap().is_zero());
        }
        let im = f.image();
        for h in f.generator_images() {
            prop_assert!(im.contains(&h).unwrap());
        }
        prop_assert!(f.codomain().contains_module(&im).unwrap());
        let a = Matrix::from_columns(f.domain().ring(), f.codomain().rank(), &f.generator_images());
        prop_assert_eq!(a.cols(), f.domain().generators().len());
    }
}
