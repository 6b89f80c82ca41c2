use super::props::{complexes, homs, modules, relative, sums};
use super::{Gen, Trial};
use crate::Result;

pub(super) type Check = fn(&mut Gen) -> Result<Trial>;

/// A property suite: identifier, statement, and the trial it runs.
pub struct Property {
    pub id: &'static str,
    pub statement: &'static str,
    pub(super) check: Check,
}

macro_rules! props {
    ($($id:literal, $f:path, $s:literal;)*) => {
        &[$(Property { id: $id, statement: $s, check: $f }),*]
    };
}

pub static PROPERTIES: &[Property] = props![
    "P3.1-a", modules::p31_a, "h = g iff h_D = g_D";
    "P3.1-b", modules::p31_b, "h in M iff h_D in M_D";
    "P3.1-c", modules::p31_c, "M in N iff M_D in N_D";
    "P3.1-d", modules::p31_d, "M = N iff M_D = N_D";
    "C3.2", modules::c32, "h -> h_D is an injective additive map";
    "DOUBLE-GEN", modules::double_gen, "closed-form generators of M_D span {h_D : h = m g_i, deg m <= 5}";
    "T3.3", homs::t33, "phi_D(h_D) = (phi(h))_D";
    "P3.4-a", homs::p34_a, "Im(phi_D) = (Im phi)_D";
    "P3.4-b", homs::p34_b, "(Ker phi)_D inside Ker(phi_D), strict cases logged";
    "P3.9-a", homs::p39_a, "phi = phi' iff phi_D = phi'_D";
    "P3.9-b", homs::p39_b, "(gamma o phi)_D = gamma_D o phi_D";
    "P3.9-c", homs::p39_c, "(phi + phi')_D = phi_D + phi'_D";
    "C3.5-a", homs::c35_a, "phi surjective iff phi_D surjective";
    "C3.5-b", homs::c35_b, "phi_D injective implies phi injective";
    "C3.5-c", homs::c35_c, "phi isomorphism iff phi_D isomorphism";
    "C3.5-d", homs::c35_d, "phi zero iff phi_D zero";
    "L3.19", homs::l319, "matrix-induced maps are well defined on the module";
    "P3.20", homs::p320, "phi_D is given by diag(A o pi1, A o pi2)";
    "T3.21", sums::t321, "eta: (M + N)_D -> M_D + N_D and its inverse";
    "C3.22", sums::c322, "three-fold sums: iterated eta equals the direct permutation";
    "P3.1.13-b", modules::p3113_b, "finite colength of M_D in N_D forces finite, smaller colength of M in N";
    "P3.6", complexes::p36, "C_D is a complex";
    "P3.8", complexes::p38, "C_D exact implies C exact";
    "P3.10", complexes::p310, "alpha_D is a chain map";
    "C3.11", complexes::c311, "(beta o alpha)_D = beta_D o alpha_D";
    "L3.12", complexes::l312, "tilde(mu_D) = tilde(mu)_D";
    "P3.13", complexes::p313, "mu homotopy alpha ~ beta iff mu_D homotopy alpha_D ~ beta_D";
    "C3.14", complexes::c314, "homotopy equivalences double to homotopy equivalences";
    "C3.15", complexes::c315, "contractions double to contractions";
    "T3.16-faithful", homs::t316_faithful, "phi_D = phi'_D implies phi = phi'";
    "T3.16-objects", modules::t316_objects, "M_D = N_D implies M = N";
    "C3.18", homs::c318, "mono, epi and iso correspond";
    "RANK-EVEN", modules::rank_even, "generic rank of M_D is even";
    "Q4-module", modules::q4_module, "(M/W)_D = M_D / W_D";
    "Q4-coset", modules::q4_coset, "(h + W)_D is independent of the representative";
    "L3.23", relative::l323, "moving one slot at a time along the germ gives phi_tensor";
    "T3.24", relative::t324, "relative double: phi_D(h_D) = (phi(h))_D";
    "P3.25", relative::p325, "(phi' o phi)_D = phi'_D o phi_D along composed germs";
];

/// Numbered results and the suites covering them.
pub static COVERAGE: &[(&str, &[&str])] = &[
    ("P3.1", &["P3.1-a", "P3.1-b", "P3.1-c", "P3.1-d"]),
    ("C3.2", &["C3.2"]),
    ("T3.3", &["T3.3", "DOUBLE-GEN"]),
    ("P3.4", &["P3.4-a", "P3.4-b"]),
    ("P3.9", &["P3.9-a", "P3.9-b", "P3.9-c"]),
    ("C3.5", &["C3.5-a", "C3.5-b", "C3.5-c", "C3.5-d"]),
    ("L3.19", &["L3.19"]),
    ("P3.20", &["P3.20"]),
    ("T3.21", &["T3.21"]),
    ("C3.22", &["C3.22"]),
    ("P3.1.13", &["P3.1.13-b"]),
    ("P3.6", &["P3.6"]),
    ("D3.7", &["P3.6"]),
    ("P3.8", &["P3.8"]),
    ("P3.10", &["P3.10"]),
    ("C3.11", &["C3.11"]),
    ("L3.12", &["L3.12"]),
    ("P3.13", &["P3.13"]),
    ("C3.14", &["C3.14"]),
    ("C3.15", &["C3.15"]),
    ("T3.16", &["T3.16-faithful", "T3.16-objects"]),
    ("C3.17", &["T3.16-faithful", "T3.16-objects"]),
    ("C3.18", &["C3.18"]),
    ("REMARK-RANK", &["RANK-EVEN"]),
    ("QUOTIENTS", &["Q4-module", "Q4-coset"]),
    ("L3.23", &["L3.23"]),
    ("T3.24", &["T3.24"]),
    ("P3.25", &["P3.25"]),
];

/// Results with no suite, and why.
pub static OUT_OF_SCOPE: &[(&str, &str)] = &[(
    "P3.1.13-a",
    "finite length of a submodule of a free module over a polynomial ring in at least one variable forces it to be zero",
)];

pub fn find(id: &str) -> Option<&'static Property> {
    PROPERTIES.iter().find(|p| p.id == id)
}
