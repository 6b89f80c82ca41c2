use std::fmt;

use super::{double_element, double_matrix_hom, double_module, DoubleContext};
use crate::module::{generic_rank, Matrix, MatrixHom, Submodule};
use crate::Result;

/// One check of [`functor_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: &'static str,
    pub subject: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Default)]
pub struct FunctorReport {
    pub entries: Vec<CheckEntry>,
}

impl FunctorReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    fn record(&mut self, name: &'static str, subject: String, outcome: Result<bool>) {
        self.entries.push(CheckEntry {
            name,
            subject,
            passed: outcome.unwrap_or(false),
        });
    }
}

impl fmt::Display for FunctorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(
                f,
                "{} {} {}",
                if e.passed { "ok  " } else { "FAIL" },
                e.name,
                e.subject
            )?;
        }
        Ok(())
    }
}

fn same_ambient(a: &Submodule, b: &Submodule) -> bool {
    a.ring() == b.ring() && a.rank() == b.rank()
}

/// Runs the functoriality checks on a sample. Errors inside a check count as failures.
pub fn functor_check(
    ctx: &DoubleContext,
    modules: &[Submodule],
    homs: &[MatrixHom],
) -> FunctorReport {
    let mut report = FunctorReport::default();
    for (i, m) in modules.iter().enumerate() {
        report.record(
            "rank-even",
            format!("M{i}"),
            (|| Ok(generic_rank(double_module(ctx, m)?.value()).is_multiple_of(2)))(),
        );
        report.record(
            "identity",
            format!("M{i}"),
            (|| {
                let d = double_matrix_hom(ctx, &MatrixHom::identity(m))?;
                Ok(d.matrix() == &Matrix::identity(ctx.doubled(), 2 * m.rank()))
            })(),
        );
        for (j, n) in modules.iter().enumerate().skip(i + 1) {
            if !same_ambient(m, n) {
                continue;
            }
            report.record(
                "module-eq",
                format!("M{i} M{j}"),
                (|| {
                    let md = double_module(ctx, m)?;
                    let nd = double_module(ctx, n)?;
                    Ok(m.module_eq(n)? == md.value().module_eq(nd.value())?)
                })(),
            );
        }
    }
    let doubles: Vec<_> = homs.iter().map(|phi| double_matrix_hom(ctx, phi)).collect();
    for (i, (phi, d)) in homs.iter().zip(&doubles).enumerate() {
        let subject = format!("f{i}");
        let d = match d {
            Ok(d) => d.hom(),
            Err(_) => {
                report.record("double", subject, Ok(false));
                continue;
            }
        };
        report.record(
            "defining-identity",
            subject.clone(),
            (|| {
                for g in phi.domain().generators() {
                    if d.apply(&double_element(ctx, g)?)? != double_element(ctx, &phi.apply(g)?)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            })(),
        );
        report.record(
            "image",
            subject.clone(),
            (|| {
                d.image()
                    .module_eq(double_module(ctx, &phi.image())?.value())
            })(),
        );
        report.record(
            "kernel-inclusion",
            subject.clone(),
            (|| {
                let kd = double_module(ctx, &phi.kernel())?;
                for g in kd.value().generators() {
                    if !d.apply(g)?.is_zero() || !d.domain().contains(g)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            })(),
        );
        report.record(
            "surjective",
            subject.clone(),
            (|| Ok(phi.is_surjective()? == d.is_surjective()?))(),
        );
        report.record(
            "injective",
            subject.clone(),
            Ok(!d.is_injective() || phi.is_injective()),
        );
        report.record(
            "zero-map",
            subject.clone(),
            Ok(phi.is_zero_map() == d.is_zero_map()),
        );
    }
    for (i, phi) in homs.iter().enumerate() {
        for (j, psi) in homs.iter().enumerate() {
            let (Ok(dphi), Ok(dpsi)) = (&doubles[i], &doubles[j]) else {
                continue;
            };
            if j > i
                && same_ambient(phi.domain(), psi.domain())
                && same_ambient(phi.codomain(), psi.codomain())
            {
                report.record(
                    "hom-eq",
                    format!("f{i} f{j}"),
                    (|| {
                        if !phi.domain().module_eq(psi.domain())? {
                            return Ok(true);
                        }
                        Ok(phi.eq_on_domain(psi)? == dphi.hom().eq_on_domain(dpsi.hom())?)
                    })(),
                );
            }
            // psi ∘ phi
            if !same_ambient(phi.codomain(), psi.domain())
                || !psi
                    .domain()
                    .contains_module(phi.codomain())
                    .unwrap_or(false)
            {
                continue;
            }
            report.record(
                "composition",
                format!("f{j}∘f{i}"),
                (|| {
                    let whole = double_matrix_hom(ctx, &psi.compose_unverified(phi))?;
                    let parts = dpsi.hom().compose_unverified(dphi.hom());
                    whole.hom().eq_on_domain(&parts)
                })(),
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ModuleElement, PolyRing, Polynomial};

    #[test]
    fn samples() {
        let r = PolyRing::new(["x"]).unwrap();
        let ctx = DoubleContext::new(&r).unwrap();
        let m = Submodule::new(&r, 1, vec![ModuleElement::parse(&r, "(x)").unwrap()]).unwrap();
        let free = Submodule::free(&r, 1);
        let report = functor_check(&ctx, &[m.clone(), free.clone()], &[MatrixHom::identity(&m)]);
        assert!(report.all_passed(), "{report}");

        let x = Matrix::from_rows(&r, 1, 1, vec![vec![Polynomial::var(&r, 0)]]).unwrap();
        let mul = MatrixHom::new(free.clone(), m.clone(), x).unwrap();
        assert!(mul.is_surjective().unwrap());
        let zero = MatrixHom::zero(&m, &free).unwrap();
        let report = functor_check(&ctx, &[], &[mul, zero]);
        assert!(report.all_passed(), "{report}");
        assert!(report.entries.iter().any(|e| e.name == "composition"));
        assert!(report.entries.iter().any(|e| e.name == "zero-map"));
    }
}
