use std::sync::Arc;

use crate::complex::ChainComplex;
use crate::module::{Matrix, Submodule};
use crate::poly::{PolyRing, RingMorphism};

/// Session text describing the objects of one trial, in the command-line session syntax.
#[derive(Debug, Clone, Default)]
pub struct Replay {
    rings: Vec<(Arc<PolyRing>, String)>,
    modules: Vec<(String, String)>,
    lines: Vec<String>,
    counter: usize,
}

fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

impl Replay {
    fn fresh(&mut self, prefix: &str) -> String {
        self.counter += 1;
        format!("{prefix}{}", self.counter)
    }

    /// Name of `ring`, declaring it on first use.
    pub fn ring(&mut self, ring: &Arc<PolyRing>) -> String {
        if let Some((_, n)) = self.rings.iter().find(|(r, _)| r == ring) {
            return n.clone();
        }
        let name = format!("R{}", self.rings.len() + 1);
        self.lines
            .push(format!("ring {name} vars {};", ring.var_names().join(" ")));
        self.rings.push((ring.clone(), name.clone()));
        name
    }

    pub fn module(&mut self, m: &Submodule) -> String {
        let r = self.ring(m.ring());
        let body = format!("in {r}^{} gens [{}];", m.rank(), list(m.generators()));
        if let Some((_, n)) = self.modules.iter().find(|(b, _)| b == &body) {
            return n.clone();
        }
        let name = self.fresh("M");
        self.lines.push(format!("module {name} {body}"));
        self.modules.push((body, name.clone()));
        name
    }

    pub fn hom(&mut self, domain: &str, codomain: &str, a: &Matrix) -> String {
        let name = self.fresh("f");
        self.lines
            .push(format!("hom {name} : {domain} -> {codomain} matrix {a};"));
        name
    }

    pub fn germ(&mut self, f: &RingMorphism) -> String {
        let (s, t) = (self.ring(f.source()), self.ring(f.target()));
        let name = self.fresh("g");
        self.lines.push(format!(
            "germ {name} : {s} -> {t} sends [{}];",
            list(f.images())
        ));
        name
    }

    pub fn relative_hom(
        &mut self,
        germ: &str,
        domain: &str,
        codomain: &str,
        images: &[crate::ModuleElement],
    ) -> String {
        let name = self.fresh("f");
        self.lines.push(format!(
            "hom {name} : {domain} -> {codomain} over {germ} images [{}];",
            list(images)
        ));
        name
    }

    pub fn complex(&mut self, c: &ChainComplex) -> String {
        let mods: Vec<String> = c
            .degrees()
            .rev()
            .map(|i| self.module(&c.module(i)))
            .collect();
        let mut diffs = Vec::new();
        for (k, i) in c
            .degrees()
            .rev()
            .enumerate()
            .take(mods.len().saturating_sub(1))
        {
            diffs.push(self.hom(&mods[k], &mods[k + 1], c.differential(i).matrix()));
        }
        let name = self.fresh("C");
        self.lines.push(format!(
            "complex {name} modules [{}] diffs [{}] low {};",
            mods.join(", "),
            diffs.join(", "),
            c.low()
        ));
        name
    }

    pub fn comment(&mut self, text: &str) {
        self.lines.push(format!("# {text}"));
    }

    pub fn text(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }
}
