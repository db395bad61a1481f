use std::fmt;

use serde::Serialize;

use super::DiagramError;
use crate::fincat::{under_system, Functor};
use crate::homology::{is_homology_equivalence, simplicial_homology, EquivalenceReport};
use crate::sset::{nerve_map, Nerve};

/// The check for one morphism `α : i1 → i0`.
#[derive(Clone, Debug, Serialize)]
pub struct MorphismCheck {
    pub morphism: String,
    pub equivalence: EquivalenceReport,
}

/// The Theorem A comparison: contractibility of each `i↑f` and the direct
/// check of `N(f)`.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremACheck {
    /// objects `i` whose `i↑f` has trivial reduced homology through `up_to`
    pub contractible: Vec<(String, bool)>,
    pub all_contractible: bool,
    pub nerve_map: EquivalenceReport,
    /// false only if every `i↑f` is acyclic but `N(f)` is not a homology
    /// equivalence
    pub consistent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiFibrationReport {
    pub up_to: usize,
    pub morphisms: Vec<MorphismCheck>,
    pub is_quasi_fibration: bool,
    pub theorem_a: TheoremACheck,
}

impl fmt::Display for QuasiFibrationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.morphisms {
            let e = &m.equivalence;
            writeln!(
                f,
                "{}: {} (components bijective: {}, cone acyclic: {})",
                m.morphism,
                if e.holds { "equivalence" } else { "NOT an equivalence" },
                e.pi0_bijective,
                e.cone_acyclic
            )?;
        }
        writeln!(
            f,
            "{} through degree {}",
            if self.is_quasi_fibration { "QUASI-FIBRATION" } else { "NOT A QUASI-FIBRATION" },
            self.up_to
        )?;
        let t = &self.theorem_a;
        for (name, ok) in &t.contractible {
            writeln!(f, "under category at {name}: {}", if *ok { "acyclic" } else { "not acyclic" })?;
        }
        write!(
            f,
            "nerve of the functor: {}",
            if t.nerve_map.holds { "homology equivalence" } else { "not a homology equivalence" }
        )
    }
}

/// For every `α : i1 → i0` of `I`, whether `N(α↑f) : N(i0↑f) → N(i1↑f)` is
/// a homology equivalence through `up_to`; also the Theorem A comparison.
pub fn quasi_fibration_check(f: &Functor, up_to: usize) -> Result<QuasiFibrationReport, DiagramError> {
    let window = up_to + 1;
    let i_cat = f.codomain();
    let (system, _) = under_system(f)?;
    let nerves: Vec<Nerve> = system.fibers().iter().map(|c| Nerve::new(c, window)).collect();
    let morphisms = (0..i_cat.morphism_count())
        .map(|a| {
            let map = nerve_map(system.transition(a), &nerves[i_cat.target(a)], &nerves[i_cat.source(a)])?;
            Ok(MorphismCheck { morphism: i_cat.label(a).to_string(), equivalence: is_homology_equivalence(&map, up_to)? })
        })
        .collect::<Result<Vec<_>, DiagramError>>()?;
    let is_quasi_fibration = morphisms.iter().all(|m| m.equivalence.holds);
    let contractible = nerves
        .iter()
        .enumerate()
        .map(|(i, n)| Ok((i_cat.object_label(i).to_string(), simplicial_homology(&n.set)?.reduced_vanishes_through(up_to))))
        .collect::<Result<Vec<_>, DiagramError>>()?;
    let all_contractible = contractible.iter().all(|(_, ok)| *ok);
    let source = Nerve::new(f.domain(), window);
    let target = Nerve::new(i_cat, window);
    let nf = nerve_map(f, &source, &target)?;
    let direct = is_homology_equivalence(&nf, up_to)?;
    let consistent = !all_contractible || direct.holds;
    Ok(QuasiFibrationReport {
        up_to,
        morphisms,
        is_quasi_fibration,
        theorem_a: TheoremACheck { contractible, all_contractible, nerve_map: direct, consistent },
    })
}
