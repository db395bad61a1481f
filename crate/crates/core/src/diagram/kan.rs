use super::{DiagramError, SpaceDiagram, Variance};
use crate::fincat::{over_category, CommaCategory, Functor, Ob};
use crate::sset::{finite_colimit, Colimit, SimplicialMap};

/// `Lan_f X` with the colimits it is built from and the unit `X → f*Lan_f X`.
#[derive(Clone, Debug)]
pub struct KanExtension {
    pub diagram: SpaceDiagram,
    /// `unit[i] : X(i) → (Lan_f X)(f(i))`
    pub unit: Vec<SimplicialMap>,
    /// the comma category indexing the colimit at each `j` (`f↓j`, or the
    /// opposite of `j↑f` for a contravariant diagram)
    pub commas: Vec<CommaCategory>,
    pub colimits: Vec<Colimit>,
    functor: Functor,
}

impl KanExtension {
    /// The counit `Lan_f(f*G) → G`, when `self` was computed from `f*G`.
    pub fn counit(&self, g: &SpaceDiagram) -> Result<Vec<SimplicialMap>, DiagramError> {
        let f = &self.functor;
        if g.variance() != self.diagram.variance() || **g.index() != **self.diagram.index() {
            return Err(DiagramError::Precondition("counit needs a diagram over the same index".into()));
        }
        let j_cat = f.codomain();
        (0..j_cat.object_count())
            .map(|j| {
                let legs: Vec<SimplicialMap> = self.commas[j]
                    .objects
                    .iter()
                    .map(|&(_, alpha)| g.map(alpha).clone())
                    .collect();
                Ok(self.colimits[j].induced(g.value(j), &legs)?)
            })
            .collect()
    }
}

/// The left Kan extension along `f : I → J`: `(Lan_f X)(j)` is the colimit
/// of `X` over `f↓j`. A contravariant diagram is extended as a covariant one
/// over the opposite categories, so its values are colimits over `j↑f`.
pub fn left_kan_extension(x: &SpaceDiagram, f: &Functor) -> Result<KanExtension, DiagramError> {
    if **f.domain() != **x.index() {
        return Err(DiagramError::Precondition("functor does not start at the diagram's index".into()));
    }
    match x.variance() {
        Variance::Covariant => covariant(x, f),
        Variance::Contravariant => {
            let op = covariant(&x.opposite(), &f.opposite())?;
            let diagram = op.diagram.opposite();
            Ok(KanExtension { diagram, functor: f.clone(), ..op })
        }
    }
}

fn covariant(x: &SpaceDiagram, f: &Functor) -> Result<KanExtension, DiagramError> {
    let w = x.window();
    let (i_cat, j_cat) = (f.domain(), f.codomain());
    let commas: Vec<CommaCategory> = (0..j_cat.object_count()).map(|j| over_category(f, j)).collect::<Result<_, _>>()?;
    let colimits: Vec<Colimit> = commas
        .iter()
        .map(|c| {
            let values: Vec<_> = c.objects.iter().map(|&(i, _)| x.value(i).clone()).collect();
            let maps: Vec<_> = c.forget.morphism_map().iter().map(|&b| x.map(b).clone()).collect();
            finite_colimit(&c.category, &values, &maps, w)
        })
        .collect::<Result<_, _>>()?;
    let values: Vec<_> = colimits.iter().map(|c| c.set.clone()).collect();
    let maps = (0..j_cat.morphism_count())
        .map(|gamma| {
            let (j, j2) = (j_cat.source(gamma), j_cat.target(gamma));
            let legs: Vec<SimplicialMap> = commas[j]
                .objects
                .iter()
                .map(|&(i, alpha)| {
                    let o: Ob = commas[j2].object_of(i, j_cat.compose(gamma, alpha)).expect("object of the comma category");
                    colimits[j2].cocone[o].clone()
                })
                .collect();
            colimits[j].induced(&values[j2], &legs)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let diagram = SpaceDiagram::new(j_cat.clone(), values, maps, Variance::Covariant, w)?;
    let unit = (0..i_cat.object_count())
        .map(|i| {
            let j = f.object(i);
            let o = commas[j].object_of(i, j_cat.identity(j)).expect("identity object of the comma category");
            colimits[j].cocone[o].clone()
        })
        .collect();
    Ok(KanExtension { diagram, unit, commas, colimits, functor: f.clone() })
}
