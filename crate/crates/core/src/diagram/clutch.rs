use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::{is_bounded, CatValuedFunctor, DiagramError};
use crate::fincat::{enumerate_nat_trans, Functor, Mor, NaturalTransformation, Ob};
use crate::sset::{PushoutSquare, SimplexCategory, Simplex};

/// The simplex categories of a pushout square and the functors between them.
#[derive(Clone, Debug)]
pub struct SquareCategories {
    pub a: Arc<SimplexCategory>,
    pub b: Arc<SimplexCategory>,
    pub c: Arc<SimplexCategory>,
    pub d: Arc<SimplexCategory>,
    pub f: Functor,
    pub i: Functor,
    pub j: Functor,
    pub g: Functor,
}

pub fn square_categories(push: &PushoutSquare, window: usize) -> Result<SquareCategories, DiagramError> {
    let cat = |x| SimplexCategory::new(x, window).map(Arc::new);
    let (a, b, c, d) = (cat(push.a())?, cat(push.b())?, cat(push.c())?, cat(push.d())?);
    Ok(SquareCategories {
        f: SimplexCategory::functor_of_map(&push.f, &a, &b)?,
        i: SimplexCategory::functor_of_map(&push.i, &a, &c)?,
        j: SimplexCategory::functor_of_map(&push.j, &b, &d)?,
        g: SimplexCategory::functor_of_map(&push.g, &c, &d)?,
        a,
        b,
        c,
        d,
    })
}

/// Outcome of the checks on a clutching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClutchReport {
    /// `j*H = F`
    pub restriction_along_j: bool,
    /// `f*j*H = i*g*H` and `i*ψ̄ = ψ`
    pub compatibility: bool,
    /// `ψ̄_σ` invertible for `σ` outside `i(A)`
    pub iso_off_image: bool,
    /// `Some(bounded H)` when `F` and `G` are bounded
    pub bounded: Option<bool>,
}

impl ClutchReport {
    pub fn holds(&self) -> bool {
        self.restriction_along_j && self.compatibility && self.iso_off_image && self.bounded != Some(false)
    }
}

impl fmt::Display for ClutchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "holds" } else { "FAILS" };
        writeln!(f, "restriction along j: {}", yn(self.restriction_along_j))?;
        writeln!(f, "compatibility with psi: {}", yn(self.compatibility))?;
        writeln!(f, "iso off the image of i: {}", yn(self.iso_off_image))?;
        match self.bounded {
            Some(b) => write!(f, "boundedness preserved: {}", yn(b)),
            None => write!(f, "boundedness: inputs not bounded"),
        }
    }
}

/// The clutching `H(ψ, F, G)` on `D` and `ψ̄ : g*H → G`.
#[derive(Clone, Debug)]
pub struct Clutching {
    pub h: CatValuedFunctor,
    pub psi_bar: NaturalTransformation,
    pub report: ClutchReport,
}

fn object(sc: &SimplexCategory, s: &Simplex) -> Result<Ob, DiagramError> {
    sc.object_of(s).ok_or_else(|| DiagramError::Clutch("simplex outside the simplex category window".into()))
}

fn morphism(sc: &SimplexCategory, alpha: &crate::sset::DeltaMap, target: Ob) -> Result<Mor, DiagramError> {
    sc.morphism_of(alpha, target).ok_or_else(|| DiagramError::Clutch("morphism outside the window".into()))
}

/// Clutches `F` on `B` and `G` on `C` along `ψ : f*F → i*G`.
pub fn clutch(
    push: &PushoutSquare,
    cats: &SquareCategories,
    f_b: &CatValuedFunctor,
    g_c: &CatValuedFunctor,
    psi: &NaturalTransformation,
) -> Result<Clutching, DiagramError> {
    if *f_b.simplex_category != *cats.b || *g_c.simplex_category != *cats.c {
        return Err(DiagramError::Clutch("F must live on B and G on C".into()));
    }
    let target = f_b.target().clone();
    if **g_c.target() != *target {
        return Err(DiagramError::Clutch("F and G must share a target category".into()));
    }
    if *psi.source() != f_b.functor.after(&cats.f)? || *psi.target() != g_c.functor.after(&cats.i)? {
        return Err(DiagramError::Clutch("psi must go from f*F to i*G".into()));
    }
    let (a, b, c, d) = (&cats.a, &cats.b, &cats.c, &cats.d);
    let fb = &f_b.functor;
    let gc = &g_c.functor;
    let objects = d
        .simplices()
        .iter()
        .map(|s| match push.b_preimage(s) {
            Some(sp) => Ok(fb.object(object(b, &sp)?)),
            None => Ok(gc.object(object(c, &push.c_preimage(s).expect("pushout decomposition"))?)),
        })
        .collect::<Result<Vec<_>, DiagramError>>()?;
    let morphisms = (0..d.category.morphism_count())
        .map(|m| {
            let (alpha, s) = d.arrow(m);
            let sigma = d.simplex(s);
            if let Some(sp) = push.b_preimage(sigma) {
                return Ok(fb.morphism(morphism(b, alpha, object(b, &sp)?)?));
            }
            let bar = push.c_preimage(sigma).expect("pushout decomposition");
            let bar_ob = object(c, &bar)?;
            let g_alpha = gc.morphism(morphism(c, alpha, bar_ob)?);
            let tau = d.simplex(d.category.source(m));
            if push.b_preimage(tau).is_none() {
                return Ok(g_alpha);
            }
            let restricted = push.c().apply(&bar, alpha);
            let a_simplex = push
                .a_preimage(&restricted)
                .ok_or_else(|| DiagramError::Clutch("square is not a pushout along an inclusion".into()))?;
            Ok(target.compose(g_alpha, psi.component(object(a, &a_simplex)?)))
        })
        .collect::<Result<Vec<_>, DiagramError>>()?;
    let h = Functor::new(d.category.clone(), target.clone(), objects, morphisms)?;
    let components = c
        .simplices()
        .iter()
        .map(|s| match push.a_preimage(s) {
            Some(a_simplex) => Ok(psi.component(object(a, &a_simplex)?)),
            None => Ok(target.identity(gc.object(object(c, s)?))),
        })
        .collect::<Result<Vec<_>, DiagramError>>()?;
    let psi_bar = NaturalTransformation::new(h.after(&cats.g)?, gc.clone(), components)?;
    let h = CatValuedFunctor { simplex_category: d.clone(), functor: h };
    let report = check(push, cats, f_b, g_c, psi, &h, &psi_bar)?;
    Ok(Clutching { h, psi_bar, report })
}

fn check(
    push: &PushoutSquare,
    cats: &SquareCategories,
    f_b: &CatValuedFunctor,
    g_c: &CatValuedFunctor,
    psi: &NaturalTransformation,
    h: &CatValuedFunctor,
    psi_bar: &NaturalTransformation,
) -> Result<ClutchReport, DiagramError> {
    let hj = h.functor.after(&cats.j)?;
    let restriction_along_j = hj == f_b.functor;
    let restricted = psi_bar.precompose(&cats.i)?;
    let compatibility = hj.after(&cats.f)? == h.functor.after(&cats.g)?.after(&cats.i)?
        && restricted.components() == psi.components()
        && restricted.target() == psi.target();
    let target = h.target();
    let iso_off_image = cats
        .c
        .simplices()
        .iter()
        .enumerate()
        .filter(|(_, s)| !push.in_image_of_i(s))
        .all(|(o, _)| target.is_isomorphism(psi_bar.component(o)));
    let bounded = (is_bounded(f_b) && is_bounded(g_c)).then(|| is_bounded(h));
    Ok(ClutchReport { restriction_along_j, compatibility, iso_off_image, bounded })
}

/// `ψ̂ : H(f*ψ, F, g*G) → G` with the uniqueness check.
#[derive(Clone, Debug)]
pub struct UniversalClutch {
    pub clutching: Clutching,
    pub psi_hat: NaturalTransformation,
    /// `j*ψ̂ = ψ` and `g*ψ̂ = ψ̄`
    pub restrictions_hold: bool,
    /// transformations `H → G` satisfying both restriction equations
    pub candidates: usize,
}

impl UniversalClutch {
    pub fn is_unique(&self) -> bool {
        self.restrictions_hold && self.candidates == 1
    }
}

/// Given `F` on `B`, `G` on `D` and `ψ : F → j*G`, clutches `F` and `g*G`
/// along `f*ψ` and builds `ψ̂`: `ψ_{σ'}` on `j(B)`, the identity elsewhere.
pub fn universal_clutch(
    push: &PushoutSquare,
    cats: &SquareCategories,
    f_b: &CatValuedFunctor,
    g_d: &CatValuedFunctor,
    psi: &NaturalTransformation,
) -> Result<UniversalClutch, DiagramError> {
    if *g_d.simplex_category != *cats.d {
        return Err(DiagramError::Clutch("G must live on D".into()));
    }
    if *psi.source() != f_b.functor || *psi.target() != g_d.functor.after(&cats.j)? {
        return Err(DiagramError::Clutch("psi must go from F to j*G".into()));
    }
    let g_c = CatValuedFunctor { simplex_category: cats.c.clone(), functor: g_d.functor.after(&cats.g)? };
    let f_psi = psi.precompose(&cats.f)?;
    // f*j*G and i*g*G agree as tables; re-type f*ψ with the latter target
    let f_psi = NaturalTransformation::new(f_psi.source().clone(), g_c.functor.after(&cats.i)?, f_psi.components().to_vec())?;
    let clutching = clutch(push, cats, f_b, &g_c, &f_psi)?;
    let target = g_d.target();
    let components = cats
        .d
        .simplices()
        .iter()
        .enumerate()
        .map(|(o, s)| match push.b_preimage(s) {
            Some(sp) => Ok(psi.component(object(&cats.b, &sp)?)),
            None => Ok(target.identity(g_d.functor.object(o))),
        })
        .collect::<Result<Vec<_>, DiagramError>>()?;
    let psi_hat = NaturalTransformation::new(clutching.h.functor.clone(), g_d.functor.clone(), components)?;
    let restrictions = |t: &NaturalTransformation| -> Result<bool, DiagramError> {
        Ok(t.precompose(&cats.j)?.components() == psi.components()
            && t.precompose(&cats.g)?.components() == clutching.psi_bar.components())
    };
    let restrictions_hold = restrictions(&psi_hat)?;
    let mut candidates = 0;
    for t in enumerate_nat_trans(&clutching.h.functor, &g_d.functor) {
        if restrictions(&t)? {
            candidates += 1;
        }
    }
    Ok(UniversalClutch { clutching, psi_hat, restrictions_hold, candidates })
}
