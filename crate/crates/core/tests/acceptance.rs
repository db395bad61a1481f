//! Acceptance suite. Runs eight criteria, prints one PASS/FAIL line for
//! each and exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use simplicat::bar::{
    bar_construction, bwe_diagonal, check_extra_degeneracy, from_group, inclusion_compare, validate_groupoid, RawGroupoid,
};
use simplicat::diagram::{
    clutch, is_bounded, round_trip, square_categories, thomason_compare, universal_clutch, CatValuedFunctor,
};
use simplicat::fincat::{
    enumerate_nat_trans, grothendieck, under_category, CategorySystem, FiniteCategory, Functor, Mor,
    NaturalTransformation,
};
use simplicat::homology::{
    is_homology_equivalence, normalized_chains, simplicial_homology, smith_normal_form, IntMatrix,
};
use simplicat::sset::{
    boundary, delta_map_of, empty, fold, nerve, nerve_map, point, product, pushout, simplex_map, standard_simplex,
    subdivision, subdivision_map, DeltaMap, FiniteSimplicialSet, Nerve, PushoutSquare, Simplex, SimplicialMap,
};

/// Everything built along the way, checked structurally at the end.
#[derive(Default)]
struct Corpus {
    spaces: Vec<(String, Arc<FiniteSimplicialSet>)>,
    categories: Vec<(String, Arc<FiniteCategory>)>,
}

impl Corpus {
    fn space(&mut self, name: impl Into<String>, x: &Arc<FiniteSimplicialSet>) {
        self.spaces.push((name.into(), x.clone()));
    }

    fn category(&mut self, name: impl Into<String>, c: &Arc<FiniteCategory>) {
        self.categories.push((name.into(), c.clone()));
    }
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn ordinal(n: usize) -> Arc<FiniteCategory> {
    Arc::new(FiniteCategory::ordinal(n))
}

fn cyclic(m: usize) -> Arc<FiniteCategory> {
    let names: Vec<String> = (0..m).map(|k| format!("t{k}")).collect();
    let table: Vec<Vec<usize>> = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
    Arc::new(FiniteCategory::one_object("*", &names, 0, &table).unwrap())
}

fn arc(x: FiniteSimplicialSet) -> Arc<FiniteSimplicialSet> {
    Arc::new(x)
}

/// A system from its index, fibres and a transition per morphism
/// `α : c1 → c0`, which must be a functor `F_{c0} → F_{c1}`.
fn system(index: &Arc<FiniteCategory>, fibers: Vec<Arc<FiniteCategory>>, t: impl Fn(Mor) -> Functor) -> CategorySystem {
    let transitions = (0..index.morphism_count())
        .map(|m| if index.is_identity(m) { Functor::identity(&fibers[index.source(m)]) } else { t(m) })
        .collect();
    CategorySystem::new(index.clone(), fibers, transitions).unwrap()
}

fn thomason_corpus() -> Vec<(&'static str, CategorySystem)> {
    let pt = ordinal(0);
    let interval = ordinal(1);
    let z2 = cyclic(2);
    let two = Arc::new(FiniteCategory::discrete(&["x", "y"]));
    let mut out = vec![
        ("Z/2 over a point", CategorySystem::constant(pt.clone(), z2.clone())),
        ("constant interval over an interval", CategorySystem::constant(interval.clone(), interval.clone())),
    ];
    out.push((
        "two points and a point over an interval",
        system(&interval, vec![two.clone(), pt.clone()], |_| Functor::constant(&pt, &two, 0)),
    ));
    let span = Arc::new(FiniteCategory::poset(&["c", "a", "b"], |i, j| i == j || (i == 0 && j > 0)).unwrap());
    out.push((
        "interval over a span with its ends pulled back",
        system(&span, vec![interval.clone(), pt.clone(), pt.clone()], |m| {
            Functor::constant(&pt, &interval, if span.target(m) == 1 { 0 } else { 1 })
        }),
    ));
    let swap = Functor::new(two.clone(), two.clone(), vec![1, 0], vec![two.identity(1), two.identity(0)]).unwrap();
    out.push(("Z/2 acting freely on two points", system(&z2, vec![two.clone(), two.clone()][..1].to_vec(), |_| swap.clone())));
    let chain = ordinal(2);
    let fibers = vec![z2.clone(), pt.clone(), interval.clone()];
    out.push((
        "mixed fibres over [2]",
        system(&chain, fibers.clone(), |m| Functor::constant(&fibers[chain.target(m)], &fibers[chain.source(m)], 0)),
    ));
    let square =
        Arc::new(FiniteCategory::poset(&["0", "1", "2", "3"], |i, j| i == j || i == 0 || j == 3).unwrap());
    let fibers = vec![interval.clone(), pt.clone(), pt.clone(), z2.clone()];
    out.push((
        "commutative square with a group on top",
        system(&square, fibers.clone(), |m| Functor::constant(&fibers[square.target(m)], &fibers[square.source(m)], 0)),
    ));
    out
}

fn criterion_thomason(corpus: &mut Corpus) -> Outcome {
    let systems = thomason_corpus();
    let mut slowest = Duration::ZERO;
    for (name, s) in &systems {
        ensure(s.index().object_count() <= 4 && s.fibers().iter().all(|f| f.object_count() <= 4), || {
            format!("{name}: corpus bounds exceeded")
        })?;
        let start = Instant::now();
        let r = thomason_compare(s, 3).map_err(|e| format!("{name}: {e}"))?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        ensure(took < Duration::from_secs(10), || format!("{name}: took {took:?}"))?;
        ensure(r.grothendieck.agrees_through(&r.hocolim, 2) && r.equal, || format!("{name}:\n{r}"))?;
        let gr = grothendieck(s).unwrap();
        corpus.category(format!("Gr({name})"), &gr.category);
        corpus.space(format!("N(Gr({name}))"), &arc(nerve(&gr.category, 3)));
        for (c, f) in s.fibers().iter().enumerate() {
            corpus.category(format!("fibre {c} of {name}"), f);
        }
    }
    Ok(format!("{} systems agree through degree 2, slowest {:.2?}", systems.len(), slowest))
}

/// An object with exactly one morphism to every object.
fn has_initial_object(c: &FiniteCategory) -> bool {
    (0..c.object_count()).any(|o| (0..c.object_count()).all(|x| c.hom(o, x).len() == 1))
}

fn criterion_theorem_a(corpus: &mut Corpus) -> Outcome {
    let square = Arc::new(FiniteCategory::product(&ordinal(1), &ordinal(1)));
    let z2 = cyclic(2);
    let systems = thomason_corpus();
    let action = grothendieck(&systems[4].1).unwrap().category;
    let functors = vec![
        ("[2] -> [1]", Functor::between_thin(&ordinal(2), &ordinal(1), vec![0, 0, 1]).unwrap()),
        ("[1]x[1] -> [1]", Functor::between_thin(&square, &ordinal(1), (0..4).map(|o| o / 2).collect()).unwrap()),
        ("Z/2 -> Z/2", Functor::identity(&z2)),
        ("action groupoid -> point", Functor::constant(&action, &ordinal(0), 0)),
    ];
    for (name, f) in &functors {
        for i in 0..f.codomain().object_count() {
            let under = under_category(i, f).map_err(|e| e.to_string())?;
            ensure(has_initial_object(&under.category), || format!("{name}: the under category at {i} has no initial object"))?;
            corpus.category(format!("under {i} of {name}"), &under.category);
        }
        let source = Nerve::new(f.domain(), 3);
        let target = Nerve::new(f.codomain(), 3);
        let nf = nerve_map(f, &source, &target).map_err(|e| e.to_string())?;
        let r = is_homology_equivalence(&nf, 2).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("{name}: N(f) is not a homology equivalence\n{r}"))?;
        corpus.space(format!("N(domain of {name})"), &source.set);
        corpus.category(format!("domain of {name}"), f.domain());
    }
    Ok(format!("{} functors with initial under categories are homology equivalences through degree 2", functors.len()))
}

fn inclusion(a: &Arc<FiniteSimplicialSet>, b: &Arc<FiniteSimplicialSet>, dims: usize) -> SimplicialMap {
    let images = (0..=a.window())
        .map(|n| if n <= dims { (0..a.count(n)).map(|x| Simplex::nondegenerate(n, x)).collect() } else { Vec::new() })
        .collect();
    SimplicialMap::new(a.clone(), b.clone(), images).unwrap()
}

struct ClutchData {
    name: &'static str,
    push: PushoutSquare,
    window: usize,
    target: Arc<FiniteCategory>,
    f_object: usize,
    g_c: Box<dyn Fn(&Arc<simplicat::sset::SimplexCategory>) -> CatValuedFunctor>,
    /// component of `ψ` on a simplex of `A`, from `F(σ)` to `G(i σ)`
    psi: Box<dyn Fn(usize, usize) -> Mor>,
    g_d_object: usize,
    psi_b: Box<dyn Fn(usize, usize) -> Mor>,
}

fn clutch_corpus() -> Vec<ClutchData> {
    let interval = ordinal(1);
    let z2 = cyclic(2);
    let t = z2.morphism_by_label("t1").unwrap();
    let arrow = interval.hom(0, 1)[0];
    let mut out = Vec::new();
    {
        let w = 2;
        let a = arc(boundary(1, w).unwrap());
        let c = arc(standard_simplex(1, w).unwrap());
        let push = pushout(&SimplicialMap::identity(&a), &inclusion(&a, &c, 0)).unwrap();
        let target = interval.clone();
        out.push(ClutchData {
            name: "interval along its boundary",
            push,
            window: w,
            target: target.clone(),
            f_object: 0,
            g_c: Box::new(move |sc| CatValuedFunctor::constant(sc.clone(), &target, 1)),
            psi: Box::new(move |_, _| arrow),
            g_d_object: 1,
            psi_b: Box::new(move |_, _| arrow),
        });
    }
    {
        let w = 2;
        let a = arc(boundary(2, w).unwrap());
        let c = arc(standard_simplex(2, w).unwrap());
        let b = arc(point(w));
        let push = pushout(&SimplicialMap::constant_to(&a, &b, 0), &inclusion(&a, &c, 1)).unwrap();
        let target = interval.clone();
        let t2 = target.clone();
        out.push(ClutchData {
            name: "2-sphere with a vertex functor",
            push,
            window: w,
            target: target.clone(),
            f_object: 0,
            g_c: Box::new(move |sc| {
                let objects = sc.simplices().iter().map(|s| delta_map_of(2, s).values().contains(&2) as usize).collect();
                CatValuedFunctor::new(sc.clone(), Functor::between_thin(&sc.category, &t2, objects).unwrap()).unwrap()
            }),
            psi: Box::new(move |from, to| target.hom(from, to)[0]),
            g_d_object: 1,
            psi_b: Box::new(move |from, to| interval.hom(from, to)[0]),
        });
    }
    {
        let w = 3;
        let a = arc(boundary(1, w).unwrap());
        let c = arc(standard_simplex(1, w).unwrap());
        let b = arc(point(w));
        let push = pushout(&SimplicialMap::constant_to(&a, &b, 0), &inclusion(&a, &c, 0)).unwrap();
        let target = z2.clone();
        out.push(ClutchData {
            name: "circle with a Z/2 twist in window 3",
            push,
            window: w,
            target: target.clone(),
            f_object: 0,
            g_c: Box::new(move |sc| CatValuedFunctor::constant(sc.clone(), &target, 0)),
            psi: Box::new(move |_, _| t),
            g_d_object: 0,
            psi_b: Box::new(move |_, _| t),
        });
    }
    {
        let w = 1;
        let a = arc(empty(w));
        let b = arc(point(w));
        let c = arc(standard_simplex(1, w).unwrap());
        let none = |x: &Arc<FiniteSimplicialSet>| SimplicialMap::new(a.clone(), x.clone(), vec![vec![]; w + 1]).unwrap();
        let push = pushout(&none(&b), &none(&c)).unwrap();
        let target = z2.clone();
        let id = z2.identity(0);
        out.push(ClutchData {
            name: "point and interval with empty overlap",
            push,
            window: w,
            target: target.clone(),
            f_object: 0,
            g_c: Box::new(move |sc| CatValuedFunctor::constant(sc.clone(), &target, 0)),
            psi: Box::new(move |_, _| id),
            g_d_object: 0,
            psi_b: Box::new(move |_, _| id),
        });
    }
    out
}

fn functors_agree(a: &Functor, b: &Functor) -> bool {
    let d = a.domain();
    (0..d.object_count()).all(|o| a.object(o) == b.object(o)) && (0..d.morphism_count()).all(|m| a.morphism(m) == b.morphism(m))
}

fn criterion_clutching(corpus: &mut Corpus) -> Outcome {
    let data = clutch_corpus();
    for d in &data {
        let name = d.name;
        let err = |e: &dyn std::fmt::Display| format!("{name}: {e}");
        let cats = square_categories(&d.push, d.window).map_err(|e| err(&e))?;
        let f_b = CatValuedFunctor::constant(cats.b.clone(), &d.target, d.f_object);
        let g_c = (d.g_c)(&cats.c);
        let fa = f_b.functor.after(&cats.f).unwrap();
        let ga = g_c.functor.after(&cats.i).unwrap();
        let comps = (0..cats.a.category.object_count()).map(|o| (d.psi)(fa.object(o), ga.object(o))).collect();
        let psi = NaturalTransformation::new(fa, ga, comps).map_err(|e| err(&e))?;
        let cl = clutch(&d.push, &cats, &f_b, &g_c, &psi).map_err(|e| err(&e))?;
        let h = &cl.h.functor;
        // requirement (1): j*H = F, object by object and morphism by morphism
        let hj = h.after(&cats.j).unwrap();
        ensure(functors_agree(&hj, &f_b.functor), || format!("{name}: j*H differs from F"))?;
        // requirement (2): the square of functors commutes and ψ̄ restricts to ψ
        let via_b = hj.after(&cats.f).unwrap();
        let via_c = h.after(&cats.g).unwrap().after(&cats.i).unwrap();
        ensure(functors_agree(&via_b, &via_c), || format!("{name}: f*j*H differs from i*g*H"))?;
        for o in 0..cats.a.category.object_count() {
            ensure(cl.psi_bar.component(cats.i.object(o)) == psi.component(o), || format!("{name}: ψ̄ does not restrict to ψ"))?;
        }
        // requirement (3): ψ̄ is invertible off the image of i
        for (o, s) in cats.c.simplices().iter().enumerate() {
            if !d.push.in_image_of_i(s) {
                ensure(d.target.is_isomorphism(cl.psi_bar.component(o)), || format!("{name}: ψ̄ not invertible at {o}"))?;
            }
        }
        ensure(is_bounded(&f_b) && is_bounded(&g_c) && is_bounded(&cl.h), || format!("{name}: boundedness lost"))?;
        ensure(cl.report.holds(), || format!("{name}:\n{}", cl.report))?;
        // universal clutching: ψ̂ is the only transformation with the two restrictions
        let g_d = CatValuedFunctor::constant(cats.d.clone(), &d.target, d.g_d_object);
        let gdj = g_d.functor.after(&cats.j).unwrap();
        let comps = (0..cats.b.category.object_count()).map(|o| (d.psi_b)(f_b.functor.object(o), gdj.object(o))).collect();
        let psi_b = NaturalTransformation::new(f_b.functor.clone(), gdj, comps).map_err(|e| err(&e))?;
        let u = universal_clutch(&d.push, &cats, &f_b, &g_d, &psi_b).map_err(|e| err(&e))?;
        let matching: Vec<NaturalTransformation> = enumerate_nat_trans(&u.clutching.h.functor, &g_d.functor)
            .into_iter()
            .filter(|t| {
                t.precompose(&cats.j).unwrap().components() == psi_b.components()
                    && t.precompose(&cats.g).unwrap().components() == u.clutching.psi_bar.components()
            })
            .collect();
        ensure(matching.len() == 1 && matching[0].components() == u.psi_hat.components(), || {
            format!("{name}: {} candidates for ψ̂", matching.len())
        })?;
        ensure(u.is_unique(), || format!("{name}: the library disagrees on uniqueness"))?;
        corpus.space(format!("pushout {name}"), d.push.d());
        corpus.category(format!("simplex category of the pushout {name}"), &cats.d.category);
    }
    Ok(format!("{} clutching data, all requirements and universal uniqueness hold", data.len()))
}

fn criterion_round_trip(corpus: &mut Corpus) -> Outcome {
    let w = 2;
    let x = arc(standard_simplex(2, w).unwrap());
    let i1 = arc(standard_simplex(1, w).unwrap());
    let pt = arc(point(w));
    let circle = arc(boundary(2, w).unwrap());
    let (sq, _, p2) = product(&i1, &i1).unwrap();
    let maps = vec![
        ("identity of Δ[2]", SimplicialMap::identity(&x)),
        ("∂Δ[1] -> Δ[0]", SimplicialMap::constant_to(&arc(boundary(1, w).unwrap()), &pt, 0)),
        ("fold of two circles", fold(&circle, 2).unwrap()),
        ("empty -> Δ[2]", SimplicialMap::new(arc(empty(w)), x.clone(), vec![vec![]; w + 1]).unwrap()),
        ("face Δ[1] -> Δ[2]", simplex_map(&DeltaMap::face(2, 2), w).unwrap()),
        ("degeneracy Δ[2] -> Δ[1]", simplex_map(&DeltaMap::degeneracy(1, 0), w).unwrap()),
        ("projection Δ[1]xΔ[1] -> Δ[1]", p2),
    ];
    corpus.space("Δ[1]xΔ[1]", &sq);
    for (name, f) in &maps {
        let e = f.domain();
        ensure(e.total_count() <= 50, || format!("{name}: too many simplices"))?;
        let r = round_trip(f).map_err(|err| format!("{name}: {err}"))?;
        let c = &r.comparison;
        // an explicit isomorphism: a bijection on nondegenerate simplices
        for n in 0..=e.window() {
            let images: Vec<&Simplex> = c.images()[n].iter().collect();
            ensure(images.len() == e.count(n) && c.domain().count(n) == e.count(n), || format!("{name}: counts differ in dimension {n}"))?;
            let mut bases: Vec<usize> = images.iter().map(|s| s.base).collect();
            bases.sort_unstable();
            bases.dedup();
            ensure(images.iter().all(|s| !s.is_degenerate()) && bases.len() == images.len(), || {
                format!("{name}: the comparison is not bijective in dimension {n}")
            })?;
        }
        ensure(f.after(c).unwrap() == r.assembly.map, || format!("{name}: the comparison does not lie over X"))?;
        ensure(r.holds(), || format!("{name}: the library disagrees"))?;
        corpus.space(format!("assembly of {name}"), &r.assembly.colimit.set);
    }
    Ok(format!("{} maps reassemble isomorphically over their base", maps.len()))
}

/// `H_*(BZ/m)` from the periodic resolution of `Z` over `Z[Z/m]`: after
/// tensoring with the trivial module the differentials alternate between
/// the augmentations of `t - 1` and of the norm element.
fn periodic_resolution_homology(m: usize, top: usize) -> Vec<(usize, Vec<i64>)> {
    let augment = |coeffs: &[i64]| -> i64 { coeffs.iter().sum() };
    let mut t_minus_one = vec![0i64; m];
    t_minus_one[0] -= 1;
    t_minus_one[1 % m] += 1;
    let norm = vec![1i64; m];
    // d_k : C_k → C_{k-1}, each C_k = Z
    let d = |k: usize| -> i64 {
        if k == 0 {
            0
        } else if k % 2 == 1 {
            augment(&t_minus_one)
        } else {
            augment(&norm)
        }
    };
    (0..=top)
        .map(|k| {
            let kernel = if d(k) == 0 { 1 } else { 0 };
            let image = d(k + 1).unsigned_abs() as i64;
            match (kernel, image) {
                (0, _) => (0, vec![]),
                (_, 0) => (1, vec![]),
                (_, 1) => (0, vec![]),
                (_, q) => (0, vec![q]),
            }
        })
        .collect()
}

fn pair_times_cyclic(m: usize) -> RawGroupoid {
    let obj = ["a".to_string(), "b".to_string()];
    let name = |r: usize, t: usize, k: usize| format!("{}{}{k}", obj[r], obj[t]);
    let mut raw = RawGroupoid { objects: obj.to_vec(), basepoint: "a".into(), ..Default::default() };
    for r in 0..2 {
        for t in 0..2 {
            raw.elements.push((obj[r].clone(), obj[t].clone(), (0..m).map(|k| name(r, t, k)).collect()));
            for s in 0..2 {
                for x in 0..m {
                    for y in 0..m {
                        raw.compose.push((name(r, s, x), name(s, t, y), name(r, t, (x + y) % m)));
                    }
                }
            }
        }
        raw.identities.push((obj[r].clone(), name(r, r, 0)));
    }
    raw
}

fn criterion_bar(corpus: &mut Corpus) -> Outcome {
    let start = Instant::now();
    let z2 = from_group(&["e", "t"], &[vec![0, 1], vec![1, 0]]).map_err(|e| e.to_string())?;
    let pair = bar_construction(&z2, 4);
    let diag = bwe_diagonal(&pair).map_err(|e| e.to_string())?;
    let h = simplicial_homology(&diag.bg).map_err(|e| e.to_string())?;
    let oracle = periodic_resolution_homology(2, 3);
    for (k, (betti, torsion)) in oracle.iter().enumerate() {
        let g = &h.groups[k];
        ensure(g.betti == *betti && g.torsion == *torsion, || format!("H_{k}(diag BZ/2) is {g}, the resolution gives ({betti}, {torsion:?})"))?;
    }
    let extra = check_extra_degeneracy(&pair).map_err(|e| e.to_string())?;
    ensure(extra.holds() && extra.homology.reduced_vanishes_through(3), || format!("diag EZ/2:\n{extra}"))?;
    corpus.space("diag BZ/2", &diag.bg);
    corpus.space("diag EZ/2", &diag.eg);
    let z3 = validate_groupoid(&pair_times_cyclic(3)).map_err(|e| e.to_string())?;
    let inc = inclusion_compare(&z3, &["a"], 2).map_err(|e| e.to_string())?;
    ensure(inc.holds(), || format!("{inc}"))?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(10), || format!("took {took:?}"))?;
    Ok(format!("H_*(diag BZ/2) = Z, Z/2, 0, Z/2; diag EZ/2 acyclic; Z/3 inclusion verified in {took:.2?}"))
}

fn two_edge_circle(w: usize) -> FiniteSimplicialSet {
    let v = |x| Simplex::nondegenerate(0, x);
    FiniteSimplicialSet::new(
        w,
        vec![vec!["a".into(), "b".into()], vec!["e".into(), "f".into()]],
        vec![vec![vec![], vec![]], vec![vec![v(1), v(0)], vec![v(1), v(0)]]],
    )
    .unwrap()
}

fn criterion_subdivision(corpus: &mut Corpus) -> Outcome {
    let start = Instant::now();
    let w = 2;
    let spaces: Vec<(&str, Arc<FiniteSimplicialSet>, Vec<usize>)> = vec![
        ("Δ[0]", arc(point(w)), vec![1, 0]),
        ("Δ[1]", arc(standard_simplex(1, w).unwrap()), vec![1, 0]),
        ("Δ[2]", arc(standard_simplex(2, w).unwrap()), vec![1, 0]),
        ("∂Δ[2]", arc(boundary(2, w).unwrap()), vec![1, 1]),
        ("two-edge circle", arc(two_edge_circle(w)), vec![1, 1]),
    ];
    let mut subdivisions = Vec::new();
    for (name, a, betti) in &spaces {
        let sd = subdivision(a, w, w).map_err(|e| format!("{name}: {e}"))?;
        let ha = simplicial_homology(a).unwrap();
        let hs = simplicial_homology(sd.set()).unwrap();
        ensure(ha.betti()[..2] == betti[..] && ha.groups.iter().all(|g| g.torsion.is_empty()), || format!("{name}: H(A) = {ha}"))?;
        ensure(hs.agrees_through(&ha, 1), || format!("{name}: H(sd A) = {hs}, H(A) = {ha}"))?;
        ensure(ha.reduced_vanishes_through(1) == hs.reduced_vanishes_through(1), || format!("{name}: contractibility differs"))?;
        corpus.space(*name, a);
        corpus.space(format!("sd {name}"), sd.set());
        corpus.category(format!("simplex category of {name}"), &sd.simplex_category.category);
        subdivisions.push(sd);
    }
    let by_name = |n: &str| spaces.iter().position(|s| s.0 == n).unwrap();
    let vertex = |x: &Arc<FiniteSimplicialSet>, v: usize| SimplicialMap::constant_to(&spaces[0].1, x, v);
    let d1 = &spaces[1].1;
    let d2 = &spaces[2].1;
    let circle = &spaces[3].1;
    let two = &spaces[4].1;
    let e = |x| Simplex::nondegenerate(1, x);
    let maps: Vec<(&str, &str, &str, SimplicialMap)> = vec![
        ("vertex of Δ[1]", "Δ[0]", "Δ[1]", vertex(d1, 1)),
        ("collapse of Δ[1]", "Δ[1]", "Δ[0]", SimplicialMap::constant_to(d1, &spaces[0].1, 0)),
        ("face of Δ[2]", "Δ[1]", "Δ[2]", simplex_map(&DeltaMap::face(2, 0), w).unwrap()),
        ("degeneracy onto Δ[1]", "Δ[2]", "Δ[1]", simplex_map(&DeltaMap::degeneracy(1, 1), w).unwrap()),
        ("boundary inclusion", "∂Δ[2]", "Δ[2]", inclusion(circle, d2, 1)),
        (
            "two-edge circle onto one edge",
            "two-edge circle",
            "∂Δ[2]",
            SimplicialMap::new(two.clone(), circle.clone(), vec![vec![Simplex::nondegenerate(0, 0), Simplex::nondegenerate(0, 1)], vec![e(0), e(0)], vec![]])
                .unwrap(),
        ),
    ];
    for (name, from, to, f) in &maps {
        let (s, t) = (&subdivisions[by_name(from)], &subdivisions[by_name(to)]);
        let sf = subdivision_map(f, s, t).map_err(|err| format!("{name}: {err}"))?;
        ensure(sf.is_reduced(), || format!("sd({name}) is not reduced"))?;
        let weq = is_homology_equivalence(f, 1).unwrap().holds;
        let sd_weq = is_homology_equivalence(&sf, 1).unwrap().holds;
        ensure(weq == sd_weq, || format!("{name}: equivalence {weq}, after subdivision {sd_weq}"))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(30), || format!("took {took:?}"))?;
    Ok(format!("{} spaces and {} maps in {took:.2?}", spaces.len(), maps.len()))
}

type Big = Vec<Vec<BigInt>>;

fn big(m: &[Vec<i64>]) -> Big {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn big_mul(a: &Big, b: &Big) -> Big {
    (0..a.len())
        .map(|i| (0..b[0].len()).map(|j| (0..b.len()).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

fn determinant(m: &Big) -> BigInt {
    // Bareiss fraction-free elimination
    let n = m.len();
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn criterion_smith(_: &mut Corpus) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..100 {
        let rows: Vec<Vec<i64>> = (0..6).map(|_| (0..6).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let f = smith_normal_form(&IntMatrix::from_rows(&rows)).map_err(|e| format!("trial {trial}: {e}"))?;
        let (u, s, v) = (big(&f.u.to_rows()), big(&f.s.to_rows()), big(&f.v.to_rows()));
        ensure(big_mul(&big_mul(&u, &s), &v) == big(&rows), || format!("trial {trial}: U·S·V differs from M"))?;
        for (which, x) in [("U", &u), ("V", &v)] {
            let d = determinant(x);
            ensure(d.abs().is_one(), || format!("trial {trial}: det {which} = {d}"))?;
        }
        let s = f.s.to_rows();
        let mut diagonal = Vec::new();
        for (i, row) in s.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if i == j {
                    diagonal.push(v);
                } else {
                    ensure(v == 0, || format!("trial {trial}: S is not diagonal"))?;
                }
            }
        }
        let nonzero: Vec<i64> = diagonal.iter().copied().take_while(|&v| v != 0).collect();
        ensure(diagonal[nonzero.len()..].iter().all(|&v| v == 0), || format!("trial {trial}: zeros before nonzeros"))?;
        ensure(nonzero.iter().all(|&v| v > 0), || format!("trial {trial}: negative invariant factor"))?;
        ensure(nonzero.windows(2).all(|p| p[1] % p[0] == 0), || format!("trial {trial}: divisibility fails in {nonzero:?}"))?;
        let det_m = determinant(&big(&rows));
        let det_s: BigInt = diagonal.iter().map(|&v| BigInt::from(v)).product();
        ensure(det_m.abs() == det_s.abs(), || format!("trial {trial}: |det M| = {det_m}, |det S| = {det_s}"))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(2), || format!("took {took:?}"))?;
    Ok(format!("100 matrices in {took:.2?}"))
}

fn criterion_structure(corpus: &mut Corpus) -> Outcome {
    ensure(!corpus.spaces.is_empty() && !corpus.categories.is_empty(), || "the corpus is empty".into())?;
    for (name, x) in &corpus.spaces {
        x.check_identities().map_err(|e| format!("{name}: {e}"))?;
        normalized_chains(x).check_square_zero().map_err(|e| format!("{name}: {e}"))?;
        let h = simplicial_homology(x).map_err(|e| format!("{name}: {e}"))?;
        let alternating: i64 = (0..=x.window()).map(|n| if n % 2 == 0 { x.count(n) as i64 } else { -(x.count(n) as i64) }).sum();
        ensure(h.homology_euler_characteristic() == alternating, || {
            format!("{name}: Euler characteristic {} from homology, {alternating} from simplices", h.homology_euler_characteristic())
        })?;
    }
    for (name, c) in &corpus.categories {
        c.verify_laws().map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{} spaces and {} categories", corpus.spaces.len(), corpus.categories.len()))
}

fn main() {
    let criteria: [(&str, fn(&mut Corpus) -> Outcome); 8] = [
        ("Thomason suite", criterion_thomason),
        ("Theorem A instance", criterion_theorem_a),
        ("clutching contract", criterion_clutching),
        ("decompose/assemble round trip", criterion_round_trip),
        ("bar construction", criterion_bar),
        ("subdivision suite", criterion_subdivision),
        ("Smith normal form suite", criterion_smith),
        ("structural suite", criterion_structure),
    ];
    let mut corpus = Corpus::default();
    let mut failures = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| check(&mut corpus)))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS [{took:.2?}] {detail}", k + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {} ({name}): FAIL [{took:.2?}] {why}", k + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
