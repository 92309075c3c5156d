//! Consistency checks between the class verdicts and the equivalent
//! conditions they should agree with.
//!
//! Each item compares two independently computed answers on the same
//! presentation. A failed item is a disagreement, never an input error.
//!
//! | id                              | compares                                                        |
//! |---------------------------------|-----------------------------------------------------------------|
//! | `m-equals-y-and-cr`             | verdict M with verdict Y ∧ verdict CR                           |
//! | `proj-and-cr-equals-ha`         | verdict HA with verdict Proj ∧ verdict CR                       |
//! | `proj-and-cr-equals-ha-element` | `coz g` closed with `cl coz g` open ∧ `coz g` regular open      |
//! | `strong-units-are-weak`         | strong ⟹ weak for each enumerated unit                          |
//! | `cr-iff-weak-units-strong`      | verdict CR with "every weak unit is strong"                     |
//! | `cr-iff-zkernels-d-ideals`      | verdict CR with "each `I(Z(g))` is a d-ideal"                   |
//! | `cr-iff-point-kernels-d-ideals` | verdict CR with "each `M_p` is a d-ideal"                       |
//! | `regularity-conditions-agree`   | regular open coz, regular closed zero-set, `I(Z(g)) = g^⊥⊥`     |
//! | `y-forms-agree`                 | `I(Z(g)) ⊆ G(g)` with `coz f ⊆ coz g ⟹ f ∈ G(g)`, pair by pair   |
//! | `chain`                         | `G(g) ⊆ I(Z(g)) ⊆ g^⊥⊥` on each pair                            |
//! | `polars-are-d-ideals`           | no `g^⊥⊥` fails the d-ideal test                                |
//! | `m-iff-principal-d-ideals`      | verdict M with "each `G(g)` is a d-ideal"                       |

use super::classes::{class_check_on, Class, ClassVerdict, Sample};
use super::presentation::GroupPresentation;
use crate::predicates::{
    chain_check, d_ideal_test, ideal_contains, is_strong_unit, is_weak_unit, polar_witness, zset_regular_closed, DIdealVerdict, IdealSpec,
};
use crate::space::{Dominance, Space};

/// Elements used as `g` (and as the sampled ideal members) in the
/// element-by-element items.
pub const ELEMENT_WINDOW: usize = 200;
/// Elements whose ordered pairs are examined in the pair items.
pub const PAIR_WINDOW: usize = 100;
/// Generators of the principal and polar ideals put through the d-ideal test,
/// and the number of sampled members used for each.
pub const IDEAL_WINDOW: (usize, usize) = (16, 64);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossItem {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossReport {
    pub presentation: String,
    pub items: Vec<CrossItem>,
}

impl CrossReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn item(&self, id: &str) -> Option<&CrossItem> {
        self.items.iter().find(|i| i.id == id)
    }
}

fn verdict<E>(verdicts: &[ClassVerdict<E>], class: Class) -> bool {
    verdicts
        .iter()
        .find(|v| v.class == class)
        .map(ClassVerdict::holds)
        .expect("a verdict for every class")
}

fn item(id: &'static str, passed: bool, detail: impl Into<String>) -> CrossItem {
    CrossItem {
        id,
        passed,
        detail: detail.into(),
    }
}

/// Runs every class check on a fresh sample, then [`cross_check_with`].
pub fn cross_check<S: Space>(p: &GroupPresentation<S>, budget: usize, seed: u64) -> CrossReport {
    let sample = Sample::enumerate(p, budget, seed);
    let verdicts: Vec<_> = Class::ALL
        .into_iter()
        .map(|c| class_check_on(p, &sample, c, budget))
        .collect();
    cross_check_with(p, &sample, &verdicts)
}

/// Consistency items for `p`, given its sample and the verdict of every class.
pub fn cross_check_with<S: Space>(p: &GroupPresentation<S>, sample: &Sample<S>, verdicts: &[ClassVerdict<S::Elem>]) -> CrossReport {
    let space = &p.space;
    let [y, cr, m, ha, proj] = Class::ALL.map(|c| verdict(verdicts, c));
    let window = sample.len().min(ELEMENT_WINDOW);
    let elems = &sample.elems;
    let mut items = Vec::new();

    items.push(item("m-equals-y-and-cr", m == (y && cr), format!("M={m} Y={y} CR={cr}")));
    items.push(item(
        "proj-and-cr-equals-ha",
        ha == (proj && cr),
        format!("HA={ha} Proj={proj} CR={cr}"),
    ));

    let mismatches: Vec<&str> = (0..sample.len())
        .filter(|&i| {
            let (coz, cl) = (&sample.cozs[i], &sample.closures[i]);
            let closed = cl == coz;
            let proj_ok = space.is_open(cl);
            let regular = space.interior(cl) == *coz;
            closed != (proj_ok && regular)
        })
        .map(|i| sample.labels[i].as_str())
        .collect();
    items.push(item(
        "proj-and-cr-equals-ha-element",
        mismatches.is_empty(),
        format!("{} elements, mismatches: {:?}", sample.len(), mismatches),
    ));

    let strong_not_weak = elems.iter().filter(|g| is_strong_unit(space, g) && !is_weak_unit(space, g)).count();
    items.push(item(
        "strong-units-are-weak",
        strong_not_weak == 0,
        format!("{strong_not_weak} strong units that are not weak"),
    ));

    items.push(weak_units_item(p, sample, cr));
    items.push(zkernel_item(p, sample, window, cr));
    items.push(point_kernel_item(p, sample, window, cr));
    items.push(regularity_item(p, sample, window));
    items.extend(pair_items(p, sample, y));
    items.extend(ideal_items(p, sample, m));

    CrossReport {
        presentation: p.name.clone(),
        items,
    }
}

/// A group fails CR exactly when it has a weak unit that is not strong. When
/// CR fails but no such unit was enumerated, the unit `|g| + h` with
/// `coz h = int Z(g)` built from the CR witness `g` must be one.
fn weak_units_item<S: Space>(p: &GroupPresentation<S>, sample: &Sample<S>, cr: bool) -> CrossItem {
    let space = &p.space;
    let found = (0..sample.len()).find(|&i| space.is_whole(&sample.closures[i]) && !space.is_whole(&sample.cozs[i]));
    let id = "cr-iff-weak-units-strong";
    match (cr, found) {
        (true, None) => item(id, true, "CR holds and every enumerated weak unit is strong"),
        (true, Some(i)) => item(id, false, format!("CR holds but {} is weak and not strong", sample.labels[i])),
        (false, Some(i)) => item(id, true, format!("CR fails; {} is weak and not strong", sample.labels[i])),
        (false, None) => {
            let Some(g) = (0..sample.len())
                .find(|&i| space.interior(&sample.closures[i]) != sample.cozs[i])
                .map(|i| &sample.elems[i])
            else {
                return item(id, false, "CR fails but no enumerated cozero-set is irregular");
            };
            let built = space
                .realize_open(&space.interior(&space.zset(g)))
                .map(|h| space.add(&space.abs(g), &h));
            match built {
                Ok(k) if is_weak_unit(space, &k) && !is_strong_unit(space, &k) => {
                    item(id, true, "CR fails; constructed |g| + h is weak and not strong")
                }
                Ok(_) => item(id, false, "constructed |g| + h is not a weak non-strong unit"),
                Err(e) => item(id, false, format!("could not build the unit: {e}")),
            }
        }
    }
}

fn d_ideal_summary<S: Space>(
    space: &S,
    ideals: impl Iterator<Item = (String, IdealSpec<S>)>,
    members: &[S::Elem],
) -> Result<Option<String>, String> {
    for (label, ideal) in ideals {
        match d_ideal_test(space, &ideal, members.iter().cloned(), members.len()) {
            Ok(DIdealVerdict::Pass { .. }) => {}
            Ok(DIdealVerdict::Counterexample { .. }) => return Ok(Some(label)),
            Err(e) => return Err(format!("{label}: {e}")),
        }
    }
    Ok(None)
}

fn agreement(id: &'static str, holds: bool, found: Result<Option<String>, String>, what: &str) -> CrossItem {
    match found {
        Err(e) => item(id, false, e),
        Ok(None) => item(
            id,
            holds,
            format!("no {what} fails the d-ideal test; CR={holds}"),
        ),
        Ok(Some(label)) => item(
            id,
            !holds,
            format!("{what} for {label} is not a d-ideal; CR={holds}"),
        ),
    }
}

fn zkernel_item<S: Space>(p: &GroupPresentation<S>, sample: &Sample<S>, window: usize, cr: bool) -> CrossItem {
    let members = &sample.elems[..window];
    let ideals = (0..window).map(|i| (sample.labels[i].clone(), IdealSpec::ZKernel(sample.elems[i].clone())));
    agreement(
        "cr-iff-zkernels-d-ideals",
        cr,
        d_ideal_summary(&p.space, ideals, members),
        "I(Z(g))",
    )
}

fn point_kernel_item<S: Space>(p: &GroupPresentation<S>, sample: &Sample<S>, window: usize, cr: bool) -> CrossItem {
    let members = &sample.elems[..window];
    let ideals = p
        .space
        .sample_points()
        .into_iter()
        .map(|pt| (pt.to_string(), IdealSpec::PointKernel(pt)));
    agreement(
        "cr-iff-point-kernels-d-ideals",
        cr,
        d_ideal_summary(&p.space, ideals, members),
        "M_p",
    )
}

/// Per element: regular open cozero-set ⟺ regular closed zero-set ⟺ the
/// polar witness lies in `I(Z(g))`; and when regular, `g^⊥⊥ ⊆ I(Z(g))` on
/// every sampled `f`.
fn regularity_item<S: Space>(p: &GroupPresentation<S>, sample: &Sample<S>, window: usize) -> CrossItem {
    let space = &p.space;
    let mut bad = Vec::new();
    let mut irregular = 0;
    for g in 0..window {
        let elem = &sample.elems[g];
        let r1 = space.interior(&sample.closures[g]) == sample.cozs[g];
        let r3 = zset_regular_closed(space, elem);
        let r4 = match polar_witness(space, elem) {
            Ok(w) => {
                let cw = space.coz(&w);
                !(space.is_subset(&cw, &sample.closures[g]) && !space.is_subset(&cw, &sample.cozs[g]))
            }
            Err(_) => {
                bad.push(format!("{}: no polar witness", sample.labels[g]));
                continue;
            }
        };
        let r2 = !r1
            || (0..window).all(|f| {
                !space.is_subset(&sample.cozs[f], &sample.closures[g]) || space.is_subset(&sample.cozs[f], &sample.cozs[g])
            });
        if !r1 {
            irregular += 1;
        }
        if !(r1 == r3 && r1 == r4 && r2) {
            bad.push(format!("{}: R1={r1} R2={r2} R3={r3} R4={r4}", sample.labels[g]));
        }
    }
    item(
        "regularity-conditions-agree",
        bad.is_empty(),
        format!("{window} elements, {irregular} irregular, disagreements: {bad:?}"),
    )
}

fn pair_items<S: Space>(p: &GroupPresentation<S>, sample: &Sample<S>, y: bool) -> Vec<CrossItem> {
    let space = &p.space;
    let n = sample.len().min(PAIR_WINDOW);
    let (mut form_mismatch, mut violations, mut chain_failures) = (Vec::new(), 0usize, Vec::new());
    for g in 0..n {
        let zkernel = IdealSpec::ZKernel(sample.elems[g].clone());
        let principal = IdealSpec::Principal(sample.elems[g].clone());
        for f in 0..n {
            let (fe, ge) = (&sample.elems[f], &sample.elems[g]);
            let form2 = !ideal_contains(space, &zkernel, fe).expect("zkernel is well formed")
                || ideal_contains(space, &principal, fe).expect("principal is well formed");
            let form5 = !space.is_subset(&sample.cozs[f], &sample.cozs[g])
                || matches!(space.dominance(fe, ge), Dominance::Bounded(_));
            if form2 != form5 {
                form_mismatch.push(format!("({}, {})", sample.labels[f], sample.labels[g]));
            }
            if !form5 {
                violations += 1;
            }
            if !chain_check(space, fe, ge) {
                chain_failures.push(format!("({}, {})", sample.labels[f], sample.labels[g]));
            }
        }
    }
    let pairs = n * n;
    vec![
        item(
            "y-forms-agree",
            form_mismatch.is_empty() && (!y || violations == 0),
            format!("{pairs} pairs, {violations} violations, Y={y}, form mismatches: {form_mismatch:?}"),
        ),
        item(
            "chain",
            chain_failures.is_empty(),
            format!("{pairs} pairs, failures: {chain_failures:?}"),
        ),
    ]
}

fn ideal_items<S: Space>(p: &GroupPresentation<S>, sample: &Sample<S>, m: bool) -> Vec<CrossItem> {
    let space = &p.space;
    let (gens, size) = IDEAL_WINDOW;
    let gens = sample.len().min(gens);
    let members = &sample.elems[..sample.len().min(size)];
    let polar = d_ideal_summary(
        space,
        (0..gens).map(|i| (sample.labels[i].clone(), IdealSpec::Polar(sample.elems[i].clone()))),
        members,
    );
    let polar_item = match polar {
        Ok(None) => item("polars-are-d-ideals", true, format!("{gens} polars tested")),
        Ok(Some(label)) => item("polars-are-d-ideals", false, format!("polar of {label} is not a d-ideal")),
        Err(e) => item("polars-are-d-ideals", false, e),
    };
    let principal = d_ideal_summary(
        space,
        (0..gens).map(|i| (sample.labels[i].clone(), IdealSpec::Principal(sample.elems[i].clone()))),
        members,
    );
    let principal_item = match principal {
        Err(e) => item("m-iff-principal-d-ideals", false, e),
        Ok(None) => item(
            "m-iff-principal-d-ideals",
            m,
            format!("no G(g) fails the d-ideal test; M={m}"),
        ),
        Ok(Some(label)) => item(
            "m-iff-principal-d-ideals",
            !m,
            format!("G({label}) is not a d-ideal; M={m}"),
        ),
    };
    vec![polar_item, principal_item]
}
