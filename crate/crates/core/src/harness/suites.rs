use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde_json::{json, Value};

use super::catalog::{build, catalog, CatalogEntry};
use super::report::{CaseReport, SkipReason, Status};
use super::SuiteOptions;
use crate::abelian::abelian_essential_extension;
use crate::actions::{
    babcho_certify, coset_action, is_malnormal, is_self_normalizing, khma_certify,
    malnormal_certify, ClosureOutcome, GroupAction, StabilizerOutcome,
};
use crate::aut::{automorphism_group, holomorph, is_complete, sdp, semidirect, Semidirect};
use crate::construct::direct_product;
use crate::error::{GroupError, Result};
use crate::essential::{
    e_of, essential_subgroups, essentialize, has_proper_essential, is_essential,
    is_essential_by_definition, kk_conditions, socle,
};
use crate::group::FiniteGroup;
use crate::hom::{hom_from_generator_images, Homomorphism};
use crate::iso::is_isomorphic;
use crate::lattice::{all_subgroups, conjugacy_classes, normal_complement, normal_subgroups};
use crate::limits::Limits;
use crate::named::{make_named, NamedGroup};
use crate::subgroup::{center, normal_closure, normalizer, subgroup_generated, Subgroup};

enum Outcome {
    Checked { ok: bool, witness: Value },
    Skip(SkipReason),
}

fn checked(ok: bool, witness: Value) -> Result<Outcome> {
    Ok(Outcome::Checked { ok, witness })
}

fn finish(id: String, groups: Vec<String>, claim: &str, outcome: Result<Outcome>) -> CaseReport {
    let (status, witness) = match outcome {
        Ok(Outcome::Checked { ok: true, witness }) => (Status::Pass, witness),
        Ok(Outcome::Checked { ok: false, witness }) => (Status::Fail, witness),
        Ok(Outcome::Skip(reason)) => (Status::Skipped { reason }, Value::Null),
        Err(GroupError::OrderBoundExceeded { what, limit }) => (
            Status::Skipped {
                reason: SkipReason::OrderBound,
            },
            json!({ "bound": what, "limit": limit }),
        ),
        Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
    };
    CaseReport {
        case_id: id,
        groups,
        claim: claim.to_string(),
        status,
        witness,
    }
}

/// Generators in cycle notation, enough to rebuild the subgroup.
fn sub_json(sub: &Subgroup) -> Value {
    let gens: Vec<String> = sub
        .generators()
        .iter()
        .map(|&g| sub.parent().element(g).to_string())
        .collect();
    json!({ "order": sub.order(), "generators": gens })
}

fn over_aut_cap(group: &FiniteGroup, opts: &SuiteOptions) -> bool {
    group.order() > opts.aut_cap.min(Limits::current().aut_cap)
}

/// Definitional essentiality without the normal lattice: every nontrivial
/// normal subgroup contains the normal closure of one of its elements, so
/// `sub` is essential exactly when each `ncl(x)`, `x ≠ 1`, meets it.
pub fn essential_by_closures(group: &FiniteGroup, sub: &Subgroup) -> bool {
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    (1..group.order()).all(|x| {
        let ncl = normal_closure(group, [x]);
        !seen.insert(ncl.members().clone())
            || ncl.elements().iter().skip(1).any(|&y| sub.contains(y))
    })
}

fn per_group(
    suite: &str,
    opts: &SuiteOptions,
    claim: &str,
    check: impl Fn(&CatalogEntry) -> Result<Outcome> + Sync,
) -> Vec<CaseReport> {
    let cat = catalog(opts.max_order);
    opts.map(&cat, |i, entry| {
        finish(
            format!("{suite}:{i:03}"),
            vec![entry.name.clone()],
            claim,
            check(entry),
        )
    })
}

pub(super) fn kk(opts: &SuiteOptions) -> Vec<CaseReport> {
    per_group(
        "kk",
        opts,
        "no proper essential subgroup <=> every normal subgroup has a normal complement <=> no nontrivial \
         normal subgroup has one <=> some normal overgroup has none <=> relative complements exist <=> soc(G) = G",
        |entry| {
            let conditions = kk_conditions(&entry.group)?;
            checked(conditions.all_agree(), serde_json::to_value(conditions).expect("plain struct"))
        },
    )
}

pub(super) fn pm(opts: &SuiteOptions) -> Vec<CaseReport> {
    per_group(
        "pm",
        opts,
        "soc(G) = e(G) and soc(G) is essential",
        |entry| {
            let g = &entry.group;
            let lattice = normal_subgroups(g)?;
            let normals = lattice.normals();
            let soc = socle(g)?;
            let e = e_of(g)?;
            // e(G) recomputed from the definition alone.
            let e_oracle = normals
                .iter()
                .filter(|n| is_essential_by_definition(n, normals))
                .fold(Subgroup::whole(g), |acc, n| acc.intersection(n));
            let soc_essential = is_essential_by_definition(&soc, normals);
            checked(
                soc == e && e == e_oracle && soc_essential,
                json!({ "socle": sub_json(&soc), "e": sub_json(&e), "e_oracle": sub_json(&e_oracle),
                    "socle_essential": soc_essential }),
            )
        },
    )
}

pub(super) fn jj(opts: &SuiteOptions) -> Vec<CaseReport> {
    per_group(
        "jj",
        opts,
        "soc(G) = e(G) <=> soc(G) is essential in e(G)",
        |entry| {
            let g = &entry.group;
            let soc = socle(g)?;
            let e = e_of(g)?;
            let e_group = e.as_group()?;
            let to_parent = e.embedding_indices(&e_group);
            let inner = normal_subgroups(&e_group)?;
            let essential_in_e = inner.normals().iter().filter(|k| !k.is_trivial()).all(|k| {
                k.elements()
                    .iter()
                    .skip(1)
                    .any(|&x| soc.contains(to_parent[x]))
            });
            let equal = soc == e;
            checked(
                equal == essential_in_e,
                json!({ "soc_eq_e": equal, "soc_essential_in_e": essential_in_e,
                    "socle": sub_json(&soc), "e": sub_json(&e) }),
            )
        },
    )
}

const SK_POOL: &[&str] = &[
    "C2",
    "C3",
    "C4",
    "C5",
    "C6",
    "C8",
    "C9",
    "S3",
    "D8",
    "D10",
    "Q8",
    "E2^2",
    "A4",
    "S4",
    "sdp(5,4,2)",
    "A5",
];

/// Unordered pairs from a fixed pool of factors, product order within bound.
pub(crate) fn sk_pairs(max_order: usize) -> Vec<(&'static str, &'static str)> {
    let pool: Vec<(&str, usize)> = SK_POOL.iter().map(|&s| (s, build(s).order())).collect();
    let mut pairs = Vec::new();
    for (i, &(a, na)) in pool.iter().enumerate() {
        for &(b, nb) in &pool[i..] {
            if na.saturating_mul(nb) <= max_order {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

pub(super) fn sk(opts: &SuiteOptions) -> Vec<CaseReport> {
    let pairs = sk_pairs(opts.max_order);
    opts.map(&pairs, |i, &(a, b)| {
        let outcome = (|| {
            let (ga, gb) = (build(a), build(b));
            let p = direct_product(&ga, &gb)?;
            let flag_a = has_proper_essential(&ga)?;
            let flag_b = has_proper_essential(&gb)?;
            let flag_p = has_proper_essential(&p.group)?;
            let e_p = e_of(&p.group)?;
            let e_parts = p
                .left_embedding
                .map_subgroup(&e_of(&ga)?)
                .join(&p.right_embedding.map_subgroup(&e_of(&gb)?));
            checked(
                flag_p == (flag_a || flag_b) && e_p == e_parts,
                json!({ "proper_a": flag_a, "proper_b": flag_b, "proper_product": flag_p,
                        "e_product": sub_json(&e_p), "e_a_times_e_b": sub_json(&e_parts) }),
            )
        })();
        finish(
            format!("sk:{i:03}"),
            vec![a.to_string(), b.to_string()],
            "A x B has a proper essential subgroup <=> A or B has one, and e(A x B) = e(A) x e(B)",
            outcome,
        )
    })
}

struct SemidirectInstance {
    label: String,
    n: String,
    h: String,
    build: fn() -> Result<Semidirect>,
    /// The acting group is cyclic of prime order acting faithfully on `C_p`.
    prime_action: bool,
}

fn via_automorphism(n: NamedGroup, h_order: usize, action_order: usize) -> Result<Semidirect> {
    let ng = make_named(n)?;
    let h = make_named(NamedGroup::Cyclic(h_order))?;
    let aut = automorphism_group(&ng)?;
    let perm_group = &aut.as_perm_group;
    let sigma = (0..perm_group.order())
        .find(|&x| perm_group.element_order(x) == action_order)
        .ok_or_else(|| {
            GroupError::InvalidParameter(format!("no automorphism of order {action_order}"))
        })?;
    let alpha = hom_from_generator_images(&h, perm_group, &[sigma])?;
    semidirect(&ng, &h, &alpha)
}

macro_rules! sdp_instance {
    ($n:literal, $m:literal, $e:literal, $prime:expr) => {
        SemidirectInstance {
            label: format!("sdp({},{},{})", $n, $m, $e),
            n: format!("C{}", $n),
            h: format!("C{}", $m),
            build: || sdp($n, $m, $e),
            prime_action: $prime,
        }
    };
}

fn nbk_instances() -> Vec<SemidirectInstance> {
    vec![
        sdp_instance!(5, 4, 1, false),
        sdp_instance!(5, 4, 2, false),
        sdp_instance!(5, 4, 3, false),
        sdp_instance!(5, 4, 4, false),
        sdp_instance!(3, 4, 2, false),
        sdp_instance!(3, 8, 2, false),
        sdp_instance!(4, 2, 3, false),
        sdp_instance!(8, 2, 3, false),
        sdp_instance!(8, 2, 5, false),
        sdp_instance!(8, 2, 7, false),
        sdp_instance!(7, 6, 3, false),
        sdp_instance!(9, 6, 2, false),
        sdp_instance!(9, 3, 4, false),
        sdp_instance!(5, 2, 4, true),
        sdp_instance!(7, 2, 6, true),
        sdp_instance!(11, 2, 10, true),
        sdp_instance!(13, 2, 12, true),
        sdp_instance!(7, 3, 2, true),
        sdp_instance!(13, 3, 3, true),
        sdp_instance!(11, 5, 3, true),
        SemidirectInstance {
            label: "E2^2 x| C3".into(),
            n: "E2^2".into(),
            h: "C3".into(),
            build: || via_automorphism(NamedGroup::ElementaryAbelian { p: 2, k: 2 }, 3, 3),
            prime_action: false,
        },
        SemidirectInstance {
            label: "Q8 x| C3".into(),
            n: "Q8".into(),
            h: "C3".into(),
            build: || via_automorphism(NamedGroup::Quaternion8, 3, 3),
            prime_action: false,
        },
        SemidirectInstance {
            label: "S3 x| C4".into(),
            n: "S3".into(),
            h: "C4".into(),
            build: || via_automorphism(NamedGroup::Symmetric(3), 4, 2),
            prime_action: false,
        },
    ]
}

/// Checks every clause of the semidirect-product statement that applies.
fn nbk_clauses(s: &Semidirect) -> Result<(bool, Value)> {
    let g = &s.group;
    let n = s.n_embedding.domain();
    let h = s.h_embedding.domain();
    let n_image = s.n_embedding.image();
    let g_proper = has_proper_essential(g)?;
    let mut clauses = Vec::new();
    let mut ok = true;

    let proper_h: Vec<Subgroup> = essential_subgroups(h)?
        .into_iter()
        .filter(|e| !e.is_whole())
        .collect();
    for e in &proper_h {
        let l = n_image.join(&s.h_embedding.map_subgroup(e));
        let holds = l.is_normal() && !l.is_whole() && is_essential(g, &l)?.is_essential();
        ok &= holds;
        clauses.push(
            json!({ "clause": "N x| E is proper essential for proper essential E of H",
                             "e": sub_json(e), "l": sub_json(&l), "holds": holds }),
        );
    }
    if !proper_h.is_empty() || has_proper_essential(n)? {
        ok &= g_proper;
        clauses.push(
            json!({ "clause": "a component has a proper essential subgroup, so G has one",
                             "holds": g_proper }),
        );
    }
    if n.is_abelian() && h.is_abelian() && !g.is_abelian() {
        ok &= g_proper;
        clauses.push(json!({ "clause": "abelian components with nontrivial action, so G has a proper essential subgroup",
                             "holds": g_proper }));
    }
    Ok((ok, json!({ "order": g.order(), "clauses": clauses })))
}

pub(super) fn nbk(opts: &SuiteOptions) -> Vec<CaseReport> {
    let instances = nbk_instances();
    let mut jobs: Vec<(usize, bool)> = (0..instances.len()).map(|i| (i, false)).collect();
    jobs.extend(
        (0..instances.len())
            .filter(|&i| instances[i].prime_action)
            .map(|i| (i, true)),
    );
    opts.map(&jobs, |k, &(i, remark)| {
        let inst = &instances[i];
        let outcome = (|| {
            let s = (inst.build)()?;
            if s.group.order() > opts.max_order {
                return Ok(Outcome::Skip(SkipReason::OrderBound));
            }
            if remark {
                let n_proper = has_proper_essential(s.n_embedding.domain())?;
                let h_proper = has_proper_essential(s.h_embedding.domain())?;
                let g_proper = has_proper_essential(&s.group)?;
                checked(
                    !n_proper && !h_proper && g_proper,
                    json!({ "n_proper": n_proper, "h_proper": h_proper, "g_proper": g_proper }),
                )
            } else {
                let (ok, witness) = nbk_clauses(&s)?;
                checked(ok, witness)
            }
        })();
        let claim = if remark {
            "C_p x| C_q with faithful action of prime order q: G has a proper essential subgroup, N and H do not"
        } else {
            "N x| H: essential E in H gives essential N x| E; a component with a proper essential subgroup, \
             or abelian components with nontrivial action, give G one"
        };
        finish(
            format!("nbk:{k:03}"),
            vec![inst.label.clone(), inst.n.clone(), inst.h.clone()],
            claim,
            outcome,
        )
    })
}

/// Self-normalizing subgroups reached by iterating normalizers from the
/// cyclic subgroup of each class representative.
fn normalizer_fixpoints(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for class in conjugacy_classes(group).iter().skip(1) {
        let mut s = subgroup_generated(group, [class[0]]);
        loop {
            let next = normalizer(group, &s);
            if next == s {
                break;
            }
            s = next;
        }
        if seen.insert(s.members().clone()) {
            out.push(s);
        }
    }
    out.sort();
    out
}

fn khma_action_case(
    group: &FiniteGroup,
    action: &GroupAction,
    extra: Option<&Subgroup>,
) -> Result<Outcome> {
    let lattice = normal_subgroups(group)?;
    let mut family: Vec<Subgroup> = lattice.normals().to_vec();
    family.extend(extra.cloned());
    let (mut certified, mut vacuous) = (0, 0);
    for h in &family {
        match khma_certify(group, h, action) {
            Ok(StabilizerOutcome::Certified { .. }) => certified += 1,
            Ok(StabilizerOutcome::ConditionFailed { .. }) => vacuous += 1,
            Err(GroupError::Counterexample(msg)) => {
                return checked(false, json!({ "subgroup": sub_json(h), "error": msg }));
            }
            Err(e) => return Err(e),
        }
    }
    checked(
        true,
        json!({ "set_size": action.set_size(), "certified": certified, "condition_failed": vacuous }),
    )
}

pub(super) fn khma(opts: &SuiteOptions) -> Vec<CaseReport> {
    let cat = catalog(opts.max_order);
    let mut jobs: Vec<(usize, Option<Subgroup>)> = Vec::new();
    for (i, entry) in cat.iter().enumerate() {
        jobs.push((i, None));
        for s in normalizer_fixpoints(&entry.group)
            .into_iter()
            .filter(|s| !s.is_whole())
            .take(2)
        {
            jobs.push((i, Some(s)));
        }
    }
    let claim = "stabilizers H_x pairwise non-nested => ncl(H)Ker(f) is essential";
    opts.map(&jobs, |k, (i, stab)| {
        let entry = &cat[*i];
        let g = &entry.group;
        let outcome = match stab {
            None => khma_action_case(g, &GroupAction::natural(g), None),
            Some(s) => coset_action(g, s).and_then(|f| khma_action_case(g, &f, Some(s))),
        };
        let mut groups = vec![entry.name.clone()];
        groups.push(match stab {
            None => "natural action".to_string(),
            Some(s) => format!("cosets of {}", sub_json(s)["generators"]),
        });
        finish(format!("khma:{k:03}"), groups, claim, outcome)
    })
}

fn closure_branches(
    group: &FiniteGroup,
    candidates: &[Subgroup],
    certify: fn(&FiniteGroup, &Subgroup) -> Result<ClosureOutcome>,
    source: &str,
) -> Result<Outcome> {
    let (mut whole, mut proper) = (0, 0);
    for s in candidates {
        match certify(group, s) {
            Ok(ClosureOutcome::WholeGroup) => whole += 1,
            Ok(ClosureOutcome::ProperEssential { .. }) => proper += 1,
            Err(GroupError::Counterexample(msg)) => {
                return checked(false, json!({ "subgroup": sub_json(s), "error": msg }));
            }
            Err(e) => return Err(e),
        }
    }
    checked(
        true,
        json!({ "candidates": candidates.len(), "source": source, "whole_group": whole, "proper_essential": proper }),
    )
}

fn subgroup_candidates(group: &FiniteGroup) -> Result<(Vec<Subgroup>, &'static str)> {
    if group.order() <= Limits::current().oracle_cap {
        Ok((all_subgroups(group)?, "all subgroups"))
    } else {
        let mut subs: Vec<Subgroup> = conjugacy_classes(group)
            .iter()
            .map(|c| subgroup_generated(group, [c[0]]))
            .collect();
        subs.extend(normalizer_fixpoints(group));
        subs.sort();
        subs.dedup();
        Ok((subs, "cyclic subgroups and normalizer fixpoints"))
    }
}

pub(super) fn babcho(opts: &SuiteOptions) -> Vec<CaseReport> {
    per_group(
        "babcho",
        opts,
        "S self-normalizing => ncl(S) = G or ncl(S) is proper essential",
        |entry| {
            let g = &entry.group;
            let (subs, source) = subgroup_candidates(g)?;
            let chosen: Vec<Subgroup> = subs
                .into_iter()
                .filter(|s| is_self_normalizing(g, s))
                .collect();
            closure_branches(g, &chosen, babcho_certify, source)
        },
    )
}

pub(super) fn malnormal(opts: &SuiteOptions) -> Vec<CaseReport> {
    per_group(
        "malnormal",
        opts,
        "S nontrivial malnormal => ncl(S) = G or ncl(S) is proper essential",
        |entry| {
            let g = &entry.group;
            let (subs, source) = subgroup_candidates(g)?;
            let chosen: Vec<Subgroup> = subs
                .into_iter()
                .filter(|s| !s.is_trivial() && is_malnormal(g, s))
                .collect();
            closure_branches(g, &chosen, malnormal_certify, source)
        },
    )
}

pub(super) fn sym(opts: &SuiteOptions) -> Vec<CaseReport> {
    let degrees: Vec<usize> = (3..=6).collect();
    opts.map(&degrees, |k, &n| {
        let outcome = (|| {
            if n == 6 && !opts.slow {
                return Ok(Outcome::Skip(SkipReason::Slow));
            }
            let g = make_named(NamedGroup::Symmetric(n))?;
            let lattice = normal_subgroups(&g)?;
            let alt = lattice
                .normals()
                .iter()
                .find(|x| x.index() == 2)
                .cloned()
                .ok_or_else(|| GroupError::Counterexample("no subgroup of index 2".into()))?;
            let essential = is_essential(&g, &alt)?.is_essential();
            let oracle = essential_by_closures(&g, &alt);
            let normals = lattice.normals();
            let split_pair = normals.iter().find_map(|a| {
                normals
                    .iter()
                    .find(|b| {
                        !a.is_trivial()
                            && !b.is_trivial()
                            && a.intersection(b).is_trivial()
                            && a.order() * b.order() == g.order()
                    })
                    .map(|b| (a.clone(), b.clone()))
            });
            let via_action = match khma_certify(&g, &alt, &GroupAction::natural(&g))? {
                StabilizerOutcome::Certified { subgroup, .. } => subgroup == alt,
                StabilizerOutcome::ConditionFailed { .. } => false,
            };
            // The stabilizer argument needs point stabilizers in A_n to be distinct.
            let action_ok = via_action || n < 4;
            checked(
                essential && oracle && split_pair.is_none() && action_ok,
                json!({ "alternating_essential": essential, "oracle": oracle,
                        "decomposition": split_pair.map(|(a, b)| [sub_json(&a), sub_json(&b)]),
                        "certified_by_natural_action": via_action }),
            )
        })();
        finish(
            format!("sym:{k:03}"),
            vec![format!("S{n}")],
            "A_n is a proper essential subgroup of S_n and S_n is indecomposable",
            outcome,
        )
    })
}

/// The sampled normal embeddings of `group` used by the completeness suite.
fn sampled_embeddings(group: &FiniteGroup) -> Result<Vec<(String, Homomorphism)>> {
    let hol = holomorph(group)?;
    let mut out = vec![("Hol(G)".to_string(), hol.base_embedding)];
    for (label, k) in [
        ("G x C2", NamedGroup::Cyclic(2)),
        ("G x S3", NamedGroup::Symmetric(3)),
    ] {
        let p = direct_product(group, &make_named(k)?)?;
        out.push((label.to_string(), p.left_embedding));
    }
    if group.is_abelian() {
        let ext = abelian_essential_extension(group)?;
        out.push((
            format!("exponent lift into {}", ext.extension_spec()),
            ext.embedding,
        ));
    }
    Ok(out)
}

pub(super) fn ma(opts: &SuiteOptions) -> Vec<CaseReport> {
    per_group(
        "ma",
        opts,
        "G complete <=> every sampled normal embedding splits; essentialization yields an essential image, \
         never proper for complete G",
        |entry| {
            let g = &entry.group;
            if over_aut_cap(g, opts) {
                return Ok(Outcome::Skip(SkipReason::AutCap));
            }
            let complete = is_complete(g)?;
            let mut ok = true;
            let mut rows = Vec::new();
            let mut all_split = true;
            let mut proper_extension = false;
            for (label, phi) in sampled_embeddings(g)? {
                let image = phi.image();
                let splits = normal_complement(phi.codomain(), &image)?.is_some();
                all_split &= splits;
                let ess = essentialize(&phi)?;
                let lattice = normal_subgroups(&ess.quotient)?;
                let post = ess.embedding.is_mono()
                    && ess.certificate.is_essential()
                    && ess.certificate.recheck(&lattice)
                    && !(complete && ess.is_proper());
                proper_extension |= ess.is_proper();
                ok &= post;
                rows.push(json!({ "embedding": label, "codomain_order": phi.codomain().order(),
                                  "splits": splits, "quotient_order": ess.quotient.order(),
                                  "proper_essential_extension": ess.is_proper(), "postconditions": post }));
            }
            ok &= complete == all_split;
            checked(
                ok,
                json!({ "complete": complete, "all_split": all_split,
                        "proper_extension_found": proper_extension, "embeddings": rows }),
            )
        },
    )
}

pub(super) fn abelian_ext(opts: &SuiteOptions) -> Vec<CaseReport> {
    let cat: Vec<CatalogEntry> = catalog(opts.max_order)
        .into_iter()
        .filter(|e| e.group.is_abelian())
        .collect();
    opts.map(&cat, |i, entry| {
        let outcome = (|| {
            let ext = abelian_essential_extension(&entry.group)?;
            let image = ext.embedding.image();
            let by_closures = essential_by_closures(&ext.extension, &image);
            let lattice = normal_subgroups(&ext.extension)?;
            let by_definition = is_essential_by_definition(&image, lattice.normals());
            checked(
                ext.embedding.is_mono() && !image.is_whole() && by_closures && by_definition,
                json!({ "extension": ext.extension_spec(), "extension_order": ext.extension.order(),
                        "image": sub_json(&image), "essential_by_closures": by_closures,
                        "essential_by_definition": by_definition }),
            )
        })();
        finish(
            format!("abelian_ext:{i:03}"),
            vec![entry.name.clone()],
            "a nontrivial abelian group has a proper essential extension",
            outcome,
        )
    })
}

/// `G ≅ C2 × C` for a normal complement `C` of a central involution, with
/// `C` complete and without subgroups of index 2.
pub(crate) fn z2_pattern(group: &FiniteGroup) -> Result<Option<Subgroup>> {
    let lattice = normal_subgroups(group)?;
    for n in lattice.normals().iter().filter(|n| n.order() == 2) {
        for c in lattice.normals() {
            if 2 * c.order() != group.order() || !c.intersection(n).is_trivial() {
                continue;
            }
            let cg = c.as_group()?;
            let no_index_two = normal_subgroups(&cg)?
                .normals()
                .iter()
                .all(|f| f.index() != 2);
            if no_index_two && is_complete(&cg)? {
                return Ok(Some(c.clone()));
            }
        }
    }
    Ok(None)
}

pub(super) fn bchche(opts: &SuiteOptions) -> Vec<CaseReport> {
    per_group(
        "bchche",
        opts,
        "G is a direct factor of Hol(G) <=> G is complete or G = C2 x C with C complete and no subgroup of index 2",
        |entry| {
            let g = &entry.group;
            if over_aut_cap(g, opts) {
                return Ok(Outcome::Skip(SkipReason::AutCap));
            }
            let hol = holomorph(g)?;
            let complement = normal_complement(&hol.group, &hol.base_image())?;
            let complete = is_complete(g)?;
            let pattern = z2_pattern(g)?;
            checked(
                complement.is_some() == (complete || pattern.is_some()),
                json!({ "hol_order": hol.group.order(), "direct_factor": complement.as_ref().map(sub_json),
                        "complete": complete, "c2_times_complete": pattern.as_ref().map(sub_json) }),
            )
        },
    )
}

pub(super) fn hol_remark(opts: &SuiteOptions) -> Vec<CaseReport> {
    let mut cases = vec![{
        let outcome = (|| {
            let c2 = make_named(NamedGroup::Cyclic(2))?;
            let hol = holomorph(&c2)?;
            let iso = is_isomorphic(&hol.group, &c2)?.is_some();
            checked(iso, json!({ "hol_order": hol.group.order() }))
        })();
        finish(
            "hol_remark:base".into(),
            vec!["Hol(C2)".into()],
            "Hol(C2) = C2",
            outcome,
        )
    }];
    let cat = catalog(opts.max_order);
    let rows = opts.map(&cat, |i, entry| {
        let g = &entry.group;
        let outcome = (|| {
            if over_aut_cap(g, opts) {
                return Ok(Some(Outcome::Skip(SkipReason::AutCap)));
            }
            let z = center(g).order();
            if z == 2 || is_complete(g)? {
                return Ok(None);
            }
            let hol = holomorph(g)?;
            let proper = has_proper_essential(&hol.group)?;
            Ok(Some(Outcome::Checked {
                ok: proper,
                witness: json!({ "center_order": z, "hol_order": hol.group.order(), "hol_has_proper_essential": proper }),
            }))
        })();
        let claim = "|Z(G)| != 2 and G not complete => Hol(G) has a proper essential subgroup";
        match outcome {
            Ok(None) => None,
            Ok(Some(o)) => Some(finish(format!("hol_remark:{i:03}"), vec![entry.name.clone()], claim, Ok(o))),
            Err(e) => Some(finish(format!("hol_remark:{i:03}"), vec![entry.name.clone()], claim, Err(e))),
        }
    });
    cases.extend(rows.into_iter().flatten());
    cases
}
