//! Law checks for each document kind.
//!
//! A document first passes through gating checks on its raw tables. When
//! those hold, the structure is built and the remaining law families run as
//! independent parts on the rayon pool; their reports are absorbed in a
//! fixed order, so the result does not depend on the number of threads.

use rayon::prelude::*;

use structa_core::category::{arrow_laws, check_category, check_contravariant, check_functor, naturality, FinCat, Variance};
use structa_core::group::{
    action_check, check_group, commutator_laws, group_laws, group_table_laws, hom_report, normality_laws, power_laws,
    quotient_laws, subgroup_criteria_laws,
};
use structa_core::numbers::rat_law_check;
use structa_core::order::{check_order, lattice_from_poset, lattice_laws, semilattice_laws, Poset};
use structa_core::sets::map_sweep;
use structa_core::settools::{base_axioms, filter_ops, sigma_equivalence_check};
use structa_core::top::{base_ops, closure_check, closure_from_closed_check, neighborhood_laws, open_axioms, Topology};
use structa_core::{FinMap, LawReport, Result as CoreResult};

use crate::doc::{Kind, StructureDoc};
use crate::error::CliError;
use crate::model;

type Part<'a> = Box<dyn Fn() -> CoreResult<LawReport> + Send + Sync + 'a>;

fn run_parts(report: &mut LawReport, parts: Vec<Part<'_>>) -> Result<(), CliError> {
    let done: Vec<CoreResult<LawReport>> = parts.par_iter().map(|p| p()).collect();
    for r in done {
        report.absorb(r?);
    }
    Ok(())
}

pub fn run_check(doc: &StructureDoc) -> Result<LawReport, CliError> {
    let p = "$";
    let mut report = LawReport::new(format!("check {}", doc.kind().name()));
    match doc.kind() {
        Kind::Set => {
            let c = model::carrier(doc, "elements", p)?;
            report.absorb(map_sweep(&FinMap::identity(&c))?);
        }
        Kind::Map => {
            let f = model::build_map(doc, p)?;
            report.absorb(map_sweep(&f)?);
        }
        Kind::Poset => {
            let rel = model::build_relation(doc, p)?;
            let order = check_order(&rel);
            report.absorb(order.report);
            if order.partial {
                let poset = Poset::from_relation(rel)?;
                match lattice_from_poset(&poset) {
                    Ok(l) => report.absorb(lattice_laws(&l)),
                    Err(e) => report.note(format!("not a lattice: {e}")),
                }
            }
        }
        Kind::Semilattice => {
            let t = model::build_table(doc, p)?;
            report.absorb(semilattice_laws(&t));
        }
        Kind::Category => {
            let data = model::build_cat_data(doc, p)?;
            let gate = check_category(&data, !data.identity.is_empty());
            let passed = gate.passed();
            report.absorb(gate);
            if passed && !data.identity.is_empty() {
                report.absorb(arrow_laws(&FinCat::new(&data)?));
            }
        }
        Kind::Functor => {
            let (f, v) = model::build_functor(doc, p)?;
            report.absorb(match v {
                Variance::Covariant => check_functor(&f),
                Variance::Contravariant => check_contravariant(&f),
            });
        }
        Kind::NatTrans => {
            let t = model::build_nat(doc, p)?;
            report.absorb(naturality(&t));
        }
        Kind::Group => {
            let t = model::build_table(doc, p)?;
            let gate = group_table_laws(&t);
            let passed = gate.passed();
            report.absorb(gate);
            if passed {
                let g = check_group(t)?;
                let g = &g;
                run_parts(
                    &mut report,
                    vec![
                        Box::new(move || Ok(group_laws(g))),
                        Box::new(move || Ok(power_laws(g))),
                        Box::new(move || subgroup_criteria_laws(g)),
                        Box::new(move || Ok(normality_laws(g))),
                        Box::new(move || Ok(quotient_laws(g))),
                        Box::new(move || Ok(commutator_laws(g))),
                    ],
                )?;
            }
        }
        Kind::Hom => {
            let h = model::build_hom(doc, p)?;
            report.absorb(hom_report(&h.src, &h.tgt, &h.map)?);
        }
        Kind::Action => {
            let a = model::build_action(doc, p)?;
            report.absorb(action_check(&a));
        }
        Kind::Family => {
            let f = model::build_family(doc, "members", p)?;
            report.absorb(sigma_equivalence_check(&f)?);
        }
        Kind::FilterBase => {
            let f = model::build_family(doc, "members", p)?;
            let gate = base_axioms(&f);
            let passed = gate.passed();
            report.absorb(gate);
            if passed {
                report.absorb(filter_ops(&f)?.report);
            }
        }
        Kind::Closure => {
            let op = model::build_closure(doc, p)?;
            report.absorb(closure_check(&op));
        }
        Kind::Topology => {
            let open = model::build_family(doc, "open", p)?;
            let gate = open_axioms(&open);
            let passed = gate.passed();
            report.absorb(gate);
            if passed {
                let t = Topology::new(open.clone())?;
                let (t, open) = (&t, &open);
                run_parts(
                    &mut report,
                    vec![
                        Box::new(move || Ok(neighborhood_laws(t))),
                        Box::new(move || closure_from_closed_check(&t.closed_sets())),
                        Box::new(move || Ok(base_ops(open)?.criterion)),
                    ],
                )?;
            }
        }
        Kind::Base => {
            let b = model::build_family(doc, "members", p)?;
            let c = b.carrier();
            let cover = b.union_all();
            for i in 0..c.len() {
                report.check("top.base.covers", cover.contains(i), || c.get(i).to_string());
            }
            if report.passed() {
                report.absorb(base_ops(&b)?.criterion);
            }
        }
        Kind::RationalWindow => {
            let w = model::build_window(doc, p)?;
            report.absorb(rat_law_check(w.numerators, w.denominators));
        }
    }
    Ok(report)
}
