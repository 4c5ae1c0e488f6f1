//! Constructions that turn one document into another.

use std::sync::Arc;

use structa_core::category::{hom_functors, opposite_cat, FinCat, Variance};
use structa_core::group::{center, commutant, hom_check, image, kernel, quotient, subgroup_check, GroupAction};
use structa_core::order::{lattice_from_poset, order_from_semilattice, Orientation, Poset};
use structa_core::settools::{generated, sigma_generate, FilterBase};
use structa_core::top::{generated_topology, Topology};
use structa_core::FinSet;

use crate::doc::{Kind, StructureDoc};
use crate::error::CliError;
use crate::model;

/// Operation name, accepted kinds, and a one-line description.
pub const OPS: &[(&str, &[Kind], &str)] = &[
    ("opposite", &[Kind::Category, Kind::Poset], "reverse every arrow or every comparison"),
    ("quotient", &[Kind::Group], "G/N for the normal subgroup N listed in the arguments"),
    ("commutant", &[Kind::Group], "the subgroup generated by all commutators"),
    ("center", &[Kind::Group], "the elements commuting with everything"),
    ("kernel", &[Kind::Hom], "the elements sent to the unit"),
    ("image", &[Kind::Hom], "the image subgroup of the target"),
    ("filter", &[Kind::FilterBase], "the filter generated by a filter base"),
    ("topology", &[Kind::Base], "the topology generated by a covering family"),
    ("closure", &[Kind::Topology], "the closure table of a topology"),
    ("sigma", &[Kind::Family], "the generated sigma-algebra"),
    ("order", &[Kind::Semilattice], "the induced order; argument join (default) or meet"),
    ("lattice", &[Kind::Poset], "the join table (default) or, with argument meet, the meet table"),
    ("yoneda", &[Kind::Category], "the functor of arrows out of the object named in the argument"),
    ("regular", &[Kind::Group], "the group acting on itself by left multiplication"),
];

fn bad(op: &str, message: impl Into<String>) -> CliError {
    CliError::BadArgs {
        op: op.to_string(),
        message: message.into(),
    }
}

fn orientation(op: &str, args: &[String]) -> Result<Orientation, CliError> {
    match args {
        [] => Ok(Orientation::Join),
        [a] if a == "join" => Ok(Orientation::Join),
        [a] if a == "meet" => Ok(Orientation::Meet),
        _ => Err(bad(op, "expected no argument, `join` or `meet`")),
    }
}

fn no_args(op: &str, args: &[String]) -> Result<(), CliError> {
    if args.is_empty() {
        Ok(())
    } else {
        Err(bad(op, format!("takes no arguments, got {}", args.len())))
    }
}

pub fn run_derive(doc: &StructureDoc, op: &str, args: &[String]) -> Result<StructureDoc, CliError> {
    let (_, kinds, _) = OPS
        .iter()
        .find(|(name, _, _)| *name == op)
        .ok_or_else(|| CliError::UnknownOp(op.to_string()))?;
    if !kinds.contains(&doc.kind()) {
        return Err(CliError::KindMismatch {
            op: op.to_string(),
            kind: doc.kind().name().to_string(),
        });
    }
    let p = "$";
    if !matches!(op, "quotient" | "order" | "lattice" | "yoneda") {
        no_args(op, args)?;
    }
    let out = match (op, doc.kind()) {
        ("opposite", Kind::Category) => {
            let c = model::build_cat(doc, p)?;
            model::cat_doc(&opposite_cat(&c))
        }
        ("opposite", _) => {
            let poset = Poset::from_relation(model::build_relation(doc, p)?)?;
            model::poset_doc(&poset.opposite())
        }
        ("quotient", _) => {
            let g = model::build_group(doc, p)?;
            let members = FinSet::from_names(args.iter().map(String::as_str))?;
            let n = subgroup_check(&g, &members)?;
            model::group_doc(&quotient(&n)?.group)
        }
        ("commutant", _) => {
            let g = model::build_group(doc, p)?;
            model::group_doc(&commutant(&g).as_group())
        }
        ("center", _) => {
            let g = model::build_group(doc, p)?;
            model::group_doc(&center(&g).as_group())
        }
        ("kernel" | "image", _) => {
            let h = model::build_hom(doc, p)?;
            let h = hom_check(&h.src, &h.tgt, &h.map)?;
            let sub = if op == "kernel" { kernel(&h) } else { image(&h) };
            model::group_doc(&sub.as_group())
        }
        ("filter", _) => {
            let f = model::build_family(doc, "members", p)?;
            let filter = generated(&FilterBase::new(f)?)?;
            model::family_doc(Kind::Family, filter.family())
        }
        ("topology", _) => {
            let b = model::build_family(doc, "members", p)?;
            let c = b.carrier();
            let cover = b.union_all();
            if let Some(i) = (0..c.len()).find(|&i| !cover.contains(i)) {
                return Err(structa_core::Error::NotCovering(c.get(i).to_string()).into());
            }
            model::topology_doc(&generated_topology(&b))
        }
        ("closure", _) => {
            let t = Topology::new(model::build_family(doc, "open", p)?)?;
            model::closure_doc(&t.closure())
        }
        ("sigma", _) => {
            let f = model::build_family(doc, "members", p)?;
            model::family_doc(Kind::Family, sigma_generate(&f)?.family())
        }
        ("order", _) => {
            let t = model::build_table(doc, p)?;
            model::poset_doc(&order_from_semilattice(&t, orientation(op, args)?)?)
        }
        ("lattice", _) => {
            let orient = orientation(op, args)?;
            let poset = Poset::from_relation(model::build_relation(doc, p)?)?;
            let l = lattice_from_poset(&poset)?;
            let table = match orient {
                Orientation::Join => &l.join,
                Orientation::Meet => &l.meet,
            };
            model::table_doc(Kind::Semilattice, table)
        }
        ("yoneda", _) => {
            let [object] = args else {
                return Err(bad(op, "expected exactly one object name"));
            };
            let c: Arc<FinCat> = model::build_cat(doc, p)?;
            let x = c.object(object)?;
            let (l, _) = hom_functors(&c, x);
            let setcat = Arc::new(l.set_category()?);
            model::functor_doc(&l.realize(&setcat)?, Variance::Covariant)
        }
        ("regular", _) => {
            let g = model::build_group(doc, p)?;
            model::action_doc(&GroupAction::regular(g))
        }
        _ => unreachable!("operation table and dispatch agree"),
    };
    Ok(out)
}
