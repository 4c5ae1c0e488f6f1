//! Between documents and core structures. Building a structure checks
//! meaning: symbols declared before use, tables total and single-valued.
//! Laws are left to the checks.

use std::sync::Arc;

use structa_core::category::{CatData, FinCat, Functor, NatTrans, Variance};
use structa_core::group::{check_group, FinGroup, GroupAction};
use structa_core::numbers::Rat;
use structa_core::order::{Poset, Relation};
use structa_core::sets::{Family, OpTable};
use structa_core::top::{ClosureOp, Topology};
use structa_core::{Error, FinMap, FinSet, Mask, Symbol};

use crate::doc::{Field, Kind, StructureDoc};
use crate::error::CliError;

type Res<T> = Result<T, CliError>;

fn sym(s: &str) -> Symbol {
    Symbol::new(s).expect("symbols are checked by the parser")
}

fn at(path: &str, key: &str) -> String {
    format!("{path}.{key}")
}

pub fn carrier(doc: &StructureDoc, key: &str, path: &str) -> Res<FinSet> {
    FinSet::from_names(doc.strings(key).iter().map(String::as_str))
        .map_err(|e| CliError::semantic(&at(path, key), e))
}

fn declared(set: &FinSet, name: &str, path: &str) -> Res<usize> {
    set.index_of_str(name)
        .ok_or_else(|| CliError::semantic(path, Error::UnknownSymbol(name.to_string())))
}

fn subset(set: &FinSet, names: &[String], path: &str) -> Res<Mask> {
    let mut m = Mask::EMPTY;
    for (i, n) in names.iter().enumerate() {
        m = m.insert(declared(set, n, &format!("{path}[{i}]"))?);
    }
    Ok(m)
}

/// A total single-valued table `dom → cod` from `(x, y)` pairs.
fn table_map(dom: &FinSet, cod: &FinSet, pairs: &[Vec<String>], path: &str) -> Res<FinMap> {
    let mut table = vec![usize::MAX; dom.len()];
    for (i, p) in pairs.iter().enumerate() {
        let here = format!("{path}[{i}]");
        let x = declared(dom, &p[0], &here)?;
        let y = declared(cod, &p[1], &here)?;
        if table[x] != usize::MAX {
            return Err(CliError::semantic(&here, Error::Duplicate(p[0].clone())));
        }
        table[x] = y;
    }
    if let Some(x) = table.iter().position(|&y| y == usize::MAX) {
        return Err(CliError::semantic(path, Error::NotTotal(dom.get(x).to_string())));
    }
    Ok(FinMap::from_table(dom.clone(), cod.clone(), table)?)
}

pub fn build_map(doc: &StructureDoc, path: &str) -> Res<FinMap> {
    let dom = carrier(doc, "domain", path)?;
    let cod = carrier(doc, "codomain", path)?;
    table_map(&dom, &cod, doc.tuples("pairs"), &at(path, "pairs"))
}

pub fn build_relation(doc: &StructureDoc, path: &str) -> Res<Relation> {
    let c = carrier(doc, "elements", path)?;
    let mut pairs = Vec::new();
    for (i, p) in doc.tuples("leq").iter().enumerate() {
        let here = format!("{path}.leq[{i}]");
        declared(&c, &p[0], &here)?;
        declared(&c, &p[1], &here)?;
        pairs.push((sym(&p[0]), sym(&p[1])));
    }
    Ok(Relation::new(c, pairs)?)
}

pub fn build_table(doc: &StructureDoc, path: &str) -> Res<OpTable> {
    let c = carrier(doc, "elements", path)?;
    let key = at(path, "table");
    for (i, t) in doc.tuples("table").iter().enumerate() {
        for s in t {
            declared(&c, s, &format!("{key}[{i}]"))?;
        }
    }
    OpTable::new(c, doc.tuples("table").iter().map(|t| (sym(&t[0]), sym(&t[1]), sym(&t[2]))))
        .map_err(|e| CliError::semantic(&key, e))
}

pub fn build_group(doc: &StructureDoc, path: &str) -> Res<FinGroup> {
    check_group(build_table(doc, path)?).map_err(|e| CliError::semantic(path, e))
}

pub fn build_cat_data(doc: &StructureDoc, path: &str) -> Res<CatData> {
    let objects = carrier(doc, "objects", path)?;
    let arrows: Vec<(Symbol, Symbol, Symbol)> = doc
        .tuples("arrows")
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let here = format!("{path}.arrows[{i}]");
            declared(&objects, &t[1], &here)?;
            declared(&objects, &t[2], &here)?;
            Ok((sym(&t[0]), sym(&t[1]), sym(&t[2])))
        })
        .collect::<Res<_>>()?;
    let names = FinSet::collect(arrows.iter().map(|a| a.0.clone()));
    let identity = doc
        .tuples("identities")
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let here = format!("{path}.identities[{i}]");
            declared(&objects, &t[0], &here)?;
            declared(&names, &t[1], &here)?;
            Ok((sym(&t[0]), sym(&t[1])))
        })
        .collect::<Res<_>>()?;
    let comp = doc
        .tuples("composition")
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let here = format!("{path}.composition[{i}]");
            for s in t {
                declared(&names, s, &here)?;
            }
            Ok((sym(&t[0]), sym(&t[1]), sym(&t[2])))
        })
        .collect::<Res<_>>()?;
    Ok(CatData {
        objects,
        arrows,
        identity,
        comp,
    })
}

pub fn build_cat(doc: &StructureDoc, path: &str) -> Res<Arc<FinCat>> {
    let data = build_cat_data(doc, path)?;
    FinCat::new(&data)
        .map(Arc::new)
        .map_err(|e| CliError::semantic(path, e))
}

pub fn variance_of(doc: &StructureDoc) -> Variance {
    match doc.variance("variance") {
        "contravariant" => Variance::Contravariant,
        _ => Variance::Covariant,
    }
}

pub fn build_functor(doc: &StructureDoc, path: &str) -> Res<(Functor, Variance)> {
    let src = build_cat(doc.doc("source"), &at(path, "source"))?;
    let tgt = build_cat(doc.doc("target"), &at(path, "target"))?;
    let on_obj = table_map(src.objects(), tgt.objects(), doc.tuples("objects"), &at(path, "objects"))?;
    let on_arr = table_map(src.arrows(), tgt.arrows(), doc.tuples("arrows"), &at(path, "arrows"))?;
    let f = Functor::raw(src, tgt, on_obj.table().to_vec(), on_arr.table().to_vec())
        .map_err(|e| CliError::semantic(path, e))?;
    Ok((f, variance_of(doc)))
}

pub fn build_nat(doc: &StructureDoc, path: &str) -> Res<NatTrans> {
    let (from, _) = build_functor(doc.doc("from"), &at(path, "from"))?;
    let (to, _) = build_functor(doc.doc("to"), &at(path, "to"))?;
    let comps = table_map(
        from.src().objects(),
        from.tgt().arrows(),
        doc.tuples("components"),
        &at(path, "components"),
    )?;
    NatTrans::new(from, to, comps.table().to_vec()).map_err(|e| CliError::semantic(path, e))
}

pub struct HomDoc {
    pub src: FinGroup,
    pub tgt: FinGroup,
    pub map: FinMap,
}

pub fn build_hom(doc: &StructureDoc, path: &str) -> Res<HomDoc> {
    let src = build_group(doc.doc("source"), &at(path, "source"))?;
    let tgt = build_group(doc.doc("target"), &at(path, "target"))?;
    let map = table_map(src.carrier(), tgt.carrier(), doc.tuples("pairs"), &at(path, "pairs"))?;
    Ok(HomDoc { src, tgt, map })
}

pub fn build_action(doc: &StructureDoc, path: &str) -> Res<GroupAction> {
    let g = build_group(doc.doc("group"), &at(path, "group"))?;
    let points = carrier(doc, "points", path)?;
    let key = at(path, "table");
    let n = points.len();
    let mut cells = vec![usize::MAX; g.len() * n];
    for (i, t) in doc.tuples("table").iter().enumerate() {
        let here = format!("{key}[{i}]");
        let a = declared(g.carrier(), &t[0], &here)?;
        let x = declared(&points, &t[1], &here)?;
        let y = declared(&points, &t[2], &here)?;
        if cells[a * n + x] != usize::MAX {
            return Err(CliError::semantic(&here, Error::Duplicate(format!("cell ({},{})", t[0], t[1]))));
        }
        cells[a * n + x] = y;
    }
    if let Some(c) = cells.iter().position(|&y| y == usize::MAX) {
        return Err(CliError::semantic(
            &key,
            Error::NotTotal(format!("cell ({},{})", g.name(c / n), points.get(c % n))),
        ));
    }
    GroupAction::from_fn(g, points, |a, x| cells[a * n + x]).map_err(|e| CliError::semantic(path, e))
}

pub fn build_family(doc: &StructureDoc, key: &str, path: &str) -> Res<Family> {
    let c = carrier(doc, "carrier", path)?;
    c.check_maskable().map_err(|e| CliError::semantic(path, e))?;
    let here = at(path, key);
    let masks = doc
        .sets(key)
        .iter()
        .enumerate()
        .map(|(i, s)| subset(&c, s, &format!("{here}[{i}]")))
        .collect::<Res<Vec<_>>>()?;
    Ok(Family::from_masks(c, masks))
}

pub fn build_closure(doc: &StructureDoc, path: &str) -> Res<ClosureOp> {
    let c = carrier(doc, "carrier", path)?;
    let key = at(path, "table");
    if c.len() > structa_core::top::CLOSURE_TABLE_GUARD {
        return Err(CliError::semantic(
            path,
            Error::TooLarge {
                what: "carrier for a closure table",
                size: c.len(),
                bound: structa_core::top::CLOSURE_TABLE_GUARD,
            },
        ));
    }
    let mut table = vec![None; 1 << c.len()];
    for (i, (a, b)) in doc.set_pairs("table").iter().enumerate() {
        let here = format!("{key}[{i}]");
        let a = subset(&c, a, &format!("{here}[0]"))?;
        let b = subset(&c, b, &format!("{here}[1]"))?;
        let cell = &mut table[a.0 as usize];
        if cell.is_some() {
            return Err(CliError::semantic(&here, Error::Duplicate(c.subset_token(a).to_string())));
        }
        *cell = Some(b);
    }
    if let Some(k) = table.iter().position(Option::is_none) {
        return Err(CliError::semantic(
            &key,
            Error::NotTotal(c.subset_token(Mask(k as u64)).to_string()),
        ));
    }
    ClosureOp::new(c, table.into_iter().map(|m| m.expect("total")).collect())
        .map_err(|e| CliError::semantic(path, e))
}

pub struct RatWindow {
    pub numerators: i64,
    pub denominators: i64,
}

pub fn build_window(doc: &StructureDoc, path: &str) -> Res<RatWindow> {
    let num = doc.count("numerators");
    let den = doc.count("denominators");
    if den == 0 {
        return Err(CliError::semantic(&at(path, "denominators"), Error::ZeroDenominator));
    }
    let fit = |n: u64, key: &str| {
        i64::try_from(n).map_err(|_| {
            CliError::semantic(
                &at(path, key),
                Error::TooLarge {
                    what: "window bound",
                    size: usize::MAX,
                    bound: i64::MAX as usize,
                },
            )
        })
    };
    Ok(RatWindow {
        numerators: fit(num, "numerators")?,
        denominators: fit(den, "denominators")?,
    })
}

/// Builds whatever the document describes, discarding the result.
pub fn validate(doc: &StructureDoc) -> Res<()> {
    let p = "$";
    match doc.kind() {
        Kind::Set => {
            carrier(doc, "elements", p)?;
        }
        Kind::Map => {
            build_map(doc, p)?;
        }
        Kind::Poset => {
            build_relation(doc, p)?;
        }
        Kind::Semilattice | Kind::Group => {
            build_table(doc, p)?;
        }
        Kind::Category => {
            build_cat_data(doc, p)?;
        }
        Kind::Functor => {
            build_functor(doc, p)?;
        }
        Kind::NatTrans => {
            build_nat(doc, p)?;
        }
        Kind::Hom => {
            build_hom(doc, p)?;
        }
        Kind::Action => {
            build_action(doc, p)?;
        }
        Kind::Family | Kind::FilterBase | Kind::Base => {
            build_family(doc, "members", p)?;
        }
        Kind::Topology => {
            build_family(doc, "open", p)?;
        }
        Kind::Closure => {
            build_closure(doc, p)?;
        }
        Kind::RationalWindow => {
            build_window(doc, p)?;
        }
    }
    Ok(())
}

/// Shape check and validation.
pub fn parse(text: &str) -> Res<StructureDoc> {
    let doc = crate::doc::parse_shape(text)?;
    validate(&doc)?;
    Ok(doc)
}

fn names(set: &FinSet) -> Vec<String> {
    set.iter().map(|s| s.to_string()).collect()
}

fn set_names(c: &FinSet, m: Mask) -> Vec<String> {
    m.iter().map(|i| c.get(i).to_string()).collect()
}

pub fn set_doc(set: &FinSet) -> StructureDoc {
    StructureDoc::new(Kind::Set, vec![Field::Strings(names(set))])
}

pub fn table_doc(kind: Kind, t: &OpTable) -> StructureDoc {
    let rows = t
        .triples()
        .map(|(x, y, z)| vec![x.to_string(), y.to_string(), z.to_string()])
        .collect();
    StructureDoc::new(kind, vec![Field::Strings(names(t.carrier())), Field::Tuples(rows)])
}

pub fn group_doc(g: &FinGroup) -> StructureDoc {
    table_doc(Kind::Group, g.table())
}

pub fn poset_doc(p: &Poset) -> StructureDoc {
    let c = p.carrier();
    let pairs = p
        .pairs()
        .map(|(i, j)| vec![c.get(i).to_string(), c.get(j).to_string()])
        .collect();
    StructureDoc::new(Kind::Poset, vec![Field::Strings(names(c)), Field::Tuples(pairs)])
}

pub fn cat_doc(c: &FinCat) -> StructureDoc {
    data_doc(&c.data())
}

pub fn data_doc(d: &CatData) -> StructureDoc {
    let s = |x: &Symbol| x.to_string();
    StructureDoc::new(
        Kind::Category,
        vec![
            Field::Strings(names(&d.objects)),
            Field::Tuples(d.arrows.iter().map(|(a, x, y)| vec![s(a), s(x), s(y)]).collect()),
            Field::Tuples(d.identity.iter().map(|(x, a)| vec![s(x), s(a)]).collect()),
            Field::Tuples(d.comp.iter().map(|(g, f, h)| vec![s(g), s(f), s(h)]).collect()),
        ],
    )
}

pub fn functor_doc(f: &Functor, v: Variance) -> StructureDoc {
    let (c, d) = (f.src(), f.tgt());
    let objects = (0..c.object_count())
        .map(|x| vec![c.object_name(x).to_string(), d.object_name(f.obj(x)).to_string()])
        .collect();
    let arrows = (0..c.arrow_count())
        .map(|a| vec![c.arrow_name(a).to_string(), d.arrow_name(f.arr(a)).to_string()])
        .collect();
    let variance = match v {
        Variance::Covariant => "covariant",
        Variance::Contravariant => "contravariant",
    };
    StructureDoc::new(
        Kind::Functor,
        vec![
            Field::Doc(Box::new(cat_doc(c))),
            Field::Doc(Box::new(cat_doc(d))),
            Field::Variance(variance.to_string()),
            Field::Tuples(objects),
            Field::Tuples(arrows),
        ],
    )
}

pub fn family_doc(kind: Kind, f: &Family) -> StructureDoc {
    let c = f.carrier();
    let members = f.members().iter().map(|&m| set_names(c, m)).collect();
    StructureDoc::new(kind, vec![Field::Strings(names(c)), Field::Sets(members)])
}

pub fn topology_doc(t: &Topology) -> StructureDoc {
    family_doc(Kind::Topology, t.open_sets())
}

pub fn closure_doc(op: &ClosureOp) -> StructureDoc {
    let c = op.carrier();
    let rows = Mask::all(c.len())
        .map(|a| (set_names(c, a), set_names(c, op.apply(a))))
        .collect();
    StructureDoc::new(Kind::Closure, vec![Field::Strings(names(c)), Field::SetPairs(rows)])
}

pub fn action_doc(a: &GroupAction) -> StructureDoc {
    let g = a.group();
    let c = a.carrier();
    let mut rows = Vec::new();
    for x in 0..g.len() {
        for p in 0..c.len() {
            rows.push(vec![
                g.name(x).to_string(),
                c.get(p).to_string(),
                c.get(a.apply(x, p)).to_string(),
            ]);
        }
    }
    StructureDoc::new(
        Kind::Action,
        vec![
            Field::Doc(Box::new(group_doc(g))),
            Field::Strings(names(c)),
            Field::Tuples(rows),
        ],
    )
}

/// The rationals `num/den` of a window, for display.
pub fn window_values(w: &RatWindow) -> Vec<Rat> {
    structa_core::numbers::rat_grid(w.numerators, w.denominators)
}
