//! Structure documents: a restricted JSON profile with one fixed key set per
//! kind, a shape-checking parser and a canonical renderer.

use std::fmt;
use std::fmt::Write as _;

use serde_json::Value;
use structa_core::Symbol;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Set,
    Map,
    Poset,
    Semilattice,
    Category,
    Functor,
    NatTrans,
    Group,
    Hom,
    Action,
    Family,
    FilterBase,
    Closure,
    Topology,
    Base,
    RationalWindow,
}

/// What a key holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// `["a", "b"]`
    Strings,
    /// `[["a", "b", "c"], ...]` with a fixed tuple width
    Tuples(usize),
    /// `[["a"], ["a", "b"], ...]`
    Sets,
    /// `[[["a"], ["a", "b"]], ...]`
    SetPairs,
    /// a nonnegative integer
    Count,
    /// `"covariant"` or `"contravariant"`
    Variance,
    /// a nested document of the given kind
    Doc(Kind),
}

pub const KINDS: &[Kind] = &[
    Kind::Set,
    Kind::Map,
    Kind::Poset,
    Kind::Semilattice,
    Kind::Category,
    Kind::Functor,
    Kind::NatTrans,
    Kind::Group,
    Kind::Hom,
    Kind::Action,
    Kind::Family,
    Kind::FilterBase,
    Kind::Closure,
    Kind::Topology,
    Kind::Base,
    Kind::RationalWindow,
];

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Set => "set",
            Kind::Map => "map",
            Kind::Poset => "poset",
            Kind::Semilattice => "semilattice",
            Kind::Category => "category",
            Kind::Functor => "functor",
            Kind::NatTrans => "nattrans",
            Kind::Group => "group",
            Kind::Hom => "hom",
            Kind::Action => "action",
            Kind::Family => "family",
            Kind::FilterBase => "filterbase",
            Kind::Closure => "closure",
            Kind::Topology => "topology",
            Kind::Base => "base",
            Kind::RationalWindow => "rational-window",
        }
    }

    pub fn from_name(name: &str) -> Option<Kind> {
        KINDS.iter().copied().find(|k| k.name() == name)
    }

    /// Keys in canonical order, after `kind`.
    pub fn schema(self) -> &'static [(&'static str, Shape)] {
        use Shape::*;
        match self {
            Kind::Set => &[("elements", Strings)],
            Kind::Map => &[("domain", Strings), ("codomain", Strings), ("pairs", Tuples(2))],
            Kind::Poset => &[("elements", Strings), ("leq", Tuples(2))],
            Kind::Semilattice => &[("elements", Strings), ("table", Tuples(3))],
            Kind::Category => &[
                ("objects", Strings),
                ("arrows", Tuples(3)),
                ("identities", Tuples(2)),
                ("composition", Tuples(3)),
            ],
            Kind::Functor => &[
                ("source", Doc(Kind::Category)),
                ("target", Doc(Kind::Category)),
                ("variance", Variance),
                ("objects", Tuples(2)),
                ("arrows", Tuples(2)),
            ],
            Kind::NatTrans => &[
                ("from", Doc(Kind::Functor)),
                ("to", Doc(Kind::Functor)),
                ("components", Tuples(2)),
            ],
            Kind::Group => &[("elements", Strings), ("table", Tuples(3))],
            Kind::Hom => &[
                ("source", Doc(Kind::Group)),
                ("target", Doc(Kind::Group)),
                ("pairs", Tuples(2)),
            ],
            Kind::Action => &[("group", Doc(Kind::Group)), ("points", Strings), ("table", Tuples(3))],
            Kind::Family | Kind::FilterBase | Kind::Base => {
                &[("carrier", Strings), ("members", Sets)]
            }
            Kind::Closure => &[("carrier", Strings), ("table", SetPairs)],
            Kind::Topology => &[("carrier", Strings), ("open", Sets)],
            Kind::RationalWindow => &[("numerators", Count), ("denominators", Count)],
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Field {
    Strings(Vec<String>),
    Tuples(Vec<Vec<String>>),
    Sets(Vec<Vec<String>>),
    SetPairs(Vec<(Vec<String>, Vec<String>)>),
    Count(u64),
    Variance(String),
    Doc(Box<StructureDoc>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureDoc {
    kind: Kind,
    /// one entry per schema key, in schema order
    fields: Vec<Field>,
}

impl StructureDoc {
    /// Panics if the fields do not follow the schema; builders inside the
    /// crate always do.
    pub fn new(kind: Kind, fields: Vec<Field>) -> StructureDoc {
        let schema = kind.schema();
        assert_eq!(schema.len(), fields.len(), "field count for {kind}");
        for ((key, shape), field) in schema.iter().zip(&fields) {
            assert!(fits(*shape, field), "field {key} of {kind}");
        }
        StructureDoc { kind, fields }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    fn slot(&self, key: &str) -> &Field {
        let i = self
            .kind
            .schema()
            .iter()
            .position(|(k, _)| *k == key)
            .unwrap_or_else(|| panic!("{} has no key {key}", self.kind));
        &self.fields[i]
    }

    pub fn strings(&self, key: &str) -> &[String] {
        match self.slot(key) {
            Field::Strings(v) => v,
            _ => panic!("{key} is not a string list"),
        }
    }

    pub fn tuples(&self, key: &str) -> &[Vec<String>] {
        match self.slot(key) {
            Field::Tuples(v) | Field::Sets(v) => v,
            _ => panic!("{key} is not a tuple list"),
        }
    }

    pub fn sets(&self, key: &str) -> &[Vec<String>] {
        self.tuples(key)
    }

    pub fn set_pairs(&self, key: &str) -> &[(Vec<String>, Vec<String>)] {
        match self.slot(key) {
            Field::SetPairs(v) => v,
            _ => panic!("{key} is not a list of set pairs"),
        }
    }

    pub fn count(&self, key: &str) -> u64 {
        match self.slot(key) {
            Field::Count(n) => *n,
            _ => panic!("{key} is not a count"),
        }
    }

    pub fn variance(&self, key: &str) -> &str {
        match self.slot(key) {
            Field::Variance(v) => v,
            _ => panic!("{key} is not a variance"),
        }
    }

    pub fn doc(&self, key: &str) -> &StructureDoc {
        match self.slot(key) {
            Field::Doc(d) => d,
            _ => panic!("{key} is not a document"),
        }
    }

    /// Largest carrier anywhere in the document: element lists, arrow
    /// lists, and counts. Tables and families are bounded by their carrier.
    pub fn size(&self) -> usize {
        self.kind
            .schema()
            .iter()
            .zip(&self.fields)
            .map(|((key, _), f)| match f {
                Field::Strings(v) => v.len(),
                Field::Tuples(v) if *key == "arrows" => v.len(),
                Field::Count(n) => usize::try_from(*n).unwrap_or(usize::MAX),
                Field::Doc(d) => d.size(),
                _ => 0,
            })
            .max()
            .unwrap_or(0)
    }

    /// The canonical text: two-space indentation, one key per line, flat
    /// lists inline, lists of lists one item per line, and a final newline.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out.push('\n');
        out
    }

    fn render_into(&self, out: &mut String, indent: usize) {
        let pad = " ".repeat(indent + 2);
        out.push_str("{\n");
        let _ = write!(out, "{pad}\"kind\": {}", quote(self.kind.name()));
        for ((key, _), field) in self.kind.schema().iter().zip(&self.fields) {
            let _ = write!(out, ",\n{pad}{}: ", quote(key));
            match field {
                Field::Strings(v) => out.push_str(&inline(v)),
                Field::Tuples(v) | Field::Sets(v) => {
                    block(out, indent + 2, v.iter().map(|t| inline(t)));
                }
                Field::SetPairs(v) => {
                    block(
                        out,
                        indent + 2,
                        v.iter().map(|(a, b)| format!("[{}, {}]", inline(a), inline(b))),
                    );
                }
                Field::Count(n) => {
                    let _ = write!(out, "{n}");
                }
                Field::Variance(s) => out.push_str(&quote(s)),
                Field::Doc(d) => d.render_into(out, indent + 2),
            }
        }
        let _ = write!(out, "\n{}}}", " ".repeat(indent));
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn inline(items: &[String]) -> String {
    let parts: Vec<String> = items.iter().map(|s| quote(s)).collect();
    format!("[{}]", parts.join(", "))
}

fn block(out: &mut String, indent: usize, lines: impl Iterator<Item = String>) {
    let lines: Vec<String> = lines.collect();
    if lines.is_empty() {
        out.push_str("[]");
        return;
    }
    let pad = " ".repeat(indent + 2);
    out.push_str("[\n");
    for (i, line) in lines.iter().enumerate() {
        out.push_str(&pad);
        out.push_str(line);
        if i + 1 < lines.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str(&" ".repeat(indent));
    out.push(']');
}

fn fits(shape: Shape, field: &Field) -> bool {
    match (shape, field) {
        (Shape::Strings, Field::Strings(_)) => true,
        (Shape::Tuples(k), Field::Tuples(v)) => v.iter().all(|t| t.len() == k),
        (Shape::Sets, Field::Sets(_)) => true,
        (Shape::SetPairs, Field::SetPairs(_)) => true,
        (Shape::Count, Field::Count(_)) => true,
        (Shape::Variance, Field::Variance(v)) => v == "covariant" || v == "contravariant",
        (Shape::Doc(k), Field::Doc(d)) => d.kind == k,
        _ => false,
    }
}

/// Parses and shape-checks a document. Meaning (declared symbols, total
/// tables) is checked by [`crate::model::validate`].
pub fn parse_shape(text: &str) -> Result<StructureDoc, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string().split(" at line ").next().unwrap_or_default().to_string(),
    })?;
    from_value(&value, "$", None)
}

fn shape_err(path: &str, message: impl Into<String>) -> CliError {
    CliError::Shape {
        path: path.to_string(),
        message: message.into(),
    }
}

fn from_value(value: &Value, path: &str, expect: Option<Kind>) -> Result<StructureDoc, CliError> {
    let obj = value
        .as_object()
        .ok_or_else(|| shape_err(path, "expected an object"))?;
    let kind_name = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| shape_err(path, "expected a string key \"kind\""))?;
    let kind = Kind::from_name(kind_name)
        .ok_or_else(|| shape_err(&format!("{path}.kind"), format!("unknown kind {kind_name:?}")))?;
    if let Some(k) = expect {
        if k != kind {
            return Err(shape_err(path, format!("expected a {k} document, found {kind}")));
        }
    }
    let schema = kind.schema();
    for key in obj.keys() {
        if key != "kind" && !schema.iter().any(|(k, _)| k == key) {
            return Err(shape_err(path, format!("unexpected key {key:?} for kind {kind}")));
        }
    }
    let mut fields = Vec::with_capacity(schema.len());
    for (key, shape) in schema {
        let at = format!("{path}.{key}");
        let v = obj
            .get(*key)
            .ok_or_else(|| shape_err(path, format!("missing key {key:?} for kind {kind}")))?;
        fields.push(field(v, *shape, &at)?);
    }
    Ok(StructureDoc { kind, fields })
}

fn symbol(v: &Value, path: &str) -> Result<String, CliError> {
    let s = v.as_str().ok_or_else(|| shape_err(path, "expected a string"))?;
    Symbol::new(s).map_err(|e| shape_err(path, e.to_string()))?;
    Ok(s.to_string())
}

fn list<'v>(v: &'v Value, path: &str) -> Result<&'v [Value], CliError> {
    v.as_array()
        .map(Vec::as_slice)
        .ok_or_else(|| shape_err(path, "expected an array"))
}

fn strings(v: &Value, path: &str) -> Result<Vec<String>, CliError> {
    list(v, path)?
        .iter()
        .enumerate()
        .map(|(i, s)| symbol(s, &format!("{path}[{i}]")))
        .collect()
}

fn field(v: &Value, shape: Shape, path: &str) -> Result<Field, CliError> {
    Ok(match shape {
        Shape::Strings => Field::Strings(strings(v, path)?),
        Shape::Tuples(k) => {
            let mut out = Vec::new();
            for (i, t) in list(v, path)?.iter().enumerate() {
                let at = format!("{path}[{i}]");
                let t = strings(t, &at)?;
                if t.len() != k {
                    return Err(shape_err(&at, format!("expected {k} entries, found {}", t.len())));
                }
                out.push(t);
            }
            Field::Tuples(out)
        }
        Shape::Sets => Field::Sets(
            list(v, path)?
                .iter()
                .enumerate()
                .map(|(i, s)| strings(s, &format!("{path}[{i}]")))
                .collect::<Result<_, _>>()?,
        ),
        Shape::SetPairs => {
            let mut out = Vec::new();
            for (i, p) in list(v, path)?.iter().enumerate() {
                let at = format!("{path}[{i}]");
                match list(p, &at)? {
                    [a, b] => out.push((strings(a, &format!("{at}[0]"))?, strings(b, &format!("{at}[1]"))?)),
                    _ => return Err(shape_err(&at, "expected a pair of sets")),
                }
            }
            Field::SetPairs(out)
        }
        Shape::Count => Field::Count(
            v.as_u64()
                .ok_or_else(|| shape_err(path, "expected a nonnegative integer"))?,
        ),
        Shape::Variance => {
            let s = v.as_str().ok_or_else(|| shape_err(path, "expected a string"))?;
            if s != "covariant" && s != "contravariant" {
                return Err(shape_err(path, "expected \"covariant\" or \"contravariant\""));
            }
            Field::Variance(s.to_string())
        }
        Shape::Doc(k) => Field::Doc(Box::new(from_value(v, path, Some(k))?)),
    })
}

/// The format description printed by `structa formats`.
pub fn schema_text() -> String {
    let mut out = String::new();
    out.push_str("structure documents: one JSON object per file, with \"kind\" first\n");
    out.push_str("symbols: nonempty strings without whitespace\n\n");
    for kind in KINDS {
        let _ = writeln!(out, "{kind}");
        for (key, shape) in kind.schema() {
            let desc = match shape {
                Shape::Strings => "array of symbols".to_string(),
                Shape::Tuples(k) => format!("array of {k}-element symbol arrays"),
                Shape::Sets => "array of symbol arrays (subsets)".to_string(),
                Shape::SetPairs => "array of [subset, subset] pairs".to_string(),
                Shape::Count => "nonnegative integer".to_string(),
                Shape::Variance => "\"covariant\" | \"contravariant\"".to_string(),
                Shape::Doc(k) => format!("{k} document"),
            };
            let _ = writeln!(out, "  {key:<12} {desc}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text_round_trips() {
        let doc = StructureDoc::new(
            Kind::Map,
            vec![
                Field::Strings(vec!["a".into(), "b".into()]),
                Field::Strings(vec!["x".into()]),
                Field::Tuples(vec![vec!["a".into(), "x".into()], vec!["b".into(), "x".into()]]),
            ],
        );
        let text = doc.render();
        assert_eq!(
            text,
            "{\n  \"kind\": \"map\",\n  \"domain\": [\"a\", \"b\"],\n  \"codomain\": [\"x\"],\n  \"pairs\": [\n    [\"a\", \"x\"],\n    [\"b\", \"x\"]\n  ]\n}\n"
        );
        assert_eq!(parse_shape(&text).unwrap(), doc);
    }

    #[test]
    fn shape_errors_name_the_path() {
        let e = parse_shape(r#"{"kind": "set", "elements": ["a", "b c"]}"#).unwrap_err();
        assert!(e.to_string().contains("$.elements[1]"), "{e}");
        let e = parse_shape(r#"{"kind": "set", "elements": [], "extra": []}"#).unwrap_err();
        assert!(e.to_string().contains("extra"));
        let e = parse_shape("{\"kind\": \"set\",\n  \"elements\": [\"a\",]}").unwrap_err();
        assert!(matches!(e, CliError::Syntax { line: 2, .. }), "{e:?}");
    }
}
