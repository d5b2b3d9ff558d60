//! Embedded reference Schur expansions of the `A_lambda` polynomials,
//! parsed once from `reference_data.txt`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::SchurExpansion;

/// One reference expansion. `conjectural` entries are those the source marks
/// as possibly incomplete; mismatches against them are soft.
#[derive(Clone, Debug)]
pub struct ReferenceEntry {
    pub shape: Partition,
    pub expansion: SchurExpansion,
    pub conjectural: bool,
}

const RAW_DATA: &str = include_str!("reference_data.txt");

fn table() -> &'static BTreeMap<Partition, ReferenceEntry> {
    static TABLE: OnceLock<BTreeMap<Partition, ReferenceEntry>> = OnceLock::new();
    TABLE.get_or_init(|| parse_table(RAW_DATA).expect("embedded reference data is well-formed"))
}

fn parse_table(raw: &str) -> Result<BTreeMap<Partition, ReferenceEntry>> {
    let bad = |line: usize, detail: String| Error::Parse {
        what: "reference data",
        detail: format!("line {line}: {detail}"),
    };
    let mut out = BTreeMap::new();
    for (idx, line) in raw.lines().enumerate() {
        let n = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (line, conjectural) = match line.strip_prefix('~') {
            Some(rest) => (rest.trim(), true),
            None => (line, false),
        };
        let (shape_str, terms_str) = line
            .split_once(':')
            .ok_or_else(|| bad(n, "missing ':' separator".into()))?;
        let shape: Partition = shape_str
            .trim()
            .parse()
            .map_err(|e| bad(n, format!("shape: {e}")))?;
        let mut pairs = Vec::new();
        for term in terms_str.split('|') {
            let term = term.trim();
            let (nu_str, count) = match term.split_once('*') {
                Some((nu, k)) => (
                    nu.trim(),
                    k.trim()
                        .parse::<i64>()
                        .map_err(|e| bad(n, format!("multiplicity {k:?}: {e}")))?,
                ),
                None => (term, 1),
            };
            let nu: Partition = nu_str.parse().map_err(|e| bad(n, format!("term: {e}")))?;
            if count < 1 {
                return Err(bad(n, format!("non-positive multiplicity for {nu}")));
            }
            pairs.push((nu, count));
        }
        let entry = ReferenceEntry {
            shape: shape.clone(),
            expansion: SchurExpansion::from_pairs(pairs),
            conjectural,
        };
        if out.insert(shape.clone(), entry).is_some() {
            return Err(bad(n, format!("duplicate shape {shape}")));
        }
    }
    Ok(out)
}

/// Looks up the embedded expansion for a shape, if listed.
pub fn reference_expansion(shape: &Partition) -> Option<&'static ReferenceEntry> {
    table().get(shape)
}

/// All listed shapes, ascending.
pub fn reference_shapes() -> impl Iterator<Item = &'static Partition> {
    table().keys()
}
