//! Construction tables: one cell per (n, m), either the reduced polynomial or
//! the condition that rules it out. JSON lines are the golden-file format.

use serde::{Deserialize, Serialize};

use super::build::build_poly;
use super::params::{row_exclusion, theorem_predicate, ConstructionParams, Exclusion};
use super::sparse::SparsePoly;
use crate::error::{Error, Result};
use crate::field::FieldContext;
use crate::redei::Family;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellStatus {
    Permutes(SparsePoly),
    Excluded(Exclusion),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableCell {
    pub params: ConstructionParams,
    pub status: CellStatus,
}

impl TableCell {
    pub fn evaluate(ctx: &FieldContext, params: ConstructionParams) -> Result<Self> {
        let status = match theorem_predicate(&params) {
            Ok(()) => CellStatus::Permutes(build_poly(ctx, &params)?),
            Err(ex) => CellStatus::Excluded(ex),
        };
        Ok(Self { params, status })
    }

    pub fn poly(&self) -> Option<&SparsePoly> {
        match &self.status {
            CellStatus::Permutes(p) => Some(p),
            CellStatus::Excluded(_) => None,
        }
    }

    pub fn is_excluded(&self) -> bool {
        matches!(self.status, CellStatus::Excluded(_))
    }

    pub fn to_record(&self) -> CellRecord {
        let ConstructionParams { t, n, m, family } = self.params;
        let mut rec = CellRecord {
            t,
            n,
            m,
            family,
            status: String::new(),
            poly: None,
            exponents: None,
            reason: None,
        };
        match &self.status {
            CellStatus::Permutes(p) => {
                rec.status = "permutes".into();
                rec.poly = Some(p.to_string());
                rec.exponents = Some(p.exponents());
            }
            CellStatus::Excluded(ex) => {
                rec.status = "excluded".into();
                rec.reason = Some(ex.code());
            }
        }
        rec
    }

    pub fn from_record(rec: &CellRecord) -> Result<Self> {
        let params = ConstructionParams::new(rec.t, rec.n, rec.m, rec.family)?;
        let status = match rec.status.as_str() {
            "permutes" => {
                let text = rec.poly.as_deref().ok_or_else(|| missing("poly"))?;
                let poly: SparsePoly = text.parse()?;
                if let Some(exps) = &rec.exponents {
                    if *exps != poly.exponents() {
                        return Err(Error::Parse(format!(
                            "exponents {exps:?} disagree with poly {text:?}"
                        )));
                    }
                }
                CellStatus::Permutes(poly)
            }
            "excluded" => CellStatus::Excluded(
                rec.reason
                    .as_deref()
                    .ok_or_else(|| missing("reason"))?
                    .parse()?,
            ),
            other => return Err(Error::Parse(format!("unknown cell status {other:?}"))),
        };
        Ok(Self { params, status })
    }
}

fn missing(field: &str) -> Error {
    Error::Parse(format!("cell record lacks {field:?}"))
}

/// Serialized form of a [`TableCell`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub t: u32,
    pub n: u64,
    pub m: u64,
    pub family: Family,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exponents: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

/// One cell per (n, m), n outer ascending, m inner ascending.
pub fn generate_table(
    ctx: &FieldContext,
    family: Family,
    ns: impl IntoIterator<Item = u64>,
    ms: impl IntoIterator<Item = u64> + Clone,
) -> Result<Vec<TableCell>> {
    let mut cells = Vec::new();
    for n in ns {
        for m in ms.clone() {
            let params = ConstructionParams::new(ctx.t(), n, m, family)?;
            cells.push(TableCell::evaluate(ctx, params)?);
        }
    }
    Ok(cells)
}

/// The n in 1..=n_max that pass the n-only conditions, i.e. the rows of a
/// complete table.
pub fn qualifying_rows(ctx: &FieldContext, family: Family, n_max: u64) -> Vec<u64> {
    (1..=n_max)
        .filter(|&n| row_exclusion(ctx.t(), n, family).is_none())
        .collect()
}

/// Complete table for n <= 3(q-1), m <= q-1: every distinct polynomial the
/// construction yields, up to reduction.
pub fn full_table(ctx: &FieldContext, family: Family) -> Result<Vec<TableCell>> {
    let rows = qualifying_rows(ctx, family, 3 * ctx.fq_units());
    generate_table(ctx, family, rows, 1..=ctx.fq_units())
}

/// JSON array with one cell per line.
pub fn cells_to_json(cells: &[TableCell]) -> String {
    let mut out = String::from("[\n");
    for (i, cell) in cells.iter().enumerate() {
        out.push_str("  ");
        out.push_str(&serde_json::to_string(&cell.to_record()).expect("records serialize"));
        if i + 1 < cells.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("]\n");
    out
}

pub fn cells_from_json(json: &str) -> Result<Vec<TableCell>> {
    let records: Vec<CellRecord> =
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    records.iter().map(TableCell::from_record).collect()
}

/// Human-readable differences between an expected and an actual table.
pub fn diff_tables(expected: &[TableCell], actual: &[TableCell]) -> Vec<String> {
    let mut diffs = Vec::new();
    if expected.len() != actual.len() {
        diffs.push(format!(
            "expected {} cells, found {}",
            expected.len(),
            actual.len()
        ));
    }
    for (e, a) in expected.iter().zip(actual) {
        if e != a {
            let show = |c: &TableCell| match &c.status {
                CellStatus::Permutes(p) => p.to_string(),
                CellStatus::Excluded(ex) => format!("excluded: {ex}"),
            };
            diffs.push(format!(
                "{}: expected {:?}, found {} -> {:?}",
                e.params,
                show(e),
                a.params,
                show(a)
            ));
        }
    }
    diffs
}
