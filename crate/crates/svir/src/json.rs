//! JSON serialization of the core data types (f64 instantiations).
//!
//! Conventions: complex numbers are two-element arrays `[re, im]`,
//! rationals are `{"num": int, "den": int}` with positive denominator,
//! sector labels are `{"j", "k", "l", "branch"}`. Documents carry a
//! schema version and a kind tag; deserialization rejects version
//! mismatches and reports the path of the first malformed node.
//! Round-trips are exact: floats are emitted with shortest-round-trip
//! formatting and no value is recomputed on read.

use crate::coset::{Branch, SectorLabel, SigmaParity};
use crate::invariants::{IntMat, InvariantMatrix};
use crate::linalg::CMat;
use crate::mckean::McKeanSingerReport;
use crate::rational::{rat, to_i64_pair, Rational};
use crate::susy::IndexReport;
use crate::{CosetData64, Error, LevelData64, Result};
use num_complex::Complex;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: &str = "1";

/// A versioned, kind-tagged JSON document.
#[derive(Clone, Debug, PartialEq)]
pub struct JsonDocument {
    pub schema_version: String,
    pub kind: String,
    pub payload: Value,
}

impl JsonDocument {
    fn new(kind: &str, payload: Value) -> Self {
        JsonDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            kind: kind.to_string(),
            payload,
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "schema_version": self.schema_version,
            "kind": self.kind,
            "payload": self.payload,
        })
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("valid json tree")
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let c = Cursor::root(v);
        let schema_version = c.field("schema_version")?.str()?.to_string();
        if schema_version != SCHEMA_VERSION {
            return Err(Error::SchemaVersion(schema_version));
        }
        Ok(JsonDocument {
            schema_version,
            kind: c.field("kind")?.str()?.to_string(),
            payload: c.field("payload")?.value.clone(),
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Json {
            path: "$".into(),
            expected: format!("valid json ({e})"),
        })?;
        Self::from_value(&v)
    }
}

/// Value cursor carrying its path for error reporting.
struct Cursor<'a> {
    value: &'a Value,
    path: String,
}

impl<'a> Cursor<'a> {
    fn root(value: &'a Value) -> Self {
        Cursor {
            value,
            path: "$".into(),
        }
    }

    fn err(&self, expected: &str) -> Error {
        Error::Json {
            path: self.path.clone(),
            expected: expected.to_string(),
        }
    }

    fn field(&self, name: &str) -> Result<Cursor<'a>> {
        match self.value.get(name) {
            Some(v) => Ok(Cursor {
                value: v,
                path: format!("{}.{name}", self.path),
            }),
            None => Err(self.err(&format!("object with field {name:?}"))),
        }
    }

    fn array(&self) -> Result<Vec<Cursor<'a>>> {
        match self.value.as_array() {
            Some(a) => Ok(a
                .iter()
                .enumerate()
                .map(|(i, v)| Cursor {
                    value: v,
                    path: format!("{}[{i}]", self.path),
                })
                .collect()),
            None => Err(self.err("array")),
        }
    }

    fn f64(&self) -> Result<f64> {
        self.value.as_f64().ok_or_else(|| self.err("number"))
    }

    fn i64(&self) -> Result<i64> {
        self.value.as_i64().ok_or_else(|| self.err("integer"))
    }

    fn usize(&self) -> Result<usize> {
        let v = self.i64()?;
        usize::try_from(v).map_err(|_| self.err("nonnegative integer"))
    }

    fn bool(&self) -> Result<bool> {
        self.value.as_bool().ok_or_else(|| self.err("boolean"))
    }

    fn str(&self) -> Result<&'a str> {
        self.value.as_str().ok_or_else(|| self.err("string"))
    }

    fn complex(&self) -> Result<Complex<f64>> {
        let a = self.array()?;
        if a.len() != 2 {
            return Err(self.err("[re, im] pair"));
        }
        Ok(Complex::new(a[0].f64()?, a[1].f64()?))
    }

    fn rational(&self) -> Result<Rational> {
        let num = self.field("num")?.i64()?;
        let den = self.field("den")?.i64()?;
        if den <= 0 {
            return Err(self.err("rational with positive denominator"));
        }
        Ok(rat(num, den))
    }

    fn sector(&self) -> Result<SectorLabel> {
        let branch = match self.field("branch")?.str()? {
            "none" => Branch::None,
            "plus" => Branch::Plus,
            "minus" => Branch::Minus,
            _ => return Err(self.err("branch in {none, plus, minus}")),
        };
        Ok(SectorLabel {
            j: self.field("j")?.usize()?,
            k: self.field("k")?.usize()?,
            l: self.field("l")?.usize()? as u8,
            branch,
        })
    }
}

fn complex_value(z: &Complex<f64>) -> Value {
    json!([z.re, z.im])
}

fn rational_value(r: &Rational) -> Value {
    let (num, den) = to_i64_pair(r).expect("desk-scale rational fits in i64");
    json!({ "num": num, "den": den })
}

fn sector_value(s: &SectorLabel) -> Value {
    let branch = match s.branch {
        Branch::None => "none",
        Branch::Plus => "plus",
        Branch::Minus => "minus",
    };
    json!({ "j": s.j, "k": s.k, "l": s.l, "branch": branch })
}

fn cmat_value(m: &CMat<f64>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array((0..m.cols()).map(|c| complex_value(&m[(r, c)])).collect()))
            .collect(),
    )
}

fn cmat_from(c: &Cursor) -> Result<CMat<f64>> {
    let rows = c.array()?;
    let n_rows = rows.len();
    let mut entries: Vec<Vec<Complex<f64>>> = Vec::with_capacity(n_rows);
    let mut n_cols = 0;
    for row in &rows {
        let cells = row.array()?;
        if entries.is_empty() {
            n_cols = cells.len();
        } else if cells.len() != n_cols {
            return Err(row.err("rows of equal length"));
        }
        entries.push(cells.iter().map(|c| c.complex()).collect::<Result<_>>()?);
    }
    Ok(CMat::from_fn(n_rows, n_cols, |r, c| entries[r][c]))
}

pub fn level_to_json(ld: &LevelData64) -> JsonDocument {
    JsonDocument::new(
        "level_data",
        json!({
            "level": ld.level,
            "s": cmat_value(&ld.s),
            "t": ld.t.iter().map(complex_value).collect::<Vec<_>>(),
            "weights": ld.weights.iter().map(rational_value).collect::<Vec<_>>(),
            "dims": ld.dims,
        }),
    )
}

pub fn level_from_json(doc: &JsonDocument) -> Result<LevelData64> {
    expect_kind(doc, "level_data")?;
    let c = Cursor::root(&doc.payload);
    let t = c
        .field("t")?
        .array()?
        .iter()
        .map(|x| x.complex())
        .collect::<Result<Vec<_>>>()?;
    let weights = c
        .field("weights")?
        .array()?
        .iter()
        .map(|x| x.rational())
        .collect::<Result<Vec<_>>>()?;
    let dims = c
        .field("dims")?
        .array()?
        .iter()
        .map(|x| x.f64())
        .collect::<Result<Vec<_>>>()?;
    Ok(LevelData64 {
        level: c.field("level")?.usize()?,
        s: cmat_from(&c.field("s")?)?,
        t,
        weights,
        dims,
    })
}

pub fn coset_to_json(data: &CosetData64) -> JsonDocument {
    let c = crate::coset::central_charge(data.m).expect("m ≥ 3 by construction");
    JsonDocument::new(
        "coset_modular_data",
        json!({
            "m": data.m,
            "central_charge": rational_value(&c),
            "sectors": data.sectors.iter().map(sector_value).collect::<Vec<_>>(),
            "s": cmat_value(&data.s),
            "t": data.t.iter().map(complex_value).collect::<Vec<_>>(),
            "h": data.h.iter().map(|h| match h {
                Some(r) => rational_value(r),
                None => Value::Null,
            }).collect::<Vec<_>>(),
            "dims": data.dims,
            "is_ramond": data.is_ramond,
            "sigma_parity": data.sigma_parity.iter().map(|p| match p {
                SigmaParity::Bose => "bose",
                SigmaParity::Fermi => "fermi",
            }).collect::<Vec<_>>(),
        }),
    )
}

pub fn coset_from_json(doc: &JsonDocument) -> Result<CosetData64> {
    expect_kind(doc, "coset_modular_data")?;
    let c = Cursor::root(&doc.payload);
    let sectors = c
        .field("sectors")?
        .array()?
        .iter()
        .map(|x| x.sector())
        .collect::<Result<Vec<_>>>()?;
    let t = c
        .field("t")?
        .array()?
        .iter()
        .map(|x| x.complex())
        .collect::<Result<Vec<_>>>()?;
    let h = c
        .field("h")?
        .array()?
        .iter()
        .map(|x| {
            if x.value.is_null() {
                Ok(None)
            } else {
                x.rational().map(Some)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let dims = c
        .field("dims")?
        .array()?
        .iter()
        .map(|x| x.f64())
        .collect::<Result<Vec<_>>>()?;
    let is_ramond = c
        .field("is_ramond")?
        .array()?
        .iter()
        .map(|x| x.bool())
        .collect::<Result<Vec<_>>>()?;
    let sigma_parity = c
        .field("sigma_parity")?
        .array()?
        .iter()
        .map(|x| match x.str()? {
            "bose" => Ok(SigmaParity::Bose),
            "fermi" => Ok(SigmaParity::Fermi),
            _ => Err(x.err("parity in {bose, fermi}")),
        })
        .collect::<Result<Vec<_>>>()?;
    CosetData64::from_parts(
        c.field("m")?.usize()?,
        sectors,
        cmat_from(&c.field("s")?)?,
        t,
        h,
        dims,
        is_ramond,
        sigma_parity,
    )
}

fn invariant_value(inv: &InvariantMatrix) -> Value {
    let n = inv.z.size();
    let z: Vec<Vec<i64>> = (0..n).map(|r| inv.z.row(r).to_vec()).collect();
    json!({
        "m": inv.m,
        "ade_label": inv.ade_label,
        "row_only": inv.row_only,
        "z": z,
    })
}

fn invariant_from(c: &Cursor) -> Result<InvariantMatrix> {
    let rows = c.field("z")?.array()?;
    let n = rows.len();
    let mut z = IntMat::zeros(n);
    for (r, row) in rows.iter().enumerate() {
        let cells = row.array()?;
        if cells.len() != n {
            return Err(row.err("square integer matrix"));
        }
        for (col, cell) in cells.iter().enumerate() {
            z[(r, col)] = cell.i64()?;
        }
    }
    let label_cursor = c.field("ade_label")?;
    let ade_label = if label_cursor.value.is_null() {
        None
    } else {
        Some(label_cursor.str()?.to_string())
    };
    Ok(InvariantMatrix {
        m: c.field("m")?.usize()?,
        z,
        ade_label,
        row_only: c.field("row_only")?.bool()?,
    })
}

pub fn invariant_to_json(inv: &InvariantMatrix) -> JsonDocument {
    JsonDocument::new("invariant_matrix", invariant_value(inv))
}

pub fn invariant_from_json(doc: &JsonDocument) -> Result<InvariantMatrix> {
    expect_kind(doc, "invariant_matrix")?;
    invariant_from(&Cursor::root(&doc.payload))
}

pub fn invariant_list_to_json(m: usize, mode: &str, invs: &[InvariantMatrix]) -> JsonDocument {
    JsonDocument::new(
        "invariant_list",
        json!({
            "m": m,
            "mode": mode,
            "invariants": invs.iter().map(invariant_value).collect::<Vec<_>>(),
        }),
    )
}

pub fn index_report_to_json(r: &IndexReport<f64>) -> JsonDocument {
    JsonDocument::new(
        "index_report",
        json!({
            "m": r.m,
            "rho": sector_value(&r.rho),
            "mu_b": r.mu_b,
            "mu_a": r.mu_a,
            "d_rho": r.d_rho,
            "kernel_dims": r.kernel_dims.iter()
                .map(|(s, n)| json!([sector_value(s), n]))
                .collect::<Vec<_>>(),
            "index_via_s": r.index_via_s,
            "index_via_k": r.index_via_k,
            "rounded_index": r.rounded_index,
        }),
    )
}

pub fn index_report_from_json(doc: &JsonDocument) -> Result<IndexReport<f64>> {
    expect_kind(doc, "index_report")?;
    let c = Cursor::root(&doc.payload);
    let kernel_dims = c
        .field("kernel_dims")?
        .array()?
        .iter()
        .map(|pair| {
            let items = pair.array()?;
            if items.len() != 2 {
                return Err(pair.err("[sector, multiplicity] pair"));
            }
            Ok((items[0].sector()?, items[1].usize()? as u8))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IndexReport {
        m: c.field("m")?.usize()?,
        rho: c.field("rho")?.sector()?,
        mu_b: c.field("mu_b")?.f64()?,
        mu_a: c.field("mu_a")?.f64()?,
        d_rho: c.field("d_rho")?.f64()?,
        kernel_dims,
        index_via_s: c.field("index_via_s")?.f64()?,
        index_via_k: c.field("index_via_k")?.f64()?,
        rounded_index: c.field("rounded_index")?.i64()?,
    })
}

pub fn mckean_report_to_json(r: &McKeanSingerReport<f64>) -> JsonDocument {
    JsonDocument::new(
        "mckean_singer_report",
        json!({
            "dim_plus": r.dim_plus,
            "dim_minus": r.dim_minus,
            "index": r.index,
            "supertraces": r.supertraces.iter().map(|&(t, s)| json!([t, s])).collect::<Vec<_>>(),
            "max_deviation": r.max_deviation,
            "max_pairwise_spread": r.max_pairwise_spread,
            "pass": r.pass,
        }),
    )
}

pub fn mckean_report_from_json(doc: &JsonDocument) -> Result<McKeanSingerReport<f64>> {
    expect_kind(doc, "mckean_singer_report")?;
    let c = Cursor::root(&doc.payload);
    let supertraces = c
        .field("supertraces")?
        .array()?
        .iter()
        .map(|pair| {
            let items = pair.array()?;
            if items.len() != 2 {
                return Err(pair.err("[t, supertrace] pair"));
            }
            Ok((items[0].f64()?, items[1].f64()?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(McKeanSingerReport {
        dim_plus: c.field("dim_plus")?.usize()?,
        dim_minus: c.field("dim_minus")?.usize()?,
        index: c.field("index")?.i64()?,
        supertraces,
        max_deviation: c.field("max_deviation")?.f64()?,
        max_pairwise_spread: c.field("max_pairwise_spread")?.f64()?,
        pass: c.field("pass")?.bool()?,
    })
}

fn expect_kind(doc: &JsonDocument, kind: &str) -> Result<()> {
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::SchemaVersion(doc.schema_version.clone()));
    }
    if doc.kind != kind {
        return Err(Error::UnknownKind(doc.kind.clone()));
    }
    Ok(())
}

/// Generic map-of-fields helper for CLI table output.
pub fn payload_object(doc: &JsonDocument) -> Option<&Map<String, Value>> {
    doc.payload.as_object()
}
