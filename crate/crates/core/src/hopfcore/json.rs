//! JSON export and import of [`FinHopf`].
//!
//! Scalars are written in compact form: comma-separated `p/q` coefficients in
//! the power basis of `Q(ζ_N)`. Sparse tables are sorted by index, so export
//! is deterministic and import followed by export reproduces the input.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{add_tensor_term, FinHopf, HopfElement, Tensor2};
use crate::cyclofield::{make_field, CycScalar, Field};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinHopfJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub dim: usize,
    pub labels: Vec<String>,
    pub mul: Vec<(usize, usize, usize, String)>,
    pub comul: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
    pub unit: Vec<String>,
}

impl FinHopf {
    pub fn to_json_value(&self) -> FinHopfJson {
        let dim = self.dim();
        let mut mul = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for (&k, c) in self.mul_basis(i, j).terms() {
                    mul.push((i, j, k, c.to_compact()));
                }
            }
        }
        let mut comul = Vec::new();
        for i in 0..dim {
            for (&(j, k), c) in self.comul_basis(i) {
                comul.push((i, j, k, c.to_compact()));
            }
        }
        let dense = |e: &HopfElement| e.coords(dim, &self.field).iter().map(CycScalar::to_compact).collect();
        FinHopfJson {
            n: self.field.order(),
            dim,
            labels: self.labels.clone(),
            mul,
            comul,
            counit: self.counit.iter().map(CycScalar::to_compact).collect(),
            antipode: self.antipode.iter().map(dense).collect(),
            unit: dense(&self.unit),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data serializes")
    }

    pub fn from_json_value(json: &FinHopfJson) -> Result<FinHopf> {
        let field = make_field(json.n).map_err(|e| Error::Malformed(e.to_string()))?;
        let dim = json.dim;
        if json.labels.len() != dim {
            return Err(Error::Malformed(format!("{} labels for dimension {dim}", json.labels.len())));
        }
        if dim == 0 {
            return Err(Error::Malformed("dimension must be positive".into()));
        }
        let parse = |s: &str| CycScalar::from_compact(&field, s).map_err(|e| Error::Malformed(e.to_string()));
        let check = |idx: &[usize]| {
            if idx.iter().all(|&i| i < dim) {
                Ok(())
            } else {
                Err(Error::Malformed(format!("index out of range in {idx:?}")))
            }
        };

        let mut seen = BTreeSet::new();
        let mut mul = vec![HopfElement::zero(); dim * dim];
        for (i, j, k, c) in &json.mul {
            check(&[*i, *j, *k])?;
            if !seen.insert((*i, *j, *k)) {
                return Err(Error::Malformed(format!("duplicate mul entry ({i}, {j}, {k})")));
            }
            mul[i * dim + j].add_term(*k, &parse(c)?);
        }
        seen.clear();
        let mut comul = vec![Tensor2::new(); dim];
        for (i, j, k, c) in &json.comul {
            check(&[*i, *j, *k])?;
            if !seen.insert((*i, *j, *k)) {
                return Err(Error::Malformed(format!("duplicate comul entry ({i}, {j}, {k})")));
            }
            add_tensor_term(&mut comul[*i], (*j, *k), &parse(c)?);
        }
        let dense = |row: &[String], what: &str| -> Result<HopfElement> {
            if row.len() != dim {
                return Err(Error::Malformed(format!("{what} has length {}, expected {dim}", row.len())));
            }
            let mut e = HopfElement::zero();
            for (i, s) in row.iter().enumerate() {
                e.add_term(i, &parse(s)?);
            }
            Ok(e)
        };
        if json.counit.len() != dim {
            return Err(Error::Malformed(format!("counit has length {}, expected {dim}", json.counit.len())));
        }
        let counit = json.counit.iter().map(|s| parse(s)).collect::<Result<Vec<_>>>()?;
        if json.antipode.len() != dim {
            return Err(Error::Malformed(format!("antipode has {} rows, expected {dim}", json.antipode.len())));
        }
        let antipode = json.antipode.iter().map(|r| dense(r, "antipode row")).collect::<Result<Vec<_>>>()?;
        let unit = dense(&json.unit, "unit")?;
        FinHopf::from_parts(field, json.labels.clone(), mul, unit, comul, counit, antipode)
    }

    pub fn from_json_str(s: &str) -> Result<FinHopf> {
        let json: FinHopfJson = serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))?;
        Self::from_json_value(&json)
    }

    /// Rebuilds the structure over a larger cyclotomic field.
    pub fn extend_field(&self, field: &Field) -> Result<FinHopf> {
        let mut json = self.to_json_value();
        if field.order() % self.field.order() != 0 {
            return Err(Error::InvalidArgument(format!(
                "Q(ζ_{}) does not contain Q(ζ_{})",
                field.order(),
                self.field.order()
            )));
        }
        if field.order() == self.field.order() {
            return Ok(self.clone());
        }
        let factor = (field.order() / self.field.order()) as i64;
        let lift = |s: &mut String| -> Result<()> {
            let c = CycScalar::from_compact(&self.field, s)?;
            let mut out = CycScalar::zero(field);
            for (e, q) in c.coefficients().iter().enumerate() {
                let base = CycScalar::from_rational(field, q);
                out += &(&base * &CycScalar::root(field, factor * e as i64));
            }
            *s = out.to_compact();
            Ok(())
        };
        json.n = field.order();
        for entry in json.mul.iter_mut() {
            lift(&mut entry.3)?;
        }
        for entry in json.comul.iter_mut() {
            lift(&mut entry.3)?;
        }
        for s in json.counit.iter_mut().chain(json.unit.iter_mut()).chain(json.antipode.iter_mut().flatten()) {
            lift(s)?;
        }
        FinHopf::from_json_value(&json)
    }
}
