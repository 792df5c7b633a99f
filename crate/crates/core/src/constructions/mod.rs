//! Builders for Taft algebras, metacyclic group algebras, matched pairs
//! between them and their bicrossed products.

mod bicrossed;
mod group;
mod matched;
mod taft;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cyclofield::{make_field, Field, RootOfUnity};
use crate::error::{Error, Result};

pub use bicrossed::{build_bicrossed, build_smash, build_smash_presentation, smash_label};
pub use group::{build_group_algebra, MetacyclicGroup};
pub use matched::{build_matched_pair, matched_pair_violations, verify_matched_pair, MatchedPairData};
pub use taft::{build_taft, taft_index, taft_label};

/// The Taft algebra generated by `h`, `x` with `h^m = 1`, `x^m = 0`, `xh = qhx`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TaftSpec {
    pub m: usize,
    pub q: RootOfUnity,
}

impl TaftSpec {
    /// `q = ζ^q_exp` in the smallest default field `Q(ζ_N)`, `N = lcm(2, m)`.
    pub fn new(m: usize, q_exp: i64) -> Result<Self> {
        Self::in_field(m, q_exp, 2usize.lcm(&m.max(1)))
    }

    pub fn in_field(m: usize, q_exp: i64, field_order: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidSpec(format!("Taft algebra needs m >= 2, got {m}")));
        }
        if field_order % m != 0 {
            return Err(Error::InvalidSpec(format!("Q(ζ_{field_order}) has no primitive {m}-th root")));
        }
        let q = RootOfUnity::from_signed(q_exp, field_order);
        if q.order() != m {
            return Err(Error::InvalidSpec(format!("ζ_{field_order}^{q_exp} has order {}, not {m}", q.order())));
        }
        Ok(TaftSpec { m, q })
    }

    pub fn field(&self) -> Result<Field> {
        make_field(self.q.field_order())
    }
}

/// The group `<c, d | c^l = 1, d^n = 1, cd = d^k c>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MetacyclicSpec {
    pub l: usize,
    pub n: usize,
    pub k: usize,
}

impl MetacyclicSpec {
    pub fn new(l: usize, n: usize, k: usize) -> Result<Self> {
        let spec = MetacyclicSpec { l, n, k };
        spec.validate()?;
        Ok(spec)
    }

    pub fn dihedral(n: usize) -> Result<Self> {
        Self::new(2, n, n.saturating_sub(1))
    }

    pub fn validate(&self) -> Result<()> {
        if self.l == 0 || self.n == 0 {
            return Err(Error::InvalidSpec("l and n must be positive".into()));
        }
        let mut p = 1 % self.n;
        for _ in 0..self.l {
            p = p * (self.k % self.n) % self.n;
        }
        if p != 1 % self.n {
            return Err(Error::InvalidSpec(format!("{}^{} is not 1 mod {}", self.k, self.l, self.n)));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.l * self.n
    }

    /// `gcd(n, k - 1)`, the order bound for the `d`-parameter.
    pub fn sigma_bound(&self) -> usize {
        let km1 = (self.k % self.n + self.n - 1) % self.n;
        self.n.gcd(&km1)
    }

    pub fn default_field_order(&self) -> usize {
        2usize.lcm(&self.l).lcm(&self.n)
    }
}

/// Parameters of the bicrossed product of a Taft algebra and a metacyclic
/// group algebra. Exponents refer to `ζ_N` with `N = lcm(2, m, l, n)` unless
/// `field_order` is given.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SmashSpec {
    pub m: usize,
    pub q_exp: i64,
    pub l: usize,
    pub n: usize,
    pub k: usize,
    pub beta_exp: i64,
    pub sigma_exp: i64,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub field_order: Option<usize>,
}

impl SmashSpec {
    /// Uses the default field and `q = ζ^{N/m}`.
    pub fn new(m: usize, l: usize, n: usize, k: usize, beta_exp: i64, sigma_exp: i64) -> Result<Self> {
        let order = Self::default_order(m, l, n);
        let spec =
            SmashSpec { m, q_exp: (order / m.max(1)) as i64, l, n, k, beta_exp, sigma_exp, field_order: None };
        spec.validate()?;
        Ok(spec)
    }

    /// `D_{2n}` with `β = ±1`, `σ = ±1` given as signs.
    pub fn dihedral_signs(m: usize, n: usize, beta: i8, sigma: i8) -> Result<Self> {
        let order = Self::default_order(m, 2, n) as i64;
        let exp = |s: i8| if s < 0 { order / 2 } else { 0 };
        Self::new(m, 2, n, n.saturating_sub(1), exp(beta), exp(sigma))
    }

    pub fn default_order(m: usize, l: usize, n: usize) -> usize {
        2usize.lcm(&m.max(1)).lcm(&l.max(1)).lcm(&n.max(1))
    }

    pub fn order(&self) -> usize {
        self.field_order.unwrap_or_else(|| Self::default_order(self.m, self.l, self.n))
    }

    pub fn field(&self) -> Result<Field> {
        make_field(self.order())
    }

    pub fn taft(&self) -> Result<TaftSpec> {
        TaftSpec::in_field(self.m, self.q_exp, self.order())
    }

    pub fn group(&self) -> Result<MetacyclicSpec> {
        MetacyclicSpec::new(self.l, self.n, self.k)
    }

    pub fn q(&self) -> RootOfUnity {
        RootOfUnity::from_signed(self.q_exp, self.order())
    }

    pub fn beta(&self) -> RootOfUnity {
        RootOfUnity::from_signed(self.beta_exp, self.order())
    }

    pub fn sigma(&self) -> RootOfUnity {
        RootOfUnity::from_signed(self.sigma_exp, self.order())
    }

    pub fn dim(&self) -> usize {
        self.m * self.m * self.l * self.n
    }

    pub fn validate(&self) -> Result<()> {
        let base = Self::default_order(self.m, self.l, self.n);
        if self.order() % base != 0 {
            return Err(Error::InvalidSpec(format!("field order {} is not a multiple of {base}", self.order())));
        }
        self.taft()?;
        let group = self.group()?;
        if self.l % self.beta().order() != 0 {
            return Err(Error::InvalidSpec(format!("β = ζ^{} is not an {}-th root of unity", self.beta_exp, self.l)));
        }
        let bound = group.sigma_bound();
        if bound % self.sigma().order() != 0 {
            return Err(Error::InvalidSpec(format!("σ = ζ^{} is not a {bound}-th root of unity", self.sigma_exp)));
        }
        Ok(())
    }

    /// Same data with exponents reduced into `[0, N)`.
    pub fn normalized(&self) -> Self {
        let n = self.order() as i64;
        SmashSpec {
            q_exp: self.q_exp.rem_euclid(n),
            beta_exp: self.beta_exp.rem_euclid(n),
            sigma_exp: self.sigma_exp.rem_euclid(n),
            ..*self
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let spec: SmashSpec = serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(TaftSpec::new(3, 2).is_ok());
        assert!(matches!(TaftSpec::new(4, 2), Err(Error::InvalidSpec(_))));
        assert!(MetacyclicSpec::new(2, 5, 4).is_ok());
        assert!(matches!(MetacyclicSpec::new(2, 5, 2), Err(Error::InvalidSpec(_))));
        assert_eq!(MetacyclicSpec::dihedral(6).unwrap().sigma_bound(), 2);
        assert_eq!(MetacyclicSpec::dihedral(5).unwrap().sigma_bound(), 1);
        assert_eq!(MetacyclicSpec::new(1, 4, 1).unwrap().sigma_bound(), 4);
        // β must be a square root of 1 for l = 2
        assert!(matches!(SmashSpec::new(2, 2, 3, 2, 1, 0), Err(Error::InvalidSpec(_))));
        // σ must be 1 for odd n in the dihedral case
        assert!(matches!(SmashSpec::dihedral_signs(2, 3, 1, -1), Err(Error::InvalidSpec(_))));
        assert!(SmashSpec::dihedral_signs(2, 4, -1, -1).is_ok());
    }

    #[test]
    fn smash_spec_json_round_trip() {
        let spec = SmashSpec::dihedral_signs(2, 3, -1, 1).unwrap();
        let s = spec.to_json_string();
        assert_eq!(s, r#"{"m":2,"q_exp":3,"l":2,"n":3,"k":2,"beta_exp":3,"sigma_exp":0}"#);
        assert_eq!(SmashSpec::from_json_str(&s).unwrap(), spec);
    }
}
