//! Named graph families with integer parameters, e.g. `mycielskian 3 4`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    categorical_product, complete, cycle, cycle_ladder, gadget_i, generalized_mycielskian, looped_path, path, Graph,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// `K_m × K_n`.
    Product { m: usize, n: usize },
    /// `K_2 × … × K_2 × K_n` with `r − 1` factors `K_2`.
    MultiK2Product { r: usize, n: usize },
    /// `K_n × L_r`.
    KnLr { n: usize, r: usize },
    /// `I^n_{1,t}`.
    Gadget { n: usize, t: usize },
    /// `M_r(K_n)`.
    Mycielskian { n: usize, r: usize },
    Path { n: usize },
    Cycle { n: usize },
    /// `C_n^i`.
    CycleLadder { n: usize, i: usize },
    /// `K_2 × K_3 × K_n`.
    ConjectureK2K3Kn { n: usize },
}

pub const FAMILY_NAMES: [&str; 9] = [
    "product",
    "multi_k2_product",
    "kn_lr",
    "gadget",
    "mycielskian",
    "path",
    "cycle",
    "cycle_ladder",
    "conjecture_k2k3kn",
];

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Product { .. } => "product",
            Family::MultiK2Product { .. } => "multi_k2_product",
            Family::KnLr { .. } => "kn_lr",
            Family::Gadget { .. } => "gadget",
            Family::Mycielskian { .. } => "mycielskian",
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::CycleLadder { .. } => "cycle_ladder",
            Family::ConjectureK2K3Kn { .. } => "conjecture_k2k3kn",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            Family::Product { m, n } => vec![m, n],
            Family::MultiK2Product { r, n } => vec![r, n],
            Family::KnLr { n, r } => vec![n, r],
            Family::Gadget { n, t } => vec![n, t],
            Family::Mycielskian { n, r } => vec![n, r],
            Family::Path { n } | Family::Cycle { n } | Family::ConjectureK2K3Kn { n } => vec![n],
            Family::CycleLadder { n, i } => vec![n, i],
        }
    }

    /// Builds a family from its name and parameters, checking only arity.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Family> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::Parse(format!("{name} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let p = |i: usize| params[i];
        Ok(match name {
            "product" => {
                want(2)?;
                Family::Product { m: p(0), n: p(1) }
            }
            "multi_k2_product" => {
                want(2)?;
                Family::MultiK2Product { r: p(0), n: p(1) }
            }
            "kn_lr" => {
                want(2)?;
                Family::KnLr { n: p(0), r: p(1) }
            }
            "gadget" => {
                want(2)?;
                Family::Gadget { n: p(0), t: p(1) }
            }
            "mycielskian" => {
                want(2)?;
                Family::Mycielskian { n: p(0), r: p(1) }
            }
            "path" => {
                want(1)?;
                Family::Path { n: p(0) }
            }
            "cycle" => {
                want(1)?;
                Family::Cycle { n: p(0) }
            }
            "cycle_ladder" => {
                want(2)?;
                Family::CycleLadder { n: p(0), i: p(1) }
            }
            "conjecture_k2k3kn" => {
                want(1)?;
                Family::ConjectureK2K3Kn { n: p(0) }
            }
            other => {
                return Err(Error::Parse(format!(
                    "unknown family {other:?}; expected one of {}",
                    FAMILY_NAMES.join(", ")
                )))
            }
        })
    }

    /// Parses whitespace-separated tokens: a family name and its parameters.
    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Family> {
        let (name, rest) = tokens.split_first().ok_or_else(|| Error::Parse("missing family name".into()))?;
        let params = rest
            .iter()
            .map(|t| {
                t.as_ref()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad parameter {:?}", t.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Family::from_parts(name.as_ref(), &params)
    }

    fn check(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidParameter(format!("{self}: {why}")));
        match *self {
            Family::Product { m, n } if m == 0 || n == 0 => bad("needs m, n >= 1"),
            Family::MultiK2Product { r, n } if r < 2 || n == 0 => bad("needs r >= 2, n >= 1"),
            Family::MultiK2Product { r, .. } if r > 8 => bad("r > 8 gives more than 2^8 vertices"),
            Family::KnLr { n, .. } if n < 2 => bad("needs n >= 2"),
            Family::Gadget { n, .. } if n < 3 => bad("needs n >= 3"),
            Family::Mycielskian { n, r } if n < 2 || r < 2 => bad("needs n >= 2, r >= 2"),
            Family::Path { n: 0 } => bad("needs n >= 1"),
            Family::Cycle { n } if n < 3 => bad("needs n >= 3"),
            Family::CycleLadder { n, .. } if n < 3 => bad("needs n >= 3"),
            Family::ConjectureK2K3Kn { n: 0 } => bad("needs n >= 1"),
            _ => Ok(()),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        self.check()?;
        Ok(match *self {
            Family::Product { m, n } => categorical_product(&complete(m)?, &complete(n)?),
            Family::MultiK2Product { r, n } => {
                let k2 = complete(2)?;
                let mut g = k2.clone();
                for _ in 2..r {
                    g = categorical_product(&g, &k2);
                }
                categorical_product(&g, &complete(n)?)
            }
            Family::KnLr { n, r } => categorical_product(&complete(n)?, &looped_path(r)),
            Family::Gadget { n, t } => gadget_i(n, 1, t)?,
            Family::Mycielskian { n, r } => generalized_mycielskian(&complete(n)?, r)?,
            Family::Path { n } => path(n)?,
            Family::Cycle { n } => cycle(n)?,
            Family::CycleLadder { n, i } => cycle_ladder(n, i)?,
            Family::ConjectureK2K3Kn { n } => {
                categorical_product(&categorical_product(&complete(2)?, &complete(3)?), &complete(n)?)
            }
        })
    }

    /// Families whose complexes are too big to enumerate in full get a
    /// homology window around the dimension their spheres live in.
    pub fn default_window(&self) -> Option<(usize, usize)> {
        let dim = match *self {
            Family::ConjectureK2K3Kn { .. } => 3,
            Family::MultiK2Product { r, .. } => (1usize << (r - 1)) - 1,
            _ => return None,
        };
        Some((dim.saturating_sub(1), dim + 1))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        for p in self.params() {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::from_tokens(&s.split_whitespace().collect::<Vec<_>>())
    }
}
