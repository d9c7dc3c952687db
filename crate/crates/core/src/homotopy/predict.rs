//! Closed-form homotopy types for the graph families.

use serde::{Deserialize, Serialize};

use super::HomotopyType;
use crate::error::{Error, Result};
use crate::family::Family;

/// How much a prediction can be trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Established in this crate's theory (products, Mycielskians, gadgets,
    /// ladders).
    Proved,
    /// A classical formula taken from the literature (paths and cycles).
    Imported,
    /// Supported by computation only.
    Conjectural,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub homotopy: HomotopyType,
    pub status: Status,
}

impl Prediction {
    pub fn is_conjectural(&self) -> bool {
        self.status == Status::Conjectural
    }
}

fn pow(base: usize, exp: usize) -> Result<u64> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| (base as u64).checked_pow(e))
        .ok_or_else(|| Error::InvalidParameter(format!("{base}^{exp} overflows")))
}

fn spheres(count: u64, dim: usize) -> HomotopyType {
    HomotopyType::spheres(count, dim as i64)
}

/// `Ind(P_n)`: `S^{r−1}` for `n = 3r`, a point for `3r+1`, `S^r` for `3r+2`.
pub fn path_type(n: usize) -> HomotopyType {
    let r = n / 3;
    match n % 3 {
        0 => HomotopyType::sphere(r as i64 - 1),
        1 => HomotopyType::point(),
        _ => HomotopyType::sphere(r as i64),
    }
}

/// `Ind(C_n)`, `n ≥ 3`: two copies of `S^{k−1}` for `n = 3k`, one `S^{k−1}`
/// for `3k+1`, one `S^k` for `3k+2`.
pub fn cycle_type(n: usize) -> HomotopyType {
    let k = n / 3;
    match n % 3 {
        0 => spheres(2, k - 1),
        1 => spheres(1, k - 1),
        _ => spheres(1, k),
    }
}

/// `Ind(K_m × K_n)`: `(m−1)(n−1)` circles.
pub fn product_type(m: usize, n: usize) -> HomotopyType {
    spheres(((m - 1) * (n - 1)) as u64, 1)
}

/// `Ind(K_2^{×(r−1)} × K_n)`: `(n−1)^{2^{r−2}}` spheres of dimension
/// `2^{r−1} − 1`.
pub fn multi_k2_product_type(r: usize, n: usize) -> Result<HomotopyType> {
    let copies = 1usize << (r - 2);
    Ok(spheres(pow(n - 1, copies)?, 2 * copies - 1))
}

/// `Ind(K_n × L_r)`.
pub fn kn_lr_type(n: usize, r: usize) -> Result<HomotopyType> {
    let k = r / 3;
    Ok(match r % 3 {
        0 => spheres(pow(n - 1, k + 1)?, 2 * k),
        1 => HomotopyType::point(),
        _ => spheres(pow(n - 1, k + 1)?, 2 * k + 1),
    })
}

/// `Ind(I^n_{1,t})`.
pub fn gadget_type(n: usize, t: usize) -> Result<HomotopyType> {
    let k = t / 3;
    Ok(match t % 3 {
        0 => HomotopyType::point(),
        1 => spheres(pow(n - 1, k + 1)?, 2 * k),
        _ => spheres(pow(n - 1, k + 1)?, 2 * k + 1),
    })
}

/// `Ind(M_r(K_n))` for `n ≥ 3`, `r ≥ 2`.
pub fn mycielskian_type(n: usize, r: usize) -> Result<HomotopyType> {
    let k = r / 3;
    Ok(match r % 3 {
        0 => spheres(pow(n - 1, k)?, 2 * k - 1),
        1 => spheres((n as u64).checked_mul(pow(n - 1, k)?).ok_or_else(|| Error::InvalidParameter("overflow".into()))?, 2 * k),
        _ => spheres(pow(n - 1, k + 1)?, 2 * k + 1),
    })
}

/// `Ind(C_n^i)` for `n ≥ 3`, `i ≥ 1`.
pub fn cycle_ladder_type(n: usize, i: usize) -> HomotopyType {
    let r = n / 3;
    let two = |d: usize| spheres(2, d);
    match n % 3 {
        0 if i.is_multiple_of(2) => two(r - 1 + i / 2),
        1 if i % 2 == 1 => two(r - 1 + i.div_ceil(2)),
        0 | 1 => HomotopyType::point(),
        _ if i == 1 => two(r),
        _ => two(r + i / 2),
    }
}

/// `(n−1)(3n−2)` copies of `S^3` for `Ind(K_2 × K_3 × K_n)`.
pub fn conjecture_type(n: usize) -> HomotopyType {
    spheres(((n - 1) * (3 * n - 2)) as u64, 3)
}

pub fn predict(family: &Family) -> Result<Prediction> {
    let domain = |ok: bool, why: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("{family}: {why}")))
        }
    };
    let proved = |homotopy| Prediction { homotopy, status: Status::Proved };
    let imported = |homotopy| Prediction { homotopy, status: Status::Imported };
    Ok(match *family {
        Family::Product { m, n } => {
            domain(m >= 1 && n >= 1, "needs m, n >= 1")?;
            proved(product_type(m, n))
        }
        Family::MultiK2Product { r, n } => {
            domain(r >= 2 && n >= 1, "needs r >= 2, n >= 1")?;
            proved(multi_k2_product_type(r, n)?)
        }
        Family::KnLr { n, r } => {
            domain(n >= 2, "needs n >= 2")?;
            proved(kn_lr_type(n, r)?)
        }
        Family::Gadget { n, t } => {
            domain(n >= 3, "needs n >= 3")?;
            proved(gadget_type(n, t)?)
        }
        Family::Mycielskian { n, r } => {
            domain(n >= 2 && r >= 2, "needs n >= 2, r >= 2")?;
            if n == 2 {
                imported(cycle_type(2 * r + 1))
            } else {
                proved(mycielskian_type(n, r)?)
            }
        }
        Family::Path { n } => {
            domain(n >= 1, "needs n >= 1")?;
            imported(path_type(n))
        }
        Family::Cycle { n } => {
            domain(n >= 3, "needs n >= 3")?;
            imported(cycle_type(n))
        }
        Family::CycleLadder { n, i } => {
            domain(n >= 3, "needs n >= 3")?;
            if i == 0 {
                imported(cycle_type(n))
            } else {
                proved(cycle_ladder_type(n, i))
            }
        }
        Family::ConjectureK2K3Kn { n } => {
            domain(n >= 1, "needs n >= 1")?;
            Prediction { homotopy: conjecture_type(n), status: Status::Conjectural }
        }
    })
}
