use rayon::prelude::*;
use serde::Serialize;

use super::{AgcError, EvaluationCode};
use crate::gf::FieldElement;
use crate::numsg::NumericalSemigroup;

pub const DEFAULT_BRUTE_BUDGET: u64 = 1 << 24;

/// Label for the order-sequence conditions of the gap-run theorems, which
/// are not machine-checked.
pub const ORDER_SEQUENCE_NOTE: &str = "order-sequence hypothesis as cited, unchecked";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CertificateKind {
    #[serde(rename = "designed_CL")]
    DesignedCl,
    #[serde(rename = "designed_COmega")]
    DesignedComega,
    #[serde(rename = "gkl_CL")]
    GklCl,
    #[serde(rename = "gkl_COmega")]
    GklComega,
    #[serde(rename = "brute")]
    Brute,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Formula {
        formula: String,
    },
    GapRun {
        gamma: u64,
        /// `[gamma - t, gamma]`, all gaps
        run: [u64; 2],
        t: u64,
        note: &'static str,
    },
    GapRuns {
        alpha_run: [u64; 2],
        beta_run: [u64; 2],
        t: u64,
        note: &'static str,
    },
    Exhaustive {
        codewords_checked: u64,
        min_weight: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub kind: CertificateKind,
    pub value: i64,
    pub witness: Witness,
}

/// Designed distances; values `<= 0` are vacuous.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Designed {
    pub d_cl: i64,
    pub d_comega: i64,
}

impl Designed {
    pub fn cl_vacuous(&self) -> bool {
        self.d_cl <= 0
    }

    pub fn comega_vacuous(&self) -> bool {
        self.d_comega <= 0
    }
}

/// `d_CL = n - gamma`, `d_COmega = gamma - (2g - 2)`.
pub fn designed_distances(n: u64, gamma: u64, genus: u64) -> Designed {
    Designed {
        d_cl: n as i64 - gamma as i64,
        d_comega: gamma as i64 - (2 * genus as i64 - 2),
    }
}

pub fn designed_certificates(n: u64, gamma: u64, genus: u64) -> Vec<BoundCertificate> {
    let d = designed_distances(n, gamma, genus);
    vec![
        BoundCertificate {
            kind: CertificateKind::DesignedCl,
            value: d.d_cl,
            witness: Witness::Formula {
                formula: format!("n - gamma = {n} - {gamma}"),
            },
        },
        BoundCertificate {
            kind: CertificateKind::DesignedComega,
            value: d.d_comega,
            witness: Witness::Formula {
                formula: format!("gamma - (2g - 2) = {gamma} - {}", 2 * genus as i64 - 2),
            },
        },
    ]
}

/// `n - gamma + t + 1` where `gamma - t, .., gamma` is the run of gaps
/// ending at `gamma`.
pub fn gkl_bound_cl(s: &NumericalSemigroup, gamma: u64, n: u64) -> Result<BoundCertificate, AgcError> {
    if !s.is_gap(gamma) {
        return Err(AgcError::NotAGap(gamma));
    }
    let mut t = 0;
    while t < gamma && s.is_gap(gamma - t - 1) {
        t += 1;
    }
    Ok(BoundCertificate {
        kind: CertificateKind::GklCl,
        value: n as i64 - gamma as i64 + t as i64 + 1,
        witness: Witness::GapRun {
            gamma,
            run: [gamma - t, gamma],
            t,
            note: ORDER_SEQUENCE_NOTE,
        },
    })
}

/// `alpha + beta - 1 - (2g - 2) + (t + 1)`, without any hypothesis check.
pub fn gkl_comega_value(alpha: u64, beta: u64, t: u64, genus: u64) -> i64 {
    alpha as i64 + beta as i64 - 1 - (2 * genus as i64 - 2) + t as i64 + 1
}

/// Certificate for the dual code with `gamma = alpha + beta - 1`; needs
/// `alpha..=alpha+t` and `beta-t..=beta` to be gaps.
pub fn gkl_bound_comega(
    s: &NumericalSemigroup,
    alpha: u64,
    beta: u64,
    t: u64,
    genus: u64,
) -> Result<BoundCertificate, AgcError> {
    let beta_lo = beta.saturating_sub(t);
    let nongaps: Vec<u64> = (alpha..=alpha + t)
        .chain(beta_lo..=beta)
        .filter(|&m| s.contains(m))
        .collect();
    if !nongaps.is_empty() {
        return Err(AgcError::Hypothesis { nongaps });
    }
    Ok(BoundCertificate {
        kind: CertificateKind::GklComega,
        value: gkl_comega_value(alpha, beta, t, genus),
        witness: Witness::GapRuns {
            alpha_run: [alpha, alpha + t],
            beta_run: [beta_lo, beta],
            t,
            note: ORDER_SEQUENCE_NOTE,
        },
    })
}

/// Exact minimum distance by enumerating one message per projective
/// point (leading nonzero coordinate equal to 1).
pub fn brute_min_distance(code: &EvaluationCode, budget: u64) -> Result<BoundCertificate, AgcError> {
    let f = code.field();
    let order = f.order() as u64;
    let (g, _) = code.systematic();
    let k = g.rows();
    let work = (order as u128).pow(k as u32);
    if work > budget as u128 {
        return Err(AgcError::BudgetExceeded {
            work: u64::try_from(work).unwrap_or(u64::MAX),
            budget,
        });
    }
    let elements: Vec<FieldElement> = f.elements().collect();
    let n = code.n;
    // (lead, tail index) pairs: coordinates before `lead` are 0, `lead` is 1,
    // the k-1-lead coordinates after it run through all of F^(k-1-lead)
    let jobs: Vec<(usize, u64)> = (0..k)
        .flat_map(|lead| (0..order.pow((k - 1 - lead) as u32)).map(move |i| (lead, i)))
        .collect();
    let min_weight = jobs
        .par_iter()
        .map(|&(lead, mut idx)| {
            let mut word = g.row(lead).to_vec();
            for r in lead + 1..k {
                let c = elements[(idx % order) as usize];
                idx /= order;
                if !c.is_zero() {
                    for (w, &v) in word.iter_mut().zip(g.row(r)) {
                        *w = f.add(*w, f.mul(c, v));
                    }
                }
            }
            word.iter().filter(|w| !w.is_zero()).count()
        })
        .min()
        .unwrap_or(n) as u64;
    Ok(BoundCertificate {
        kind: CertificateKind::Brute,
        value: min_weight as i64,
        witness: Witness::Exhaustive {
            codewords_checked: jobs.len() as u64,
            min_weight,
        },
    })
}
