//! Numerical semigroups: membership, gaps, Frobenius number, telescopic
//! sequences and runs of consecutive gaps.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("empty generator list")]
    Empty,
    #[error("generators must be positive")]
    NonPositive,
    #[error("generators have gcd {0}; the complement would be infinite")]
    NotCofinite(u64),
    #[error("sequence is not telescopic")]
    NotTelescopic,
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_generators(gens: &[u64]) -> Result<(), SemigroupError> {
    if gens.is_empty() {
        return Err(SemigroupError::Empty);
    }
    if gens.contains(&0) {
        return Err(SemigroupError::NonPositive);
    }
    let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
    if g != 1 {
        return Err(SemigroupError::NotCofinite(g));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    /// membership[n] for 0 <= n < frobenius + 2
    membership: Vec<bool>,
    frobenius: i64,
    gaps: Vec<u64>,
}

impl NumericalSemigroup {
    /// Coin-problem closure, extended until `min(gens)` consecutive members
    /// appear; everything past such a run is a member.
    pub fn from_generators(gens: &[u64]) -> Result<Self, SemigroupError> {
        check_generators(gens)?;
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let smallest = generators[0] as usize;

        let mut membership = vec![true];
        let mut run = 1usize;
        let mut n = 0usize;
        while run < smallest {
            n += 1;
            let member = generators
                .iter()
                .take_while(|&&g| g as usize <= n)
                .any(|&g| membership[n - g as usize]);
            membership.push(member);
            run = if member { run + 1 } else { 0 };
        }
        let gaps: Vec<u64> = membership
            .iter()
            .enumerate()
            .filter(|(_, &m)| !m)
            .map(|(i, _)| i as u64)
            .collect();
        let frobenius = gaps.last().map_or(-1, |&g| g as i64);
        membership.truncate((frobenius + 2) as usize);
        Ok(NumericalSemigroup {
            generators,
            membership,
            frobenius,
            gaps,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    /// The membership table on `[0, frobenius + 2)`.
    pub fn membership(&self) -> &[bool] {
        &self.membership
    }

    pub fn contains(&self, n: u64) -> bool {
        self.membership.get(n as usize).copied().unwrap_or(true)
    }

    pub fn is_gap(&self, n: u64) -> bool {
        !self.contains(n)
    }

    /// `#{s in S : s <= m}`.
    pub fn nongaps_up_to(&self, m: u64) -> u64 {
        let gaps_le = self.gaps.partition_point(|&g| g <= m) as u64;
        m + 1 - gaps_le
    }

    /// Maximal runs of consecutive gaps as `(start, length)`.
    pub fn gap_runs(&self) -> Vec<(u64, u64)> {
        let mut runs: Vec<(u64, u64)> = Vec::new();
        for &g in &self.gaps {
            match runs.last_mut() {
                Some((start, len)) if *start + *len == g => *len += 1,
                _ => runs.push((g, 1)),
            }
        }
        runs
    }

    /// Whether `lo..=hi` consists of gaps only.
    pub fn all_gaps(&self, lo: u64, hi: u64) -> bool {
        (lo..=hi).all(|n| self.is_gap(n))
    }

    pub fn report(&self) -> SemigroupReport {
        SemigroupReport {
            generators: self.generators.clone(),
            genus: self.genus(),
            frobenius: self.frobenius,
            gaps: self.gaps.clone(),
            runs: self.gap_runs().into_iter().map(|(s, l)| [s, l]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupReport {
    pub generators: Vec<u64>,
    pub genus: u64,
    pub frobenius: i64,
    pub gaps: Vec<u64>,
    pub runs: Vec<[u64; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TelescopicReport {
    pub sequence: Vec<u64>,
    /// `d_0 = 0, d_i = gcd(a_1, .., a_i)`.
    pub d_chain: Vec<u64>,
    pub telescopic: bool,
    pub l_g: Option<i64>,
    pub g: Option<i64>,
}

/// Checks `a_i / d_i` against the semigroup generated by
/// `{a_1/d_{i-1}, .., a_{i-1}/d_{i-1}}` for `i = 2..k`.
pub fn is_telescopic(seq: &[u64]) -> Result<TelescopicReport, SemigroupError> {
    check_generators(seq)?;
    let mut d_chain = vec![0u64];
    for &a in seq {
        let last = *d_chain.last().unwrap();
        d_chain.push(gcd(last, a));
    }
    let mut telescopic = true;
    for i in 2..=seq.len() {
        let prev = d_chain[i - 1];
        let earlier: Vec<u64> = seq[..i - 1].iter().map(|a| a / prev).collect();
        let s = NumericalSemigroup::from_generators(&earlier)?;
        if !s.contains(seq[i - 1] / d_chain[i]) {
            telescopic = false;
            break;
        }
    }
    let (l_g, g) = if telescopic {
        let l = kirfel_pellikaan_lg(seq, &d_chain);
        (Some(l), Some((l + 1) / 2))
    } else {
        (None, None)
    };
    Ok(TelescopicReport {
        sequence: seq.to_vec(),
        d_chain,
        telescopic,
        l_g,
        g,
    })
}

// sum_{i=1}^k (d_{i-1}/d_i - 1) a_i with d_0 = 0
fn kirfel_pellikaan_lg(seq: &[u64], d_chain: &[u64]) -> i64 {
    seq.iter()
        .enumerate()
        .map(|(i, &a)| (d_chain[i] as i64 / d_chain[i + 1] as i64 - 1) * a as i64)
        .sum()
}

/// Closed-form largest gap and genus of a telescopic semigroup.
pub fn telescopic_numbers(seq: &[u64]) -> Result<(i64, i64), SemigroupError> {
    let report = is_telescopic(seq)?;
    match (report.l_g, report.g) {
        (Some(l), Some(g)) => Ok((l, g)),
        _ => Err(SemigroupError::NotTelescopic),
    }
}
