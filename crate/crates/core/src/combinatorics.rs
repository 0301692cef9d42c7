//! Enumeration, ranking and unranking of k-of-n channel combinations.
//!
//! Channels are 1-based ordinals and combinations are ordered
//! lexicographically, also 1-based: `{1,2,3}` has index 1 and `{n-2,n-1,n}`
//! has index `C(n,k)`. Ranks are computed with the combinatorial number
//! system (counting how many combinations are skipped by each leading
//! element) rather than by enumeration, so `n` up to 64 is cheap.

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`; exact for every n ≤ 64.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 1..=k as u128 {
        result = result * (n as u128 - (k as u128 - i)) / i;
    }
    result as u64
}

/// A sorted k-subset of 1-based channel ordinals together with its 1-based
/// lexicographic rank within all k-subsets of `{1..=universe}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChannelCombination {
    channels: Vec<u8>,
    universe: u8,
    index: u64,
}

impl ChannelCombination {
    /// Build a combination from its member channels, validating the type
    /// invariants and computing the rank.
    pub fn new(channels: Vec<u8>, universe: u8) -> Result<Self> {
        if universe == 0 || universe > 64 {
            return Err(Error::invalid_argument(format!(
                "universe must be in [1, 64], got {universe}"
            )));
        }
        if channels.is_empty() || channels.len() > universe as usize {
            return Err(Error::invalid_argument(format!(
                "combination size {} outside [1, {universe}]",
                channels.len()
            )));
        }
        for (i, &c) in channels.iter().enumerate() {
            if c < 1 || c > universe {
                return Err(Error::invalid_argument(format!(
                    "channel ordinal {c} outside [1, {universe}]"
                )));
            }
            if i > 0 && channels[i - 1] >= c {
                return Err(Error::invalid_argument(
                    "channels must be strictly increasing",
                ));
            }
        }
        let index = rank(&channels, universe);
        Ok(ChannelCombination {
            channels,
            universe,
            index,
        })
    }

    /// Inverse of [`ChannelCombination::index`]: reconstruct the `idx`-th
    /// combination (1-based) of k out of n channels.
    pub fn from_index(n: u8, k: u8, idx: u64) -> Result<Self> {
        if k == 0 || k > n || n > 64 {
            return Err(Error::invalid_argument(format!(
                "invalid combination shape k={k}, n={n}"
            )));
        }
        let total = binomial(n as u64, k as u64);
        if idx < 1 || idx > total {
            return Err(Error::invalid_argument(format!(
                "index {idx} outside [1, {total}] for C({n},{k})"
            )));
        }
        let mut remaining = idx - 1;
        let mut channels = Vec::with_capacity(k as usize);
        let mut next = 1u8;
        for pos in 0..k {
            let mut c = next;
            loop {
                // combinations that keep `c` at this position
                let count = binomial((n - c) as u64, (k - pos - 1) as u64);
                if remaining < count {
                    channels.push(c);
                    next = c + 1;
                    break;
                }
                remaining -= count;
                c += 1;
            }
        }
        Ok(ChannelCombination {
            channels,
            universe: n,
            index: idx,
        })
    }

    pub fn channels(&self) -> &[u8] {
        &self.channels
    }

    pub fn universe(&self) -> u8 {
        self.universe
    }

    /// 1-based lexicographic rank.
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn k(&self) -> usize {
        self.channels.len()
    }

    /// `true` when this is `{1, 2, .., universe}`.
    pub fn is_identity(&self) -> bool {
        self.channels.len() == self.universe as usize
    }
}

impl std::fmt::Display for ChannelCombination {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.channels.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

fn rank(channels: &[u8], n: u8) -> u64 {
    let k = channels.len() as u64;
    let mut skipped = 0u64;
    let mut prev = 0u8;
    for (pos, &c) in channels.iter().enumerate() {
        for j in (prev + 1)..c {
            skipped += binomial((n - j) as u64, k - pos as u64 - 1);
        }
        prev = c;
    }
    skipped + 1
}

/// All k-of-n combinations in ascending lexicographic order; the i-th list
/// element (1-based) carries index i.
pub fn enumerate_combinations(n: u8, k: u8) -> Result<Vec<ChannelCombination>> {
    if k == 0 || k > n || n > 64 {
        return Err(Error::invalid_argument(format!(
            "invalid combination shape k={k}, n={n}"
        )));
    }
    let total = binomial(n as u64, k as u64);
    let mut out = Vec::with_capacity(total as usize);
    let mut current: Vec<u8> = (1..=k).collect();
    let mut index = 1u64;
    loop {
        out.push(ChannelCombination {
            channels: current.clone(),
            universe: n,
            index,
        });
        // advance to the lexicographic successor
        let mut pos = k as usize;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if current[pos] < n - (k - 1 - pos as u8) {
                current[pos] += 1;
                for p in pos + 1..k as usize {
                    current[p] = current[p - 1] + 1;
                }
                break;
            }
        }
        index += 1;
    }
}
