//! Coalition formation as a canonical coalitional game with transferable
//! utility.
//!
//! A coalition of size `m` is worth `m * R * (1 - P_m)` where `P_m` is the
//! per-pair outage probability in a coalition of that size; since pairs are
//! exchangeable, values depend only on block sizes. The outage function is
//! injected, so the same machinery runs against Theorem-1 values, asymptotic
//! values, or Monte-Carlo estimates.

use crate::sim::Partition;
use thiserror::Error;

/// Largest N for exhaustive partition enumeration (Bell(12) = 4,213,597).
pub const MAX_PLAYERS: usize = 12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GameError {
    #[error("player count must be >= 1")]
    NoPlayers,
    #[error("player count {0} exceeds the enumeration cap {MAX_PLAYERS}")]
    TooManyPlayers(usize),
}

/// Value of one coalition: `m * rate * (1 - outage(m))`.
pub fn coalition_value<F: Fn(usize) -> f64>(size: usize, outage_fn: &F, rate: f64) -> f64 {
    size as f64 * rate * (1.0 - outage_fn(size))
}

/// Bell number (number of set partitions) for small n.
pub fn bell_number(n: usize) -> u64 {
    // Bell triangle
    let mut row = vec![1u64];
    for _ in 1..=n {
        let mut next = vec![*row.last().unwrap()];
        for &v in &row {
            next.push(next.last().unwrap() + v);
        }
        row = next;
    }
    row[0]
}

/// Iterator over all set partitions of `{0, .., n-1}` in restricted-growth-
/// string order. The first partition emitted is the grand coalition.
pub struct PartitionIter {
    n: usize,
    rgs: Vec<usize>,
    max: Vec<usize>,
    done: bool,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let current = self.to_partition();
        // advance the restricted growth string
        let mut i = self.n;
        loop {
            if i == 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.rgs[i] <= self.max[i - 1] {
                self.rgs[i] += 1;
                self.max[i] = self.max[i].max(self.rgs[i]);
                for j in i + 1..self.n {
                    self.rgs[j] = 0;
                    self.max[j] = self.max[i];
                }
                break;
            }
        }
        Some(current)
    }
}

impl PartitionIter {
    fn to_partition(&self) -> Partition {
        let num_blocks = self.rgs.iter().copied().max().unwrap_or(0) + 1;
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); num_blocks];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(i);
        }
        Partition::new(blocks, self.n).expect("restricted growth string is a valid partition")
    }
}

/// Emits every set partition of `n` players exactly once; refuses n above
/// [`MAX_PLAYERS`].
pub fn enumerate_partitions(n: usize) -> Result<PartitionIter, GameError> {
    if n < 1 {
        return Err(GameError::NoPlayers);
    }
    if n > MAX_PLAYERS {
        return Err(GameError::TooManyPlayers(n));
    }
    Ok(PartitionIter {
        n,
        rgs: vec![0; n],
        max: vec![0; n],
        done: false,
    })
}

/// Total value of a partition under a size-symmetric outage function.
pub fn partition_value<F: Fn(usize) -> f64>(partition: &Partition, outage_fn: &F, rate: f64) -> f64 {
    partition
        .blocks()
        .iter()
        .map(|b| coalition_value(b.len(), outage_fn, rate))
        .sum()
}

/// Superadditivity check over all disjoint coalition size pairs
/// `(s1, s2)` with `s1 + s2 <= N`: strict superadditivity requires
/// `v(s1) + v(s2) < v(s1 + s2)`.
///
/// Pairs of coalitions of size >= 2 (the pairs the asymptotic comparison
/// covers) are reported separately from pairs involving singletons (covered
/// only by the decay-rate argument).
#[derive(Debug, Clone, PartialEq)]
pub struct SuperadditivityReport {
    /// (s1, s2) pairs with both sizes >= 2 where strictness fails.
    pub violations_large: Vec<(usize, usize)>,
    /// Failing pairs where at least one side is a singleton.
    pub violations_singleton: Vec<(usize, usize)>,
    pub pairs_checked: usize,
}

impl SuperadditivityReport {
    pub fn holds_for_large_pairs(&self) -> bool {
        self.violations_large.is_empty()
    }
    pub fn holds_everywhere(&self) -> bool {
        self.violations_large.is_empty() && self.violations_singleton.is_empty()
    }
}

pub fn check_superadditivity<F: Fn(usize) -> f64>(
    n: usize,
    outage_fn: &F,
    rate: f64,
) -> Result<SuperadditivityReport, GameError> {
    if n < 1 {
        return Err(GameError::NoPlayers);
    }
    if n > MAX_PLAYERS {
        return Err(GameError::TooManyPlayers(n));
    }
    let mut report = SuperadditivityReport {
        violations_large: Vec::new(),
        violations_singleton: Vec::new(),
        pairs_checked: 0,
    };
    for s1 in 1..=n {
        for s2 in s1..=n {
            if s1 + s2 > n {
                break;
            }
            report.pairs_checked += 1;
            let merged = coalition_value(s1 + s2, outage_fn, rate);
            let split = coalition_value(s1, outage_fn, rate) + coalition_value(s2, outage_fn, rate);
            if split >= merged {
                if s1 >= 2 && s2 >= 2 {
                    report.violations_large.push((s1, s2));
                } else {
                    report.violations_singleton.push((s1, s2));
                }
            }
        }
    }
    Ok(report)
}

/// Core membership of the equal-split payoff `x* = v(N)/N` per player.
///
/// By size symmetry the blocking inequalities reduce to
/// `P_N <= P_{|S|}` for every coalition size; `margin` is
/// `P_{|S|} - P_N` (non-negative iff the size cannot block).
#[derive(Debug, Clone, PartialEq)]
pub struct CoreReport {
    pub in_core: bool,
    /// (coalition size, outage margin) for sizes 1..=N.
    pub margins: Vec<(usize, f64)>,
    /// Per-player equal-split payoff.
    pub payoff_per_player: f64,
}

pub fn check_core_equal_split<F: Fn(usize) -> f64>(
    n: usize,
    outage_fn: &F,
    rate: f64,
) -> Result<CoreReport, GameError> {
    if n < 1 {
        return Err(GameError::NoPlayers);
    }
    if n > MAX_PLAYERS {
        return Err(GameError::TooManyPlayers(n));
    }
    let p_grand = outage_fn(n);
    let mut margins = Vec::with_capacity(n);
    let mut in_core = true;
    for size in 1..=n {
        let margin = outage_fn(size) - p_grand;
        if margin < 0.0 {
            in_core = false;
        }
        margins.push((size, margin));
    }
    Ok(CoreReport {
        in_core,
        margins,
        payoff_per_player: rate * (1.0 - p_grand),
    })
}

/// Full report of the partition optimization.
#[derive(Debug, Clone)]
pub struct GameReport {
    pub num_pairs: usize,
    pub rate: f64,
    pub best_partition: Partition,
    pub best_value: f64,
    /// Every partition with its total value, in enumeration order; populated
    /// only for N <= 8 (Bell(8) = 4140 rows) to keep reports bounded.
    pub partition_values: Vec<(Partition, f64)>,
    pub superadditivity: SuperadditivityReport,
    pub core: CoreReport,
    /// Equal-split payoff vector `x*`.
    pub payoff: Vec<f64>,
}

const TABLE_LIMIT: usize = 8;

/// Exhaustive maximization of the total rate over all partitions. Ties are
/// broken toward fewer blocks, then lexicographically on the canonical block
/// representation.
pub fn optimal_partition<F: Fn(usize) -> f64>(
    n: usize,
    outage_fn: &F,
    rate: f64,
) -> Result<GameReport, GameError> {
    let mut best: Option<(Partition, f64)> = None;
    let mut table = Vec::new();
    for partition in enumerate_partitions(n)? {
        let value = partition_value(&partition, outage_fn, rate);
        let better = match &best {
            None => true,
            Some((bp, bv)) => {
                value > *bv
                    || (value == *bv
                        && (partition.num_blocks(), partition.blocks())
                            < (bp.num_blocks(), bp.blocks()))
            }
        };
        if better {
            best = Some((partition.clone(), value));
        }
        if n <= TABLE_LIMIT {
            table.push((partition, value));
        }
    }
    let (best_partition, best_value) = best.expect("at least one partition exists");
    let core = check_core_equal_split(n, outage_fn, rate)?;
    let payoff = vec![core.payoff_per_player; n];
    Ok(GameReport {
        num_pairs: n,
        rate,
        best_partition,
        best_value,
        partition_values: table,
        superadditivity: check_superadditivity(n, outage_fn, rate)?,
        core,
        payoff,
    })
}
