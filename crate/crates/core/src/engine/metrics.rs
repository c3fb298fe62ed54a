use serde::{Deserialize, Serialize};

use super::drop::DropRecords;
use crate::geometry::UserKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Population {
    Gue,
    Uav,
}

impl Population {
    pub fn as_str(self) -> &'static str {
        match self {
            Population::Gue => "gue",
            Population::Uav => "uav",
        }
    }

    fn of(kind: UserKind) -> Self {
        match kind {
            UserKind::Gue => Population::Gue,
            UserKind::Uav => Population::Uav,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Dl,
    Ul,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Dl => "dl",
            Direction::Ul => "ul",
        }
    }
}

/// Empirical distribution of one population in one direction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Distribution {
    pub population: Population,
    pub direction: Direction,
    /// Ascending.
    pub sinr_db: Vec<f64>,
    /// Ascending, bit/s.
    pub rate_bps: Vec<f64>,
    /// Fraction of SINR samples below the outage threshold.
    pub outage: Option<f64>,
    pub median_sinr_db: Option<f64>,
    pub mean_rate_bps: Option<f64>,
    pub p95_rate_bps: Option<f64>,
}

impl Distribution {
    pub fn new(
        population: Population,
        direction: Direction,
        mut sinr_db: Vec<f64>,
        mut rate_bps: Vec<f64>,
        threshold_db: f64,
    ) -> Self {
        sinr_db.sort_by(f64::total_cmp);
        rate_bps.sort_by(f64::total_cmp);
        let n = sinr_db.len();
        let outage = (n > 0).then(|| sinr_db.iter().filter(|&&s| s < threshold_db).count() as f64 / n as f64);
        let mean_rate_bps = (!rate_bps.is_empty()).then(|| rate_bps.iter().sum::<f64>() / rate_bps.len() as f64);
        Self {
            population,
            direction,
            outage,
            median_sinr_db: percentile(&sinr_db, 50.0),
            mean_rate_bps,
            p95_rate_bps: percentile(&rate_bps, 95.0),
            sinr_db,
            rate_bps,
        }
    }

    pub fn len(&self) -> usize {
        self.sinr_db.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sinr_db.is_empty()
    }
}

/// Nearest-rank percentile of an ascending array.
pub fn percentile(sorted: &[f64], p: f64) -> Option<f64> {
    if sorted.is_empty() {
        return None;
    }
    let rank = ((p / 100.0) * sorted.len() as f64).ceil().max(1.0) as usize;
    Some(sorted[rank.min(sorted.len()) - 1])
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReliefStats {
    /// TN-served UAVs evaluated.
    pub uavs: usize,
    /// UAVs that needed at least one cell muted.
    pub relieved: usize,
    /// Mean muted-set size over relieved UAVs.
    pub mean_muted: Option<f64>,
    pub max_muted: usize,
    /// Lowest post-relief SINR among UAVs whose muted set is not exhaustive.
    pub min_sinr_after_db: Option<f64>,
    /// UAVs still below threshold with every interferer muted.
    pub unrecoverable: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionStats {
    /// Cells serving at least one UAV, over all drops.
    pub cells: usize,
    pub mean_fraction: Option<f64>,
    pub max_fraction: Option<f64>,
    pub saturated: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsSummary {
    pub scenario: String,
    pub n_drops: usize,
    pub outage_threshold_db: f64,
    /// GUE-DL, GUE-UL, UAV-DL, UAV-UL.
    pub distributions: Vec<Distribution>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relief: Option<ReliefStats>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<PartitionStats>,
}

impl MetricsSummary {
    pub fn get(&self, population: Population, direction: Direction) -> &Distribution {
        self.distributions
            .iter()
            .find(|d| d.population == population && d.direction == direction)
            .expect("all four distributions are present")
    }

    /// Pools the records of several drops. Results do not depend on the
    /// order of `drops`.
    pub fn aggregate(
        scenario: &str,
        drops: &[DropRecords],
        threshold_db: f64,
        exclude_edge_users: bool,
        n_interferers: Option<usize>,
    ) -> Self {
        let mut distributions = Vec::with_capacity(4);
        for pop in [Population::Gue, Population::Uav] {
            for dir in [Direction::Dl, Direction::Ul] {
                let users = drops
                    .iter()
                    .flat_map(|d| d.users.iter())
                    .filter(|u| Population::of(u.kind) == pop && !(exclude_edge_users && u.edge));
                let (sinr, rate): (Vec<f64>, Vec<f64>) = users
                    .map(|u| match dir {
                        Direction::Dl => (u.dl_sinr_db, u.dl_rate_bps),
                        Direction::Ul => (u.ul_sinr_db, u.ul_rate_bps),
                    })
                    .unzip();
                distributions.push(Distribution::new(pop, dir, sinr, rate, threshold_db));
            }
        }

        let relief_records: Vec<_> = drops.iter().flat_map(|d| d.relief.iter()).collect();
        let relief = (!relief_records.is_empty()).then(|| {
            let relieved: Vec<_> = relief_records.iter().filter(|r| r.muted > 0).collect();
            let exhaustive = |r: &&&super::drop::ReliefRecord| n_interferers.is_some_and(|n| r.muted >= n);
            ReliefStats {
                uavs: relief_records.len(),
                relieved: relieved.len(),
                mean_muted: (!relieved.is_empty())
                    .then(|| relieved.iter().map(|r| r.muted as f64).sum::<f64>() / relieved.len() as f64),
                max_muted: relief_records.iter().map(|r| r.muted).max().unwrap_or(0),
                min_sinr_after_db: relief_records
                    .iter()
                    .filter(|r| !exhaustive(r))
                    .map(|r| r.sinr_after_db)
                    .min_by(f64::total_cmp),
                unrecoverable: relief_records
                    .iter()
                    .filter(|r| exhaustive(r) && r.sinr_after_db < threshold_db)
                    .count(),
            }
        });

        let parts: Vec<_> = drops.iter().flat_map(|d| d.partition.iter()).collect();
        let partition = (!parts.is_empty()).then(|| PartitionStats {
            cells: parts.len(),
            mean_fraction: Some(parts.iter().map(|p| p.fraction).sum::<f64>() / parts.len() as f64),
            max_fraction: parts.iter().map(|p| p.fraction).max_by(f64::total_cmp),
            saturated: parts.iter().filter(|p| p.saturated).count(),
        });

        Self {
            scenario: scenario.to_string(),
            n_drops: drops.len(),
            outage_threshold_db: threshold_db,
            distributions,
            relief,
            partition,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn nearest_rank() {
        let v: Vec<f64> = (1..=20).map(|x| x as f64).collect();
        assert_eq!(percentile(&v, 95.0), Some(19.0));
        assert_eq!(percentile(&v, 50.0), Some(10.0));
        assert_eq!(percentile(&v, 100.0), Some(20.0));
        assert_eq!(percentile(&v, 0.0), Some(1.0));
        assert_eq!(percentile(&[], 50.0), None);
    }

    #[test]
    fn outage_counts_strictly_below() {
        let d = Distribution::new(
            Population::Uav,
            Direction::Dl,
            vec![-5.0, -6.0, 3.0, -4.0],
            vec![1.0; 4],
            -5.0,
        );
        assert_eq!(d.outage, Some(0.25));
        let d = Distribution::new(Population::Uav, Direction::Dl, vec![-5.0, 0.0], vec![1.0; 2], -5.0);
        assert_eq!(d.outage, Some(0.0));
        let d = Distribution::new(Population::Gue, Direction::Ul, vec![], vec![], -5.0);
        assert_eq!(d.outage, None);
        assert!(d.is_empty());
    }

    proptest! {
        #[test]
        fn sorted_and_bounded(xs in prop::collection::vec(-50.0f64..50.0, 1..200)) {
            let d = Distribution::new(Population::Gue, Direction::Dl, xs.clone(), xs.iter().map(|x| x.abs()).collect(), -5.0);
            prop_assert!(d.sinr_db.windows(2).all(|w| w[0] <= w[1]));
            prop_assert!(d.rate_bps.windows(2).all(|w| w[0] <= w[1]));
            let o = d.outage.unwrap();
            prop_assert!((0.0..=1.0).contains(&o));
        }
    }
}
