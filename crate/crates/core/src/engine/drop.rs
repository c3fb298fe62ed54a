use rand::Rng;
use rand_distr::{Exp1, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{Mode, ScenarioConfig};
use crate::antenna::ReflectorPattern;
use crate::channel::{ChannelConstants, ChannelModel};
use crate::error::{Error, Result};
use crate::geometry::{build_beam_grid, build_tn_layout, drop_users, BeamGrid, EarthModel, TnLayout, User, UserKind};
use crate::radio::{
    associate_offloaded, associate_standalone_tn, mean_spectral_efficiency, schedule_cell, sinr_dl_ntn, sinr_dl_tn,
    tn_interference_relief, ul_resource_partition, Association, CellId, CellSchedule, Densities, GainMatrix, Network,
    Relief, PRB_BANDWIDTH_HZ,
};
use crate::rng::{drop_key, substream, Purpose};
use crate::units::{dbm_to_watt, ktb_noise_watt, lin_to_db};

/// Everything about a scenario that does not change between drops.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub config: ScenarioConfig,
    pub layout: TnLayout,
    pub grid: BeamGrid,
    pub model: ChannelModel,
    pub densities: Densities,
}

impl Scenario {
    pub fn new(config: ScenarioConfig) -> Result<Self> {
        config.validate()?;
        let d = &config.deployment;
        let layout = build_tn_layout(d.isd_m, d.area_km2 * 1e6, d.bs_height_m)?;
        let earth = EarthModel::new(d.orbit_altitude_km * 1e3)?;
        let grid = build_beam_grid(
            d.elevation_deg,
            d.beam_hpbw_deg,
            d.beam_spacing_deg,
            d.ring_azimuth_deg,
            d.frf,
            &earth,
            [0.0, 0.0],
        )?;
        let constants = match &config.channel.constants_file {
            Some(path) => ChannelConstants::load(path)?,
            None => ChannelConstants::default(),
        };
        let g_max = config.antenna.reflector_max_gain_dbi;
        let model = ChannelModel {
            constants,
            carrier_ghz: config.spectrum.carrier_ghz,
            earth,
            sector: config.antenna.sector,
            reflector: ReflectorPattern::new(g_max, d.beam_hpbw_deg)?,
            shadowing: config.channel.shadowing,
        };
        let n = &config.noise;
        let densities = Densities {
            tn_dl_tx: dbm_to_watt(config.power.tn_dl_dbm) / (config.spectrum.tn_dl_mhz * 1e6),
            ntn_dl_tx: 10f64.powf((config.power.ntn_eirp_dbw_per_mhz - g_max) / 10.0) / 1e6,
            ue_noise: dbm_to_watt(n.density_dbm_per_hz + n.ue_noise_figure_db),
            bs_noise: dbm_to_watt(n.density_dbm_per_hz + n.bs_noise_figure_db),
            sat_noise: ktb_noise_watt(satellite_noise_temperature(g_max, n.satellite_g_over_t_db), 1.0),
        };
        Ok(Self {
            config,
            layout,
            grid,
            model,
            densities,
        })
    }

    pub fn n_tn_cells(&self) -> usize {
        self.layout.cells.len()
    }
}

/// System noise temperature implied by a receive gain and a G/T figure.
pub fn satellite_noise_temperature(max_gain_dbi: f64, g_over_t_db: f64) -> f64 {
    10f64.powf((max_gain_dbi - g_over_t_db) / 10.0)
}

/// Uplink co-scheduling realizations at a set of receivers.
///
/// `picks[r][x]` is the user transmitting in cell (or beam) `x` on the PRB
/// in realization `r`, and `interference[r][t]` the resulting interference
/// density at receiver `t` (W/Hz, including interferer fading).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct UlPool {
    pub picks: Vec<Vec<Option<usize>>>,
    pub interference: Vec<Vec<f64>>,
}

/// Full state of one drop: users, gains, association, powers, schedules
/// and uplink co-scheduling pools.
#[derive(Debug, Clone)]
pub struct DropState {
    pub index: u64,
    pub users: Vec<User>,
    /// Users by TN cell.
    pub tn_gain: GainMatrix,
    /// Users by NTN beam; no columns unless UAVs are offloaded.
    pub ntn_gain: GainMatrix,
    pub assoc: Association,
    pub ul_power_dbm: Vec<f64>,
    /// Uplink transmit density `P_k / 360 kHz`, W/Hz.
    pub ul_tx: Vec<f64>,
    pub tn_schedules: Vec<CellSchedule>,
    pub ntn_schedules: Vec<CellSchedule>,
    /// TN uplink pool; in partition mode the GUE-only layer.
    pub tn_pool: UlPool,
    /// UAV-only TN uplink pool, partition mode only.
    pub tn_uav_pool: Option<UlPool>,
    pub ntn_pool: UlPool,
}

impl DropState {
    pub fn network<'a>(&'a self, scenario: &'a Scenario) -> Network<'a> {
        Network {
            tn_gain: &self.tn_gain,
            ntn_gain: &self.ntn_gain,
            assoc: &self.assoc,
            beam_bands: &scenario.grid.bands,
            ul_tx: &self.ul_tx,
            densities: scenario.densities,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UserRecord {
    pub kind: UserKind,
    pub serving: CellId,
    pub edge: bool,
    pub dl_sinr_db: f64,
    pub dl_rate_bps: f64,
    pub ul_sinr_db: f64,
    pub ul_rate_bps: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReliefRecord {
    pub user: usize,
    pub muted: usize,
    pub sinr_before_db: f64,
    pub sinr_after_db: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PartitionRecord {
    pub cell: usize,
    pub n_uav: usize,
    pub fraction: f64,
    pub saturated: bool,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct DropRecords {
    pub index: u64,
    pub users: Vec<UserRecord>,
    /// One entry per TN-served UAV, relief mode only.
    pub relief: Vec<ReliefRecord>,
    /// One entry per TN cell serving UAVs, partition mode only.
    pub partition: Vec<PartitionRecord>,
}

fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

fn exp1<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(Exp1)
}

impl Scenario {
    /// Builds and evaluates one drop, returning its full state as well.
    pub fn simulate_drop(&self, index: u64) -> Result<(DropState, DropRecords)> {
        let wrap = |e: Error| Error::Drop {
            index,
            source: Box::new(e),
        };
        let state = self.build_drop(index).map_err(wrap)?;
        let records = self.evaluate(&state).map_err(wrap)?;
        Ok((state, records))
    }

    pub fn run_drop(&self, index: u64) -> Result<DropRecords> {
        self.simulate_drop(index).map(|(_, r)| r)
    }

    fn offload(&self) -> bool {
        self.config.mode == Mode::TnNtnOffload
    }

    pub fn build_drop(&self, index: u64) -> Result<DropState> {
        let key = drop_key(self.config.run.master_seed, index);
        let users = drop_users(
            &self.layout,
            &self.config.traffic,
            &mut substream(&key, Purpose::Placement, 0),
        )?;
        let penetration: Vec<f64> = (0..users.len())
            .map(|k| normal(&mut substream(&key, Purpose::Penetration, k as u64)))
            .collect();
        let tn_gain = self.tn_gains(&key, &users, &penetration)?;
        let ntn_gain = if self.offload() {
            self.ntn_gains(&key, &users, &penetration)?
        } else {
            GainMatrix::zeros(users.len(), 0)
        };
        let assoc = if self.offload() {
            associate_offloaded(&users, &tn_gain, &ntn_gain)?
        } else {
            associate_standalone_tn(&tn_gain)?
        };

        let pc = &self.config.power.uplink;
        let ul_power_dbm: Vec<f64> = assoc
            .serving
            .iter()
            .enumerate()
            .map(|(k, &s)| {
                let g = match s {
                    CellId::Tn(c) => tn_gain.get(k, c),
                    CellId::Ntn(b) => ntn_gain.get(k, b),
                };
                pc.ul_power_dbm(s, lin_to_db(g))
            })
            .collect();
        let ul_tx: Vec<f64> = ul_power_dbm
            .iter()
            .map(|&p| dbm_to_watt(p) / PRB_BANDWIDTH_HZ)
            .collect();

        let sp = &self.config.spectrum;
        let mut rng = substream(&key, Purpose::Scheduling, 0);
        let tn_schedules = assoc
            .tn_users
            .iter()
            .map(|us| schedule_cell(us, sp.tn_dl_mhz * 1e6, sp.tn_ul_mhz * 1e6, &mut rng))
            .collect();
        let ntn_schedules = assoc
            .ntn_users
            .iter()
            .map(|us| schedule_cell(us, sp.ntn_dl_mhz * 1e6, sp.ntn_ul_mhz * 1e6, &mut rng))
            .collect();

        let (tn_pool, tn_uav_pool) = if self.config.mode == Mode::TnUlPartition {
            let gue = self.tn_pool(&key, &users, &assoc, &tn_gain, &ul_tx, Some(UserKind::Gue), 0);
            let uav = self.tn_pool(&key, &users, &assoc, &tn_gain, &ul_tx, Some(UserKind::Uav), 1);
            (gue, Some(uav))
        } else {
            (self.tn_pool(&key, &users, &assoc, &tn_gain, &ul_tx, None, 0), None)
        };
        let ntn_pool = self.ntn_pool(&key, &assoc, &ntn_gain, &ul_tx);

        Ok(DropState {
            index,
            users,
            tn_gain,
            ntn_gain,
            assoc,
            ul_power_dbm,
            ul_tx,
            tn_schedules,
            ntn_schedules,
            tn_pool,
            tn_uav_pool,
            ntn_pool,
        })
    }

    /// Per (site, user): one LoS draw; per (cell, user): one shadowing draw.
    fn tn_gains(&self, key: &[u8; 32], users: &[User], penetration: &[f64]) -> Result<GainMatrix> {
        let n_cells = self.n_tn_cells();
        let mut g = GainMatrix::zeros(users.len(), n_cells);
        if n_cells == 0 {
            return Ok(g);
        }
        let offload = self.offload();
        let bs_height = self.layout.bs_height;
        g.as_mut_slice()
            .par_chunks_mut(n_cells)
            .enumerate()
            .try_for_each(|(k, row)| -> Result<()> {
                let user = &users[k];
                // Offloaded UAVs never use or cause TN links.
                if offload && user.is_uav() {
                    return Ok(());
                }
                let pen = self.model.penetration_db(user, penetration[k]);
                let mut rng = substream(key, Purpose::TnChannel, k as u64);
                for (s, site) in self.layout.sites.iter().enumerate() {
                    let los_u: f64 = rng.random();
                    let link = self.model.tn_site_link(*site, bs_height, user, los_u)?;
                    for i in 0..3 {
                        let z = normal(&mut rng);
                        let cell = 3 * s + i;
                        row[cell] = self
                            .model
                            .tn_sector_gain(&link, self.layout.cells[cell].azimuth_deg, z, pen)
                            .composite;
                    }
                }
                Ok(())
            })?;
        Ok(g)
    }

    fn ntn_gains(&self, key: &[u8; 32], users: &[User], penetration: &[f64]) -> Result<GainMatrix> {
        let n_beams = BeamGrid::N_BEAMS;
        let mut g = GainMatrix::zeros(users.len(), n_beams);
        g.as_mut_slice()
            .par_chunks_mut(n_beams)
            .enumerate()
            .try_for_each(|(k, row)| -> Result<()> {
                let user = &users[k];
                let pen = self.model.penetration_db(user, penetration[k]);
                let mut rng = substream(key, Purpose::NtnChannel, k as u64);
                let los_u: f64 = rng.random();
                let link = self.model.ntn_user_link(&self.grid, user, los_u)?;
                // One propagation path to the satellite, so one shadowing
                // draw shared by all beams.
                let z = normal(&mut rng);
                for (b, slot) in row.iter_mut().enumerate() {
                    *slot = self
                        .model
                        .ntn_beam_gain(&link, &self.grid, b, user.position, z, pen)?
                        .composite;
                }
                Ok(())
            })?;
        Ok(g)
    }

    fn faded(&self, user: &User) -> bool {
        self.config.channel.rayleigh && !user.is_uav()
    }

    /// Each realization draws one transmitting user per TN cell from its
    /// uplink queue (restricted to `kind` when given), then sums their
    /// interference at every other cell.
    #[allow(clippy::too_many_arguments)]
    fn tn_pool(
        &self,
        key: &[u8; 32],
        users: &[User],
        assoc: &Association,
        gain: &GainMatrix,
        ul_tx: &[f64],
        kind: Option<UserKind>,
        layer: u64,
    ) -> UlPool {
        let n_cells = self.n_tn_cells();
        let n_real = self.config.channel.fading_realizations;
        let queues: Vec<Vec<usize>> = assoc
            .tn_users
            .iter()
            .map(|us| {
                us.iter()
                    .copied()
                    .filter(|&j| kind.is_none_or(|kd| users[j].kind == kd))
                    .collect()
            })
            .collect();
        let (picks, interference): (Vec<_>, Vec<_>) = (0..n_real)
            .into_par_iter()
            .map(|r| {
                let mut rng = substream(key, Purpose::UlTnPool, layer * n_real as u64 + r as u64);
                let picks: Vec<Option<usize>> = queues
                    .iter()
                    .map(|q| (!q.is_empty()).then(|| q[rng.random_range(0..q.len())]))
                    .collect();
                let mut acc = vec![0.0; n_cells];
                for (x, pick) in picks.iter().enumerate() {
                    let Some(j) = *pick else { continue };
                    let p = ul_tx[j];
                    let row = gain.row(j);
                    let faded = self.faded(&users[j]);
                    for (t, a) in acc.iter_mut().enumerate() {
                        if t == x {
                            continue;
                        }
                        let h = if faded { exp1(&mut rng) } else { 1.0 };
                        *a += p * row[t] * h;
                    }
                }
                (picks, acc)
            })
            .unzip();
        UlPool { picks, interference }
    }

    /// As [`Self::tn_pool`] for the satellite beams: only co-band beams
    /// interfere and links carry no fading.
    fn ntn_pool(&self, key: &[u8; 32], assoc: &Association, gain: &GainMatrix, ul_tx: &[f64]) -> UlPool {
        let n_beams = assoc.ntn_users.len();
        if n_beams == 0 {
            return UlPool::default();
        }
        let bands = &self.grid.bands;
        let mut pool = UlPool::default();
        for r in 0..self.config.channel.fading_realizations {
            let mut rng = substream(key, Purpose::UlNtnPool, r as u64);
            let picks: Vec<Option<usize>> = assoc
                .ntn_users
                .iter()
                .map(|q| (!q.is_empty()).then(|| q[rng.random_range(0..q.len())]))
                .collect();
            let acc = (0..n_beams)
                .map(|n| {
                    (0..n_beams)
                        .filter(|&m| m != n && bands[m] == bands[n])
                        .filter_map(|m| picks[m].map(|j| ul_tx[j] * gain.get(j, n)))
                        .sum()
                })
                .collect();
            pool.picks.push(picks);
            pool.interference.push(acc);
        }
        pool
    }

    pub fn evaluate(&self, state: &DropState) -> Result<DropRecords> {
        let net = state.network(self);
        let key = drop_key(self.config.run.master_seed, state.index);
        let relief_mode = self.config.mode == Mode::TnRelief;
        let threshold_db = self.config.run.outage_threshold_db;

        let dl: Vec<(f64, f64, Option<Relief>)> = (0..state.users.len())
            .into_par_iter()
            .map(|k| self.downlink(&net, state, &key, k, relief_mode, threshold_db))
            .collect::<Result<_>>()?;

        // Muted cells give up the relieved UAV's share of their band.
        let mut lost_share = vec![0.0; self.n_tn_cells()];
        let mut relief = Vec::new();
        for (k, (_, _, r)) in dl.iter().enumerate() {
            let (Some(r), CellId::Tn(t)) = (r, state.assoc.serving[k]) else {
                continue;
            };
            let eta = 1.0 / state.assoc.tn_users[t].len() as f64;
            for &c in &r.muted {
                lost_share[c] += eta;
            }
            relief.push(ReliefRecord {
                user: k,
                muted: r.muted.len(),
                sinr_before_db: lin_to_db(r.sinr_before),
                sinr_after_db: lin_to_db(r.sinr_after),
            });
        }

        let ul = self.uplink(state, &key)?;

        let users = state
            .users
            .iter()
            .enumerate()
            .map(|(k, u)| {
                let (dl_sinr, mut dl_rate, _) = dl[k];
                if relief_mode && !u.is_uav() {
                    if let CellId::Tn(t) = state.assoc.serving[k] {
                        dl_rate *= (1.0 - lost_share[t]).max(0.0);
                    }
                }
                let (ul_sinr, ul_rate) = ul.users[k];
                UserRecord {
                    kind: u.kind,
                    serving: state.assoc.serving[k],
                    edge: u.edge,
                    dl_sinr_db: lin_to_db(dl_sinr),
                    dl_rate_bps: dl_rate,
                    ul_sinr_db: lin_to_db(ul_sinr),
                    ul_rate_bps: ul_rate,
                }
            })
            .collect();

        Ok(DropRecords {
            index: state.index,
            users,
            relief,
            partition: ul.partition,
        })
    }

    /// Large-scale downlink SINR, rate (averaged over fading), and relief
    /// outcome of user `k`.
    fn downlink(
        &self,
        net: &Network<'_>,
        state: &DropState,
        key: &[u8; 32],
        k: usize,
        relief_mode: bool,
        threshold_db: f64,
    ) -> Result<(f64, f64, Option<Relief>)> {
        let user = &state.users[k];
        match state.assoc.serving[k] {
            CellId::Tn(t) => {
                let grant = *state.tn_schedules[t].dl_grant(k).ok_or(Error::NotScheduled(k))?;
                if self.faded(user) {
                    let sinr = self.faded_dl_sinr(state, key, k, t);
                    let rate = grant.eta * grant.bandwidth_hz * mean_spectral_efficiency(&sinr);
                    return Ok((sinr_dl_tn(net, k, |_| 1.0)?, rate, None));
                }
                let mut sinr = sinr_dl_tn(net, k, |_| 1.0)?;
                let mut rr = None;
                if relief_mode && user.is_uav() {
                    let p = net.densities.tn_dl_tx;
                    let row = state.tn_gain.row(k);
                    let interferers: Vec<(usize, f64)> = row
                        .iter()
                        .enumerate()
                        .filter(|&(c, _)| c != t)
                        .map(|(c, &g)| (c, p * g))
                        .collect();
                    let r = tn_interference_relief(p * row[t], &interferers, net.densities.ue_noise, threshold_db);
                    sinr = r.sinr_after;
                    rr = Some(r);
                }
                Ok((sinr, grant.eta * grant.bandwidth_hz * (1.0 + sinr).log2(), rr))
            }
            CellId::Ntn(n) => {
                let grant = *state.ntn_schedules[n].dl_grant(k).ok_or(Error::NotScheduled(k))?;
                let sinr = sinr_dl_ntn(net, k)?;
                Ok((sinr, grant.eta * grant.bandwidth_hz * (1.0 + sinr).log2(), None))
            }
        }
    }

    /// Rayleigh downlink: the serving link and the strongest interferers get
    /// independent `|h|^2` draws per realization, weaker interferers enter
    /// with their mean power.
    fn faded_dl_sinr(&self, state: &DropState, key: &[u8; 32], k: usize, t: usize) -> Vec<f64> {
        let d = &self.config.channel;
        let p = self.densities.tn_dl_tx;
        let noise = self.densities.ue_noise;
        let row = state.tn_gain.row(k);
        let mut others: Vec<usize> = (0..row.len()).filter(|&c| c != t).collect();
        let n_faded = d.faded_interferers.min(others.len());
        let by_gain = |a: &usize, b: &usize| row[*b].total_cmp(&row[*a]).then(a.cmp(b));
        if n_faded > 0 && n_faded < others.len() {
            others.select_nth_unstable_by(n_faded - 1, by_gain);
        }
        let (top, rest) = others.split_at_mut(n_faded);
        top.sort_unstable();
        rest.sort_unstable();
        let background: f64 = rest.iter().map(|&c| p * row[c]).sum();
        let mut rng = substream(key, Purpose::DlFading, k as u64);
        (0..d.fading_realizations)
            .map(|_| {
                let s = p * row[t] * exp1(&mut rng);
                let i: f64 = top.iter().map(|&c| p * row[c] * exp1(&mut rng)).sum();
                s / (background + i + noise)
            })
            .collect()
    }

    /// Uplink signal density, noise density, interference pool and receiver
    /// index of user `k`.
    fn ul_terms<'s>(&self, state: &'s DropState, k: usize) -> (f64, f64, &'s UlPool, usize) {
        match state.assoc.serving[k] {
            CellId::Tn(t) => {
                let pool = match &state.tn_uav_pool {
                    Some(uav_pool) if state.users[k].is_uav() => uav_pool,
                    _ => &state.tn_pool,
                };
                (
                    state.ul_tx[k] * state.tn_gain.get(k, t),
                    self.densities.bs_noise,
                    pool,
                    t,
                )
            }
            CellId::Ntn(n) => (
                state.ul_tx[k] * state.ntn_gain.get(k, n),
                self.densities.sat_noise,
                &state.ntn_pool,
                n,
            ),
        }
    }

    fn uplink(&self, state: &DropState, key: &[u8; 32]) -> Result<UplinkOutcome> {
        let n_real = self.config.channel.fading_realizations;
        let sp = &self.config.spectrum;
        // Per-user SINR realizations against the relevant pool.
        let sinr: Vec<Vec<f64>> = (0..state.users.len())
            .into_par_iter()
            .map(|k| {
                let user = &state.users[k];
                let mut rng = substream(key, Purpose::UlFading, k as u64);
                let faded = self.faded(user);
                let (signal, noise, pool, rx) = self.ul_terms(state, k);
                (0..n_real)
                    .map(|r| {
                        let h = if faded { exp1(&mut rng) } else { 1.0 };
                        signal * h / (pool.interference[r][rx] + noise)
                    })
                    .collect()
            })
            .collect();
        let se: Vec<f64> = sinr.iter().map(|s| mean_spectral_efficiency(s)).collect();
        // Recorded SINR: large-scale signal against the mean pool interference.
        let large_scale: Vec<f64> = (0..state.users.len())
            .map(|k| {
                let (signal, noise, pool, rx) = self.ul_terms(state, k);
                let mean = pool.interference.iter().map(|i| i[rx]).sum::<f64>() / n_real.max(1) as f64;
                signal / (mean + noise)
            })
            .collect();
        let mut rate = vec![0.0; state.users.len()];
        let mut partition = Vec::new();

        for sched in &state.ntn_schedules {
            for g in &sched.ul {
                rate[g.user] = g.eta * g.bandwidth_hz * se[g.user];
            }
        }
        if state.tn_uav_pool.is_some() {
            let band = sp.tn_ul_mhz * 1e6;
            let target = self.config.run.uav_target_rate_bps;
            for (t, us) in state.assoc.tn_users.iter().enumerate() {
                let (uavs, gues): (Vec<usize>, Vec<usize>) = us.iter().partition(|&&k| state.users[k].is_uav());
                let uav_se: Vec<f64> = uavs.iter().map(|&k| se[k]).collect();
                let part = ul_resource_partition(&uav_se, band, target)?;
                for (&k, &res) in uavs.iter().zip(&part.uav_resources_hz) {
                    rate[k] = res * se[k];
                }
                if !uavs.is_empty() {
                    partition.push(PartitionRecord {
                        cell: t,
                        n_uav: uavs.len(),
                        fraction: part.fraction,
                        saturated: part.saturated,
                    });
                }
                if !gues.is_empty() {
                    let slots = ((1.0 - part.fraction) * band / PRB_BANDWIDTH_HZ + 1e-9).floor() as usize;
                    let eta = slots.min(gues.len()) as f64 / gues.len() as f64;
                    for &k in &gues {
                        rate[k] = eta * PRB_BANDWIDTH_HZ * se[k];
                    }
                }
            }
        } else {
            for sched in &state.tn_schedules {
                for g in &sched.ul {
                    rate[g.user] = g.eta * g.bandwidth_hz * se[g.user];
                }
            }
        }
        Ok(UplinkOutcome {
            users: large_scale.into_iter().zip(rate).collect(),
            partition,
        })
    }
}

struct UplinkOutcome {
    users: Vec<(f64, f64)>,
    partition: Vec<PartitionRecord>,
}
