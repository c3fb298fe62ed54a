//! The engine's recorded SINRs and rates agree with direct evaluation of
//! the radio equations on the same drop state.
mod common;

use common::{rel_err, small};
use ntnsim::engine::{Mode, Scenario};
use ntnsim::radio::{sinr_dl_ntn, sinr_dl_tn, sinr_ul_ntn, sinr_ul_tn, CellId};
use ntnsim::units::lin_to_db;

const TOL: f64 = 1e-9;

fn check_drop(name: &str) {
    let mut cfg = small(name, 6.0, 1);
    cfg.channel.rayleigh = false;
    cfg.channel.fading_realizations = 5;
    let scenario = Scenario::new(cfg).unwrap();
    let (state, records) = scenario.simulate_drop(0).unwrap();
    let net = state.network(&scenario);
    assert!(state.assoc.check());
    assert_eq!(records.users.len(), state.users.len());

    for (k, rec) in records.users.iter().enumerate() {
        assert_eq!(rec.serving, state.assoc.serving[k]);
        let (dl, dl_grant, pool, rx, ul_grant) = match rec.serving {
            CellId::Tn(t) => (
                sinr_dl_tn(&net, k, |_| 1.0).unwrap(),
                *state.tn_schedules[t].dl_grant(k).unwrap(),
                &state.tn_pool,
                t,
                *state.tn_schedules[t].ul_grant(k).unwrap(),
            ),
            CellId::Ntn(n) => (
                sinr_dl_ntn(&net, k).unwrap(),
                *state.ntn_schedules[n].dl_grant(k).unwrap(),
                &state.ntn_pool,
                n,
                *state.ntn_schedules[n].ul_grant(k).unwrap(),
            ),
        };
        assert!((rec.dl_sinr_db - lin_to_db(dl)).abs() < 1e-9, "user {k}");
        let dl_rate = dl_grant.eta * dl_grant.bandwidth_hz * (1.0 + dl).log2();
        assert!(rel_err(rec.dl_rate_bps, dl_rate) < TOL, "user {k}");

        // Every pool realization equals the radio equation with the
        // realization's picks as co-scheduled users.
        let mut se = 0.0;
        let mut mean_interference = 0.0;
        for (r, picks) in pool.picks.iter().enumerate() {
            let co: Vec<usize> = picks
                .iter()
                .enumerate()
                .filter(|&(x, _)| x != rx)
                .filter_map(|(x, p)| match rec.serving {
                    CellId::Ntn(_) if scenario.grid.bands[x] != scenario.grid.bands[rx] => None,
                    _ => *p,
                })
                .collect();
            let sinr = match rec.serving {
                CellId::Tn(_) => sinr_ul_tn(&net, k, &co, |_| 1.0).unwrap(),
                CellId::Ntn(_) => sinr_ul_ntn(&net, k, &co).unwrap(),
            };
            se += (1.0 + sinr).log2();
            mean_interference += pool.interference[r][rx];
        }
        let n = pool.picks.len() as f64;
        let ul_rate = ul_grant.eta * ul_grant.bandwidth_hz * se / n;
        assert!(
            rel_err(rec.ul_rate_bps, ul_rate) < TOL,
            "user {k}: {} vs {ul_rate}",
            rec.ul_rate_bps
        );

        let (signal, noise) = match rec.serving {
            CellId::Tn(t) => (state.ul_tx[k] * state.tn_gain.get(k, t), scenario.densities.bs_noise),
            CellId::Ntn(b) => (state.ul_tx[k] * state.ntn_gain.get(k, b), scenario.densities.sat_noise),
        };
        let large_scale = signal / (mean_interference / n + noise);
        assert!((rec.ul_sinr_db - lin_to_db(large_scale)).abs() < 1e-9, "user {k}");
    }
}

#[test]
fn standalone_records_match_radio_equations() {
    check_drop("case3.standalone");
}

#[test]
fn offload_records_match_radio_equations() {
    check_drop("case3.offload_90_frf3");
    check_drop("case3.offload_87_frf1");
}

#[test]
fn offload_sends_every_uav_to_the_satellite() {
    let scenario = Scenario::new(small("case3.offload_90_frf1", 6.0, 1)).unwrap();
    let (state, _) = scenario.simulate_drop(0).unwrap();
    for (k, u) in state.users.iter().enumerate() {
        assert_eq!(u.is_uav(), matches!(state.assoc.serving[k], CellId::Ntn(_)), "user {k}");
        if u.is_uav() {
            assert!(state.tn_gain.row(k).iter().all(|&g| g == 0.0));
        }
    }
}

#[test]
fn relief_brings_every_recoverable_uav_to_threshold() {
    let cfg = small("case3.relief", 6.0, 2);
    assert_eq!(cfg.mode, Mode::TnRelief);
    let threshold = cfg.run.outage_threshold_db;
    let scenario = Scenario::new(cfg).unwrap();
    let n_other = scenario.n_tn_cells() - 1;
    for d in 0..2 {
        let records = scenario.run_drop(d).unwrap();
        assert!(!records.relief.is_empty());
        for r in &records.relief {
            assert!(r.sinr_after_db >= r.sinr_before_db);
            if r.muted < n_other {
                assert!(r.sinr_after_db >= threshold, "{r:?}");
            }
            if r.muted == 0 {
                assert_eq!(r.sinr_after_db, r.sinr_before_db);
            }
        }
    }
}

#[test]
fn partition_meets_the_uav_target_unless_saturated() {
    let cfg = small("case3.partition", 6.0, 1);
    let target = cfg.run.uav_target_rate_bps;
    let scenario = Scenario::new(cfg).unwrap();
    let (state, records) = scenario.simulate_drop(0).unwrap();
    assert!(state.tn_uav_pool.is_some());
    assert!(!records.partition.is_empty());
    for p in &records.partition {
        assert!((0.0..=1.0).contains(&p.fraction));
        for &k in state.assoc.tn_users[p.cell]
            .iter()
            .filter(|&&k| state.users[k].is_uav())
        {
            let rate = records.users[k].ul_rate_bps;
            if p.saturated {
                assert!(rate <= target * (1.0 + 1e-12), "user {k}");
            } else {
                assert!(rel_err(rate, target) < 1e-12, "user {k}: {rate}");
            }
        }
    }
}
