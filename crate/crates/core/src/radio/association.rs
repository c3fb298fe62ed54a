use serde::{Deserialize, Serialize};

use super::gain::GainMatrix;
use crate::error::{Error, Result};
use crate::geometry::User;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CellId {
    Tn(usize),
    Ntn(usize),
}

/// Serving cell of every user plus the per-cell user sets.
#[derive(Debug, Clone, PartialEq)]
pub struct Association {
    pub serving: Vec<CellId>,
    pub tn_users: Vec<Vec<usize>>,
    pub ntn_users: Vec<Vec<usize>>,
}

impl Association {
    pub fn new(serving: Vec<CellId>, n_tn: usize, n_ntn: usize) -> Result<Self> {
        let mut tn_users = vec![Vec::new(); n_tn];
        let mut ntn_users = vec![Vec::new(); n_ntn];
        for (k, s) in serving.iter().enumerate() {
            match *s {
                CellId::Tn(c) if c < n_tn => tn_users[c].push(k),
                CellId::Ntn(b) if b < n_ntn => ntn_users[b].push(k),
                other => return Err(Error::Config(format!("user {k} served by unknown cell {other:?}"))),
            }
        }
        Ok(Self {
            serving,
            tn_users,
            ntn_users,
        })
    }

    pub fn users_of(&self, cell: CellId) -> &[usize] {
        match cell {
            CellId::Tn(c) => &self.tn_users[c],
            CellId::Ntn(b) => &self.ntn_users[b],
        }
    }

    pub fn tn_served(&self) -> impl Iterator<Item = usize> + '_ {
        self.serving
            .iter()
            .enumerate()
            .filter(|(_, s)| matches!(s, CellId::Tn(_)))
            .map(|(k, _)| k)
    }

    pub fn ntn_served(&self) -> impl Iterator<Item = usize> + '_ {
        self.serving
            .iter()
            .enumerate()
            .filter(|(_, s)| matches!(s, CellId::Ntn(_)))
            .map(|(k, _)| k)
    }

    /// Checks that the served sets partition the users and agree with the
    /// per-cell lists.
    pub fn check(&self) -> bool {
        let n = self.serving.len();
        let mut seen = vec![0u32; n];
        for (c, us) in self.tn_users.iter().enumerate() {
            for &k in us {
                if k >= n || self.serving[k] != CellId::Tn(c) {
                    return false;
                }
                seen[k] += 1;
            }
        }
        for (b, us) in self.ntn_users.iter().enumerate() {
            for &k in us {
                if k >= n || self.serving[k] != CellId::Ntn(b) {
                    return false;
                }
                seen[k] += 1;
            }
        }
        seen.iter().all(|&s| s == 1)
    }
}

/// Every user to the TN cell with the largest large-scale gain.
pub fn associate_standalone_tn(tn: &GainMatrix) -> Result<Association> {
    if tn.n_tx() == 0 {
        return Err(Error::EmptyCellSet);
    }
    let serving = (0..tn.n_users())
        .map(|k| CellId::Tn(tn.argmax(k).expect("non-empty row")))
        .collect();
    Association::new(serving, tn.n_tx(), 0)
}

/// Ground users to the best TN cell, UAVs to the best NTN beam.
pub fn associate_offloaded(users: &[User], tn: &GainMatrix, ntn: &GainMatrix) -> Result<Association> {
    if tn.n_tx() == 0 || ntn.n_tx() == 0 {
        return Err(Error::EmptyCellSet);
    }
    if users.len() != tn.n_users() || users.len() != ntn.n_users() {
        return Err(Error::Config("gain matrices do not match the user set".into()));
    }
    let serving = users
        .iter()
        .enumerate()
        .map(|(k, u)| {
            if u.is_uav() {
                CellId::Ntn(ntn.argmax(k).expect("non-empty row"))
            } else {
                CellId::Tn(tn.argmax(k).expect("non-empty row"))
            }
        })
        .collect();
    Association::new(serving, tn.n_tx(), ntn.n_tx())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{UserKind, Vec3};
    use proptest::prelude::*;

    fn u(kind: UserKind) -> User {
        User {
            kind,
            position: Vec3::new(0.0, 0.0, 1.5),
            indoor: false,
            floor: None,
            indoor_distance: 0.0,
            edge: false,
        }
    }

    #[test]
    fn single_cell_takes_everyone() {
        let g = GainMatrix::from_rows(vec![vec![1e-10]; 5], 1).unwrap();
        let a = associate_standalone_tn(&g).unwrap();
        assert_eq!(a.tn_users[0], vec![0, 1, 2, 3, 4]);
        assert!(a.check());
    }

    #[test]
    fn margin_and_ties() {
        let g = GainMatrix::from_rows(vec![vec![1e-12, 1e-10, 1e-12], vec![1e-11, 1e-11, 1e-13]], 3).unwrap();
        let a = associate_standalone_tn(&g).unwrap();
        assert_eq!(a.serving, vec![CellId::Tn(1), CellId::Tn(0)]);
    }

    #[test]
    fn empty_cells_rejected() {
        let g = GainMatrix::zeros(3, 0);
        assert!(matches!(associate_standalone_tn(&g), Err(Error::EmptyCellSet)));
    }

    #[test]
    fn offload_splits_by_kind() {
        let users = vec![u(UserKind::Gue), u(UserKind::Uav), u(UserKind::Gue)];
        let tn = GainMatrix::from_rows(vec![vec![1.0, 2.0], vec![5.0, 1.0], vec![3.0, 1.0]], 2).unwrap();
        let ntn = GainMatrix::from_rows(vec![vec![1.0, 0.0], vec![0.5, 0.7], vec![1.0, 1.0]], 2).unwrap();
        let a = associate_offloaded(&users, &tn, &ntn).unwrap();
        assert_eq!(a.serving, vec![CellId::Tn(1), CellId::Ntn(1), CellId::Tn(0)]);
        assert!(a.check());
        assert_eq!(a.ntn_served().collect::<Vec<_>>(), vec![1]);
        assert_eq!(a.tn_served().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn offload_without_uavs_equals_standalone() {
        let users = vec![u(UserKind::Gue); 3];
        let tn = GainMatrix::from_rows(vec![vec![1.0, 2.0], vec![5.0, 1.0], vec![3.0, 3.0]], 2).unwrap();
        let ntn = GainMatrix::from_rows(vec![vec![1.0]; 3], 1).unwrap();
        let a = associate_offloaded(&users, &tn, &ntn).unwrap();
        let b = associate_standalone_tn(&tn).unwrap();
        assert_eq!(a.serving, b.serving);
        assert_eq!(a.tn_users, b.tn_users);
    }

    proptest! {
        #[test]
        fn partition_and_scale_invariance(
            rows in prop::collection::vec(prop::collection::vec(1e-15f64..1e-5, 4), 1..30),
            scale_db in -30.0f64..30.0,
        ) {
            let g = GainMatrix::from_rows(rows.clone(), 4).unwrap();
            let a = associate_standalone_tn(&g).unwrap();
            prop_assert!(a.check());
            let s = 10f64.powf(scale_db / 10.0);
            let scaled = GainMatrix::from_rows(
                rows.iter().map(|r| r.iter().map(|x| x * s).collect()).collect(),
                4,
            ).unwrap();
            let b = associate_standalone_tn(&scaled).unwrap();
            prop_assert_eq!(a.serving, b.serving);
        }
    }
}
