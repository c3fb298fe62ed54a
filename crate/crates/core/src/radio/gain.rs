use crate::error::{Error, Result};

/// Dense user-by-transmitter matrix of linear large-scale gains.
#[derive(Debug, Clone, PartialEq)]
pub struct GainMatrix {
    n_users: usize,
    n_tx: usize,
    data: Vec<f64>,
}

impl GainMatrix {
    pub fn zeros(n_users: usize, n_tx: usize) -> Self {
        Self {
            n_users,
            n_tx,
            data: vec![0.0; n_users * n_tx],
        }
    }

    pub fn from_rows(rows: Vec<Vec<f64>>, n_tx: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != n_tx) {
            return Err(Error::Config(format!("gain rows must all have {n_tx} entries")));
        }
        let n_users = rows.len();
        Ok(Self {
            n_users,
            n_tx,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n_users(&self) -> usize {
        self.n_users
    }

    pub fn n_tx(&self) -> usize {
        self.n_tx
    }

    pub fn get(&self, user: usize, tx: usize) -> f64 {
        self.data[user * self.n_tx + tx]
    }

    pub fn set(&mut self, user: usize, tx: usize, g: f64) {
        self.data[user * self.n_tx + tx] = g;
    }

    pub fn row(&self, user: usize) -> &[f64] {
        &self.data[user * self.n_tx..(user + 1) * self.n_tx]
    }

    pub fn row_mut(&mut self, user: usize) -> &mut [f64] {
        &mut self.data[user * self.n_tx..(user + 1) * self.n_tx]
    }

    /// Row-major storage, for filling rows in parallel.
    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// Index of the largest entry of a row; lowest index on ties.
    pub fn argmax(&self, user: usize) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for (i, &g) in self.row(user).iter().enumerate() {
            if best.is_none_or(|(_, b)| g > b) {
                best = Some((i, g));
            }
        }
        best.map(|(i, _)| i)
    }
}
