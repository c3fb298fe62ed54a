//! Deterministic random substreams.
//!
//! Every random quantity in a drop is drawn from a ChaCha8 stream keyed by
//! `(master_seed, drop_index)` and selected by `(purpose, index)`:
//!
//! * the 256-bit key is four SplitMix64 outputs chained from
//!   `master_seed ^ (drop_index * GOLDEN)`;
//! * the 64-bit ChaCha stream id is `purpose << 40 | index`.
//!
//! Any drop, and any user or cell within it, can therefore be regenerated in
//! isolation and the result never depends on evaluation order or worker count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// What a substream is used for. The discriminant is part of the stream id,
/// so reordering variants changes every simulation result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u64)]
pub enum Purpose {
    /// User positions, kinds and indoor attributes. Index 0.
    Placement = 1,
    /// Round-robin orderings. Index 0.
    Scheduling = 2,
    /// LoS states and shadowing towards TN sites. Index = user.
    TnChannel = 3,
    /// LoS states and shadowing towards NTN beams. Index = user.
    NtnChannel = 4,
    /// Downlink small-scale fading. Index = user.
    DlFading = 5,
    /// Uplink co-scheduling and interferer fading at a TN cell. Index = cell.
    UlTnPool = 6,
    /// Uplink co-scheduling at an NTN beam. Index = beam.
    UlNtnPool = 7,
    /// Uplink desired-link fading. Index = user.
    UlFading = 8,
    /// Outdoor-to-indoor penetration draws. Index = user.
    Penetration = 9,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(GOLDEN);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// 256-bit ChaCha key for one drop.
pub fn drop_key(master_seed: u64, drop_index: u64) -> [u8; 32] {
    let mut state = master_seed ^ drop_index.wrapping_mul(GOLDEN);
    let mut key = [0u8; 32];
    for chunk in key.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    key
}

/// Independent random stream for `(purpose, index)` inside one drop.
pub fn substream(key: &[u8; 32], purpose: Purpose, index: u64) -> ChaCha8Rng {
    debug_assert!(index < (1 << 40));
    let mut rng = ChaCha8Rng::from_seed(*key);
    rng.set_stream(((purpose as u64) << 40) | index);
    rng
}
