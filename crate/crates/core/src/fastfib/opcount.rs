use serde::{Deserialize, Serialize};

/// Operation counters for the multiplication cost model.
///
/// Squares are kept apart from general multiplications. Additions include
/// subtractions, exact halvings and scaling by small constants.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OpCount {
    pub mults: u64,
    pub squares: u64,
    pub adds: u64,
    pub iters: u64,
}

impl OpCount {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn mul(&mut self) {
        self.mults += 1;
    }

    #[inline]
    pub fn square(&mut self) {
        self.squares += 1;
    }

    #[inline]
    pub fn add(&mut self, k: u64) {
        self.adds += k;
    }

    #[inline]
    pub fn iter(&mut self) {
        self.iters += 1;
    }

    /// Squares plus general multiplications.
    pub fn total_mults(&self) -> u64 {
        self.mults + self.squares
    }
}
