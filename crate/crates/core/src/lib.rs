//! Fibonacci and Lucas numbers by golden-ratio powers and fast doubling.
//!
//! The crate has three layers:
//!
//! - [`numeric`]: exact naturals, overflow-checked fixed-width integers and
//!   explicit-precision binary floats.
//! - [`sequences`] and [`fastfib`]: linear reference iterations and the
//!   O(lg n) algorithms, all instrumented with [`OpCount`].
//! - [`capacity`], [`bench`] and [`verify`]: storage-size estimates,
//!   empirical overflow probes, timing records and the differential suite.
//!
//! ```
//! use fibgold::{fastfib, numeric::PrecisionPolicy, OpCount};
//!
//! let mut ops = OpCount::new();
//! let f = fastfib::fib_golden(92, PrecisionPolicy::default(), &mut ops).unwrap();
//! assert_eq!(f.to_string(), "7540113804746346429");
//! assert_eq!(f, fastfib::fib_alternate(92, &mut OpCount::new()));
//! ```

pub mod algorithm;
pub mod bench;
pub mod capacity;
pub mod error;
pub mod fastfib;
pub mod numeric;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};
pub use fastfib::OpCount;
pub use numeric::{BigReal, CheckedI32, CheckedI64, Nat, PrecisionPolicy};
