//! Exact enumeration of monotone lattice paths dominated by the cyclic
//! shifts of a piecewise-linear boundary.
//!
//! A weak `m`-part composition of `n` defines a boundary whose x-value at
//! integer height `y` is the prefix sum of its first `y` parts. A path from
//! `(0,0)` built from unit right and up steps is *dominated* when every
//! visited point lies weakly right of the boundary at its height. Pairing
//! each path with one of the `m` cyclic shifts of the composition yields
//! path-boundary pairs, split into good (dominated) and bad ones.
//!
//! The crate provides:
//!
//! - exact brute-force oracles (dynamic programming and explicit
//!   enumeration) for dominated-path counts, corner statistics, and
//!   bad-pair buckets ([`oracle`]);
//! - closed forms for those counts: the good/bad/all split, ballot and
//!   Catalan-style specializations, corner refinements, alternating
//!   periodic boundaries, and staircase families ([`formulas`]);
//! - the two constructive bijections behind the closed forms: a reflection
//!   map on bad pairs and a cycle-lemma map onto right-edge pairs, both
//!   with exact inverses ([`bijection`]);
//! - verification sweeps that replay every closed form against the oracle
//!   and round-trip both bijections ([`verify`]).
//!
//! All counts are exact big integers; nothing is floating point.
//!
//! ```
//! use lpbp::{Composition, LatticePoint};
//!
//! let a = Composition::new(vec![1, 2, 3]).unwrap();
//! let t = LatticePoint::new(6, 3);
//! let oracle = lpbp::oracle::count_lpbp(&a, t).unwrap();
//! let formula = lpbp::formulas::lpbp_counts_formula(&a, t).unwrap();
//! assert_eq!(oracle, formula);
//! assert_eq!(oracle.good.to_string(), "36");
//! ```

pub mod bijection;
pub mod composition;
pub mod count;
pub mod error;
pub mod formulas;
pub mod lattice;
pub mod oracle;
pub mod verify;

pub use composition::{all_compositions, Composition};
pub use count::{binomial, catalan, BigCount};
pub use error::{Error, Result};
pub use lattice::{parse_word, word_of, LatticePath, LatticePoint, Step};
pub use oracle::{CountReport, Lpbp};
