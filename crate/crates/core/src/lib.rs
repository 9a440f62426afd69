//! Rademacher symbols on `SL2(Z)` and on the Fricke extensions `Gamma0+(p)`.
//!
//! The crate evaluates the symbols exactly through Dedekind sums, recomputes
//! them from Farey edge paths via trace and signature of tridiagonal matrices,
//! and checks the eta and `eta_p` transformation laws numerically at
//! arbitrary precision.
//!
//! ```
//! use rademacher::{rademacher_phi, UnimodularMatrix};
//!
//! let g: UnimodularMatrix = "3,1,8,3".parse().unwrap();
//! assert_eq!(rademacher_phi(&g), 0.into());
//! ```

pub mod cli;
pub mod dedekind;
pub mod error;
pub mod eta;
pub mod fricke;
pub mod fricke_symbol;
pub mod hp;
pub mod matrix;
pub mod paths;
pub mod render;
pub mod tridiag;

pub use dedekind::{dedekind_sum, rademacher_phi, DedekindConfig};
pub use error::{Error, Result};
pub use eta::{EtaEngine, EtaOptions, VerificationReport};
pub use fricke::{FrickeBody, FrickeElement};
pub use fricke_symbol::{conjugate_by_p, k_of_p, phi_p, phi_p_geometric};
pub use hp::{HPComplex, Hp};
pub use matrix::{psl_eq, Sign, UnimodularMatrix};
pub use paths::{decompose, endpoints, reconstruct, turns_from_endpoints, EdgeWord, Farey};
pub use render::{render_svg, RenderOptions};
pub use tridiag::{km_phi, signature, trace, Inertia, TridiagonalSpec};
