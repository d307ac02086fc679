//! Lattice hydrodynamics on the overlapping side-2h cubical chain complex of
//! a triply periodic lattice.
//!
//! The chain spaces `L_0..L_3` hold real coefficients on the vertices and on
//! the edges, faces and cubes of side `2h` centered at lattice sites. On them
//! act the boundary `∂`, the coboundary `δ = ∂ᵀ`, the duality `★` and the
//! Laplacian `Δ = ∂δ + δ∂`. A velocity field lives on the sites and is
//! identified with a 1-chain; its evolution is the momentum ODE
//!
//! ```text
//! d{V}/dt = {★δ(V_F·v_F)} + δP − νΔ{V},   ∂{V} = 0
//! ```
//!
//! with the pressure `P` solving `−ΔP = ∂{★δ(V_F·v_F)}`.

pub mod assembly;
pub mod chain;
pub mod config;
pub mod driver;
pub mod dynamics;
pub mod error;
pub mod fields;
pub mod hodge;
pub mod init;
pub mod lattice;
pub mod operators;
pub mod par;
pub mod snapshot;
pub mod verify;

pub use chain::Chain;
pub use dynamics::{Model, Scheme, SimState};
pub use error::{Error, Result};
pub use fields::VectorField;
pub use hodge::{harmonic_project, hodge_decompose, solve_poisson_deg0, HodgeParts, SolverOptions};
pub use lattice::{Axis, CellId, LatticeConfig, Orientation, ParityClass, SiteIndex};
pub use operators::{boundary, coboundary, laplacian, star};
