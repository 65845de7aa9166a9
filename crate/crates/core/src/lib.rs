//! Crystal moves in the Lusztig parametrization computed from Auslander-Reiten
//! quivers, string-cone inequalities computed from wiring diagrams, and exact
//! checks that the two agree.
//!
//! Positions of a reduced word are 0-based in the API and printed 1-based.

pub mod arquiver;
pub mod cartan;
pub mod error;
pub mod lusztig;
pub mod quiver;
pub mod strings;
pub mod verify;
pub mod wiring;

pub use arquiver::{ArQuiver, HammockGrid};
pub use cartan::{DynkinDiagram, DynkinType, Letter, Root, Weight};
pub use error::{Error, Result};

pub use lusztig::{Antichain, CrystalGraph, LusztigCrystal, TypedMove};
pub use quiver::{condition_l, Quiver, ReducedWord, RingelMatrix};
pub use strings::{ConeSpec, StringCrystal};
pub use verify::{SuiteSummary, VerificationReport};
pub use wiring::{GpPath, WiringDiagram, Zones};
