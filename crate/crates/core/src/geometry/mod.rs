//! Piecewise-linear curves in ℝ³ and the flat torus, exact predicates,
//! linking numbers and crossing detection along isotopies.

pub mod curve;
pub mod io;
pub mod isotopy;
pub mod linking;
pub mod perturb;
pub mod point;
pub mod predicates;

pub use curve::{homology_class, Ambient, OneChain, PLLoop};
pub use isotopy::{crossing_events, crossing_sign, CrossingEvent, Isotopy};
pub use linking::{gauss_linking_estimate, linking_number};
pub use perturb::{perturb_off_diagonal, Perturbation};
pub use point::Point;
pub use predicates::are_disjoint;
