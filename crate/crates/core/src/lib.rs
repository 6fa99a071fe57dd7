//! Exact computations on the 3-coloring reconfiguration graph `C3(T)` of a tree `T`.
//!
//! The vertices of `C3(T)` are the proper 3-colorings of `T`; two colorings are
//! adjacent when they differ at a single vertex. Distances in `C3(T)` are
//! computed two ways:
//!
//! * [`coloring`]: breadth-first search over `C3(T)` itself (the oracle);
//! * [`labeling`]: lifting the color difference to an integer labeling and
//!   minimizing its L1 norm over shifts by multiples of three.
//!
//! [`walk`] turns a labeling into an explicit geodesic, [`extremal`] computes
//! the diameter as a maximum over balanced labelings and classifies the
//! extremal trees, and [`survey`] produces the per-tree reports used by the
//! command-line tool.

pub mod coloring;
pub mod error;
pub mod extremal;
pub mod labeling;
pub mod survey;
pub mod tree;
pub mod walk;

mod serde_str;

pub use coloring::{Coloring, ColoringGraph};
pub use error::{Error, Result};
pub use extremal::{DiameterResult, ExtremalClassification, Method};
pub use labeling::{HalfInt, Labeling, PhiProfile};
pub use survey::SurveyRecord;
pub use tree::{CanonicalCode, LeafProfile, Tree};
pub use walk::{Dir, Step, Walk, WalkReport};
