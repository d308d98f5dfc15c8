//! Structure tensors, contraction homotopies and finite-dimensional
//! representations for regularized ("simplified") quantum kinematics.

pub mod algebra;
pub mod error;
pub mod fock;
pub mod homotopy;
pub mod linalg;
pub mod orthogonal;
pub mod quantify;
pub mod report;
pub mod representations;
pub mod stime;

pub use algebra::{catalog, make_algebra, parse_algebra, structure_distance, ClassificationReport, LieAlgebra};
pub use error::{Error, Result};
pub use homotopy::{boson_path, path_report, segal_path, stime_path, HomotopyPath, PathReport};
pub use linalg::{CMatrix, CVector};
pub use orthogonal::{OrthogonalFrame, Signature};
pub use quantify::{quantify, simplified_boson, QuantifiedSystem, Statistics};
pub use representations::{QuantumConstants, RepKind, Representation};
pub use stime::{lie15, stime_operators, StimeOperators};
