pub mod catalog;
pub mod character;
pub mod cluster;
pub mod copres;
pub mod einvariant;
pub mod error;
pub mod fp;
pub mod laurent;
pub mod linalg;
pub mod par;
pub mod quiver;
pub mod rep;
pub mod harness;
pub mod cli;
