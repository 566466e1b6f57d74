//! Automorphism groups of right-angled Artin groups.
//!
//! Given a finite simplicial graph Γ this crate enumerates the Laurence–Servatius
//! generators of Aut(A_Γ) as executable maps, decides equality of group
//! elements through canonical normal forms, and derives certified lower bounds
//! on |Out(Aut(A_Γ))| and |Out(Out(A_Γ))| from join and star-cut structure.

pub mod automorphisms;
pub mod decomposition;
pub mod domination;
pub mod error;
pub mod families;
pub mod graph;
pub mod matrix;
pub mod pc_bounds;
pub mod report;
pub mod symmetry;
pub mod table;
pub mod union_find;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use graph::{SimplicialGraph, Vertex};
