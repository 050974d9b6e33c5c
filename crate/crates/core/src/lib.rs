//! Exact computations for singular polynomial foliations: singular loci,
//! Grothendieck and Baum–Bott residues along transverse slices, dimension
//! checks for foliations and Poisson structures, and a combinatorial
//! dual-cell intersection calculus on simplicial complexes.

pub mod foliation;
pub mod harness;
pub mod ideal;
pub mod poly;
pub mod residue;
pub mod topology;
mod util;

pub use util::combinations;
