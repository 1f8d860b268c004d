//! The Schur algorithm over a coefficient field.
//!
//! Both modes run the same one-variable algorithm: `X = z` over `Q(zeta)`
//! or `X = z*zeta` over `Q(z, zeta)`.

mod hankel;
mod jfrac;
mod sfrac;
mod step;
mod stream;

pub use hankel::{
    det_elimination, hankel_d, hankel_dplus, regularity_report, HankelEntry, RegularityKind,
    RegularityReport,
};
pub use jfrac::{jfraction, jfraction_seq, jfraction_trace, JAtom, JAtoms, SchurTrace};
pub use sfrac::{sfraction, sfraction_seq, SAtom, SAtoms};
pub use step::{hessenberg_minors, recursive_sequence_step};
pub use stream::{stream_atoms, SchurStream};
