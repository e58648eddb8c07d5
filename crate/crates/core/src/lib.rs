pub mod arithmetic;
pub mod cfk;
pub mod cone;
pub mod contact;
pub mod fixtures;
pub mod gf2;
pub mod hkm;
pub mod invariants;
