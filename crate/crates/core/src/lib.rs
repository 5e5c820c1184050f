//! Maximal quotient curves of the Hermitian curve: exact point counts,
//! Weierstrass semigroups at the point at infinity and one-point codes.

pub mod curves;
pub mod gf;
pub mod numsg;
pub mod rrspace;
pub mod agc;
pub mod cli;
