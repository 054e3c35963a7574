//! Exact-arithmetic laboratory for the Fishburn numbers xi(n) and their
//! congruences.
//!
//! The crate computes the generating functions involved (partial sums of
//! (q;q)_n, the xi and a coefficient tables), dissects polynomials by exponent
//! residue class, carries out exact arithmetic in Q(zeta_p), and mechanically
//! verifies the congruence theorem, the dissection divisibility lemma, the
//! mod-23 classification of primes, and the open conjectures, producing
//! structured verification reports.

pub mod ascent;
pub mod cache;
pub mod congruence;
pub mod cyclo_verify;
pub mod cyclotomic;
pub mod gen;
pub mod report;
pub mod residues;
pub mod ring;
pub mod series;
pub mod stirling;

pub use gen::{a_table, a_table_mod, partial_sum_f, xi_table, xi_table_mod, CoefficientTable};
pub use report::{Status, VerificationReport};
pub use ring::{CoefficientRing, IntegerRing, ModularRing, RationalRing};
pub use series::{pochhammer, DissectionTable, Mode, PochhammerKind, Series, SeriesError};
