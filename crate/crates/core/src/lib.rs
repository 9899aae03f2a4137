//! Exact arithmetic for Weierstrass semigroups, pure gaps, and
//! algebraic-geometry code parameters on two towers of maximal curves.
//!
//! The library is organized bottom-up:
//!
//! * [`numsg`]: numerical semigroups given by generators: membership,
//!   gaps, genus, conductor, Frobenius number, Apéry sets.
//! * [`curves`]: the curve families themselves: parameter validation,
//!   genus, rational point counts, semigroup generators at the common
//!   pole, and the divisors of the coordinate functions.
//! * [`onepoint`]: generators of the Weierstrass semigroup at a totally
//!   ramified affine point, in the three equivalent published shapes.
//! * [`families`]: two auxiliary semigroup families with closed-form
//!   invariants and a block decomposition of their member sets, plus
//!   independent oracles used to audit every closed form.
//! * [`multipoint`]: minimal generating sets of multi-point Weierstrass
//!   semigroups and reconstruction of the semigroup inside a box.
//! * [`puregaps`]: pure gaps at collections of totally ramified places
//!   via a Kummer-extension floor criterion, with several explicit
//!   parametric families.
//! * [`agcode`]: differential code parameters built from divisors
//!   supported at those places, including pure-gap improvements.
//!
//! All arithmetic is exact: semigroup elements are `u64`, curve-level
//! invariants are `u128`, and every closed-form evaluation is checked
//! for overflow and exact divisibility.

pub mod agcode;
pub mod curves;
pub mod families;
pub mod multipoint;
pub mod numsg;
pub mod onepoint;
pub mod puregaps;
