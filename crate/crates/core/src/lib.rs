//! Exact chromatic and orbital chromatic polynomials of small graphs.
//!
//! The crate computes chromatic polynomials by deletion–contraction, averages
//! quotient-graph chromatic polynomials over a group of automorphisms to get
//! the orbital chromatic polynomial, isolates real roots exactly with Sturm
//! sequences, and builds graphs whose orbital chromatic roots exceed every
//! chromatic root.
//!
//! ```
//! use orbchrom::{graph::Graph, poly::chromatic, roots::max_real_root};
//!
//! let c6 = Graph::cycle(6).unwrap();
//! let p = chromatic(&c6);
//! assert_eq!(p.to_string(), "x^6 - 6x^5 + 15x^4 - 20x^3 + 15x^2 - 5x");
//! assert_eq!(max_real_root(&p).unwrap().unwrap().as_rational().unwrap().to_string(), "1");
//! ```

pub mod automorphism;
pub mod enumerate;
pub mod error;
pub mod forge;
pub mod graph;
pub mod json;
pub mod outerplanar;
pub mod perm;
pub mod planarity;
pub mod poly;
pub mod roots;

pub use error::{Error, Result};

/// Exact rationals used for evaluation points and root bounds.
pub type Rational = num_rational::BigRational;
