//! Exact arithmetic: big rationals, Gaussian rationals, dense polynomials
//! over those rings, and real-root isolation for integer polynomials.

pub mod poly;
pub mod q2;
pub mod rational;
pub mod roots;

pub use poly::{Poly, Ring};
pub use q2::Q2;
pub use rational::{qq, qq_int, GaussRational, QQ};
