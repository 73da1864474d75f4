//! Exact rational and polynomial algebra.

pub mod binary;
pub mod matrix;
pub mod poly;
pub mod polymatrix;
pub mod quadric;
pub mod rational;

pub use binary::{
    binary_roots, discriminant_binary, gcd_binary, resultant_binary, squarefree_structure,
    BinaryRoots,
};
pub use matrix::Matrix;
pub use poly::{var_names, MPoly, Monomial, Vars};
pub use polymatrix::PolyMatrix;
pub use quadric::{gram_matrix, gram_rank, QuadricClass, QuadricLabel};
pub use rational::{format_rational, parse_rational, rat, ratio, rats, Rational};
