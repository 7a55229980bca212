//! Exact symbolic engine for generalized minors on reduced double Bruhat
//! cells of the classical groups, computed by four independent routes:
//! the representation-theoretic bilinear form, closed-form summations,
//! the type-D path model, and Demazure-crystal monomial sums.

pub mod cluster_seed;
pub mod closed_forms;
pub mod fund_rep;
pub mod laurent;
pub mod minors;
pub mod monomial_crystal;
pub mod path_model;
pub mod root_data;
