//! Structure of finite double categories: the H* restriction, the
//! globularly generated part γ, the vertical length filtration, groupoid
//! checks and double functors.

pub mod functor;
pub mod index;
pub mod structure;

pub use functor::{enumerate_double_functors, DoubleFunctor, FunctorError};
pub use index::SquareIndex;
pub use structure::{
    gamma, gamma_minimality, generator_squares, h_star, horizontal_inverse, is_double_groupoid, is_globularly_generated, length, restrict,
    vertical_filtration, vertical_inverse, Filtration, FiltrationLayer, GroupoidCheck, Minimality, Stabilization, MINIMALITY_THRESHOLD,
};
