//! Data model, text format, validators and example builders for finite
//! categories, strict 2-categories, decorated bicategories and double
//! categories.

pub mod builders;
pub mod category;
pub mod corpus;
pub mod double;
pub mod dsl;
pub mod group;
pub mod mutation;
pub mod pseudofunctor;
pub mod report;
pub mod two_category;

pub use builders::{commuting_squares, delooping, double_delooping, quintets, semidirect_double, trivial_action, POINT, POINT_ONE_CELL};
pub use category::{Arrow, FiniteCategory};
pub use double::{DoubleCategory, Frame};
pub use dsl::{parse_document, parse_presentation, render, Document, DslError, Presentation};
pub use group::{FiniteGroup, GroupError};
pub use pseudofunctor::DecoratedPseudofunctor;
pub use report::{ValidationReport, Violation};
pub use two_category::{DecoratedBicategory, Strict2Category};

impl Presentation {
    pub fn validate(&self) -> ValidationReport {
        match self {
            Presentation::Category(c) => c.validate(),
            Presentation::TwoCategory(c) => c.validate(),
            Presentation::Decorated(c) => c.validate(),
            Presentation::Double(c) => c.validate(),
        }
    }
}
