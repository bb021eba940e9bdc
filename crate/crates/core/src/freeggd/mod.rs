//! Truncations of the free globularly generated double category Q_B.

pub mod decide;
pub mod evidence;
pub mod interchange;
pub mod inverse;
pub mod rewrite;
pub mod signature;
pub mod term;
pub mod truncation;
pub mod universe;
pub mod words;

pub use decide::{decide_eq, decide_eq_auto, Decision, GroupCase, SemidirectModel, TermModel};
pub use evidence::{free_length_evidence, LengthEvidence};
pub use interchange::{Flattener, DEFAULT_EFFORT};
pub use rewrite::RewriteSystem;
pub use signature::{Signature, SignatureError};
pub use term::{parse_term, Boundary, Generator, SquareTerm, TermParseError};
pub use truncation::{free_truncation, CompositionWitness, FreeTruncation, Representative, TruncationLayer};
pub use universe::{build_layers, generators, Bounds, Entry, EnumerationMode, LayerCount, Universe, UniverseError};
pub use words::{compatible_sequences, enumerate_words, mu, parenthesizations, Sided, Typed, Word, WordError};
