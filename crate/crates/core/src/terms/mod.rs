//! The l-group term language and everything built on it: presentations of
//! groups, element enumeration, normal forms for the sequence families, and
//! the class checker.

mod ast;
pub mod classes;
pub mod cross;
mod enumerate;
pub mod normal_form;
mod parse;
mod presentation;

pub use ast::Term;
pub use classes::{class_check, class_check_on, verify_witness, Class, ClassVerdict, Sample, Status, Witness};
pub use cross::{cross_check, cross_check_with, CrossItem, CrossReport};
pub use enumerate::{enumerate_terms, Enumerated};
pub use normal_form::{from_normal_form, representatives, to_normal_form, Family, NormalForm, NotInFamily};
pub use parse::{parse_term, ParseError};
pub use presentation::{builtin, AnyPresentation, GroupPresentation, PresentationError, TermError, BUILTIN_NAMES};
