pub mod blocks;
pub mod category;
pub mod coend;
pub mod error;
pub mod linalg;
pub mod ribbon;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/arithmetic.md")]
    mod arithmetic {}
    #[doc = include_str!("../../../book/src/categories.md")]
    mod categories {}
    #[doc = include_str!("../../../book/src/canonical-end.md")]
    mod canonical_end {}
    #[doc = include_str!("../../../book/src/blocks.md")]
    mod blocks {}
    #[doc = include_str!("../../../book/src/gluing.md")]
    mod gluing {}
    #[doc = include_str!("../../../book/src/diagrams.md")]
    mod diagrams {}
    #[doc = include_str!("../../../book/src/mapping-classes.md")]
    mod mapping_classes {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
