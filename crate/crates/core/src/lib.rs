//! Exact characters of symmetric groups and straightening in skew Specht
//! modules.
//!
//! Two independent engines compute the same numbers: [`mn_char`] removes
//! border strips, while [`skew_char_trace`] builds the matrix of a
//! permutation in the standard polytabloid basis and takes its trace.
//! Permutations act on the right throughout.
//!
//! ```
//! use specht_core::{mn_char, Partition};
//!
//! let la: Partition = "4,4,4".parse().unwrap();
//! let rho: Partition = "5,5,2".parse().unwrap();
//! assert_eq!(mn_char(&la, &rho).unwrap(), 2.into());
//! ```

pub mod characters;
pub mod error;
pub mod partition;
pub mod perm;
pub mod shape;
pub mod specht;
pub mod tableau;
pub mod verify;

#[doc(hidden)]
pub mod fault;

pub use characters::{
    char_table, char_table_with, inner_product, mn_char, pieri_multiplicity, restriction_check, skew_char,
    skew_char_ncycle, skew_char_trace, young_multiplicity, CharacterTable, ClassFunction, Method, MnEvaluator,
};
pub use error::{Error, Result};
pub use partition::{partitions_of, Composition, Partition};
pub use perm::Permutation;
pub use shape::{border_strips, normalized_skew_shapes, Cell, SkewShape};
pub use specht::{
    dimension, expand, garnir_relation, polytabloid, representing_matrix, straighten, RepresentingMatrix, SpechtVector,
    Straightener, Tabloid, TabloidVector,
};
pub use tableau::{canonical_strip_tableau, standard_tableaux, SignedTableau, SkewTableau};
pub use verify::{run_suite, SuiteReport};
