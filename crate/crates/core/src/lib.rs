//! Young diagram order theory: the containment order on diagrams, closure
//! operators on upward-closed sets, embeddings into products of naturals
//! and into ordinals below `w^w`, translations between ascending chains
//! and bad sequences, and the dictionary sending closed diagram sets to
//! two-sided ideals of rational symmetric group algebras.

pub mod algebra;
pub mod characters;
pub mod closure;
pub mod correspondence;
pub mod diagram;
pub mod ideal;
pub mod ordinal;
pub mod perm;
pub mod verify;
pub mod wpo;

pub use algebra::{central_idempotent, AlgebraElement, AlgebraError, Rational};
pub use characters::{character, character_table, class_size, dimension, CharacterTable};
pub use closure::{
    bar_set, closedness_witness_search, closure, hat_set, member_closure, norm, ClosureError,
    DiagramSet, UpSet,
};
pub use correspondence::{
    branching_check, diagram_set_of_ideal, ideal_of_diagram_set, n_closed_from_top,
    truncate_closure, truncation_consistency, CorrespondenceError, NClosedSet,
};
pub use diagram::{enumerate_diagrams, Diagram, DiagramError, DownSet2, SizeRange};
pub use ideal::{element_to_vector, ideal_generated, vector_to_element, IdealBasis};
pub use ordinal::{descending_to_bad, OrdinalCnf, OrdinalError};
pub use perm::{all_permutations, PermError, Permutation};
pub use verify::{
    run_suite, suite_names, CheckReport, CheckStatus, SuiteReport, VerifyError, VerifyParams,
    DEFAULT_SEED,
};
pub use wpo::{
    antichain_check, bad_sequence_from_chain, chain_from_bad_sequence, embed_in_product,
    find_good_pair, max_bad_length, ChainMode, NkVector, WpoError,
};
