//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CoverError>;

#[derive(Debug, Clone, Error)]
pub enum CoverError {
    /// A Cayley table or element set violates the group axioms.
    #[error("not a group: {0}")]
    NotAGroup(String),

    /// A construction would produce a group larger than the configured cap.
    #[error("order cap exceeded: needed {needed}, cap {cap}")]
    OrderCapExceeded { needed: usize, cap: usize },

    /// A backtracking search ran out of its candidate budget.
    #[error("search budget exceeded")]
    SearchBudgetExceeded,

    /// Quotient requested by a non-normal subgroup.
    #[error("subgroup is not normal")]
    NotNormal,

    /// Maps that should share a group object do not.
    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    /// A square's maps fail to commute; carries the first violating element.
    #[error("square does not commute at element {0}")]
    NonCommuting(usize),

    /// Operation requires a fundamental cover.
    #[error("cover is not fundamental")]
    NotFundamental,

    /// No verified indecomposable decomposition was found; signals a bug,
    /// not a mathematical outcome.
    #[error("indecomposable decomposition failed: {0}")]
    DecompositionFailed(String),

    /// Kernel of the map is not abelian.
    #[error("kernel is not abelian")]
    NotAbelianKernel,

    /// Kernel is abelian but not elementary abelian.
    #[error("kernel is not elementary abelian")]
    NotElementaryAbelian,

    /// The module is not simple, so its commutant need not be a field.
    #[error("module is not simple")]
    NotSimple,

    /// Cocycle or module arguments live over different modules.
    #[error("module mismatch: {0}")]
    ModuleMismatch(String),

    /// Invariants compared over different base groups.
    #[error("base group mismatch")]
    BaseMismatch,

    /// The smallest-embedding-cover loop hit its iteration cap.
    #[error("iteration cap exceeded after {0} steps")]
    IterationCapExceeded(usize),

    /// Violation of the direct-product condition of the I-cover builder.
    #[error("condition (a) violated: factor {0} splits off its kernel as a direct product")]
    ConditionAViolated(usize),

    /// Violation of the linear-independence condition of the I-cover builder.
    #[error("condition (b) violated: classes over a trivial simple module are linearly dependent")]
    ConditionBViolated,

    /// An epimorphism that must be indecomposable is not.
    #[error("epimorphism is not indecomposable")]
    NotIndecomposable,

    /// Invariant violated by an internal construction; always a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
