use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relation is cyclic: `{0}` and `{1}` lie above each other")]
    CycleDetected(String, String),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate cover ({0}, {1})")]
    DuplicateCover(String, String),
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("empty carrier")]
    Empty,
    #[error("not a lattice: ({x}, {y}) has no {missing}")]
    NotALattice {
        x: String,
        y: String,
        missing: &'static str,
    },
    #[error("sublattice search exceeded its budget of {0} nodes")]
    SearchBudgetExceeded(u64),
    #[error("horizontal sum of no blocks")]
    EmptyBlockList,
    #[error("block {0} has equal bottom and top")]
    DegenerateBlock(usize),
    #[error("negation table has {got} entries, carrier has {want}")]
    NegationLength { got: usize, want: usize },

    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("bad parameters for {name}: {reason}")]
    BadParams { name: String, reason: String },

    #[error("lattice is not implicative: {0} has no relative pseudocomplement")]
    NotImplicative(String),
    #[error("value {0} is outside [0, 1]")]
    OutOfRange(String),
    #[error("the product t-norm has no finite carrier closed under its residuum")]
    ProductNotClosed,
    #[error("closure exceeded {0} elements")]
    ClosureBudgetExceeded(usize),

    #[error("structure is not orthomodular: {0}")]
    NotOrthomodular(String),
    #[error("GF(2) dimension {0} is outside 1..=4")]
    DimensionTooLarge(usize),
    #[error("involution violated: {0}")]
    InvolutionViolated(String),
    #[error("invalid effect: {0}")]
    InvalidEffect(String),

    #[error("syntax error at {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("implication semantics unavailable: {0}")]
    SemanticsUnavailable(String),
    #[error("normal forms need a formula over & and | only, found {0}")]
    UnsupportedConnective(String),

    #[error("invalid rational `{0}`")]
    BadRational(String),
    #[error("invalid JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
