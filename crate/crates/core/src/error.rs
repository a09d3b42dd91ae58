use thiserror::Error;

/// Errors surfaced by the public API.
#[derive(Debug, Error)]
pub enum Error {
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("letter does not belong to the algebra's domain: {0}")]
    ForeignLetter(String),
    #[error("algebra is already anchor-extended")]
    DoubleAnchor,
    #[error("propositional algebra supports at most 16 atoms, got {0}")]
    TooManyAtoms(usize),
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("cycle part of an ultimately periodic word must be nonempty")]
    EmptyCycle,
    #[error("not in the positive fragment: {0}")]
    PositiveFragment(String),
    #[error("automaton is not nondeterministic: {0}")]
    NotNondeterministic(String),
    #[error("embedded symbol predicates must be satisfiable and pairwise disjoint")]
    BadEmbedding,
    #[error("state cap of {0} exceeded during automaton construction")]
    StateCap(usize),
    #[error("finite word longer than the brute-force cap of {cap}: {len}")]
    WordTooLong { len: usize, cap: usize },
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
