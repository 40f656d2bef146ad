use thiserror::Error;

/// Errors shared by all analysis modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("player {player} out of range 1..={n}")]
    PlayerOutOfRange { player: usize, n: usize },

    #[error("player count {n} exceeds the library cap of {max}", max = crate::game::MAX_PLAYERS)]
    TooManyPlayers { n: usize },

    #[error("{0}")]
    InvalidInput(String),

    #[error("family is not an antichain: {0}")]
    NotAntichain(String),

    #[error("minimal-winning / maximal-losing families are inconsistent: {0}")]
    InconsistentFamilies(String),

    #[error("operation requires a monotone game")]
    MonotonicityRequired,

    #[error("operation requires the empty coalition losing and the grand coalition winning")]
    ProperGameRequired,

    #[error("operation requires a game without null players")]
    NullPlayersPresent,

    #[error("game is not weighted")]
    NotWeighted,

    #[error("game is roughly weighted; no potent certificate exists")]
    RoughlyWeightedInput,

    #[error("scope cap exceeded: {0}")]
    ScopeExceeded(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix entry at ({row},{col}) is not 0 or 1")]
    NonBinaryEntry { row: usize, col: usize },

    #[error("equality system is inconsistent (a row reduces to 0 = c with c != 0)")]
    InconsistentSystem,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Coarse classification used by the CLI to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or out-of-range input data.
    Input,
    /// A documented hypothesis of the requested analysis does not hold.
    Hypothesis,
    /// A hard scope cap (player count, oracle limits) was exceeded.
    Scope,
    /// A bug: an invariant that the theory guarantees failed to hold.
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            PlayerOutOfRange { .. }
            | TooManyPlayers { .. }
            | InvalidInput(_)
            | NotAntichain(_)
            | InconsistentFamilies(_)
            | NonSquare { .. }
            | NonBinaryEntry { .. }
            | InconsistentSystem => ErrorKind::Input,
            MonotonicityRequired
            | ProperGameRequired
            | NullPlayersPresent
            | NotWeighted
            | RoughlyWeightedInput => ErrorKind::Hypothesis,
            ScopeExceeded(_) => ErrorKind::Scope,
            Internal(_) => ErrorKind::Internal,
        }
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
