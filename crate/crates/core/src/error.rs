use thiserror::Error;

/// Errors raised by the forcing operations.
///
/// Every variant has a stable snake-case [`code`](ForcingError::code) so the
/// command-line front end can report it machine-readably.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForcingError {
    #[error("digit {0} is not in {{0,1,2}}")]
    InvalidDigit(u8),
    #[error("bit {0} is not in {{0,1}}")]
    InvalidBit(u8),
    #[error("unknown level rule code {0:?}")]
    InvalidRule(String),
    #[error("periodic tail must be nonempty")]
    EmptyTail,
    #[error("schedule tail contains no splitting level")]
    NoSplittingTail,
    #[error("node {node} is not in the condition")]
    NotAMember { node: String },
    #[error("enumeration depth {depth} exceeds the oracle limit {limit}")]
    DepthLimit { depth: usize, limit: usize },
    #[error("real contains only finitely many 2s")]
    NotInH,
    #[error("condition is lenient: Fixed(2) at level {level}")]
    NotStrict { level: usize },
    #[error("donor is not below the restriction of the condition to any node of length {length}")]
    GraftPrecondition { length: usize },
    #[error("dense oracle returned a condition that is not below its input")]
    OracleNotBelow,
    #[error("stem-preserving oracle returned stem {got}, expected {expected}")]
    OracleWrongStem { expected: String, got: String },
    #[error("sequence is not strictly increasing at index {0}")]
    NotIncreasing(usize),
    #[error("word contains no digit 2")]
    NoTwo,
    #[error("word does not end with the digit 2")]
    NotEndingInTwo,
    #[error("binary word of length {0} is too long to enumerate")]
    WordTooLong(usize),
    #[error("value {0} overflows the enumeration")]
    Overflow(u64),
    #[error("no node of the condition realizes the requested code word")]
    Unrealizable,
    #[error("forced digit 2 at level {level} breaks the parity construction")]
    ForcedTwo { level: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

impl ForcingError {
    pub fn code(&self) -> &'static str {
        match self {
            ForcingError::InvalidDigit(_) => "invalid_digit",
            ForcingError::InvalidBit(_) => "invalid_bit",
            ForcingError::InvalidRule(_) => "invalid_rule",
            ForcingError::EmptyTail => "empty_tail",
            ForcingError::NoSplittingTail => "no_splitting_tail",
            ForcingError::NotAMember { .. } => "not_a_member",
            ForcingError::DepthLimit { .. } => "depth_limit",
            ForcingError::NotInH => "not_in_h",
            ForcingError::NotStrict { .. } => "not_strict",
            ForcingError::GraftPrecondition { .. } => "graft_precondition",
            ForcingError::OracleNotBelow => "oracle_not_below",
            ForcingError::OracleWrongStem { .. } => "oracle_wrong_stem",
            ForcingError::NotIncreasing(_) => "not_increasing",
            ForcingError::NoTwo => "no_two",
            ForcingError::NotEndingInTwo => "not_ending_in_two",
            ForcingError::WordTooLong(_) => "word_too_long",
            ForcingError::Overflow(_) => "overflow",
            ForcingError::Unrealizable => "unrealizable",
            ForcingError::ForcedTwo { .. } => "forced_two",
            ForcingError::Parse(_) => "parse",
        }
    }
}

pub type Result<T, E = ForcingError> = std::result::Result<T, E>;
