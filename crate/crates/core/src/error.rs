use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined on empty word")]
    EmptyWord,
    #[error("invalid symbol {0:?}: words are strings over '0'..='9'")]
    InvalidSymbol(char),
    #[error("symbol {0} out of range (alphabet is 0..=9)")]
    SymbolOutOfRange(u8),
    #[error("binary input required")]
    NonBinary,
    #[error("symbol {symbol} not below alphabet size {k}")]
    SymbolNotInAlphabet { symbol: u8, k: u8 },
    #[error("word too short: need length >= {min}, got {len}")]
    TooShort { min: usize, len: usize },
    #[error("factor length {n} exceeds word length {len}")]
    LengthOutOfRange { n: usize, len: usize },
    #[error("morphism has no image for symbol {0}")]
    MissingImage(u8),
    #[error("invalid sequence spec: {0}")]
    InvalidSpec(String),
    #[error("unknown sequence {name:?}; valid names: {valid}")]
    UnknownSequence { name: String, valid: String },
    #[error("formula defined for n >= {min}")]
    FormulaDomain { min: usize },
    #[error("stabilization did not converge below prefix cap {cap}")]
    StabilizationCap { cap: usize },
    #[error("inventory may be infinite: palindromic periodicities of length {len} found (probe limit {probe})")]
    InventoryUnbounded { len: usize, probe: usize },
    #[error("unbounded: palindromic periodicities of x^ω keep growing past length {limit}")]
    Unbounded { limit: usize },
    #[error("search frontier exceeded {limit} words at length {len}")]
    FrontierLimit { limit: usize, len: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
