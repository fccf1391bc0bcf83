use core::fmt;

/// Errors raised by the circulant algebra and the searches built on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Graph order below 2.
    InvalidOrder(u64),
    /// A raw jump reduced to 0 modulo `n` (it would be a loop).
    ZeroJump { raw: i64, n: u32 },
    /// Multiplier not coprime to the order.
    NotAUnit { x: u32, n: u32 },
    /// Operands live on graphs of different orders.
    OrderMismatch { left: u32, right: u32 },
    /// Theta parameters violate `m > 1`, `m^3 | n`, `0 <= t < n/m`, or no jump is a multiple of `m`.
    InvalidParams { n: u32, m: u32, t: u32 },
    /// The computed vertex map is not a permutation.
    NotBijective { n: u32, m: u32, t: u32 },
    /// An element of the fixed extra set is not a multiple of `m`.
    NotMultipleOfM { value: u32, m: u32 },
    /// Node-expansion budget of the canonical labeling search ran out.
    BudgetExceeded { budget: u64 },
    /// A generator was asked for `k = 2s - 1`, where both sets coincide.
    DegeneratePair { k: u32, s: u32 },
    /// Generator index or parameter outside its admissible range.
    InvalidIndex(&'static str),
    /// Tuple with fewer than two members or a repeated member.
    InvalidTuple(&'static str),
    /// The subset space of a scan exceeds the configured ceiling.
    Intractable { n: u32, subsets: u128, ceiling: u128 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidOrder(n) => write!(f, "graph order must be at least 2, got {n}"),
            Error::ZeroJump { raw, n } => write!(f, "jump {raw} is 0 modulo {n}"),
            Error::NotAUnit { x, n } => write!(f, "{x} is not a unit modulo {n}"),
            Error::OrderMismatch { left, right } => {
                write!(f, "order mismatch: {left} vs {right}")
            }
            Error::InvalidParams { n, m, t } => {
                write!(f, "invalid theta parameters n={n} m={m} t={t}")
            }
            Error::NotBijective { n, m, t } => {
                write!(f, "theta map n={n} m={m} t={t} is not a bijection")
            }
            Error::NotMultipleOfM { value, m } => write!(f, "{value} is not a multiple of {m}"),
            Error::BudgetExceeded { budget } => {
                write!(f, "search budget of {budget} node expansions exceeded")
            }
            Error::DegeneratePair { k, s } => {
                write!(f, "k={k}, s={s}: 2s-1 = k gives identical sets")
            }
            Error::InvalidIndex(what) => write!(f, "invalid generator input: {what}"),
            Error::InvalidTuple(what) => write!(f, "invalid tuple: {what}"),
            Error::Intractable { n, subsets, ceiling } => write!(
                f,
                "scan of order {n} needs {subsets} subsets, above the ceiling of {ceiling}"
            ),
        }
    }
}

impl core::error::Error for Error {}
