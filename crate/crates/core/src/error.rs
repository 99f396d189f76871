use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no representation V({lam}, {mu}): need lam >= 0 and lam = mu mod 2")]
    InvalidPair { lam: i64, mu: i64 },

    #[error("({m}, {l}) is not an orbit label: need l - 2m <= 0")]
    InvalidOrbitLabel { m: i64, l: i64 },

    #[error("({n1}, {n2}) is not dominant: need n1 >= n2")]
    NotDominant { n1: i64, n2: i64 },

    #[error("level must be positive, got {0}")]
    InvalidLevel(i64),

    #[error("twist by {0} is not allowed: the twist must be even")]
    OddTwist(i64),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("no conductor-{k} character is available over F_{q}: {reason}")]
    NoConductorCharacter { q: u64, k: u32, reason: String },

    #[error("enumeration of {q}^{k} units is too large")]
    EnumerationTooLarge { q: u64, k: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
