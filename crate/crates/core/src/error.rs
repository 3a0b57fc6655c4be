use thiserror::Error;

use crate::statistics::StatisticFamily;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("parts are not in non-increasing order: {0}")]
    NotCanonical(String),
    #[error("overlined value {0} is not a part")]
    OverlineNotAPart(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("residue {r} is not below modulus {m}")]
    ResidueOutOfRange { r: u32, m: u32 },
    #[error("family {0} is not a signed family")]
    NotSigned(StatisticFamily),
    #[error("family {0} is a signed family")]
    NotUnsigned(StatisticFamily),
    #[error("unknown statistic family {0:?}")]
    UnknownFamily(String),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("map precondition violated: {0}")]
    Precondition(String),
    #[error("{0} is outside the tabulated range 0..={1}")]
    OutOfRange(u32, u32),
}
