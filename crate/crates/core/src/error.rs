use std::fmt;

use crate::derived::DefinedError;
use crate::geometry::GeometryError;
use crate::gnum::{ArithError, SyntaxError};
use crate::measure::MeasureError;
use crate::numeral_system::SystemError;
use crate::sets::SetError;

/// Any error raised by the crate, tagged by the module it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    Syntax(SyntaxError),
    Arith(ArithError),
    Set(SetError),
    Measure(MeasureError),
    System(SystemError),
    Defined(DefinedError),
    Geometry(GeometryError),
    /// A value of the wrong kind for its position, e.g. a non-integer power.
    Domain(String),
}

impl Error {
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Syntax(_))
    }

    /// The bare error name, e.g. `NotExpressible` for `NotExpressible(3)`.
    pub fn name(&self) -> String {
        let text = self.to_string();
        let end = text
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(text.len());
        text[..end].to_string()
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax(e) => e.fmt(f),
            Error::Arith(e) => e.fmt(f),
            Error::Set(e) => e.fmt(f),
            Error::Measure(e) => e.fmt(f),
            Error::System(e) => e.fmt(f),
            Error::Defined(e) => e.fmt(f),
            Error::Geometry(e) => e.fmt(f),
            Error::Domain(why) => write!(f, "DomainError({why})"),
        }
    }
}

impl std::error::Error for Error {}

macro_rules! from_error {
    ($($source:ty => $variant:ident),*) => {$(
        impl From<$source> for Error {
            fn from(e: $source) -> Self {
                Error::$variant(e)
            }
        }
    )*};
}

from_error!(
    SyntaxError => Syntax,
    ArithError => Arith,
    SetError => Set,
    MeasureError => Measure,
    SystemError => System,
    DefinedError => Defined,
    GeometryError => Geometry
);
