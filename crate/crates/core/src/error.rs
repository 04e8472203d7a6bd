use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong in the algebraic constructions.
///
/// Mathematical rejections (a cycle in the family graph, two ideals sharing
/// too many variables, missing homogeneity) are ordinary values here; the
/// CLI maps them to its exit-code contract.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    Singular,
    NotSquare {
        rows: usize,
        cols: usize,
    },
    ZeroColumn {
        column: usize,
    },
    RankDeficient {
        rank: usize,
        rows: usize,
    },
    ColumnOutOfRange {
        column: usize,
        cols: usize,
    },
    DuplicateName(String),
    UnknownName(String),
    NameNotFresh(String),
    /// The column of the variable being dehomogenized has support outside
    /// the distinguished parameter row.
    NotPinnedShape {
        variable: String,
    },
    ZeroGamma {
        variable: String,
    },
    NonDisjointSupport,
    ExponentOverflow,
    SharedVariableCount {
        expected_one_of: Option<String>,
        shared: Vec<String>,
    },
    NotHomogeneous {
        ideal: String,
    },
    TooManyShared {
        first: String,
        second: String,
        shared: Vec<String>,
    },
    Cycle {
        vertices: Vec<String>,
    },
    OverlappingVariables {
        variable: String,
    },
    InvalidPeelOrder(String),
    InvalidDegreeBound,
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch {
                what,
                expected,
                found,
            } => write!(f, "{what}: expected {expected}, found {found}"),
            Error::Singular => f.write_str("matrix is singular"),
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::ZeroColumn { column } => write!(f, "column {} is zero", column + 1),
            Error::RankDeficient { rank, rows } => {
                write!(f, "matrix has rank {rank} but {rows} rows")
            }
            Error::ColumnOutOfRange { column, cols } => {
                write!(f, "column index {column} out of range for {cols} columns")
            }
            Error::DuplicateName(name) => write!(f, "duplicate name `{name}`"),
            Error::UnknownName(name) => write!(f, "unknown name `{name}`"),
            Error::NameNotFresh(name) => write!(f, "variable `{name}` is already in use"),
            Error::NotPinnedShape { variable } => write!(
                f,
                "column of `{variable}` has support outside the distinguished parameter"
            ),
            Error::ZeroGamma { variable } => {
                write!(f, "variable `{variable}` maps to the constant monomial")
            }
            Error::NonDisjointSupport => f.write_str("binomial sides share a variable"),
            Error::ExponentOverflow => f.write_str("exponent does not fit in 32 bits"),
            Error::SharedVariableCount {
                expected_one_of,
                shared,
            } => {
                write!(f, "ideals share {} variables {{", shared.len())?;
                write_list(f, shared)?;
                f.write_str("}")?;
                if let Some(x) = expected_one_of {
                    write!(f, ", expected exactly `{x}`")?;
                } else {
                    f.write_str(", expected exactly one")?;
                }
                Ok(())
            }
            Error::NotHomogeneous { ideal } => write!(f, "ideal {ideal} is not homogeneous"),
            Error::TooManyShared {
                first,
                second,
                shared,
            } => {
                write!(
                    f,
                    "{first} and {second} share {} variables {{",
                    shared.len()
                )?;
                write_list(f, shared)?;
                f.write_str("}")
            }
            Error::Cycle { vertices } => {
                f.write_str("cycle {")?;
                write_list(f, vertices)?;
                f.write_str("}")
            }
            Error::OverlappingVariables { variable } => {
                write!(f, "variable `{variable}` occurs in more than one ideal")
            }
            Error::InvalidPeelOrder(msg) => write!(f, "invalid peeling order: {msg}"),
            Error::InvalidDegreeBound => f.write_str("max degree must be at least 1"),
            Error::Parse(msg) => f.write_str(msg),
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[String]) -> fmt::Result {
    for (k, item) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        f.write_str(item)?;
    }
    Ok(())
}

impl core::error::Error for Error {}
