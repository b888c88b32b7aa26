use thiserror::Error;

/// Errors raised while reading TSPLIB instance or tour files.
#[derive(Debug, Error, PartialEq)]
pub enum TsplibError {
    #[error("line {line}: malformed header entry `{text}`")]
    MalformedHeader { line: usize, text: String },
    #[error("missing required keyword `{0}`")]
    MissingKeyword(&'static str),
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
    #[error("dimension {0} is too small, at least 3 cities are required")]
    DimensionTooSmall(usize),
    #[error("expected {expected} coordinates, found {found}")]
    CoordinateCountMismatch { expected: usize, found: usize },
    #[error("line {line}: malformed coordinate row `{text}`")]
    MalformedCoordinate { line: usize, text: String },
    #[error("node id {id} is out of range 1..={dimension}")]
    NodeOutOfRange { id: i64, dimension: usize },
    #[error("node id {0} appears more than once")]
    DuplicateNode(i64),
    #[error("tour section is not terminated by -1")]
    MissingTerminator,
    #[error("tour lists {found} nodes but DIMENSION is {expected}")]
    TourLengthMismatch { expected: usize, found: usize },
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for TsplibError {
    fn from(err: std::io::Error) -> Self {
        TsplibError::Io(err.to_string())
    }
}

/// Errors raised when constructing tours or instances from raw data.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum TourError {
    #[error("a tour needs at least 3 cities, got {0}")]
    TooFewCities(usize),
    #[error("sequence is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("tour has {tour} cities but the instance has {instance}")]
    SizeMismatch { tour: usize, instance: usize },
}

/// Invalid GA configuration.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("population size must be at least 2, got {0}")]
    PopulationTooSmall(usize),
    #[error("mutation rate {0} is outside [0, 1]")]
    MutationRate(f64),
    #[error("elitism fraction {0} is outside [0, 1]")]
    ElitismFraction(f64),
    #[error("elite count {elites} must be smaller than the population size {population}")]
    TooManyElites { elites: usize, population: usize },
    #[error("unknown crossover `{0}`")]
    UnknownCrossover(String),
}
