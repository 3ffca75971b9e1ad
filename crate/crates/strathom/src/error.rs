use crate::graph::Violation;

/// Errors produced by the word algebra, graph model and constructions.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A word mentions a generator that is not in the relevant alphabet, or
    /// whose self-duality flag disagrees with the alphabet's.
    #[error("alphabet mismatch: generator `{0}` is not in the alphabet")]
    AlphabetMismatch(String),

    /// Two alphabets that must be disjoint share generator names.
    #[error("generator name collision: {}", .0.join(", "))]
    NameCollision(Vec<String>),

    /// A homomorphism has no image for a source generator.
    #[error("no image given for generator `{0}`")]
    MissingImage(String),

    /// The image of a self-dual generator must be fixed by the dagger.
    #[error("image of self-dual generator `{0}` is not dagger-fixed")]
    ImageNotSelfDual(String),

    /// Duplicate generator name inside one alphabet.
    #[error("duplicate generator `{0}` in alphabet")]
    DuplicateGenerator(String),

    /// Word DSL syntax error; `column` is 1-based within the input line.
    #[error("word parse error at line 1, column {column}: {message}")]
    WordParse { column: usize, message: String },

    /// A graph failed validation; every violation is listed.
    #[error("invalid graph:\n{}", .0.iter().map(|v| format!("  - {v}")).collect::<Vec<_>>().join("\n"))]
    InvalidGraph(Vec<Violation>),

    /// Graph JSON could not be deserialized.
    #[error("graph JSON error: {0}")]
    GraphJson(#[from] serde_json::Error),

    /// A loop or path mentions an edge name the graph does not have.
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    /// Consecutive edges of a path do not compose.
    #[error("path is not composable: edge `{edge}` starts at `{found}` but the path is at `{expected}`")]
    NotComposable {
        edge: String,
        expected: String,
        found: String,
    },

    /// A loop does not start and end at the base vertex.
    #[error("not a loop at base `{base}`: path runs from `{start}` to `{end}`")]
    NotALoop {
        base: String,
        start: String,
        end: String,
    },

    /// Two loops that should live at the same base vertex do not.
    #[error("base mismatch: `{0}` vs `{1}`")]
    BaseMismatch(String, String),

    /// A loop refers to edges outside the graph it is used with.
    #[error("loop does not belong to this graph")]
    ForeignLoop,

    /// A primitive factor of the loop is not covered by the presentation.
    #[error("primitive factor `{factor}` of length {len} is not in the presentation (bound {max_len}); increase max_len")]
    FactorNotInPresentation {
        factor: String,
        len: usize,
        max_len: usize,
    },

    /// A codimension-1 stratum description is inconsistent.
    #[error("stratum `{stratum}`: {message}")]
    BadStratum { stratum: String, message: String },

    /// The graph model only covers simply-connected open strata.
    #[error("open stratum `{0}` is not simply-connected; the loop-monoid model only covers simply-connected open strata")]
    NotSimplyConnected(String),

    /// Spanning-tree presentations need a connected graph.
    #[error("graph is disconnected: {} unreachable from base", .0.join(", "))]
    Disconnected(Vec<String>),

    /// A graph could not be recognised as a product of two factors.
    #[error("not a product graph: {0}")]
    NotAProduct(String),

    /// psi_0 is a pointed set, psi_k needs k >= 1.
    #[error("k must be at least 1 (the 0th invariant is a pointed set, not a monoid)")]
    SphereDimensionZero,

    /// Wedges of spheres need at least one sphere.
    #[error("r must be at least 1")]
    NoColours,
}

pub type Result<T> = std::result::Result<T, Error>;
