use alloc::string::String;
use core::fmt;

/// The rack and quandle axioms, numbered as usual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `x ▷ (y ▷ z) = (x ▷ y) ▷ (x ▷ z)`.
    SelfDistributivity,
    /// Every left translation `x ▷ (−)` is a bijection.
    Bijectivity,
    /// `x ▷ x = x`.
    Idempotence,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::SelfDistributivity => "self-distributivity",
            Axiom::Bijectivity => "bijectivity",
            Axiom::Idempotence => "idempotence",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    TableShape { row: usize, len: usize, expected: usize },

    #[error("entry ({row}, {col}) = {value} is out of range 0..{n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    #[error("{axiom} fails at {witness:?}")]
    AxiomViolation {
        axiom: Axiom,
        witness: (usize, usize, usize),
    },

    #[error("not a quandle: {witness} ▷ {witness} ≠ {witness}")]
    NotAQuandle { witness: usize },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("group order exceeds the cap of {cap}")]
    OrderCapExceeded { cap: usize },

    #[error("permutations of different degree ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation of 0..{degree}")]
    NotAPermutation { degree: usize },

    #[error("subgroup is not normalized: conjugating generator {generator} by the row of {inner} leaves the group")]
    NotNormalized { inner: usize, generator: usize },

    #[error("partition is not compatible with the law: {0:?}")]
    NotCongruence((usize, usize, usize, usize)),

    #[error("map is not a morphism: f({0} ▷ {1}) ≠ f({0}) ▷ f({1})")]
    NotAMorphism(usize, usize),

    #[error("operation requires a quandle")]
    RequiresQuandle,

    #[error("quandle is not nilpotent")]
    NotNilpotent,

    #[error("target of the morphism is not nilpotent")]
    TargetNotNilpotent,

    #[error("quandle is not 2-nilpotent: rows of {0} and {1} do not commute")]
    NotTwoNilpotent(usize, usize),

    #[error("orbit {orbit} is infinite")]
    InfiniteOrbit { orbit: usize },

    #[error("lattice has infinite index (free rank {free_rank})")]
    InfiniteIndex { free_rank: usize },

    #[error("size exceeds the cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("e_{index} does not belong to H_{index}")]
    MissingBasisVector { index: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid group data: {0}")]
    InvalidData(DataWitness),

    #[error("orbit representatives do not generate the quandle")]
    NotGeneratedByTransversal,

    #[error("constant term is not 1")]
    NotUnit,

    #[error("generator count {n} or degree {c} exceeds the default limits (n ≤ 4, c ≤ 6)")]
    TooLarge { n: usize, c: usize },

    #[error("generator index {gen} out of range 1..={n}")]
    GeneratorOutOfRange { gen: usize, n: usize },

    #[error("mismatched generator count or truncation degree")]
    ShapeMismatch,

    #[error("element is not a Lie element")]
    NotLie,

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("automorphism was not built from named generators and cannot be inverted")]
    NotInvertibleRepresentation,

    #[error("work budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
}

/// Why a [`crate::group_model::GroupData`] fails the coset-construction conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DataWitness {
    /// `H_i` is not closed under products and inverses.
    NotSubgroup { index: usize },
    /// An element index lies outside the group.
    ElementOutOfRange { value: usize },
    /// The number of subgroups and distinguished elements differ.
    LengthMismatch { subgroups: usize, elements: usize },
    /// `z_i ∉ H_i`, so only a rack is obtained.
    NotInSubgroup { index: usize },
    /// `h z_i t H_j ≠ z_i h t H_j`.
    NonCommuting {
        index: usize,
        h: usize,
        orbit: usize,
        t: usize,
    },
}

impl fmt::Display for DataWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DataWitness::NotSubgroup { index } => write!(f, "H_{index} is not a subgroup"),
            DataWitness::ElementOutOfRange { value } => {
                write!(f, "element {value} is not in the group")
            }
            DataWitness::LengthMismatch {
                subgroups,
                elements,
            } => write!(f, "{subgroups} subgroups but {elements} distinguished elements"),
            DataWitness::NotInSubgroup { index } => write!(f, "z_{index} is not in H_{index}"),
            DataWitness::NonCommuting { index, h, orbit, t } => write!(
                f,
                "h = {h} in H_{index} does not commute with z_{index} on the coset {t}H_{orbit}"
            ),
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
