//! Bookkeeping for the runtime checks the solvers perform at every step.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::InvariantViolation;

/// The executable form of each proof step the solvers rely on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Each block meets previously colored edges at one vertex at most.
    SingleEntry,
    /// Lists at the entry vertex keep at least `d_block(v)` colors.
    CutListSize,
    /// Galvin orientation out-degrees stay below the list demand.
    OrientationBound,
    /// Kernels returned during the list-coloring loop are kernels.
    Kernel,
    /// Lists meet the demand function at the current recursion level.
    Demand,
    /// On four vertices a reducing step lowers `χ'` by exactly one.
    ChiDrop,
    /// Removing two non-adjacent edges lowers both apex degrees by one.
    ApexDegreeDrop,
    /// A great center excludes other big centers, and vice versa.
    GreatExcludesBig,
    /// With centers sorted by `t`, only the first can be great.
    OnlyFirstGreat,
    /// Big and great survive reducing steps; great afterwards implies big before.
    BigGreatMonotone,
    /// A reducing color chosen without touching `E(v_1)` is absent from `A(v_1)`.
    ReducingChoice,
    /// A reducing color meeting both `A(v_1)` and `A(v_2)` is a- or b-splitting.
    SplittingClassified,
    /// Double-step edges are distinct and each pair is non-adjacent.
    DoubleStep,
    /// All weak inequalities hold in the weak phase.
    WeakInequalities,
    /// Every reducing color in `A(v_1) ∩ A(v_2)` stays a-splitting in the weak phase.
    WeakSplitting,
    /// The transversal base case satisfies Hall's condition.
    Hall,
    /// Every block coloring is proper and list-respecting.
    BlockColoring,
}

impl Check {
    pub const ALL: [Check; 17] = [
        Check::SingleEntry,
        Check::CutListSize,
        Check::OrientationBound,
        Check::Kernel,
        Check::Demand,
        Check::ChiDrop,
        Check::ApexDegreeDrop,
        Check::GreatExcludesBig,
        Check::OnlyFirstGreat,
        Check::BigGreatMonotone,
        Check::ReducingChoice,
        Check::SplittingClassified,
        Check::DoubleStep,
        Check::WeakInequalities,
        Check::WeakSplitting,
        Check::Hall,
        Check::BlockColoring,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::SingleEntry => "single-entry",
            Check::CutListSize => "cut-list-size",
            Check::OrientationBound => "orientation-bound",
            Check::Kernel => "kernel",
            Check::Demand => "demand",
            Check::ChiDrop => "chi-drop",
            Check::ApexDegreeDrop => "apex-degree-drop",
            Check::GreatExcludesBig => "great-excludes-big",
            Check::OnlyFirstGreat => "only-first-great",
            Check::BigGreatMonotone => "big-great-monotone",
            Check::ReducingChoice => "reducing-choice",
            Check::SplittingClassified => "splitting-classified",
            Check::DoubleStep => "double-step",
            Check::WeakInequalities => "weak-inequalities",
            Check::WeakSplitting => "weak-splitting",
            Check::Hall => "hall",
            Check::BlockColoring => "block-coloring",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which reduction rule fired at a recursion level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    KernelColor,
    FourVertexReduce,
    ApexPreferV1,
    ApexAny,
    CenterApexEdge,
    CenterPreferV1,
    CenterAny,
    CenterV1V2,
    CenterDouble,
    WeakV1Far,
    WeakV2Only,
    WeakAny,
    Transversal,
}

/// Pass and failure counts per check plus per-step counters.
///
/// A failing check is counted and then aborts the current solver with an
/// [`InvariantViolation`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Audit {
    passed: BTreeMap<Check, u64>,
    failed: BTreeMap<Check, u64>,
    steps: BTreeMap<Step, u64>,
    levels: u64,
}

impl Audit {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check<F>(&mut self, check: Check, ok: bool, detail: F) -> Result<(), InvariantViolation>
    where
        F: FnOnce() -> String,
    {
        if ok {
            *self.passed.entry(check).or_default() += 1;
            Ok(())
        } else {
            *self.failed.entry(check).or_default() += 1;
            Err(InvariantViolation {
                check,
                detail: detail(),
            })
        }
    }

    pub fn step(&mut self, step: Step) {
        *self.steps.entry(step).or_default() += 1;
        self.levels += 1;
    }

    pub fn passed(&self, check: Check) -> u64 {
        self.passed.get(&check).copied().unwrap_or(0)
    }

    pub fn failed(&self, check: Check) -> u64 {
        self.failed.get(&check).copied().unwrap_or(0)
    }

    pub fn steps(&self, step: Step) -> u64 {
        self.steps.get(&step).copied().unwrap_or(0)
    }

    /// Recursion levels (reduction or kernel steps) taken so far.
    pub fn levels(&self) -> u64 {
        self.levels
    }

    pub fn absorb(&mut self, other: &Audit) {
        for (&k, &v) in &other.passed {
            *self.passed.entry(k).or_default() += v;
        }
        for (&k, &v) in &other.failed {
            *self.failed.entry(k).or_default() += v;
        }
        for (&k, &v) in &other.steps {
            *self.steps.entry(k).or_default() += v;
        }
        self.levels += other.levels;
    }
}
