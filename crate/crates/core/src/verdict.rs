//! Verifier outcomes.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Accept,
    Reject,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Accept => "accept",
            Decision::Reject => "reject",
        })
    }
}

/// Diagnostic code attached to a verdict. It never influences the decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    Ok,
    MalformedCertificate,
    WrongScheme,
    NotAPermutation,
    NotAMatching,
    EdgeOutOfRange,
    CountMismatch,
    FlagConflict,
    TooFewMonochromatic,
    TutteBergeViolated,
    CounterExceeded,
    CounterShort,
    EmptySubset,
    MissingZeroLabel,
    MissingFarLabel,
    Shortcut,
    MonochromaticEdge,
    ColorOutOfRange,
    DuplicateNode,
    WrongSetSize,
    EdgeInsideSet,
    UncoveredEdge,
    CliqueIncomplete,
    ThresholdMismatch,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::Ok => "ok",
            Reason::MalformedCertificate => "malformed_certificate",
            Reason::WrongScheme => "wrong_scheme",
            Reason::NotAPermutation => "not_a_permutation",
            Reason::NotAMatching => "not_a_matching",
            Reason::EdgeOutOfRange => "edge_out_of_range",
            Reason::CountMismatch => "count_mismatch",
            Reason::FlagConflict => "flag_conflict",
            Reason::TooFewMonochromatic => "too_few_monochromatic",
            Reason::TutteBergeViolated => "tutte_berge_violated",
            Reason::CounterExceeded => "counter_exceeded",
            Reason::CounterShort => "counter_short",
            Reason::EmptySubset => "empty_subset",
            Reason::MissingZeroLabel => "missing_zero_label",
            Reason::MissingFarLabel => "missing_far_label",
            Reason::Shortcut => "shortcut",
            Reason::MonochromaticEdge => "monochromatic_edge",
            Reason::ColorOutOfRange => "color_out_of_range",
            Reason::DuplicateNode => "duplicate_node",
            Reason::WrongSetSize => "wrong_set_size",
            Reason::EdgeInsideSet => "edge_inside_set",
            Reason::UncoveredEdge => "uncovered_edge",
            Reason::CliqueIncomplete => "clique_incomplete",
            Reason::ThresholdMismatch => "threshold_mismatch",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Verdict {
    pub decision: Decision,
    pub reason: Reason,
}

impl Verdict {
    pub fn accept() -> Self {
        Verdict { decision: Decision::Accept, reason: Reason::Ok }
    }

    pub fn reject(reason: Reason) -> Self {
        Verdict { decision: Decision::Reject, reason }
    }

    pub fn is_accept(&self) -> bool {
        self.decision == Decision::Accept
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.decision, self.reason)
    }
}
