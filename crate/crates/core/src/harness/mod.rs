//! Theorem presets, per-graph verdicts, exhaustive enumeration and
//! stream-based counterexample search.

mod analyze;
mod enumerate;
mod presets;
mod search;
mod verdict;

pub use analyze::{analyze, analyze_with, AnalysisReport, AnalyzeOptions, FreenessEntry};
pub use enumerate::{
    enumerate_labeled_graphs, labeled_graph_count, labeled_graph_from_mask, Prefilter,
    EXHAUSTIVE_MAX_N,
};
pub use presets::{HypothesisPreset, PresetId};
pub use search::{
    search, search_collect, search_lines, search_lines_with, search_with, OutputFormat, SearchItem,
    SearchOptions, SearchSummary,
};
pub use verdict::{
    evaluate, evaluate_with, EvalOptions, HypothesisResult, HypothesisStatus, Verdict,
    VerdictStatus, VerdictWitnesses,
};

pub use crate::generators::{
    complete, complete_multipartite, cycle_graph, path_graph, petersen, random_graph, star, wheel,
};
