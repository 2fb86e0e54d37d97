use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph6::parse_graph6;
use crate::harness::presets::{HypothesisPreset, PresetId};
use crate::harness::verdict::{evaluate_with, EvalOptions, Verdict, VerdictStatus};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Jsonl,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "jsonl" | "json" => Ok(OutputFormat::Jsonl),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::InvalidParameter(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub eval: EvalOptions,
    /// Worker threads; 0 uses the rayon default.
    pub workers: usize,
    /// Lines read and evaluated together before output.
    pub batch_size: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            eval: EvalOptions::default(),
            workers: 0,
            batch_size: 1024,
        }
    }
}

/// One processed input line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SearchItem {
    Verdict {
        line: usize,
        #[serde(flatten)]
        verdict: Verdict,
    },
    Error {
        line: usize,
        message: String,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub preset: Option<PresetId>,
    pub k: Option<usize>,
    pub graphs: usize,
    pub hypotheses_met: usize,
    pub conclusion_held: usize,
    pub counterexamples: usize,
    pub undecided: usize,
    pub errors: usize,
    /// graph6 of every counterexample, in input order.
    pub counterexample_graph6: Vec<String>,
}

impl SearchSummary {
    fn record(&mut self, item: &SearchItem) {
        match item {
            SearchItem::Error { .. } => self.errors += 1,
            SearchItem::Verdict { verdict, .. } => {
                self.graphs += 1;
                if verdict.hypotheses_satisfied {
                    self.hypotheses_met += 1;
                }
                match verdict.status {
                    VerdictStatus::ConclusionHeld => self.conclusion_held += 1,
                    VerdictStatus::Counterexample => {
                        self.counterexamples += 1;
                        self.counterexample_graph6.push(verdict.graph6.clone());
                    }
                    VerdictStatus::Undecided => self.undecided += 1,
                    VerdictStatus::HypothesesFailed => {}
                }
            }
        }
    }
}

fn process(line_no: usize, text: &str, preset: HypothesisPreset, eval: &EvalOptions) -> SearchItem {
    let result = parse_graph6(text).and_then(|g| evaluate_with(&g, preset, eval));
    match result {
        Ok(verdict) => SearchItem::Verdict {
            line: line_no,
            verdict,
        },
        Err(e) => SearchItem::Error {
            line: line_no,
            message: e.to_string(),
        },
    }
}

/// Evaluates every graph6 line of `input` against `preset`, handing items
/// to `sink` in input order. Blank lines and lines starting with `#` are
/// skipped; malformed lines become [`SearchItem::Error`] and processing
/// continues. Read failures abort.
pub fn search_with<R, F>(
    input: R,
    preset: HypothesisPreset,
    opts: &SearchOptions,
    sink: F,
) -> Result<SearchSummary>
where
    R: BufRead,
    F: FnMut(&SearchItem) -> Result<()>,
{
    search_lines_with(input.lines(), preset, opts, sink)
}

/// [`search_with`] over any source of lines, e.g. generated graph6
/// strings.
pub fn search_lines_with<I, F>(
    lines: I,
    preset: HypothesisPreset,
    opts: &SearchOptions,
    mut sink: F,
) -> Result<SearchSummary>
where
    I: IntoIterator<Item = std::io::Result<String>>,
    F: FnMut(&SearchItem) -> Result<()>,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;
    let mut summary = SearchSummary {
        preset: Some(preset.id),
        k: preset.k,
        ..SearchSummary::default()
    };
    let batch_size = opts.batch_size.max(1);
    let mut lines = lines.into_iter().enumerate();
    loop {
        let mut batch: Vec<(usize, String)> = Vec::with_capacity(batch_size);
        for (i, line) in lines.by_ref() {
            let line = line.map_err(|e| Error::InvalidParameter(format!("read error: {e}")))?;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            batch.push((i + 1, t.to_string()));
            if batch.len() == batch_size {
                break;
            }
        }
        if batch.is_empty() {
            break;
        }
        let items: Vec<SearchItem> = pool.install(|| {
            batch
                .par_iter()
                .map(|(no, text)| process(*no, text, preset, &opts.eval))
                .collect()
        });
        for item in &items {
            summary.record(item);
            sink(item)?;
        }
    }
    Ok(summary)
}

/// Collects all items; convenient for tests and small inputs.
pub fn search_collect<R: BufRead>(
    input: R,
    preset: HypothesisPreset,
    opts: &SearchOptions,
) -> Result<(Vec<SearchItem>, SearchSummary)> {
    let mut items = Vec::new();
    let summary = search_with(input, preset, opts, |it| {
        items.push(it.clone());
        Ok(())
    })?;
    Ok((items, summary))
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum SummaryRecord<'a> {
    Summary(&'a SearchSummary),
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::InvalidParameter(format!("write error: {e}"))
}

/// Streams results to `out`: JSON lines (one per item, then a summary
/// object) or CSV (one row per item, then a `#`-prefixed summary line).
pub fn search<R: BufRead, W: Write>(
    input: R,
    preset: HypothesisPreset,
    opts: &SearchOptions,
    format: OutputFormat,
    out: &mut W,
) -> Result<SearchSummary> {
    search_lines(input.lines(), preset, opts, format, out)
}

/// [`search`] over any source of lines.
pub fn search_lines<I, W>(
    input: I,
    preset: HypothesisPreset,
    opts: &SearchOptions,
    format: OutputFormat,
    out: &mut W,
) -> Result<SearchSummary>
where
    I: IntoIterator<Item = std::io::Result<String>>,
    W: Write,
{
    match format {
        OutputFormat::Jsonl => {
            let summary = search_lines_with(input, preset, opts, |item| {
                serde_json::to_writer(&mut *out, item).map_err(io_err)?;
                writeln!(out).map_err(io_err)
            })?;
            serde_json::to_writer(&mut *out, &SummaryRecord::Summary(&summary)).map_err(io_err)?;
            writeln!(out).map_err(io_err)?;
            Ok(summary)
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "line",
                "graph6",
                "n",
                "preset",
                "k",
                "hypotheses_satisfied",
                "conclusion_holds",
                "status",
                "message",
            ])
            .map_err(io_err)?;
            let opt = |v: Option<String>| v.unwrap_or_default();
            let summary = search_lines_with(input, preset, opts, |item| {
                let row = match item {
                    SearchItem::Verdict { line, verdict } => [
                        line.to_string(),
                        verdict.graph6.clone(),
                        verdict.n.to_string(),
                        verdict.preset.to_string(),
                        opt(verdict.k.map(|k| k.to_string())),
                        verdict.hypotheses_satisfied.to_string(),
                        opt(verdict.conclusion_holds.map(|b| b.to_string())),
                        serde_json::to_value(verdict.status)
                            .ok()
                            .and_then(|v| v.as_str().map(str::to_string))
                            .unwrap_or_default(),
                        opt(verdict.undecided_reason.clone()),
                    ],
                    SearchItem::Error { line, message } => [
                        line.to_string(),
                        String::new(),
                        String::new(),
                        preset.id.to_string(),
                        opt(preset.k.map(|k| k.to_string())),
                        String::new(),
                        String::new(),
                        "error".to_string(),
                        message.clone(),
                    ],
                };
                w.write_record(&row).map_err(io_err)
            })?;
            w.flush().map_err(io_err)?;
            drop(w);
            writeln!(
                out,
                "# summary: graphs={} hypotheses_met={} conclusion_held={} counterexamples={} undecided={} errors={}",
                summary.graphs,
                summary.hypotheses_met,
                summary.conclusion_held,
                summary.counterexamples,
                summary.undecided,
                summary.errors
            )
            .map_err(io_err)?;
            Ok(summary)
        }
    }
}
