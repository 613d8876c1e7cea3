use std::fmt;
use std::io::{self, Write};
use std::ops::AddAssign;

use serde::{Deserialize, Serialize};

/// Arithmetic operations, messages and words attributed to one primitive.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub flops: u64,
    pub messages: u64,
    pub words: u64,
}

impl Counters {
    /// `F + alpha * S + beta_inv * W`.
    pub fn modeled_time(&self, alpha: f64, beta_inv: f64) -> f64 {
        self.flops as f64 + alpha * self.messages as f64 + beta_inv * self.words as f64
    }
}

impl AddAssign for Counters {
    fn add_assign(&mut self, rhs: Self) {
        self.flops += rhs.flops;
        self.messages += rhs.messages;
        self.words += rhs.words;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimitiveKind {
    Spmspv,
    SortPerm,
    Reduce,
    Other,
}

impl fmt::Display for PrimitiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrimitiveKind::Spmspv => "spmspv",
            PrimitiveKind::SortPerm => "sortperm",
            PrimitiveKind::Reduce => "reduce",
            PrimitiveKind::Other => "other",
        })
    }
}

/// Totals for a run, split by primitive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommStats {
    pub spmspv: Counters,
    pub sort_perm: Counters,
    pub reduce: Counters,
    pub other: Counters,
    /// Complete breadth-first searches performed.
    pub iters: usize,
}

impl CommStats {
    pub fn get(&self, kind: PrimitiveKind) -> &Counters {
        match kind {
            PrimitiveKind::Spmspv => &self.spmspv,
            PrimitiveKind::SortPerm => &self.sort_perm,
            PrimitiveKind::Reduce => &self.reduce,
            PrimitiveKind::Other => &self.other,
        }
    }

    pub(crate) fn get_mut(&mut self, kind: PrimitiveKind) -> &mut Counters {
        match kind {
            PrimitiveKind::Spmspv => &mut self.spmspv,
            PrimitiveKind::SortPerm => &mut self.sort_perm,
            PrimitiveKind::Reduce => &mut self.reduce,
            PrimitiveKind::Other => &mut self.other,
        }
    }

    pub fn total(&self) -> Counters {
        let mut t = Counters::default();
        for c in [self.spmspv, self.sort_perm, self.reduce, self.other] {
            t += c;
        }
        t
    }

    pub fn modeled_time(&self, alpha: f64, beta_inv: f64) -> f64 {
        self.total().modeled_time(alpha, beta_inv)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("plain struct serializes");
        let t = self.total();
        v["flops"] = t.flops.into();
        v["messages"] = t.messages.into();
        v["words"] = t.words.into();
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    GridRow,
    GridColumn,
    All,
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::GridRow => "grid-row",
            Scope::GridColumn => "grid-column",
            Scope::All => "all",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Collective {
    AllGather,
    AllToAll,
    AllReduce,
    Scan,
}

/// One collective, summed over every group that ran it concurrently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEvent {
    pub step: usize,
    pub primitive: PrimitiveKind,
    pub collective: Collective,
    pub scope: Scope,
    pub messages: u64,
    pub words: u64,
    /// Payload entries handed to the collective (self-sends included).
    pub entries_in: u64,
    /// Payload entries delivered by it.
    pub entries_out: u64,
    /// Largest number of entries delivered to a single worker.
    pub max_delivered: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    events: Vec<TraceEvent>,
}

impl Trace {
    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    pub(crate) fn push(&mut self, mut event: TraceEvent) {
        event.step = self.events.len();
        self.events.push(event);
    }

    pub(crate) fn clear(&mut self) {
        self.events.clear();
    }

    /// Every all-to-all delivered exactly what it was handed.
    pub fn alltoall_conserved(&self) -> bool {
        self.events
            .iter()
            .filter(|e| e.collective == Collective::AllToAll)
            .all(|e| e.entries_in == e.entries_out)
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "step,primitive,scope,messages,words")?;
        for e in &self.events {
            writeln!(
                out,
                "{},{},{},{},{}",
                e.step, e.primitive, e.scope, e.messages, e.words
            )?;
        }
        out.flush()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modeled_time_is_linear() {
        let c = Counters {
            flops: 10,
            messages: 3,
            words: 7,
        };
        assert_eq!(c.modeled_time(2.0, 0.5), 10.0 + 6.0 + 3.5);
    }

    #[test]
    fn totals_sum_categories() {
        let mut s = CommStats::default();
        s.spmspv.messages = 4;
        s.sort_perm.words = 9;
        s.reduce.flops = 2;
        s.other.flops = 1;
        assert_eq!(
            s.total(),
            Counters {
                flops: 3,
                messages: 4,
                words: 9
            }
        );
        let json = s.to_json();
        assert_eq!(json["messages"], 4);
        assert_eq!(json["spmspv"]["messages"], 4);
    }

    #[test]
    fn csv_header_and_rows() {
        let mut t = Trace::default();
        t.push(TraceEvent {
            step: 99,
            primitive: PrimitiveKind::Spmspv,
            collective: Collective::AllGather,
            scope: Scope::GridColumn,
            messages: 2,
            words: 8,
            entries_in: 4,
            entries_out: 4,
            max_delivered: 2,
        });
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "step,primitive,scope,messages,words\n0,spmspv,grid-column,2,8\n"
        );
    }
}
