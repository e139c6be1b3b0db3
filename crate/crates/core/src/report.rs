//! Records emitted by the command-line tool. Counts are decimal strings.

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::counting::{count_for_profile, PathCount};
use crate::error::Result;
use crate::metrics::{pair_profile, PairProfile};
use crate::vertex::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceRecord {
    pub n: usize,
    pub coloring: String,
    pub u: String,
    pub v: String,
    pub o: usize,
    pub t: usize,
    pub gamma: usize,
    pub pd: usize,
}

impl DistanceRecord {
    pub fn compute(u: &Vertex, v: &Vertex, c: &Coloring) -> Result<Self> {
        let p = pair_profile(u, v, c)?;
        Ok(DistanceRecord {
            n: c.dims(),
            coloring: c.to_string(),
            u: u.to_string(),
            v: v.to_string(),
            o: p.o,
            t: p.t,
            gamma: p.gamma,
            pd: p.pd,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub n: usize,
    pub coloring: String,
    pub u: String,
    pub v: String,
    pub pd: usize,
    pub pp: PathCount,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<PathCount>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub o: usize,
    pub t: usize,
    pub gamma: usize,
    pub pd: usize,
    pub pp: PathCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub n: usize,
    pub coloring: String,
    pub rows: Vec<TableRow>,
}

impl CountTable {
    /// One row per `(o, t)` with `o <= |class 1|`, `t <= |class 2|`, in
    /// row-major order.
    pub fn compute(c: &Coloring) -> Self {
        let (l1, l2) = (c.class1().len(), c.class2().len());
        let rows = (0..=l1)
            .flat_map(|o| (0..=l2).map(move |t| (o, t)))
            .map(|(o, t)| {
                let p = PairProfile::from_counts(o, t, l1, l2);
                TableRow {
                    o,
                    t,
                    gamma: p.gamma,
                    pd: p.pd,
                    pp: count_for_profile(&p),
                }
            })
            .collect();
        CountTable {
            n: c.dims(),
            coloring: c.to_string(),
            rows,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("o,t,gamma,pd,pp\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{},{},{}\n", r.o, r.t, r.gamma, r.pd, r.pp));
        }
        out
    }
}
