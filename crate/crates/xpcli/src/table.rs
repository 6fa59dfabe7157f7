use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::XpError;

/// One curve sample: mean and spread over seeds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub x: f64,
    pub method: String,
    pub mean: f64,
    pub std: f64,
}

/// Result rows sorted by `x`, then method.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Table {
    pub rows: Vec<Row>,
}

#[derive(Serialize)]
struct JsonDoc<'a> {
    scenario: &'a str,
    rows: &'a [Row],
}

fn table_err(e: impl std::fmt::Display) -> XpError {
    XpError::Table(e.to_string())
}

impl Table {
    pub fn new(mut rows: Vec<Row>) -> Self {
        rows.sort_by(|a, b| a.x.total_cmp(&b.x).then_with(|| a.method.cmp(&b.method)));
        Self { rows }
    }

    /// Rows of one method, in `x` order.
    pub fn method(&self, name: &str) -> Vec<&Row> {
        self.rows.iter().filter(|r| r.method == name).collect()
    }

    /// CSV with header `x,method,mean,std`; numbers use the shortest
    /// representation that parses back to the same `f64`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), XpError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["x", "method", "mean", "std"]).map_err(table_err)?;
        for r in &self.rows {
            w.write_record([r.x.to_string(), r.method.clone(), r.mean.to_string(), r.std.to_string()])
                .map_err(table_err)?;
        }
        w.flush().map_err(table_err)
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("in-memory write");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    pub fn read_csv<R: Read>(input: R) -> Result<Self, XpError> {
        let mut rd = csv::Reader::from_reader(input);
        let header = rd.headers().map_err(table_err)?.clone();
        if header.iter().collect::<Vec<_>>() != ["x", "method", "mean", "std"] {
            return Err(XpError::Table(format!("unexpected header {header:?}")));
        }
        let mut rows = Vec::new();
        for rec in rd.deserialize::<Row>() {
            rows.push(rec.map_err(table_err)?);
        }
        Ok(Self { rows })
    }

    pub fn to_json_string(&self, scenario: &str) -> String {
        let doc = JsonDoc {
            scenario,
            rows: &self.rows,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("rows serialize");
        s.push('\n');
        s
    }
}
