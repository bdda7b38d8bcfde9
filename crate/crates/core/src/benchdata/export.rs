use std::io::{self, Write};
use std::str::FromStr;

use super::{BenchError, CurveSeries, RadarAxes, ThresholdSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown export format `{other}` (csv, json)")),
        }
    }
}

/// Anything this module can export.
#[derive(Debug, Clone, Copy)]
pub enum Dataset<'a> {
    Curves(&'a [CurveSeries]),
    Thresholds(&'a ThresholdSeries),
    Radar(&'a RadarAxes),
}

struct Counting<W> {
    inner: W,
    written: usize,
}

impl<W: Write> Write for Counting<W> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        let n = self.inner.write(buf)?;
        self.written += n;
        Ok(n)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

/// Writes `dataset` to `sink` and returns the number of bytes written.
///
/// CSV layouts: curves `label,x,y`; thresholds `code,threshold,reference`;
/// radar `axis,code,category,index,position`. Numbers use the shortest
/// decimal form that round-trips.
pub fn export<W: Write>(dataset: Dataset<'_>, format: Format, sink: W) -> Result<usize, BenchError> {
    let mut out = Counting { inner: sink, written: 0 };
    match format {
        Format::Json => {
            match dataset {
                Dataset::Curves(c) => serde_json::to_writer_pretty(&mut out, c)?,
                Dataset::Thresholds(t) => serde_json::to_writer_pretty(&mut out, t)?,
                Dataset::Radar(r) => serde_json::to_writer_pretty(&mut out, r)?,
            }
            out.write_all(b"\n")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            write_csv(&mut w, dataset)?;
            w.flush()?;
        }
    }
    out.flush()?;
    Ok(out.written)
}

fn write_csv<W: Write>(w: &mut csv::Writer<W>, dataset: Dataset<'_>) -> Result<(), BenchError> {
    match dataset {
        Dataset::Curves(series) => {
            w.write_record(["label", "x", "y"])?;
            for s in series {
                for p in &s.points {
                    w.write_record([s.label.as_str(), &p.x.to_string(), &p.y.to_string()])?;
                }
            }
        }
        Dataset::Thresholds(t) => {
            w.write_record(["code", "threshold", "reference"])?;
            let reference = t.reference.to_string();
            for e in &t.entries {
                w.write_record([e.code.as_str(), &e.threshold.to_string(), &reference])?;
            }
        }
        Dataset::Radar(r) => {
            w.write_record(["axis", "code", "category", "index", "position"])?;
            for a in &r.axes {
                for p in &a.codes {
                    w.write_record([
                        a.name.as_str(),
                        &p.code,
                        &p.category,
                        &p.index.to_string(),
                        &p.position.to_string(),
                    ])?;
                }
            }
        }
    }
    Ok(())
}
