use std::io::{BufRead, BufReader, Read};

use super::{PointCloud, Trace};
use crate::error::{Error, Result};
use crate::graph::NeighborGraph;

/// Input file formats understood by the loaders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// One point per line, comma-separated decimals, no header.
    Csv,
    /// `u v length` per line, 0-based vertex ids, positive length.
    EdgeList,
    /// Blocks of CSV points separated by blank lines; one trace per block.
    TraceSet,
}

/// Result of loading a stream under a declared format.
#[derive(Debug, Clone)]
pub enum LoadedInput {
    Points(PointCloud),
    Graph(NeighborGraph),
    Traces(Vec<Trace>),
}

/// CSV point file: one point per line, comma-separated decimals.
pub fn load_points_csv<R: Read>(reader: R) -> Result<PointCloud> {
    let mut points: Vec<Vec<f64>> = Vec::new();
    let mut dim = None;
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let point = parse_csv_point(&line, lineno)?;
        match dim {
            None => dim = Some(point.len()),
            Some(d) if d != point.len() => {
                return Err(Error::Dimension {
                    line: lineno,
                    got: point.len(),
                    expected: d,
                })
            }
            _ => {}
        }
        points.push(point);
    }
    PointCloud::from_points(&points)
}

fn parse_csv_point(line: &str, lineno: usize) -> Result<Vec<f64>> {
    line.split(',')
        .map(|field| {
            field.trim().parse::<f64>().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("expected a decimal, got {:?}", field.trim()),
            })
        })
        .collect()
}

/// Edge-list file: `u v length` per line, whitespace-separated.
pub fn load_edge_list<R: Read>(reader: R) -> Result<NeighborGraph> {
    let mut edges = Vec::new();
    let mut max_vertex = 0usize;
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected `u v length`, got {} fields", fields.len()),
            });
        }
        let u: usize = fields[0].parse().map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("bad vertex id {:?}", fields[0]),
        })?;
        let v: usize = fields[1].parse().map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("bad vertex id {:?}", fields[1]),
        })?;
        let len: f64 = fields[2].parse().map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("bad edge length {:?}", fields[2]),
        })?;
        if !(len > 0.0) || !len.is_finite() {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("edge length must be positive, got {len}"),
            });
        }
        max_vertex = max_vertex.max(u).max(v);
        edges.push((u, v, len));
    }
    if edges.is_empty() {
        return Err(Error::EmptyInput("edge list"));
    }
    NeighborGraph::new(max_vertex + 1, edges)
}

/// Trace-set file: blank-line-separated blocks of CSV points.
pub fn load_trace_set<R: Read>(reader: R) -> Result<Vec<Trace>> {
    let mut traces = Vec::new();
    let mut block: Vec<Vec<f64>> = Vec::new();
    let mut dim = None;
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        if line.trim().is_empty() {
            if !block.is_empty() {
                traces.push(Trace::new(PointCloud::from_points(&block)?)?);
                block.clear();
            }
            continue;
        }
        let point = parse_csv_point(&line, lineno)?;
        match dim {
            None => dim = Some(point.len()),
            Some(d) if d != point.len() => {
                return Err(Error::Dimension {
                    line: lineno,
                    got: point.len(),
                    expected: d,
                })
            }
            _ => {}
        }
        block.push(point);
    }
    if !block.is_empty() {
        traces.push(Trace::new(PointCloud::from_points(&block)?)?);
    }
    if traces.is_empty() {
        return Err(Error::EmptyInput("trace set"));
    }
    Ok(traces)
}

/// Loads a stream under the declared format.
pub fn load<R: Read>(reader: R, format: Format) -> Result<LoadedInput> {
    match format {
        Format::Csv => load_points_csv(reader).map(LoadedInput::Points),
        Format::EdgeList => load_edge_list(reader).map(LoadedInput::Graph),
        Format::TraceSet => load_trace_set(reader).map(LoadedInput::Traces),
    }
}
