use super::{PointCloud, Trace};
use crate::error::{Error, Result};

/// Resamples a trace along its polyline at arc-length multiples of `spacing`,
/// starting at the first sample. Consecutive outputs are exactly `spacing`
/// apart in polyline arc length. A trace shorter than `spacing` collapses to
/// its first sample.
pub fn resample_trace(trace: &Trace, spacing: f64) -> Result<Trace> {
    if !(spacing > 0.0) {
        return Err(Error::InvalidParameter {
            name: "spacing",
            msg: format!("must be positive, got {spacing}"),
        });
    }
    let dim = trace.dim();
    let total = trace.arc_length();
    let eps = 1e-9 * total.max(1.0);

    let mut out = PointCloud::empty(dim);
    out.push(trace.points.point(0));

    let mut seg = 0usize; // current segment start index
    let mut seg_start_arc = 0.0; // arc length at the start of `seg`
    let mut seg_len = segment_length(trace, seg);
    let mut t = spacing;
    while t <= total + eps {
        while seg + 2 < trace.len() && seg_start_arc + seg_len < t - eps {
            seg_start_arc += seg_len;
            seg += 1;
            seg_len = segment_length(trace, seg);
        }
        let local = ((t - seg_start_arc) / seg_len).clamp(0.0, 1.0);
        let a = trace.points.point(seg);
        let b = trace.points.point(seg + 1);
        let point: Vec<f64> = a
            .iter()
            .zip(b)
            .map(|(x, y)| x + (y - x) * local)
            .collect();
        out.push(&point);
        t += spacing;
    }
    Trace::new(out)
}

fn segment_length(trace: &Trace, seg: usize) -> f64 {
    trace.points.distance(seg, seg + 1)
}

/// Delay embedding: point `i` of the output is the concatenation of samples
/// `i..i+k` of the trace, so direction of travel is encoded in the
/// coordinates. Output has `len - k + 1` points of dimension `k * d`.
pub fn delay_embed(trace: &Trace, k: usize) -> Result<PointCloud> {
    if k == 0 {
        return Err(Error::InvalidParameter {
            name: "k",
            msg: "must be at least 1".into(),
        });
    }
    if trace.len() < k {
        return Err(Error::EmptyInput("trace shorter than the stacking window"));
    }
    let dim = trace.dim();
    let mut out = PointCloud::empty(k * dim);
    let mut buf = Vec::with_capacity(k * dim);
    for i in 0..=trace.len() - k {
        buf.clear();
        for j in 0..k {
            buf.extend_from_slice(trace.points.point(i + j));
        }
        out.push(&buf);
    }
    Ok(out)
}

/// Resamples (when `spacing` is given) and delay-embeds every trace, then
/// concatenates the embedded points into one cloud. Traces that end up
/// shorter than the stacking window are dropped.
pub fn stack_traces(traces: &[Trace], spacing: Option<f64>, k: usize) -> Result<PointCloud> {
    let mut cloud: Option<PointCloud> = None;
    for trace in traces {
        let resampled;
        let trace = match spacing {
            Some(s) => {
                resampled = resample_trace(trace, s)?;
                &resampled
            }
            None => trace,
        };
        if trace.len() < k {
            continue;
        }
        let embedded = delay_embed(trace, k)?;
        match &mut cloud {
            None => cloud = Some(embedded),
            Some(all) => {
                for p in embedded.iter() {
                    all.push(p);
                }
            }
        }
    }
    cloud.ok_or(Error::EmptyInput("no trace long enough to embed"))
}
