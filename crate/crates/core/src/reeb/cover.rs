use crate::error::{Error, Result};

/// Overlapping interval cover of `[0, d_max]`: the two interleaved families
/// `[i*alpha, (i+1)*alpha]` and `[(i+0.5)*alpha, (i+1.5)*alpha]` merged and
/// sorted by midpoint. Interval `j` is `[j*alpha/2, j*alpha/2 + alpha]`, so
/// consecutive intervals overlap in exactly a half interval.
///
/// Intervals are closed. The paper-style open family leaves the root value 0
/// (and every multiple of `alpha/2`) uncovered on a finite sample; closing
/// them restores a true cover, and boundary values then sit in the usual
/// Mapper overlap regime.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalCover {
    alpha: f64,
    half: f64,
    intervals: Vec<(f64, f64)>,
}

/// Builds the cover for function values in `[0, d_max]`. Trailing intervals
/// whose interior lies entirely above `d_max` are dropped; the first interval
/// is always `[0, alpha]`.
pub fn build_cover(d_max: f64, alpha: f64) -> Result<IntervalCover> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidParameter {
            name: "alpha",
            msg: format!("must be positive, got {alpha}"),
        });
    }
    if d_max < 0.0 || !d_max.is_finite() {
        return Err(Error::InvalidParameter {
            name: "d_max",
            msg: format!("must be nonnegative, got {d_max}"),
        });
    }

    let half = alpha / 2.0;
    let m = ((d_max / alpha).ceil() as i64 - 1).max(0) as usize;
    let mut intervals = Vec::with_capacity(2 * m + 2);
    for j in 0..=(2 * m + 1) {
        let lo = j as f64 * half;
        if j > 0 && lo >= d_max {
            break;
        }
        intervals.push((lo, lo + alpha));
    }
    Ok(IntervalCover {
        alpha,
        half,
        intervals,
    })
}

impl IntervalCover {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Half interval width; also the grid step of interval endpoints and
    /// midpoints.
    pub fn half(&self) -> f64 {
        self.half
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn bounds(&self, j: usize) -> (f64, f64) {
        self.intervals[j]
    }

    /// Height of grid index `idx`; interval `j` spans grid indices
    /// `j..=j + 2` (endpoint, midpoint, endpoint).
    pub fn height(&self, idx: usize) -> f64 {
        idx as f64 * self.half
    }

    /// Inclusive range of interval indices containing `value`, or `None` if
    /// the value is uncovered. Memberships are always consecutive: interval
    /// lower and upper bounds are both monotone in the index.
    pub fn member_span(&self, value: f64) -> Option<(usize, usize)> {
        let guess = (value / self.half).floor();
        let guess = if guess.is_finite() { guess as i64 } else { 0 };
        let mut span: Option<(usize, usize)> = None;
        for j in (guess - 3)..=(guess + 2) {
            if j < 0 || j as usize >= self.intervals.len() {
                continue;
            }
            let (lo, hi) = self.intervals[j as usize];
            if lo <= value && value <= hi {
                let j = j as usize;
                span = Some(match span {
                    None => (j, j),
                    Some((start, _)) => (start, j),
                });
            }
        }
        span
    }

    /// Indices of the intervals containing `value` (at most three; exactly
    /// boundary values fall in up to three closed intervals).
    pub fn member_intervals(&self, value: f64) -> Vec<usize> {
        match self.member_span(value) {
            Some((start, end)) => (start..=end).collect(),
            None => Vec::new(),
        }
    }
}
