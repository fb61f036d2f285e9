/// Inputs to the closed-form reconstruction bounds.
#[derive(Debug, Clone, Copy)]
pub struct BoundInputs {
    /// First Betti number of the reconstructed graph.
    pub beta1: usize,
    /// Number of short edges of the reference graph at the relevant
    /// threshold (`8*eps` for the Reeb bound, `4*(alpha + 2*eps)` for the
    /// alpha-Reeb bound).
    pub n_short_edges: usize,
    /// Interval length of the cover; unused by the Reeb bound.
    pub alpha: f64,
    /// Gromov-Hausdorff scale of the sample.
    pub eps: f64,
}

/// Which statement of the Reeb-graph bound to evaluate: the section version
/// or the introduction version that carries an extra factor 2. The two
/// appear side by side in the source material; the section version is the
/// default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoundVariant {
    #[default]
    Theorem,
    Intro,
}

/// Reeb-graph approximation bound `(beta1 + 1) * (17 + 8 * N_E) * eps`,
/// doubled under [`BoundVariant::Intro`].
pub fn bound_reeb(inputs: &BoundInputs, variant: BoundVariant) -> f64 {
    let base = (inputs.beta1 as f64 + 1.0)
        * (17.0 + 8.0 * inputs.n_short_edges as f64)
        * inputs.eps;
    match variant {
        BoundVariant::Theorem => base,
        BoundVariant::Intro => 2.0 * base,
    }
}

/// Alpha-Reeb approximation bound
/// `(beta1 + 1) * (4 * (2 + N_E) * (alpha + 2*eps) + eps)`.
pub fn bound_alpha_reeb(inputs: &BoundInputs) -> f64 {
    (inputs.beta1 as f64 + 1.0)
        * (4.0 * (2.0 + inputs.n_short_edges as f64) * (inputs.alpha + 2.0 * inputs.eps)
            + inputs.eps)
}

/// Diameter bound `4 * (2 + N_E(4*alpha)) * alpha` for connected components
/// of a band `{x : d - alpha <= d_r(x) <= d + alpha}` in a metric graph.
pub fn band_diameter_bound(n_short_edges: usize, alpha: f64) -> f64 {
    4.0 * (2.0 + n_short_edges as f64) * alpha
}
