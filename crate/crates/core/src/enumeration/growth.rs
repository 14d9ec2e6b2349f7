use serde::Serialize;

/// Maximizer and maximum of the exponential growth objective.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthRate {
    pub alpha_star: f64,
    pub rate: f64,
}

/// Exponential growth of the `m = αn` term of the shallow meander count:
/// `(1+α)^{1+α} / (α^α (1-α)^{2(1-α)} (2α)^{2α})`.
pub fn growth_objective(alpha: f64) -> f64 {
    let xlogx = |x: f64| if x == 0.0 { 0.0 } else { x * x.ln() };
    let ln = xlogx(1.0 + alpha) - xlogx(alpha) - 2.0 * xlogx(1.0 - alpha) - xlogx(2.0 * alpha);
    ln.exp()
}

/// Maximizes [`growth_objective`] on `(0, 1)`.
///
/// A grid scan with step `1e-3` picks the best cell (guarding against a
/// second local maximum), then golden-section search refines it to `1e-9`.
pub fn growth_rate() -> GrowthRate {
    let step = 1e-3;
    let best = (1..1000)
        .map(|k| k as f64 * step)
        .max_by(|a, b| growth_objective(*a).total_cmp(&growth_objective(*b)))
        .unwrap();
    let (mut lo, mut hi) = ((best - step).max(0.0), (best + step).min(1.0));
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    while hi - lo > 1e-9 {
        let x1 = hi - inv_phi * (hi - lo);
        let x2 = lo + inv_phi * (hi - lo);
        if growth_objective(x1) < growth_objective(x2) {
            lo = x1;
        } else {
            hi = x2;
        }
    }
    let alpha_star = (lo + hi) / 2.0;
    GrowthRate {
        alpha_star,
        rate: growth_objective(alpha_star),
    }
}
