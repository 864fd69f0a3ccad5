/// A series evaluation together with a certified truncation-error bound.
///
/// Every infinite sum in this crate is reported as a `SeriesValue`: `value`
/// approximates the exact sum with `|value − exact| ≤ tail_bound`, and the
/// bound is finite and nonnegative by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    /// Partial sum, plus any certified tail correction.
    pub value: f64,
    /// Certified bound on the truncation error.
    pub tail_bound: f64,
    /// Number of series terms consumed.
    pub terms_used: usize,
}

impl SeriesValue {
    /// Wrap a value known in closed form; the bound covers rounding only.
    pub(crate) fn closed_form(value: f64) -> Self {
        SeriesValue {
            value,
            tail_bound: 4.0 * f64::EPSILON * value.abs().max(1.0),
            terms_used: 1,
        }
    }

    pub(crate) fn exact(value: f64, terms_used: usize) -> Self {
        SeriesValue {
            value,
            tail_bound: 0.0,
            terms_used,
        }
    }
}
