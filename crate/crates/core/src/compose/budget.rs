use crate::error::BudgetError;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BudgetParameters {
    /// Exponent of the number of equivalence classes.
    pub b: f64,
    /// Exponent of the composed parameter.
    pub c: f64,
    /// Degree of the assumed compression.
    pub d: f64,
    pub epsilon: f64,
    /// Largest input size.
    pub s: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BudgetReport {
    /// `⌈s^{(b+cd)·d/ε}⌉`.
    pub t: u128,
    pub delta: f64,
    /// `s^{b+c(d−ε)}`.
    pub lhs: f64,
    /// `t^{ε/d−δ}` with the unrounded `t`.
    pub rhs: f64,
}

impl BudgetReport {
    pub fn identity_holds(&self, rel_tol: f64) -> bool {
        (self.lhs - self.rhs).abs() <= rel_tol * self.lhs.abs().max(1.0)
    }
}

pub fn distillation_budget(p: BudgetParameters) -> Result<BudgetReport, BudgetError> {
    let BudgetParameters { b, c, d, epsilon, s } = p;
    if [b, c, d, epsilon, s].iter().any(|x| !x.is_finite()) {
        return Err(BudgetError::Invalid("parameters must be finite"));
    }
    if d == 0.0 {
        return Err(BudgetError::DivisionByZero("d = 0"));
    }
    let bcd = b + c * d;
    if bcd == 0.0 {
        return Err(BudgetError::DivisionByZero("b + cd = 0"));
    }
    if d < 0.0 || b < 0.0 || c < 0.0 {
        return Err(BudgetError::Invalid("b, c, d must be non-negative and d positive"));
    }
    if epsilon <= 0.0 {
        return Err(BudgetError::Invalid("epsilon must be positive"));
    }
    if s < 1.0 {
        return Err(BudgetError::Invalid("s must be at least 1"));
    }
    let exponent = bcd * d / epsilon;
    let raw_t = s.powf(exponent);
    // powf can land a hair above an exact integer
    let nearest = raw_t.round();
    let t = if (raw_t - nearest).abs() <= 1e-9 * nearest.max(1.0) { nearest } else { raw_t.ceil() };
    if t > u128::MAX as f64 {
        return Err(BudgetError::Invalid("t(s) does not fit in 128 bits"));
    }
    let delta = c * epsilon * epsilon / (bcd * d);
    let lhs = s.powf(b + c * (d - epsilon));
    let rhs = raw_t.powf(epsilon / d - delta);
    Ok(BudgetReport { t: t as u128, delta, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(b: f64, c: f64, d: f64, epsilon: f64, s: f64) -> BudgetParameters {
        BudgetParameters { b, c, d, epsilon, s }
    }

    #[test]
    fn examples() {
        let r = distillation_budget(params(2.0, 1.0, 1.0, 1.0, 2.0)).unwrap();
        assert_eq!(r.t, 8);
        assert!((r.delta - 1.0 / 3.0).abs() < 1e-12);
        assert!(r.identity_holds(1e-9));

        let r = distillation_budget(params(0.0, 1.0, 2.0, 1.0, 3.0)).unwrap();
        assert_eq!(r.t, 81);
        assert!((r.delta - 0.25).abs() < 1e-12);
        assert!(r.identity_holds(1e-9));

        let r = distillation_budget(params(2.0, 0.0, 1.0, 0.5, 3.0)).unwrap();
        assert_eq!(r.delta, 0.0);
    }

    #[test]
    fn errors() {
        assert!(matches!(distillation_budget(params(0.0, 0.0, 1.0, 1.0, 2.0)), Err(BudgetError::DivisionByZero(_))));
        assert!(matches!(distillation_budget(params(1.0, 1.0, 0.0, 1.0, 2.0)), Err(BudgetError::DivisionByZero(_))));
        assert!(matches!(distillation_budget(params(1.0, 1.0, 1.0, 0.0, 2.0)), Err(BudgetError::Invalid(_))));
        assert!(matches!(distillation_budget(params(1.0, 1.0, 1.0, 1.0, 0.5)), Err(BudgetError::Invalid(_))));
    }
}
