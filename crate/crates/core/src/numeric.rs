//! Small numeric helpers shared across modules.

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.carry += (self.sum - t) + value;
        } else {
            self.carry += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Compensated sum of a slice.
pub fn sum(values: &[f64]) -> f64 {
    values.iter().copied().collect::<CompensatedSum>().value()
}

/// Compensated mean of a non-empty slice.
pub fn mean(values: &[f64]) -> f64 {
    sum(values) / values.len() as f64
}

/// Relative closeness with a magnitude floor.
///
/// `|a - b| <= rel * max(|a|, |b|, scale)`. `scale` is the magnitude of the
/// operands that produced `a` and `b`; pass 0 for a plain relative test.
pub fn close(a: f64, b: f64, rel: f64, scale: f64) -> bool {
    let m = a.abs().max(b.abs()).max(scale.abs());
    (a - b).abs() <= rel * m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_beats_naive() {
        let mut values = vec![1e16, 1.0, -1e16];
        values.extend(std::iter::repeat_n(1.0, 10));
        assert_eq!(sum(&values), 11.0);
    }

    #[test]
    fn close_uses_floor() {
        assert!(!close(1e-12, 2e-12, 1e-9, 0.0));
        assert!(close(1e-12, 2e-12, 1e-9, 1.0));
    }
}
