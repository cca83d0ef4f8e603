use crate::error::{Result, SadikError};

/// A function sampled on a time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    t: Vec<f64>,
    y: Vec<f64>,
}

/// Checks that `grid` is non-empty, strictly increasing and starts at t ≥ 0.
pub fn validate_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(SadikError::InvalidGrid("grid is empty".into()));
    }
    if grid.iter().any(|t| !t.is_finite()) {
        return Err(SadikError::InvalidGrid(
            "grid contains non-finite times".into(),
        ));
    }
    if grid[0] < 0.0 {
        return Err(SadikError::InvalidGrid(format!(
            "grid starts at {} < 0",
            grid[0]
        )));
    }
    if let Some(w) = grid.windows(2).find(|w| w[1] <= w[0]) {
        return Err(SadikError::InvalidGrid(format!(
            "grid not strictly increasing at {} -> {}",
            w[0], w[1]
        )));
    }
    Ok(())
}

/// `n` equally spaced points from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => {
            let step = (b - a) / (n - 1) as f64;
            (0..n)
                .map(|i| if i == n - 1 { b } else { a + step * i as f64 })
                .collect()
        }
    }
}

impl SampledSignal {
    pub fn new(t: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        if t.len() != y.len() {
            return Err(SadikError::LengthMismatch {
                expected: t.len(),
                got: y.len(),
            });
        }
        validate_grid(&t)?;
        Ok(Self { t, y })
    }

    /// Samples `f` on `grid`, stopping at the first error.
    pub fn try_from_fn<F>(grid: &[f64], mut f: F) -> Result<Self>
    where
        F: FnMut(f64) -> Result<f64>,
    {
        validate_grid(grid)?;
        let y = grid.iter().map(|&t| f(t)).collect::<Result<Vec<_>>>()?;
        Ok(Self {
            t: grid.to_vec(),
            y,
        })
    }

    pub fn t(&self) -> &[f64] {
        &self.t
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.t.iter().copied().zip(self.y.iter().copied())
    }
}
