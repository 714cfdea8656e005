/// Hilbert function of a 0-dimensional scheme together with its regularity
/// index, initial degree and degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    /// `HF(0), ..., HF(i_max)`.
    pub values: Vec<usize>,
    pub regularity_index: usize,
    pub initial_degree: usize,
    pub degree: usize,
}

/// Where the degree of a generic scheme sits between consecutive binomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryCase {
    /// `deg = C(n + α - 1, n)`.
    LowerBinomial,
    /// `C(n + α - 1, n) < deg < C(n + α, n)`.
    StrictlyBetween,
    /// Not in generic position.
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenericPosition {
    pub is_generic: bool,
    pub alpha: usize,
    pub boundary_case: BoundaryCase,
}

impl HilbertTable {
    /// Builds the table from the number of standard monomials of the affine
    /// ideal in each degree.
    pub fn from_affine_counts(n: usize, per_degree: &[usize], initial_degree: usize) -> Self {
        let degree: usize = per_degree.iter().sum();
        let regularity_index = per_degree.len().saturating_sub(1);
        let i_max = ((n + 1) * regularity_index).max(regularity_index + 1);
        let mut values = Vec::with_capacity(i_max + 1);
        let mut acc = 0;
        for i in 0..=i_max {
            acc += per_degree.get(i).copied().unwrap_or(0);
            values.push(acc);
        }
        HilbertTable {
            values,
            regularity_index,
            initial_degree,
            degree,
        }
    }

    pub fn value(&self, i: usize) -> usize {
        self.values.get(i).copied().unwrap_or(self.degree)
    }

    /// Generic position: `HF(i) = min(deg, C(n+i, n))` for all `i`.
    pub fn generic_position(&self, n: usize) -> GenericPosition {
        let is_generic = (0..=self.regularity_index).all(|i| self.value(i) == self.degree.min(binomial(n + i, n)));
        let alpha = self.initial_degree;
        let boundary_case = if !is_generic {
            BoundaryCase::None
        } else if alpha >= 1 && self.degree == binomial(n + alpha - 1, n) {
            BoundaryCase::LowerBinomial
        } else {
            BoundaryCase::StrictlyBetween
        };
        GenericPosition {
            is_generic,
            alpha,
            boundary_case,
        }
    }

    pub fn sum_below_regularity(&self) -> usize {
        (0..self.regularity_index).map(|i| self.value(i)).sum()
    }

    /// `HF(i) = deg - HF(r - 1 - i)` for `0 <= i < r`.
    pub fn is_symmetric(&self) -> bool {
        let r = self.regularity_index;
        (0..r).all(|i| self.value(i) + self.value(r - 1 - i) == self.degree)
    }
}

/// Binomial coefficient, saturating on overflow.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).unwrap_or(usize::MAX)
}
