use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::series::BiSeries;

/// A position where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffRow<C> {
    pub degree: usize,
    pub weight: usize,
    pub left: C,
    pub right: C,
}

/// Differences between two series, sorted by `(degree, weight)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffReport<C> {
    pub rows: Vec<DiffRow<C>>,
}

impl<C> DiffReport<C> {
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

pub fn diff_report<C: Coefficient>(a: &BiSeries<C>, b: &BiSeries<C>) -> Result<DiffReport<C>> {
    if a.caps() != b.caps() {
        return Err(Error::Config(format!(
            "cannot compare series with caps ({}) and ({})",
            a.caps(),
            b.caps()
        )));
    }
    let caps = a.caps();
    let mut rows = Vec::new();
    for degree in 0..=caps.max_degree {
        for weight in 0..=caps.max_weight {
            let (left, right) = (a.coeff(degree, weight), b.coeff(degree, weight));
            if left != right {
                rows.push(DiffRow { degree, weight, left, right });
            }
        }
    }
    Ok(DiffReport { rows })
}
