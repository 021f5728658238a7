/// Resource bounds shared by every bounded computation.
///
/// Each operation that enumerates elements, builds a coset action or runs
/// a representation search checks the relevant bound before starting and
/// fails with an explicit error rather than working on a partial result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest group order that may be enumerated element by element.
    pub max_order: u128,
    /// Largest group order handed to exhaustive subgroup scans.
    pub scan_order: u128,
    /// Largest index accepted by `coset_action`.
    pub max_index: u128,
    /// Largest point set built by the semidirect-product constructors.
    pub max_degree: u128,
    /// Candidate evaluations allowed to one representation search.
    pub search_budget: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_order: 1_000_000,
            scan_order: 2_000,
            max_index: 10_000,
            max_degree: 100_000,
            search_budget: 10_000_000,
        }
    }
}

impl Bounds {
    pub(crate) fn check_order(&self, order: u128) -> crate::Result<()> {
        if order > self.max_order {
            Err(crate::GroupError::TooLarge {
                order,
                bound: self.max_order,
            })
        } else {
            Ok(())
        }
    }
}
