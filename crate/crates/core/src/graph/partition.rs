use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("a partition needs at least one non-exceptional class")]
    NoClasses,
    #[error("classes have unequal sizes")]
    UnequalClasses,
    #[error("classes must be nonempty")]
    EmptyClass,
    #[error("exceptional class has {size} vertices but must have fewer than k = {k}")]
    ExceptionalTooLarge { size: usize, k: usize },
    #[error("vertex {0} appears twice")]
    Duplicate(usize),
    #[error("vertex {0} is not covered")]
    Uncovered(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
}

/// `V = V_0 ∪ V_1 ∪ … ∪ V_k` with `|V_1| = … = |V_k|` and `|V_0| < k`.
///
/// `V_0` is always stored, even when empty. Vertex lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    n: usize,
    exceptional: Vec<usize>,
    classes: Vec<Vec<usize>>,
    #[serde(skip)]
    class_of: Vec<Option<usize>>,
}

impl Partition {
    pub fn new(n: usize, exceptional: Vec<usize>, classes: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let k = classes.len();
        if k == 0 {
            return Err(PartitionError::NoClasses);
        }
        let size = classes[0].len();
        if size == 0 {
            return Err(PartitionError::EmptyClass);
        }
        if classes.iter().any(|c| c.len() != size) {
            return Err(PartitionError::UnequalClasses);
        }
        if exceptional.len() >= k {
            return Err(PartitionError::ExceptionalTooLarge { size: exceptional.len(), k });
        }
        let mut class_of: Vec<Option<Option<usize>>> = vec![None; n];
        let labelled = exceptional
            .iter()
            .map(|&v| (v, None))
            .chain(classes.iter().enumerate().flat_map(|(i, c)| c.iter().map(move |&v| (v, Some(i)))));
        for (v, label) in labelled {
            if v >= n {
                return Err(PartitionError::OutOfRange { vertex: v, n });
            }
            if class_of[v].is_some() {
                return Err(PartitionError::Duplicate(v));
            }
            class_of[v] = Some(label);
        }
        if let Some(v) = class_of.iter().position(Option::is_none) {
            return Err(PartitionError::Uncovered(v));
        }
        let mut exceptional = exceptional;
        exceptional.sort_unstable();
        let classes = classes
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Ok(Partition { n, exceptional, classes, class_of: class_of.into_iter().map(Option::unwrap).collect() })
    }

    /// Cuts `order` into `k` consecutive classes of size `⌊len/k⌋`; the tail
    /// goes to `V_0`.
    pub fn from_order(n: usize, order: &[usize], k: usize) -> Result<Self, PartitionError> {
        if k == 0 {
            return Err(PartitionError::NoClasses);
        }
        let size = order.len() / k;
        let classes = (0..k).map(|i| order[i * size..(i + 1) * size].to_vec()).collect();
        Self::new(n, order[k * size..].to_vec(), classes)
    }

    /// Equitable partition of `0..n` by vertex index.
    pub fn equitable(n: usize, k: usize) -> Result<Self, PartitionError> {
        let order: Vec<usize> = (0..n).collect();
        Self::from_order(n, &order, k)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of non-exceptional classes.
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn class_size(&self) -> usize {
        self.classes[0].len()
    }

    pub fn exceptional(&self) -> &[usize] {
        &self.exceptional
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    /// Class index of `v`, or `None` for `V_0`.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.class_of[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equitable_puts_remainder_in_v0() {
        let p = Partition::equitable(11, 3).unwrap();
        assert_eq!(p.k(), 3);
        assert_eq!(p.class_size(), 3);
        assert_eq!(p.exceptional(), &[9, 10]);
        assert_eq!(p.class_of(4), Some(1));
        assert_eq!(p.class_of(10), None);
    }

    #[test]
    fn singleton_classes() {
        let p = Partition::equitable(5, 5).unwrap();
        assert!(p.exceptional().is_empty());
        assert_eq!(p.class_size(), 1);
    }

    #[test]
    fn invariants_enforced() {
        assert_eq!(Partition::new(4, vec![], vec![vec![0, 1], vec![2]]), Err(PartitionError::UnequalClasses));
        assert_eq!(
            Partition::new(5, vec![3, 4], vec![vec![0, 1, 2]]),
            Err(PartitionError::ExceptionalTooLarge { size: 2, k: 1 })
        );
        assert_eq!(Partition::new(3, vec![], vec![vec![0], vec![0]]), Err(PartitionError::Duplicate(0)));
        assert_eq!(Partition::new(3, vec![], vec![vec![0], vec![1]]), Err(PartitionError::Uncovered(2)));
        assert_eq!(Partition::equitable(3, 0), Err(PartitionError::NoClasses));
        // 7 vertices into 4 classes: size 1, V0 of 3 < 4
        assert!(Partition::equitable(7, 4).is_ok());
        // 9 vertices into 2 classes: size 4, V0 of 1 < 2
        assert!(Partition::equitable(9, 2).is_ok());
    }
}
