use std::fmt;

use serde::Serialize;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// # Panics
    /// If `parts` is not weakly decreasing or contains a zero.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "not a partition: {parts:?}"
        );
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn width(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Transposed box diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.width())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.conjugate()
    }

    /// Box diagram, one row per part.
    pub fn boxes(&self) -> String {
        self.parts
            .iter()
            .map(|&p| "□".repeat(p))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}
