use std::fmt;

/// A set of vertex ids, kept sorted and deduplicated.
///
/// Packings, dominating sets and solver witnesses are all `VertexSet`s.
/// The derived `Ord` compares member lists lexicographically, which is the
/// tie-break order used for solver witnesses.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: usize) -> Self {
        Self { members: vec![v] }
    }

    /// The full vertex set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        Self {
            members: (0..n).collect(),
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) {
        if let Err(pos) = self.members.binary_search(&v) {
            self.members.insert(pos, v);
        }
    }

    pub fn remove(&mut self, v: usize) {
        if let Ok(pos) = self.members.binary_search(&v) {
            self.members.remove(pos);
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    /// Largest member, or `None` when empty.
    pub fn max(&self) -> Option<usize> {
        self.members.last().copied()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self { members }
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(members: Vec<usize>) -> Self {
        members.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_iter_sorts_and_dedups() {
        let s: VertexSet = [3, 1, 3, 0].into();
        assert_eq!(s.as_slice(), &[0, 1, 3]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn lexicographic_order() {
        let a = VertexSet::from([0, 2]);
        let b = VertexSet::from([0, 3]);
        let c = VertexSet::from([1, 2]);
        assert!(a < b && b < c);
    }

    #[test]
    fn display() {
        assert_eq!(VertexSet::from([2, 0]).to_string(), "{0, 2}");
        assert_eq!(VertexSet::new().to_string(), "{}");
    }
}
