use std::fmt;

use crate::connectivity::StrongProfile;
use crate::rational::Rational;
use crate::solvers::SolveError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Zero = 0,
    One = 1,
    Two = 2,
}

impl Label {
    pub const ALL: [Label; 3] = [Label::Zero, Label::One, Label::Two];

    pub fn value(self) -> u8 {
        self as u8
    }

    pub fn swapped(self) -> Label {
        match self {
            Label::Zero => Label::Two,
            Label::One => Label::One,
            Label::Two => Label::Zero,
        }
    }
}

impl TryFrom<u8> for Label {
    type Error = SolveError;

    fn try_from(v: u8) -> Result<Self, Self::Error> {
        match v {
            0 => Ok(Label::Zero),
            1 => Ok(Label::One),
            2 => Ok(Label::Two),
            other => Err(SolveError::InvalidLabel(other)),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// The sets `(V0, V1, V2)` of a labeling, each ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Partition {
    pub zero: Vec<usize>,
    pub one: Vec<usize>,
    pub two: Vec<usize>,
}

/// A total map `V -> {0, 1, 2}` together with its weight
/// `sum f(u) * mu_s(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    labels: Vec<Label>,
    weight: Rational,
}

impl Labeling {
    /// Labels indexed by vertex, weighted with `weights` (normally `mu_s`).
    pub fn with_weights(labels: Vec<Label>, weights: &[Rational]) -> Result<Self, SolveError> {
        if labels.len() != weights.len() {
            return Err(SolveError::LabelCount {
                expected: weights.len(),
                got: labels.len(),
            });
        }
        let weight = labels
            .iter()
            .zip(weights)
            .map(|(l, w)| w * i64::from(l.value()))
            .sum();
        Ok(Labeling { labels, weight })
    }

    pub fn new(labels: Vec<Label>, profile: &StrongProfile) -> Result<Self, SolveError> {
        Self::with_weights(labels, profile.mu_s_all())
    }

    pub fn from_values(values: &[u8], profile: &StrongProfile) -> Result<Self, SolveError> {
        let labels = values
            .iter()
            .map(|&v| Label::try_from(v))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(labels, profile)
    }

    /// Every vertex labelled `label`.
    pub fn constant(label: Label, profile: &StrongProfile) -> Self {
        Self::new(vec![label; profile.vertex_count()], profile).expect("length matches")
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Label {
        self.labels[v]
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn partition(&self) -> Partition {
        let mut p = Partition::default();
        for (v, l) in self.labels.iter().enumerate() {
            match l {
                Label::Zero => p.zero.push(v),
                Label::One => p.one.push(v),
                Label::Two => p.two.push(v),
            }
        }
        p
    }
}

/// Checks that every 0-labelled vertex has a strong neighbour labelled 2.
pub fn validate_snrdf(profile: &StrongProfile, f: &Labeling) -> Result<bool, SolveError> {
    if f.len() != profile.vertex_count() {
        return Err(SolveError::LabelCount {
            expected: profile.vertex_count(),
            got: f.len(),
        });
    }
    Ok(is_valid(profile.strong_neighborhoods(), f.labels()))
}

pub(crate) fn is_valid(ns: &[Vec<usize>], labels: &[Label]) -> bool {
    labels.iter().enumerate().all(|(u, &l)| {
        l != Label::Zero || ns[u].iter().any(|&v| labels[v] == Label::Two)
    })
}

/// Exchanges `V0` and `V2`, keeping `V1`.
pub fn swap_partition(f: &Labeling, profile: &StrongProfile) -> Result<Labeling, SolveError> {
    let labels = f.labels.iter().map(|l| l.swapped()).collect();
    Labeling::new(labels, profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::strong_profile;
    use crate::fixtures;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn c6_reported_function_is_valid() {
        let g = fixtures::c6();
        let p = strong_profile(&g);
        let f = Labeling::from_values(&[2, 0, 1, 0, 2, 0], &p).unwrap();
        assert!(validate_snrdf(&p, &f).unwrap());
        assert_eq!(f.weight(), &r("0.34"));
    }

    #[test]
    fn all_zero_is_invalid_and_all_one_is_valid() {
        let p = strong_profile(&fixtures::tri_b());
        assert!(!validate_snrdf(&p, &Labeling::constant(Label::Zero, &p)).unwrap());
        let q = strong_profile(&fixtures::empty3());
        let ones = Labeling::constant(Label::One, &q);
        assert!(validate_snrdf(&q, &ones).unwrap());
        assert_eq!(ones.weight(), &Rational::zero());
    }

    #[test]
    fn wrong_length_is_rejected() {
        let p = strong_profile(&fixtures::tri_b());
        let q = strong_profile(&fixtures::edge());
        let f = Labeling::constant(Label::One, &q);
        assert!(matches!(
            validate_snrdf(&p, &f),
            Err(SolveError::LabelCount { expected: 3, got: 2 })
        ));
        assert!(matches!(
            Labeling::from_values(&[0, 3], &q),
            Err(SolveError::InvalidLabel(3))
        ));
    }

    #[test]
    fn swap_examples() {
        let p = strong_profile(&fixtures::edge());
        let ones = Labeling::constant(Label::One, &p);
        assert_eq!(swap_partition(&ones, &p).unwrap(), ones);
        let f = Labeling::from_values(&[2, 0], &p).unwrap();
        let g = swap_partition(&f, &p).unwrap();
        assert_eq!(g.labels(), &[Label::Zero, Label::Two]);
        assert_eq!(g.weight(), &r("0.6"));
    }

    #[test]
    fn partition_splits_by_label() {
        let p = strong_profile(&fixtures::c6());
        let f = Labeling::from_values(&[2, 0, 1, 0, 2, 0], &p).unwrap();
        let part = f.partition();
        assert_eq!(part.zero, vec![1, 3, 5]);
        assert_eq!(part.one, vec![2]);
        assert_eq!(part.two, vec![0, 4]);
    }
}
