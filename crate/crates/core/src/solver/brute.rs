use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{is_valid_slice, Label, Labeling};

/// Largest graph accepted by [`brute_force`].
pub const BRUTE_FORCE_LIMIT: usize = 16;

/// Largest graph accepted by [`enumerate_valid`].
pub const ENUMERATE_LIMIT: usize = 14;

/// Lexicographic odometer over `{-1, 1, 2}^n`, vertex 0 most significant.
struct Odometer {
    digits: Vec<u8>,
    started: bool,
    done: bool,
}

impl Odometer {
    fn new(n: usize) -> Self {
        Odometer { digits: vec![0; n], started: false, done: false }
    }

    /// Advances to the next labeling; returns the first changed position.
    fn step(&mut self) -> Option<usize> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(0);
        }
        for i in (0..self.digits.len()).rev() {
            if self.digits[i] < 2 {
                self.digits[i] += 1;
                return Some(i);
            }
            self.digits[i] = 0;
        }
        self.done = true;
        None
    }
}

/// Minimum weight over all `3^n` labelings.
///
/// Ties are broken lexicographically on `(f(0), ..., f(n-1))` with
/// `-1 < 1 < 2`. Returns the optimum, the witness and the number of labelings
/// examined.
pub fn brute_force(g: &Graph) -> Result<(i64, Labeling, u64)> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { n, limit: BRUTE_FORCE_LIMIT });
    }
    let mut odometer = Odometer::new(n);
    let mut labels = vec![Label::Minus; n];
    let mut weight = -(n as i64);
    let mut best: Option<(i64, Vec<Label>)> = None;
    let mut examined = 0u64;
    while let Some(first) = odometer.step() {
        examined += 1;
        for (slot, &digit) in labels[first..].iter_mut().zip(&odometer.digits[first..]) {
            let label = Label::ALL[digit as usize];
            weight += label.value() - slot.value();
            *slot = label;
        }
        if best.as_ref().is_some_and(|(w, _)| weight >= *w) {
            continue;
        }
        if is_valid_slice(g, &labels) {
            best = Some((weight, labels.clone()));
        }
    }
    let (w, labels) = best.expect("the all-ones labeling is valid");
    Ok((w, Labeling::new(labels), examined))
}

/// Iterator over every valid labeling in lexicographic order.
pub struct ValidLabelings<'a> {
    g: &'a Graph,
    odometer: Odometer,
}

impl Iterator for ValidLabelings<'_> {
    type Item = Labeling;

    fn next(&mut self) -> Option<Labeling> {
        while self.odometer.step().is_some() {
            let labels: Vec<Label> = self.odometer.digits.iter().map(|&d| Label::ALL[d as usize]).collect();
            if is_valid_slice(self.g, &labels) {
                return Some(Labeling::new(labels));
            }
        }
        None
    }
}

/// All valid labelings of a graph with at most [`ENUMERATE_LIMIT`] vertices.
pub fn enumerate_valid(g: &Graph) -> Result<ValidLabelings<'_>> {
    if g.n() > ENUMERATE_LIMIT {
        return Err(Error::TooLarge { n: g.n(), limit: ENUMERATE_LIMIT });
    }
    Ok(ValidLabelings { g, odometer: Odometer::new(g.n()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};
    use crate::labeling::is_valid;

    #[test]
    fn small_optima() {
        let cases = [
            (FamilySpec::Cycle(3), 2),
            (FamilySpec::Complete(2), 1),
            (FamilySpec::Star(3), 3),
            (FamilySpec::Path(4), 2),
            (FamilySpec::Wheel(4), 3),
        ];
        for (spec, expected) in cases {
            let g = generate(&spec).unwrap();
            let (w, witness, examined) = brute_force(&g).unwrap();
            assert_eq!(w, expected, "{spec}");
            assert_eq!(witness.weight(), w);
            assert!(is_valid(&g, &witness));
            assert_eq!(examined, 3u64.pow(g.n() as u32));
        }
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        let g = generate(&FamilySpec::Path(4)).unwrap();
        let (w, witness, _) = brute_force(&g).unwrap();
        let smallest = enumerate_valid(&g).unwrap().find(|l| l.weight() == w).unwrap();
        assert_eq!(witness, smallest);
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let g = generate(&FamilySpec::Cycle(5)).unwrap();
        let all: Vec<Labeling> = enumerate_valid(&g).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|l| is_valid(&g, l)));
        assert!(all.contains(&Labeling::all_ones(5)));
    }

    #[test]
    fn size_limits() {
        let g = generate(&FamilySpec::Path(17)).unwrap();
        assert!(matches!(brute_force(&g), Err(Error::TooLarge { n: 17, limit: 16 })));
        let g = generate(&FamilySpec::Path(15)).unwrap();
        assert!(enumerate_valid(&g).is_err());
    }
}
