//! Capacities: monotone normalized set functions on the subset lattice.

use std::collections::BTreeMap;

use crate::domain::ground::{GroundSet, Subset};
use crate::error::{Error, Result};
use crate::rational::Rat;

/// A dense capacity: one exact value per subset, validated at construction.
///
/// Axioms: value(∅) = 0, value(X) = 1, and value(S) ≤ value(T) whenever
/// S ⊆ T. On a finite discrete space every subset is closed, so the usual
/// upper-semicontinuity axiom holds vacuously and is not represented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Capacity {
    ground: GroundSet,
    values: Vec<Rat>,
}

impl Capacity {
    /// Validates a dense table (indexed by subset mask) and wraps it.
    ///
    /// The error names the first violated axiom in a fixed check order:
    /// table length, value(∅), value(X), range, then monotonicity along
    /// single-point extensions in mask order.
    pub fn new(ground: GroundSet, values: Vec<Rat>) -> Result<Self> {
        ground.ensure_dense()?;
        if values.len() != ground.table_len() {
            return Err(Error::WrongLength {
                expected: ground.table_len(),
                found: values.len(),
            });
        }
        if !values[0].is_zero() {
            return Err(Error::EmptyNotZero {
                value: values[0].clone(),
            });
        }
        let full = ground.full_subset();
        if values[full.index()] != Rat::one() {
            return Err(Error::FullNotOne {
                value: values[full.index()].clone(),
            });
        }
        for s in ground.subsets() {
            if !values[s.index()].in_unit_interval() {
                return Err(Error::OutOfRange {
                    subset: s,
                    value: values[s.index()].clone(),
                });
            }
        }
        // Monotonicity along single-point extensions implies monotonicity on
        // the whole lattice (any S ⊆ T is a chain of such extensions).
        for s in ground.subsets() {
            for i in ground.points() {
                if s.contains(i) {
                    continue;
                }
                let t = s.with(i);
                if values[s.index()] > values[t.index()] {
                    return Err(Error::NotMonotone {
                        smaller: s,
                        larger: t,
                        smaller_value: values[s.index()].clone(),
                        larger_value: values[t.index()].clone(),
                    });
                }
            }
        }
        Ok(Capacity { ground, values })
    }

    /// Validates a subset-keyed table. Every subset must be assigned a value;
    /// the first missing one (in mask order) is reported.
    pub fn from_table(ground: GroundSet, table: &BTreeMap<Subset, Rat>) -> Result<Self> {
        ground.ensure_dense()?;
        let mut values = Vec::with_capacity(ground.table_len());
        for s in ground.subsets() {
            match table.get(&s) {
                Some(v) => values.push(v.clone()),
                None => return Err(Error::MissingEntry(s)),
            }
        }
        Capacity::new(ground, values)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn value(&self, s: Subset) -> &Rat {
        &self.values[s.index()]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    /// True when the capacity is additive on disjoint sets, i.e. a measure.
    pub fn is_additive(&self) -> bool {
        self.ground.subsets().all(|s| {
            let pointwise: Rat = s.points().map(|i| self.value(Subset::singleton(i))).sum();
            pointwise == *self.value(s)
        })
    }
}

/// A generator presentation of the minimal capacity meeting floor values on
/// a few distinguished sets: ν(F) = max{v_j : A_j ⊆ F} (0 if none) for F ≠ X
/// and ν(X) = 1.
///
/// Operations on the generator list stay sparse, so these games remain usable
/// on ground sets too large for a dense 2^n table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedCapacity {
    ground: GroundSet,
    generators: Vec<Generator>,
}

/// One floor constraint of a generator presentation: ν(set) ≥ value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub set: Subset,
    pub value: Rat,
}

impl GeneratedCapacity {
    pub fn new(ground: GroundSet, generators: Vec<(Subset, Rat)>) -> Result<Self> {
        let full = ground.full_subset();
        let mut gens = Vec::with_capacity(generators.len());
        for (set, value) in generators {
            if set.is_empty() {
                return Err(Error::EmptyGeneratorSet);
            }
            if !set.is_subset_of(full) {
                return Err(Error::BadPoint {
                    index: set.points().last().unwrap(),
                    points: ground.n(),
                });
            }
            if !value.is_positive() || value > Rat::one() {
                return Err(Error::GeneratorValueOutOfRange { value });
            }
            gens.push(Generator { set, value });
        }
        Ok(GeneratedCapacity {
            ground,
            generators: gens,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// Evaluates the minimal capacity at one subset without densifying.
    pub fn value(&self, s: Subset) -> Rat {
        if s == self.ground.full_subset() {
            return Rat::one();
        }
        let mut best = Rat::zero();
        for g in &self.generators {
            if g.set.is_subset_of(s) && g.value > best {
                best = g.value.clone();
            }
        }
        best
    }

    /// Materializes the dense table of the minimal capacity.
    pub fn realize(&self) -> Result<Capacity> {
        self.ground.ensure_dense()?;
        let values = self.ground.subsets().map(|s| self.value(s)).collect();
        Capacity::new(self.ground.clone(), values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::testutil::{ground6, nu0_generated, cover_sets};
    use crate::rational::rat;

    #[test]
    fn nu0_dense_table_is_valid() {
        let nu0 = nu0_generated().realize().unwrap();
        let [a1, ..] = cover_sets();
        assert_eq!(*nu0.value(a1), rat(2, 3));
        assert_eq!(*nu0.value(Subset::from_points(&[0, 1])), rat(0, 1));
        assert_eq!(*nu0.value(nu0.ground().full_subset()), Rat::one());
        // 2/3 exactly on proper supersets of some A_i, 0 elsewhere
        for s in nu0.ground().subsets() {
            let expected = if s == nu0.ground().full_subset() {
                Rat::one()
            } else if cover_sets().iter().any(|a| a.is_subset_of(s)) {
                rat(2, 3)
            } else {
                Rat::zero()
            };
            assert_eq!(*nu0.value(s), expected, "at {s}");
        }
    }

    #[test]
    fn empty_set_value_must_be_zero() {
        let g = GroundSet::from_names(&["a", "b"]).unwrap();
        let err = Capacity::new(
            g,
            vec![rat(1, 10), rat(1, 2), rat(1, 2), Rat::one()],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::EmptyNotZero {
                value: rat(1, 10)
            }
        );
    }

    #[test]
    fn monotonicity_violation_names_the_pair() {
        let g = GroundSet::from_names(&["a", "b", "c"]).unwrap();
        let err = Capacity::new(
            g,
            vec![
                Rat::zero(),
                rat(1, 2),
                Rat::zero(),
                rat(1, 4),
                Rat::zero(),
                rat(1, 2),
                rat(1, 2),
                Rat::one(),
            ],
        )
        .unwrap_err();
        match err {
            Error::NotMonotone {
                smaller, larger, ..
            } => {
                assert_eq!(smaller, Subset::singleton(0));
                assert_eq!(larger, Subset::from_points(&[0, 1]));
            }
            other => panic!("expected NotMonotone, got {other:?}"),
        }
    }

    #[test]
    fn from_table_rejects_missing_entries() {
        let g = GroundSet::from_names(&["a", "b"]).unwrap();
        let mut table = BTreeMap::new();
        table.insert(Subset::EMPTY, Rat::zero());
        table.insert(Subset::full(2), Rat::one());
        table.insert(Subset::singleton(0), rat(1, 2));
        assert_eq!(
            Capacity::from_table(g, &table).unwrap_err(),
            Error::MissingEntry(Subset::singleton(1))
        );
    }

    #[test]
    fn empty_generator_list_realizes_minimal_capacity() {
        let g = GroundSet::from_names(&["a", "b", "c"]).unwrap();
        let cap = GeneratedCapacity::new(g.clone(), vec![])
            .unwrap()
            .realize()
            .unwrap();
        for s in g.subsets() {
            let expected = if s == g.full_subset() {
                Rat::one()
            } else {
                Rat::zero()
            };
            assert_eq!(*cap.value(s), expected);
        }
    }

    #[test]
    fn single_full_value_generator_is_dirac() {
        let g = GroundSet::from_names(&["a", "b", "c"]).unwrap();
        let cap = GeneratedCapacity::new(g.clone(), vec![(Subset::singleton(1), Rat::one())])
            .unwrap()
            .realize()
            .unwrap();
        for s in g.subsets() {
            let expected = if s.contains(1) { Rat::one() } else { Rat::zero() };
            assert_eq!(*cap.value(s), expected);
        }
    }

    #[test]
    fn realize_respects_dense_cap() {
        let labels: Vec<String> = (0..18).map(|i| format!("p{i}")).collect();
        let g = GroundSet::with_limit(labels, 16).unwrap();
        let gen = GeneratedCapacity::new(g, vec![(Subset::singleton(0), rat(1, 2))]).unwrap();
        assert!(matches!(
            gen.realize().unwrap_err(),
            Error::GroundTooLarge { .. }
        ));
        // sparse evaluation still works on the same ground
        assert_eq!(gen.value(Subset::from_points(&[0, 5])), rat(1, 2));
    }

    #[test]
    fn generator_validation() {
        let g = ground6();
        assert_eq!(
            GeneratedCapacity::new(g.clone(), vec![(Subset::EMPTY, rat(1, 2))]).unwrap_err(),
            Error::EmptyGeneratorSet
        );
        assert!(matches!(
            GeneratedCapacity::new(g.clone(), vec![(Subset::singleton(0), rat(3, 2))])
                .unwrap_err(),
            Error::GeneratorValueOutOfRange { .. }
        ));
        assert!(matches!(
            GeneratedCapacity::new(g, vec![(Subset::singleton(0), Rat::zero())]).unwrap_err(),
            Error::GeneratorValueOutOfRange { .. }
        ));
    }

    #[test]
    fn realized_tables_pass_validation_and_are_minimal() {
        // minimality against randomly generated dominating capacities (n ≤ 4)
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        let g = GroundSet::from_names(&["a", "b", "c", "d"]).unwrap();
        let grid = [rat(1, 4), rat(1, 2), rat(3, 4), Rat::one()];
        let mut checked = 0;
        for _ in 0..400 {
            let n_gens = rng.gen_range(1..=3);
            let gens: Vec<(Subset, Rat)> = (0..n_gens)
                .map(|_| {
                    (
                        Subset::from_mask(rng.gen_range(1..16u32)),
                        grid[rng.gen_range(0..grid.len())].clone(),
                    )
                })
                .collect();
            let gen = GeneratedCapacity::new(g.clone(), gens).unwrap();
            let realized = gen.realize().unwrap();
            // random monotone candidate: max of grid seeds over contained sets
            let seeds: Vec<Rat> = (0..16)
                .map(|_| grid[rng.gen_range(0..grid.len())].clone())
                .collect();
            let mut candidate = vec![Rat::zero(); 16];
            for s in g.subsets() {
                let mut best = Rat::zero();
                for t in g.subsets() {
                    if !t.is_empty() && t.is_subset_of(s) && seeds[t.index()] > best {
                        best = seeds[t.index()].clone();
                    }
                }
                candidate[s.index()] = best;
            }
            candidate[0] = Rat::zero();
            candidate[15] = Rat::one();
            let candidate = Capacity::new(g.clone(), candidate).unwrap();
            let dominates = gen
                .generators()
                .iter()
                .all(|gnr| *candidate.value(gnr.set) >= gnr.value);
            if dominates {
                checked += 1;
                for s in g.subsets() {
                    assert!(realized.value(s) <= candidate.value(s), "minimality at {s}");
                }
            }
        }
        assert!(checked > 30, "only {checked} dominating candidates drawn");
    }
}
