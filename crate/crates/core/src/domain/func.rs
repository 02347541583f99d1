//! Functions on the ground set and the comonotonicity relation.

use crate::domain::ground::{check_same_ground, GroundSet, Subset};
use crate::error::{Error, Result};
use crate::rational::Rat;

/// A rational-valued function on the points of a ground set.
///
/// Range restrictions are imposed by the consumers: the Choquet integral
/// requires nonnegative values, t-normed integrals require values in [0, 1].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuncOnX {
    ground: GroundSet,
    values: Vec<Rat>,
}

impl FuncOnX {
    pub fn new(ground: GroundSet, values: Vec<Rat>) -> Result<Self> {
        if values.len() != ground.n() {
            return Err(Error::WrongLength {
                expected: ground.n(),
                found: values.len(),
            });
        }
        Ok(FuncOnX { ground, values })
    }

    pub fn constant(ground: GroundSet, c: Rat) -> Self {
        let values = vec![c; ground.n()];
        FuncOnX { ground, values }
    }

    /// The characteristic function of a subset.
    pub fn indicator(ground: GroundSet, s: Subset) -> Self {
        let values = ground
            .points()
            .map(|i| if s.contains(i) { Rat::one() } else { Rat::zero() })
            .collect();
        FuncOnX { ground, values }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn value(&self, point: usize) -> &Rat {
        &self.values[point]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    /// The level set {x : f(x) ≥ t}.
    pub fn level_set(&self, t: &Rat) -> Subset {
        let mut s = Subset::EMPTY;
        for (i, v) in self.values.iter().enumerate() {
            if v >= t {
                s = s.with(i);
            }
        }
        s
    }

    /// Distinct values in increasing order.
    pub fn distinct_values(&self) -> Vec<Rat> {
        let mut vs = self.values.clone();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn first_negative_point(&self) -> Option<usize> {
        self.values.iter().position(|v| v.is_negative())
    }

    pub fn first_point_outside_unit(&self) -> Option<usize> {
        self.values.iter().position(|v| !v.in_unit_interval())
    }

    pub fn pointwise_add(&self, other: &FuncOnX) -> Result<FuncOnX> {
        check_same_ground(&self.ground, &other.ground)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FuncOnX {
            ground: self.ground.clone(),
            values,
        })
    }

    pub fn pointwise_max(&self, other: &FuncOnX) -> Result<FuncOnX> {
        check_same_ground(&self.ground, &other.ground)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.clone().max(b.clone()))
            .collect();
        Ok(FuncOnX {
            ground: self.ground.clone(),
            values,
        })
    }

    pub fn scale(&self, c: &Rat) -> FuncOnX {
        FuncOnX {
            ground: self.ground.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// Pointwise order: true iff self(x) ≤ other(x) everywhere.
    pub fn le(&self, other: &FuncOnX) -> Result<bool> {
        check_same_ground(&self.ground, &other.ground)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a <= b))
    }
}

/// Comonotonicity: (f(x₁) − f(x₂)) · (g(x₁) − g(x₂)) ≥ 0 for all point pairs.
/// Equivalently, f and g never order a pair of points oppositely.
pub fn comonotone(f: &FuncOnX, g: &FuncOnX) -> Result<bool> {
    check_same_ground(f.ground(), g.ground())?;
    let n = f.ground().n();
    for x1 in 0..n {
        for x2 in (x1 + 1)..n {
            let df = f.value(x1) - f.value(x2);
            let dg = g.value(x1) - g.value(x2);
            if (df * dg).is_negative() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn ground4() -> GroundSet {
        GroundSet::from_names(&["a", "b", "c", "d"]).unwrap()
    }

    #[test]
    fn constant_is_comonotone_with_anything() {
        let g = ground4();
        let f = FuncOnX::constant(g.clone(), rat(1, 3));
        let h = FuncOnX::new(g, vec![rat(3, 1), rat(0, 1), rat(7, 2), rat(1, 5)]).unwrap();
        assert!(comonotone(&f, &h).unwrap());
        assert!(comonotone(&h, &f).unwrap());
    }

    #[test]
    fn opposite_indicators_are_not_comonotone() {
        let g = ground4();
        let a = Subset::from_points(&[0, 2]);
        let f = FuncOnX::indicator(g.clone(), a);
        let h = FuncOnX::indicator(g.clone(), g.full_subset().difference(a));
        assert!(!comonotone(&f, &h).unwrap());
    }

    #[test]
    fn every_function_is_comonotone_with_itself() {
        let g = ground4();
        let f = FuncOnX::new(g, vec![rat(1, 2), rat(5, 1), rat(0, 1), rat(1, 2)]).unwrap();
        assert!(comonotone(&f, &f).unwrap());
    }

    #[test]
    fn mismatched_grounds_are_rejected() {
        let f = FuncOnX::constant(ground4(), Rat::one());
        let g = FuncOnX::constant(GroundSet::from_names(&["x"]).unwrap(), Rat::one());
        assert_eq!(comonotone(&f, &g).unwrap_err(), Error::GroundMismatch);
    }

    #[test]
    fn level_sets_shrink_as_t_grows() {
        let g = ground4();
        let f = FuncOnX::new(g, vec![rat(0, 1), rat(1, 2), rat(1, 2), rat(1, 1)]).unwrap();
        assert_eq!(f.level_set(&Rat::zero()), Subset::full(4));
        assert_eq!(f.level_set(&rat(1, 2)), Subset::from_points(&[1, 2, 3]));
        assert_eq!(f.level_set(&Rat::one()), Subset::singleton(3));
        assert_eq!(f.level_set(&rat(3, 2)), Subset::EMPTY);
        assert_eq!(f.distinct_values(), vec![Rat::zero(), rat(1, 2), Rat::one()]);
    }

    proptest! {
        // Two functions nondecreasing along one fixed point order are
        // comonotone, regardless of the order or the values.
        #[test]
        fn nondecreasing_along_common_order_implies_comonotone(
            perm_seed in 0u64..1000,
            mut a in proptest::collection::vec(0i64..30, 4),
            mut b in proptest::collection::vec(0i64..30, 4),
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut order: Vec<usize> = (0..4).collect();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(perm_seed);
            order.shuffle(&mut rng);
            a.sort();
            b.sort();
            let g = ground4();
            let mut fa = vec![Rat::zero(); 4];
            let mut fb = vec![Rat::zero(); 4];
            for (rank, &point) in order.iter().enumerate() {
                fa[point] = rat(a[rank], 7);
                fb[point] = rat(b[rank], 5);
            }
            let f = FuncOnX::new(g.clone(), fa).unwrap();
            let h = FuncOnX::new(g, fb).unwrap();
            prop_assert!(comonotone(&f, &h).unwrap());
            prop_assert!(comonotone(&h, &f).unwrap());
        }
    }
}
