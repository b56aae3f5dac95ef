//! Induction of linear characters by the transversal formula
//! χ(g) = Σ_{x ∈ T} λ°(x g x⁻¹), with T a right transversal and λ° zero
//! outside the subgroup.

use crate::group::{ClassData, Group, Subgroup, UElem};

use super::cyclo::CycloValue;
use super::linchar::{transversal, LinChar};

/// For one subgroup K: the conjugates x r x⁻¹ that land in K, for every
/// class representative r of the ambient group and every x in a right
/// transversal. Any linear character of K can then be induced by summing
/// its values over the stored conjugates.
#[derive(Debug, Clone)]
pub struct InductionPlan {
    subgroup: Subgroup,
    index: u64,
    offsets: Vec<usize>,
    conjugates: Vec<UElem>,
}

impl InductionPlan {
    pub fn new(group: &Group, classes: &ClassData, k: &Subgroup) -> Self {
        let t = transversal(group, k);
        let t_inv: Vec<UElem> = t.iter().map(|x| group.inverse(x)).collect();
        let mut offsets = Vec::with_capacity(classes.len() + 1);
        let mut conjugates = Vec::new();
        offsets.push(0);
        for r in &classes.reps {
            for (x, xi) in t.iter().zip(&t_inv) {
                let c = group.multiply(&group.multiply(x, r), xi);
                if k.contains(&c) {
                    conjugates.push(c);
                }
            }
            offsets.push(conjugates.len());
        }
        InductionPlan {
            subgroup: k.clone(),
            index: t.len() as u64,
            offsets,
            conjugates,
        }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// Values of λ^G on the class representatives.
    pub fn induce(&self, group: &Group, lambda: &LinChar) -> Vec<CycloValue> {
        let p = group.tower().p();
        let tabs = lambda.tables(group);
        self.offsets
            .windows(2)
            .map(|w| {
                let mut counts = [0i64; 5];
                for c in &self.conjugates[w[0]..w[1]] {
                    counts[tabs.exponent(c) as usize] += 1;
                }
                CycloValue::from_counts(p, &counts[..p as usize])
            })
            .collect()
    }
}

/// λ^G evaluated on the classes of `group`.
pub fn induce(
    group: &Group,
    classes: &ClassData,
    k: &Subgroup,
    lambda: &LinChar,
) -> Vec<CycloValue> {
    InductionPlan::new(group, classes, k).induce(group, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{conjugacy_census, Level, DEFAULT_CENSUS_BUDGET};

    #[test]
    fn regular_character() {
        let g = Group::for_q(2, Level::Full).unwrap();
        let cd = conjugacy_census(&g, DEFAULT_CENSUS_BUDGET).unwrap();
        let v = induce(&g, &cd, &Subgroup::trivial(&g), &LinChar::trivial());
        assert_eq!(v[0], CycloValue::int(2, 4096));
        assert!(v[1..].iter().all(|x| x.is_zero()));
    }

    #[test]
    fn trivial_from_whole_group() {
        let g = Group::for_q(3, Level::ModY4Y5Y6).unwrap();
        let cd = conjugacy_census(&g, DEFAULT_CENSUS_BUDGET).unwrap();
        let v = induce(&g, &cd, &Subgroup::whole(&g), &LinChar::trivial());
        assert!(v.iter().all(|x| *x == CycloValue::int(3, 1)));
    }
}
