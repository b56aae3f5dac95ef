//! Brute-force enumeration over a group: conjugacy classes, center and
//! exponent.

use serde::Serialize;

use super::{Group, GroupError, Level, Subgroup, UElem};

/// Largest group the enumeration routines accept by default (|U| at q = 4 is
/// 16 777 216).
pub const DEFAULT_CENSUS_BUDGET: u64 = 17_000_000;

fn within_budget(group: &Group, budget: u64) -> Result<(), GroupError> {
    if group.order() > budget {
        return Err(GroupError::Budget {
            order: group.order(),
            budget,
        });
    }
    Ok(())
}

/// Conjugacy classes in canonical order: class k has representative
/// `reps[k]`, the least element of the class, and the representatives are
/// increasing.
#[derive(Debug, Clone)]
pub struct ClassData {
    pub q: u32,
    pub level: Level,
    pub reps: Vec<UElem>,
    pub sizes: Vec<u64>,
    class_of: Vec<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassJson {
    pub rep: Vec<Vec<u32>>,
    pub size: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassDataJson {
    pub q: u32,
    pub level: Level,
    pub classes: Vec<ClassJson>,
}

impl ClassData {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Class id of `g`, an element of the census's group.
    #[inline]
    pub fn class_of(&self, group: &Group, g: &UElem) -> usize {
        self.class_of[group.pack(g) as usize] as usize
    }

    #[inline]
    pub fn class_of_packed(&self, code: u64) -> usize {
        self.class_of[code as usize] as usize
    }

    pub fn group_order(&self) -> u64 {
        self.class_of.len() as u64
    }

    pub fn to_json(&self, group: &Group) -> ClassDataJson {
        ClassDataJson {
            q: self.q,
            level: self.level,
            classes: self
                .reps
                .iter()
                .zip(&self.sizes)
                .map(|(r, &size)| ClassJson {
                    rep: group.coeff_vectors(r),
                    size,
                })
                .collect(),
        }
    }
}

/// x⁻¹gx for a single generator x = yᵢ(s), with the y₁ case done in place:
/// y₁(−s)·g only shifts t₁.
#[inline]
fn conj_by_root(
    group: &Group,
    g: &UElem,
    i: usize,
    s: crate::gf::Fe,
    x: &UElem,
    x_inv: &UElem,
) -> UElem {
    if i == 1 {
        let mut a = g.0;
        let b = group.tower().base();
        a[0] = b.sub(a[0], s);
        group.mul_root_in_place(&mut a, 1, s);
        UElem(a)
    } else {
        group.multiply(&group.multiply(x_inv, g), x)
    }
}

/// Orbit partition under conjugation by [`Group::generators`], visiting
/// elements in canonical order so that each class is represented by its
/// least element. Single-threaded and deterministic.
pub fn conjugacy_census(group: &Group, budget: u64) -> Result<ClassData, GroupError> {
    within_budget(group, budget)?;
    let order = group.order();
    let gens: Vec<(usize, crate::gf::Fe, UElem, UElem)> = group
        .generators()
        .into_iter()
        .map(|x| {
            let i = x.support()[0];
            (i, x.coord(i), x, group.inverse(&x))
        })
        .collect();
    const UNSEEN: u32 = u32::MAX;
    let mut class_of = vec![UNSEEN; order as usize];
    let (mut reps, mut sizes) = (Vec::new(), Vec::new());
    let mut queue: Vec<u64> = Vec::new();
    for code in 0..order {
        if class_of[code as usize] != UNSEEN {
            continue;
        }
        let id = reps.len() as u32;
        class_of[code as usize] = id;
        queue.clear();
        queue.push(code);
        let mut head = 0;
        while head < queue.len() {
            let g = group.unpack(queue[head]);
            head += 1;
            for (i, s, x, x_inv) in &gens {
                let c = group.pack(&conj_by_root(group, &g, *i, *s, x, x_inv));
                if class_of[c as usize] == UNSEEN {
                    class_of[c as usize] = id;
                    queue.push(c);
                }
            }
        }
        reps.push(group.unpack(code));
        sizes.push(queue.len() as u64);
    }
    Ok(ClassData {
        q: group.q(),
        level: group.level(),
        reps,
        sizes,
        class_of,
    })
}

/// Z(G) by testing every element against the generators.
pub fn center(group: &Group, budget: u64) -> Result<Subgroup, GroupError> {
    within_budget(group, budget)?;
    let gens = group.generators();
    let z: Vec<UElem> = group
        .elements()
        .filter(|g| {
            gens.iter()
                .all(|x| group.multiply(g, x) == group.multiply(x, g))
        })
        .collect();
    Subgroup::from_elements(group, &z).ok_or(GroupError::CenterNotCoordinate)
}

/// Largest element order (the exponent, since G is a p-group).
pub fn exponent(group: &Group, budget: u64) -> Result<u64, GroupError> {
    within_budget(group, budget)?;
    Ok(group
        .elements()
        .map(|g| group.element_order(&g))
        .max()
        .unwrap_or(1))
}
