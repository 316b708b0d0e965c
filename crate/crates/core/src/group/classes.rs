use std::collections::VecDeque;

use super::Group;

/// Partition of a group into conjugacy classes.
///
/// Classes are numbered by their minimal element index, so class `0` is
/// always `{identity}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    pub class_of: Vec<usize>,
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub inverse_class: Vec<usize>,
    pub members: Vec<Vec<usize>>,
    pub num_classes: usize,
    pub num_real_classes: usize,
}

impl ClassData {
    pub fn is_real(&self, class: usize) -> bool {
        self.inverse_class[class] == class
    }

    pub fn real_classes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_classes).filter(|&c| self.is_real(c))
    }

    /// Class containing `repᵏ` for each class.
    pub fn power_classes(&self, g: &Group, k: u64) -> Vec<usize> {
        self.reps
            .iter()
            .map(|&r| self.class_of[g.power(r, k)])
            .collect()
    }
}

/// Orbits of the conjugation action, explored by conjugating with the
/// generators.
pub fn conjugacy_classes(g: &Group) -> ClassData {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    let gens: Vec<(usize, usize)> = g
        .generators()
        .iter()
        .map(|&s| (s, g.inverse(s)))
        .collect();

    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(start);
        class_of[start] = id;
        let mut orbit = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &(s, s_inv) in &gens {
                let y = g.product(g.product(s_inv, x), s);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        orbit.sort_unstable();
        members.push(orbit);
    }

    let sizes: Vec<usize> = members.iter().map(Vec::len).collect();
    let inverse_class: Vec<usize> = reps.iter().map(|&r| class_of[g.inverse(r)]).collect();
    let num_classes = reps.len();
    let num_real_classes = (0..num_classes).filter(|&c| inverse_class[c] == c).count();
    ClassData {
        class_of,
        reps,
        sizes,
        inverse_class,
        members,
        num_classes,
        num_real_classes,
    }
}

/// `[G : N]` where `N` is the subgroup generated by all squares.
pub fn squares_subgroup_index(g: &Group) -> usize {
    let n = g.order();
    let mut in_sub = vec![false; n];
    in_sub[0] = true;
    let mut sub = vec![0usize];
    let mut gens: Vec<usize> = Vec::new();
    for x in 0..n {
        let sq = g.product(x, x);
        if in_sub[sq] {
            continue;
        }
        // enlarge the subgroup by `sq` and close under the generators so far
        gens.push(sq);
        let mut queue: VecDeque<usize> = sub.iter().copied().collect();
        while let Some(y) = queue.pop_front() {
            for &s in &gens {
                let z = g.product(y, s);
                if !in_sub[z] {
                    in_sub[z] = true;
                    sub.push(z);
                    queue.push_back(z);
                }
            }
        }
    }
    debug_assert_eq!(n % sub.len(), 0);
    n / sub.len()
}
