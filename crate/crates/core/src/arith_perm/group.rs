//! Subgroups of `Σ_k` small enough to hold in memory.
//!
//! Groups generated by transpositions are products of symmetric groups on
//! the connected components of the transposition graph (Young subgroups).
//! Those are kept in block form so that `Σ_12` and friends never have to be
//! listed. Every other group is closed by breadth-first multiplication and
//! stored as a sorted element list.

use std::collections::{HashMap, HashSet, VecDeque};

use super::perm::Permutation;
use crate::error::{Error, Result};

/// Largest degree accepted by [`perm_closure`].
pub const MAX_GROUP_DEGREE: usize = 12;

/// Largest element list [`perm_closure`] or [`PermGroup::elements`] will build.
pub const MAX_MATERIALIZED: usize = 3_628_800;

/// Largest number of cosets [`coset_table`] will enumerate.
pub const MAX_COSETS: usize = 3_628_800;

#[derive(Debug, Clone)]
enum Repr {
    Young {
        block_of: Vec<usize>,
        blocks: Vec<Vec<usize>>,
    },
    Listed(Vec<Permutation>),
}

#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    order: u128,
    repr: Repr,
}

pub fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// The subgroup of `Σ_k` generated by `gens`.
pub fn perm_closure(gens: &[Permutation], k: usize) -> Result<PermGroup> {
    if k > MAX_GROUP_DEGREE {
        return Err(Error::Capacity {
            what: "group degree",
            size: k,
            max: MAX_GROUP_DEGREE,
        });
    }
    if let Some(g) = gens.iter().find(|g| g.degree() != k) {
        return Err(Error::DegreeMismatch {
            expected: k,
            found: g.degree(),
        });
    }
    let transpositions: Option<Vec<(usize, usize)>> = gens
        .iter()
        .filter(|g| !g.is_identity())
        .map(Permutation::as_transposition)
        .collect();
    if let Some(ts) = transpositions {
        return Ok(young(gens.to_vec(), k, &ts));
    }

    let id = Permutation::identity(k);
    let mut seen: HashSet<Permutation> = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x * *g;
            if seen.insert(y) {
                if seen.len() > MAX_MATERIALIZED {
                    return Err(Error::Capacity {
                        what: "group order",
                        size: seen.len(),
                        max: MAX_MATERIALIZED,
                    });
                }
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(PermGroup {
        degree: k,
        generators: gens.to_vec(),
        order: elements.len() as u128,
        repr: Repr::Listed(elements),
    })
}

fn young(generators: Vec<Permutation>, k: usize, transpositions: &[(usize, usize)]) -> PermGroup {
    // union-find over 0-based points
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for &(i, j) in transpositions {
        let a = find(&mut parent, i - 1);
        let b = find(&mut parent, j - 1);
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut root_block: HashMap<usize, usize> = HashMap::new();
    let mut block_of = vec![0; k];
    for x in 0..k {
        let r = find(&mut parent, x);
        let b = *root_block.entry(r).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        blocks[b].push(x);
        block_of[x] = b;
    }
    let order = blocks.iter().map(|b| factorial(b.len())).product();
    PermGroup {
        degree: k,
        generators,
        order,
        repr: Repr::Young { block_of, blocks },
    }
}

impl PermGroup {
    pub fn symmetric(k: usize) -> Result<Self> {
        let gens: Vec<Permutation> = (1..k)
            .map(|i| Permutation::transposition(k, i, i + 1))
            .collect();
        perm_closure(&gens, k)
    }

    pub fn trivial(k: usize) -> Result<Self> {
        perm_closure(&[], k)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn index_in_symmetric(&self) -> u128 {
        factorial(self.degree) / self.order
    }

    pub fn is_symmetric(&self) -> bool {
        self.order == factorial(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        match &self.repr {
            Repr::Young { block_of, .. } => {
                (0..self.degree).all(|i| block_of[p.apply(i)] == block_of[i])
            }
            Repr::Listed(elements) => elements.binary_search(p).is_ok(),
        }
    }

    /// Same subgroup of `Σ_k`, decided by order and mutual generator membership.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order == other.order
            && other.generators.iter().all(|g| self.contains(g))
            && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Sorted element list.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        match &self.repr {
            Repr::Listed(e) => Ok(e.clone()),
            Repr::Young { blocks, .. } => {
                if self.order > MAX_MATERIALIZED as u128 {
                    return Err(Error::Capacity {
                        what: "group order",
                        size: self.order.min(usize::MAX as u128) as usize,
                        max: MAX_MATERIALIZED,
                    });
                }
                let mut out = vec![Permutation::identity(self.degree)];
                for block in blocks.iter().filter(|b| b.len() > 1) {
                    let local: Vec<Permutation> = super::perm::all_permutations(block.len())
                        .map(|lp| {
                            let mut images: Vec<usize> = (0..self.degree).collect();
                            for (a, &pt) in block.iter().enumerate() {
                                images[pt] = block[lp.apply(a)];
                            }
                            Permutation::from_images(&images).expect("block permutation")
                        })
                        .collect();
                    out = out
                        .iter()
                        .flat_map(|x| local.iter().map(move |l| *x * *l))
                        .collect();
                }
                out.sort_unstable();
                Ok(out)
            }
        }
    }

    /// Lexicographically least element `h ∘ x`, `h ∈ H`, of the right coset `Hx`.
    pub fn coset_key(&self, x: &Permutation) -> Permutation {
        match &self.repr {
            Repr::Young { block_of, blocks } => {
                let mut next = vec![0usize; blocks.len()];
                let mut images = vec![0usize; self.degree];
                for (i, slot) in images.iter_mut().enumerate() {
                    let b = block_of[x.apply(i)];
                    *slot = blocks[b][next[b]];
                    next[b] += 1;
                }
                Permutation::from_images(&images).expect("coset key")
            }
            Repr::Listed(elements) => elements
                .iter()
                .map(|h| *h * *x)
                .min()
                .expect("groups are non-empty"),
        }
    }
}

/// Right-coset action of generators on `H \ Σ_k`.
#[derive(Debug, Clone)]
pub struct CosetTable {
    /// Representative `x_c` of each coset `H x_c`; coset 0 is `H`.
    pub reps: Vec<Permutation>,
    /// `table[c][s]` is the coset of `x_c · g_s`.
    pub table: Vec<Vec<usize>>,
    /// BFS tree edge `(parent coset, generator)` that discovered each coset.
    pub parent: Vec<Option<(usize, usize)>>,
    inverse: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Coset reached from `c` by the inverse of generator `s`.
    pub fn inverse_step(&self, c: usize, s: usize) -> usize {
        self.inverse[c][s]
    }

    /// Generator indices spelling the representative of coset `c` from coset 0.
    pub fn rep_word(&self, c: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = c;
        while let Some((p, s)) = self.parent[cur] {
            word.push(s);
            cur = p;
        }
        word.reverse();
        word
    }
}

/// Coset table of `H` under right multiplication by `acting_gens`,
/// numbered breadth-first from `H` with generators in input order.
pub fn coset_table(h: &PermGroup, acting_gens: &[Permutation]) -> Result<CosetTable> {
    if let Some(g) = acting_gens.iter().find(|g| g.degree() != h.degree()) {
        return Err(Error::DegreeMismatch {
            expected: h.degree(),
            found: g.degree(),
        });
    }
    let id = Permutation::identity(h.degree());
    let mut index: HashMap<Permutation, usize> = HashMap::from([(h.coset_key(&id), 0)]);
    let mut reps = vec![id];
    let mut parent = vec![None];
    let mut table: Vec<Vec<usize>> = Vec::new();
    let mut c = 0;
    while c < reps.len() {
        let mut row = Vec::with_capacity(acting_gens.len());
        for (s, g) in acting_gens.iter().enumerate() {
            let y = reps[c] * *g;
            let key = h.coset_key(&y);
            let next_id = reps.len();
            let target = *index.entry(key).or_insert(next_id);
            if target == next_id {
                if next_id >= MAX_COSETS {
                    return Err(Error::Capacity {
                        what: "coset count",
                        size: next_id + 1,
                        max: MAX_COSETS,
                    });
                }
                reps.push(y);
                parent.push(Some((c, s)));
            }
            row.push(target);
        }
        table.push(row);
        c += 1;
    }
    let mut inverse = vec![vec![usize::MAX; acting_gens.len()]; reps.len()];
    for (c, row) in table.iter().enumerate() {
        for (s, &d) in row.iter().enumerate() {
            inverse[d][s] = c;
        }
    }
    Ok(CosetTable {
        reps,
        table,
        parent,
        inverse,
    })
}
