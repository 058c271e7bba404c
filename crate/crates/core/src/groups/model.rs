use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use super::element::{GroupElement, Perm};
use super::GroupError;

/// Which constructor produced a model; closed-form tables key off this.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Generic,
    Symmetric(u32),
    Alternating(u32),
    Cyclic(u32),
    Dihedral(u32),
    Quaternion,
    Gl2(u32),
    Sl2(u32),
    Pgl2(u32),
}

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    /// Index of the least element of the class.
    pub representative: usize,
    pub size: usize,
    pub rep_order: u32,
    pub members: Vec<u32>,
}

/// A finite group with all elements enumerated.
///
/// Elements are sorted by the carrier order, classes by `(size, least member)`
/// with the identity class first, so every index below is reproducible.
#[derive(Debug)]
pub struct GroupModel {
    descriptor: String,
    kind: GroupKind,
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
    index: BTreeMap<GroupElement, u32>,
    identity: usize,
    inverses: Vec<u32>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
    /// `powers[c][k]` is the class of `rep(c)^k` for `0 <= k < rep_order(c)`.
    powers: Vec<Vec<u32>>,
    exponent: u32,
}

pub type Group = Arc<GroupModel>;

/// Default bound on the number of elements enumerated by [`group_closure`].
pub const DEFAULT_MAX_ORDER: usize = 1_000_000;

/// Enumerates the group generated by `generators`.
pub fn group_closure(generators: &[GroupElement], max_order: usize) -> Result<Group, GroupError> {
    closure_with(generators, max_order, String::from("generic"), GroupKind::Generic)
}

pub(crate) fn closure_with(
    generators: &[GroupElement],
    max_order: usize,
    descriptor: String,
    kind: GroupKind,
) -> Result<Group, GroupError> {
    let identity_elem = match generators.first() {
        Some(g) => g.identity_like(),
        None => GroupElement::Perm(Perm::identity(0)),
    };
    if generators.iter().any(|g| !g.same_carrier(&identity_elem)) {
        return Err(GroupError::MixedCarriers);
    }

    let mut seen: BTreeMap<GroupElement, ()> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(identity_elem.clone(), ());
    queue.push_back(identity_elem.clone());
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.mul_unchecked(g);
            if !seen.contains_key(&y) {
                if seen.len() >= max_order {
                    return Err(GroupError::BoundExceeded { bound: max_order });
                }
                seen.insert(y.clone(), ());
                queue.push_back(y);
            }
        }
    }

    let elements: Vec<GroupElement> = seen.into_keys().collect();
    let index: BTreeMap<GroupElement, u32> =
        elements.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
    let identity = index[&identity_elem] as usize;
    let inverses: Vec<u32> = elements.iter().map(|e| index[&e.inverse()]).collect();

    let mut model = GroupModel {
        descriptor,
        kind,
        generators: generators.to_vec(),
        elements,
        index,
        identity,
        inverses,
        classes: Vec::new(),
        class_of: Vec::new(),
        powers: Vec::new(),
        exponent: 1,
    };
    model.compute_classes();
    Ok(Arc::new(model))
}

impl GroupModel {
    fn compute_classes(&mut self) {
        let n = self.elements.len();
        let gen_idx: Vec<(usize, usize)> = self
            .generators
            .iter()
            .map(|g| {
                let i = self.index[g] as usize;
                (i, self.inverses[i] as usize)
            })
            .collect();

        let mut assigned = vec![u32::MAX; n];
        let mut raw: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if assigned[start] != u32::MAX {
                continue;
            }
            let id = raw.len() as u32;
            let mut members = vec![start as u32];
            assigned[start] = id;
            let mut head = 0;
            while head < members.len() {
                let x = members[head] as usize;
                head += 1;
                for &(g, ginv) in &gen_idx {
                    let y = self.mul(self.mul(g, x), ginv);
                    if assigned[y] == u32::MAX {
                        assigned[y] = id;
                        members.push(y as u32);
                    }
                }
            }
            members.sort_unstable();
            raw.push(members);
        }

        // identity class first, then by size, then by least element
        let identity = self.identity as u32;
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by_key(|&c| (raw[c][0] != identity, raw[c].len(), raw[c][0]));
        let mut remap = vec![0u32; raw.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new as u32;
        }
        self.class_of = assigned.iter().map(|&c| remap[c as usize]).collect();

        let mut classes = Vec::with_capacity(raw.len());
        let mut powers = Vec::with_capacity(raw.len());
        let mut exponent = 1u32;
        for &old in &order {
            let members = core::mem::take(&mut raw[old]);
            let rep = members[0] as usize;
            let mut table = vec![self.class_of[self.identity]];
            let mut x = rep;
            while x != self.identity {
                table.push(self.class_of[x]);
                x = self.mul(x, rep);
            }
            let rep_order = table.len() as u32;
            exponent = exponent.lcm(&rep_order);
            classes.push(ConjugacyClass { representative: rep, size: members.len(), rep_order, members });
            powers.push(table);
        }
        self.classes = classes;
        self.powers = powers;
        self.exponent = exponent;
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).map(|&i| i as usize)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a].mul_unchecked(&self.elements[b]);
        self.index[&prod] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let ord = self.element_order(a) as i64;
        let k = k.rem_euclid(ord);
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.classes[self.class_of[a] as usize].rep_order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a] as usize
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].size
    }

    pub fn class_rep(&self, c: usize) -> usize {
        self.classes[c].representative
    }

    pub fn rep_order(&self, c: usize) -> u32 {
        self.classes[c].rep_order
    }

    /// Class of `rep(c)^k`, for any integer `k`.
    pub fn power_map(&self, c: usize, k: i64) -> usize {
        let table = &self.powers[c];
        table[k.rem_euclid(table.len() as i64) as usize] as usize
    }

    /// Class containing the inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.power_map(c, -1)
    }

    /// Index of the class containing the identity (always 0).
    pub fn identity_class(&self) -> usize {
        0
    }
}
