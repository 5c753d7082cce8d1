//! Group rings `RG` over finite groups, with the augmentation map.

use crate::construct::{additive_span, check_cap, checked_power, decode_digits, encode_digits};
use crate::error::{Result, RingError};
use crate::group::{GroupTable, Subgroup};
use crate::ring::RingTable;
use crate::set::ElementSet;

/// A group ring together with the base ring and group it was built from.
///
/// Element `x` of `ring` is the coefficient vector whose little-endian
/// base-`|R|` digits are the coefficients of the group elements `0..|G|`.
#[derive(Debug, Clone)]
pub struct GroupRing {
    pub ring: RingTable,
    pub base: RingTable,
    pub group: GroupTable,
}

fn format_element(base: &RingTable, group: &GroupTable, coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != base.zero())
        .map(|(g, &c)| {
            if g == group.identity() {
                base.name(c).to_string()
            } else if c == base.one() {
                group.name(g).to_string()
            } else {
                format!("{}·{}", base.name(c), group.name(g))
            }
        })
        .collect();
    if terms.is_empty() {
        base.name(base.zero()).to_string()
    } else {
        terms.join(" + ")
    }
}

/// Builds `RG` with convolution multiplication.
pub fn make_group_ring(r: &RingTable, g: &GroupTable, cap: usize) -> Result<GroupRing> {
    let label = format!("GR({},{})", r.label(), g.label());
    let order = check_cap(|| label.clone(), checked_power(r.order(), g.order()), cap)?;
    let q = r.order();
    let k = g.order();
    let names = (0..order)
        .map(|x| format_element(r, g, &decode_digits(x, q, k)))
        .collect();
    let zero = encode_digits(&vec![r.zero(); k], q);
    let mut unit = vec![r.zero(); k];
    unit[g.identity()] = r.one();
    let ring = RingTable::from_fns(
        label,
        order,
        zero,
        encode_digits(&unit, q),
        names,
        |x, y| {
            let (dx, dy) = (decode_digits(x, q, k), decode_digits(y, q, k));
            let sum: Vec<usize> = dx.iter().zip(&dy).map(|(&a, &b)| r.add(a, b)).collect();
            encode_digits(&sum, q)
        },
        |x, y| {
            let (dx, dy) = (decode_digits(x, q, k), decode_digits(y, q, k));
            let mut prod = vec![r.zero(); k];
            for (a, &ca) in dx.iter().enumerate() {
                if ca == r.zero() {
                    continue;
                }
                for (b, &cb) in dy.iter().enumerate() {
                    let slot = g.op(a, b);
                    prod[slot] = r.add(prod[slot], r.mul(ca, cb));
                }
            }
            encode_digits(&prod, q)
        },
    )?;
    Ok(GroupRing {
        ring,
        base: r.clone(),
        group: g.clone(),
    })
}

impl GroupRing {
    pub fn coefficients(&self, x: usize) -> Vec<usize> {
        decode_digits(x, self.base.order(), self.group.order())
    }

    pub fn encode(&self, coeffs: &[usize]) -> usize {
        encode_digits(coeffs, self.base.order())
    }

    /// The base-ring element `a` as `a·1`.
    pub fn embed_scalar(&self, a: usize) -> usize {
        let mut coeffs = vec![self.base.zero(); self.group.order()];
        coeffs[self.group.identity()] = a;
        self.encode(&coeffs)
    }

    /// The group element `g` as the basis vector `1·g`.
    pub fn embed_group(&self, g: usize) -> usize {
        let mut coeffs = vec![self.base.zero(); self.group.order()];
        coeffs[g] = self.base.one();
        self.encode(&coeffs)
    }

    /// Coefficient sum `Σ r_g g ↦ Σ r_g`.
    pub fn augmentation(&self, x: usize) -> usize {
        self.coefficients(x)
            .into_iter()
            .fold(self.base.zero(), |acc, c| self.base.add(acc, c))
    }

    /// Elements all of whose coefficients lie in `allowed` (a subset of the
    /// base ring), e.g. `Δ(R)G`.
    pub fn with_coefficients_in(&self, allowed: &ElementSet) -> ElementSet {
        ElementSet::from_predicate(self.ring.order(), |x| {
            self.coefficients(x).into_iter().all(|c| allowed.contains(c))
        })
    }

    /// Checks that the augmentation is a unital ring homomorphism on every
    /// pair, returning the first failing pair.
    pub fn check_augmentation_homomorphism(&self) -> std::result::Result<(), Vec<usize>> {
        let eps: Vec<usize> = self.ring.elements().map(|x| self.augmentation(x)).collect();
        if eps[self.ring.one()] != self.base.one() {
            return Err(vec![self.ring.one()]);
        }
        for x in self.ring.elements() {
            for y in self.ring.elements() {
                if eps[self.ring.add(x, y)] != self.base.add(eps[x], eps[y])
                    || eps[self.ring.mul(x, y)] != self.base.mul(eps[x], eps[y])
                {
                    return Err(vec![x, y]);
                }
            }
        }
        Ok(())
    }

    /// Subset of `RG` supported on a subgroup, with the identification of the
    /// standalone ring `RH` inside `RG`.
    pub fn subgroup_ring(&self, h: &Subgroup, cap: usize) -> Result<SubgroupRing> {
        let rh = make_group_ring(&self.base, &h.table, cap)?;
        let to_parent: Vec<usize> = rh
            .ring
            .elements()
            .map(|x| {
                let local = rh.coefficients(x);
                let mut coeffs = vec![self.base.zero(); self.group.order()];
                for (hi, &c) in local.iter().enumerate() {
                    coeffs[h.embedding[hi]] = c;
                }
                self.encode(&coeffs)
            })
            .collect();
        let support = ElementSet::from_indices(self.ring.order(), to_parent.iter().copied());
        Ok(SubgroupRing {
            rh,
            to_parent,
            support,
        })
    }
}

/// `RH` for a subgroup `H ≤ G`, identified with its image in `RG`.
#[derive(Debug, Clone)]
pub struct SubgroupRing {
    pub rh: GroupRing,
    /// `to_parent[x]` is the index in `RG` of element `x` of `RH`.
    pub to_parent: Vec<usize>,
    /// Image of `RH` in `RG`.
    pub support: ElementSet,
}

impl SubgroupRing {
    pub fn from_parent(&self, x: usize) -> Option<usize> {
        self.to_parent.iter().position(|&p| p == x)
    }
}

/// Kernel of the augmentation, cross-checked against the additive span of
/// `{ r(1 - g) : r ∈ R, g ≠ 1 }`.
pub fn augmentation_ideal(gr: &GroupRing) -> Result<ElementSet> {
    let kernel = ElementSet::from_predicate(gr.ring.order(), |x| gr.augmentation(x) == gr.base.zero());
    let one = gr.ring.one();
    let gens: Vec<usize> = gr
        .group
        .elements()
        .filter(|&g| g != gr.group.identity())
        .flat_map(|g| {
            let one_minus_g = gr.ring.sub(one, gr.embed_group(g));
            gr.base
                .elements()
                .map(move |a| (a, one_minus_g))
        })
        .map(|(a, v)| gr.ring.mul(gr.embed_scalar(a), v))
        .collect();
    let span = additive_span(&gr.ring, &gens);
    if span != kernel {
        return Err(RingError::Inconsistent(format!(
            "{}: augmentation kernel ({} elements) differs from the span of 1-g ({} elements)",
            gr.ring.label(),
            kernel.len(),
            span.len()
        )));
    }
    Ok(kernel)
}

/// `RG` for a subgroup given by its member list.
pub fn embed_subgroup_ring(gr: &GroupRing, h: &Subgroup, cap: usize) -> Result<SubgroupRing> {
    gr.subgroup_ring(h, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::make_zn;
    use crate::group::{make_cyclic, subgroup_generated};
    use crate::ring::{verify_ring_axioms, DEFAULT_SIZE_CAP as CAP};

    fn gr(n: usize, c: usize) -> GroupRing {
        make_group_ring(&make_zn(n).unwrap(), &make_cyclic(c, CAP).unwrap(), CAP).unwrap()
    }

    #[test]
    fn z2c2_structure() {
        let r = gr(2, 2);
        assert_eq!(r.ring.order(), 4);
        let one_plus_g = r.encode(&[1, 1]);
        assert_eq!(r.ring.name(one_plus_g), "1 + g");
        assert_eq!(r.ring.mul(one_plus_g, one_plus_g), r.ring.zero());
        assert_eq!(r.augmentation(one_plus_g), 0);
        assert_eq!(augmentation_ideal(&r).unwrap().to_vec(), vec![0, one_plus_g]);
        verify_ring_axioms(&r.ring).unwrap();
    }

    #[test]
    fn trivial_group_gives_base_ring() {
        let r = gr(2, 1);
        assert_eq!(r.ring.order(), 2);
        assert_eq!(r.ring.add(1, 1), 0);
        assert_eq!(r.ring.mul(1, 1), 1);
        assert_eq!(augmentation_ideal(&r).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn augmentation_values() {
        let r = gr(3, 3);
        assert_eq!(r.ring.order(), 27);
        assert_eq!(r.augmentation(r.encode(&[1, 1, 1])), 0);
        assert_eq!(augmentation_ideal(&r).unwrap().len(), 9);
        let r4 = gr(4, 2);
        let x = r4.encode(&[3, 2]);
        assert_eq!(r4.ring.name(x), "3 + 2·g");
        assert_eq!(r4.augmentation(x), 1);
        r4.check_augmentation_homomorphism().unwrap();
    }

    #[test]
    fn z2c4_axioms_and_embedding() {
        let r = gr(2, 4);
        assert_eq!(r.ring.order(), 16);
        verify_ring_axioms(&r.ring).unwrap();
        let h = subgroup_generated(&r.group, 2).unwrap();
        let sub = r.subgroup_ring(&h, CAP).unwrap();
        assert_eq!(sub.support.len(), 4);
        // 1 + g^2 in RH maps to 1 + g^2 in RG
        let local = sub.rh.encode(&[1, 1]);
        assert_eq!(sub.to_parent[local], r.encode(&[1, 0, 1, 0]));
        for x in sub.rh.ring.elements() {
            for y in sub.rh.ring.elements() {
                assert_eq!(
                    sub.to_parent[sub.rh.ring.mul(x, y)],
                    r.ring.mul(sub.to_parent[x], sub.to_parent[y])
                );
            }
        }
    }

    #[test]
    fn cap_applies_to_order_power() {
        let err = make_group_ring(&make_zn(3).unwrap(), &make_cyclic(9, CAP).unwrap(), CAP).unwrap_err();
        assert!(matches!(err, RingError::SizeCap { order: 19683, .. }));
    }
}
