//! Homomorphisms given by generator images, and coset actions.
//!
//! A map `gᵢ ↦ hᵢ` extends to a homomorphism exactly when the subgroup of
//! `domain × codomain` generated by the pairs `(gᵢ, hᵢ)` has the order of
//! the domain. That subgroup (the graph of the map) is kept and reused to
//! evaluate the map and to compute its kernel.

use std::collections::HashMap;

use crate::chain::StabChain;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::{Bounds, GroupError, Result};

#[derive(Clone, Debug)]
pub struct GroupHom {
    domain: PermGroup,
    codomain: PermGroup,
    images: Vec<Permutation>,
    /// Graph of the map on `domain.degree() + codomain.degree()` points,
    /// with the domain's base first.
    graph: PermGroup,
}

fn pair(g: &Permutation, h: &Permutation) -> Permutation {
    let d1 = g.degree();
    let mut images: Vec<u32> = g.images().to_vec();
    images.extend(h.images().iter().map(|&x| x + d1 as u32));
    Permutation::from_images_unchecked(images)
}

impl GroupHom {
    pub fn by_images(
        domain: &PermGroup,
        codomain: &PermGroup,
        images: Vec<Permutation>,
    ) -> Result<Self> {
        if images.len() != domain.generators().len() {
            return Err(GroupError::Precondition(format!(
                "{} images given for {} generators",
                images.len(),
                domain.generators().len()
            )));
        }
        for h in &images {
            if h.degree() != codomain.degree() {
                return Err(GroupError::DegreeMismatch {
                    expected: codomain.degree(),
                    found: h.degree(),
                });
            }
            if !codomain.has(h) {
                return Err(GroupError::NotAHomomorphism);
            }
        }
        let pairs: Vec<Permutation> = domain
            .generators()
            .iter()
            .zip(&images)
            .map(|(g, h)| pair(g, h))
            .collect();
        let total = domain.degree() + codomain.degree();
        let graph = PermGroup::with_base(total, &pairs, &domain.chain().base());
        if graph.order() != domain.order() {
            return Err(GroupError::NotAHomomorphism);
        }
        Ok(GroupHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            images,
            graph,
        })
    }

    pub fn domain(&self) -> &PermGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &PermGroup {
        &self.codomain
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.images
    }

    /// Image of a domain element.
    pub fn apply(&self, g: &Permutation) -> Result<Permutation> {
        if !self.domain.contains(g)? {
            return Err(GroupError::NotInGroup);
        }
        let d1 = self.domain.degree();
        let id2 = Permutation::identity(self.codomain.degree());
        let chain = self.graph.chain();
        let (residue, _) = chain.strip_from(&pair(g, &id2), 0);
        // residue = (g, 1) · (g, φ(g))⁻¹ = (1, φ(g)⁻¹)
        Ok(residue.restrict(d1, self.codomain.degree()).inverse())
    }

    pub fn image(&self) -> PermGroup {
        self.codomain.subgroup(&self.images)
    }

    pub fn kernel(&self) -> PermGroup {
        let d1 = self.domain.degree();
        let image = self.image();
        let prefix: Vec<usize> = image.chain().base().iter().map(|b| b + d1).collect();
        let chain = StabChain::build(
            d1 + self.codomain.degree(),
            self.graph.generators(),
            &prefix,
        );
        let gens: Vec<Permutation> = chain
            .stabilizer_generators(prefix.len())
            .iter()
            .map(|g| g.restrict(0, d1))
            .collect();
        self.domain.subgroup(&gens)
    }
}

/// Canonical representative key of the right coset `H g`: the lexicographically
/// least base image over the coset. `h` must be built on `g`'s parent base.
pub(crate) fn coset_key(h: &PermGroup, g: &Permutation, base: &[usize]) -> Vec<u32> {
    let mut x = g.clone();
    for level in h.chain().levels() {
        let mut best: Option<(u32, usize)> = None;
        for (i, &q) in level.orbit.iter().enumerate() {
            let v = x.images()[q as usize];
            if best.is_none_or(|(bv, _)| v < bv) {
                best = Some((v, i));
            }
        }
        let (_, i) = best.expect("orbit contains the base point");
        if i != 0 {
            x = level.transversal(i).then(&x);
        }
    }
    base.iter().map(|&b| x.images()[b]).collect()
}

/// Action of `g` on the right cosets of `h`, with its projection hom.
pub fn coset_action(
    g: &PermGroup,
    h: &PermGroup,
    bounds: &Bounds,
) -> Result<(PermGroup, GroupHom)> {
    if !g.contains_group(h) {
        return Err(GroupError::Precondition(
            "coset_action needs a subgroup".into(),
        ));
    }
    let index = g.order() / h.order();
    if index > bounds.max_index {
        return Err(GroupError::IndexTooLarge {
            index,
            bound: bounds.max_index,
        });
    }
    let base = g.chain().base();
    let hs = g.subgroup(h.generators());
    let n = index as usize;
    let mut reps: Vec<Permutation> = vec![g.identity()];
    let mut lookup: HashMap<Vec<u32>, usize> = HashMap::new();
    lookup.insert(coset_key(&hs, &g.identity(), &base), 0);
    let gens = g.generators();
    let mut images: Vec<Vec<u32>> = vec![Vec::with_capacity(n); gens.len()];
    let mut head = 0;
    while head < reps.len() {
        let r = reps[head].clone();
        for (s, gen) in gens.iter().enumerate() {
            let y = r.then(gen);
            let key = coset_key(&hs, &y, &base);
            let next = reps.len();
            let j = *lookup.entry(key).or_insert_with(|| {
                reps.push(y);
                next
            });
            images[s].push(j as u32);
        }
        head += 1;
    }
    debug_assert_eq!(reps.len(), n);
    let perms: Vec<Permutation> = images
        .into_iter()
        .map(Permutation::from_images_unchecked)
        .collect();
    let codomain = PermGroup::closure(n, &perms)?;
    let hom = GroupHom::by_images(g, &codomain, perms)?;
    Ok((codomain, hom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::closure(n, &gens.iter().map(|s| p(n, s)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn identity_and_sign_maps() {
        let s3 = grp(3, &["(0 1)", "(0 1 2)"]);
        let id = GroupHom::by_images(&s3, &s3, s3.generators().to_vec()).unwrap();
        assert_eq!(id.kernel().order(), 1);
        let c2 = grp(2, &["(0 1)"]);
        let sign = GroupHom::by_images(&s3, &c2, vec![p(2, "(0 1)"), p(2, "()")]).unwrap();
        assert_eq!(sign.kernel().order(), 3);
        assert_eq!(sign.image().order(), 2);
        assert_eq!(sign.apply(&p(3, "(1 2)")).unwrap(), p(2, "(0 1)"));
        assert_eq!(sign.apply(&p(3, "(0 2 1)")).unwrap(), p(2, "()"));
    }

    #[test]
    fn certificate_rejects_bad_maps() {
        let c4 = grp(4, &["(0 1 2 3)"]);
        let c2 = grp(2, &["(0 1)"]);
        assert!(GroupHom::by_images(&c4, &c2, vec![p(2, "(0 1)")]).is_ok());
        let c2d = grp(4, &["(0 2)(1 3)"]);
        let c4d = grp(4, &["(0 1 2 3)"]);
        assert_eq!(
            GroupHom::by_images(&c2d, &c4d, vec![p(4, "(0 1 2 3)")]).unwrap_err(),
            GroupError::NotAHomomorphism
        );
    }

    #[test]
    fn quotient_of_s4_by_v4() {
        let s4 = grp(4, &["(0 1 2 3)", "(0 1)"]);
        let v4 = grp(4, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        let (q, hom) = coset_action(&s4, &v4, &Bounds::default()).unwrap();
        assert_eq!(q.order(), 6);
        assert!(hom.kernel().same_group(&v4));
        let (t, _) = coset_action(&s4, &s4, &Bounds::default()).unwrap();
        assert_eq!(t.order(), 1);
    }

    #[test]
    fn index_bound_enforced() {
        let s5 = grp(5, &["(0 1 2 3 4)", "(0 1)"]);
        let tight = Bounds { max_index: 10, ..Bounds::default() };
        assert!(matches!(
            coset_action(&s5, &PermGroup::trivial(5), &tight),
            Err(GroupError::IndexTooLarge { .. })
        ));
    }
}
