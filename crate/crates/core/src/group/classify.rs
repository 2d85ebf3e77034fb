//! Order-based classification of path-permutation groups.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::perm::Permutation;
use crate::young::factorial;

use super::action::{is_transitive, is_two_transitive, minimal_block_system, orbits};
use super::chain::StrongGeneratingChain;
use super::GroupError;

/// Order of the Weyl group of type `D_k`: `2^(k-1) k!`.
pub fn weyl_d_order(k: usize) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    (BigUint::one() << (k - 1)) * factorial(k as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedImage {
    pub verified: bool,
    pub image_order: BigUint,
    /// Per generator, the number of negated blocks.
    pub sign_changes: Vec<usize>,
}

/// Relabels a 2-block-preserving action as signed permutations.
///
/// Block `i` (blocks ordered by smallest point) is `{+(i+1), -(i+1)}`, its
/// smaller point being the positive one, encoded as points `2i` and `2i+1`.
/// Returns the relabeled generators and their sign-change counts.
fn signed_generators(gens: &[Permutation], blocks: &[Vec<u32>]) -> Result<(Vec<Permutation>, Vec<usize>), GroupError> {
    let degree = gens.first().map_or(blocks.len() * 2, Permutation::degree);
    let k = blocks.len();
    let mut owner = vec![u32::MAX; degree];
    let mut sorted: Vec<[u32; 2]> = Vec::with_capacity(k);
    for b in blocks {
        if b.len() != 2 || b[0] == b[1] {
            return Err(GroupError::BadBlocks("blocks must have two distinct points".into()));
        }
        sorted.push([b[0].min(b[1]), b[0].max(b[1])]);
    }
    sorted.sort_unstable();
    for (i, b) in sorted.iter().enumerate() {
        for &x in b {
            let slot = owner
                .get_mut(x as usize)
                .ok_or_else(|| GroupError::BadBlocks(format!("point {x} out of range")))?;
            if *slot != u32::MAX {
                return Err(GroupError::BadBlocks(format!("point {x} in two blocks")));
            }
            *slot = i as u32;
        }
    }
    if 2 * k != degree {
        return Err(GroupError::BadBlocks("blocks do not cover every point".into()));
    }
    let label = |x: u32| {
        let b = owner[x as usize];
        2 * b + u32::from(sorted[b as usize][1] == x)
    };
    let mut signed = Vec::with_capacity(gens.len());
    let mut sign_changes = Vec::with_capacity(gens.len());
    for g in gens {
        let mut images = vec![0u32; degree];
        let mut negations = 0;
        for (i, b) in sorted.iter().enumerate() {
            let (pa, pb) = (g.apply(b[0]), g.apply(b[1]));
            if owner[pa as usize] != owner[pb as usize] {
                return Err(GroupError::BadBlocks(format!(
                    "generator {g:?} splits block {{{}, {}}}",
                    b[0], b[1]
                )));
            }
            let (la, lb) = (label(pa), label(pb));
            negations += (la % 2) as usize;
            images[2 * i] = la;
            images[2 * i + 1] = lb;
        }
        sign_changes.push(negations);
        signed.push(Permutation::from_images_unchecked(images));
    }
    Ok((signed, sign_changes))
}

/// Checks that a group preserving 2-element blocks acts as the Weyl group `D_k`
/// on `±{1..k}`: every generator negates an even number of blocks and the
/// signed image has order `2^(k-1) k!`.
///
/// The parity of a sign-change count does not depend on which point of a
/// block is called positive, so the check is independent of the labeling.
pub fn signed_perm_image(gens: &[Permutation], blocks: &[Vec<u32>]) -> Result<SignedImage, GroupError> {
    let (signed, sign_changes) = signed_generators(gens, blocks)?;
    let k = blocks.len();
    let all_even = sign_changes.iter().all(|c| c % 2 == 0);
    let target = weyl_d_order(k);
    let chain = StrongGeneratingChain::with_bound(&signed, 2 * k, all_even.then_some(&target))?;
    let image_order = chain.order();
    Ok(SignedImage {
        verified: all_even && k >= 1 && image_order == target,
        image_order,
        sign_changes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupTag {
    Trivial,
    Symmetric,
    Alternating,
    WeylD,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub tag: GroupTag,
    /// Degree of the action (number of paths).
    pub degree: usize,
    /// Rank `k` for `WeylD`.
    pub rank: Option<usize>,
    pub d_verified: bool,
    pub order: BigUint,
    pub transitive: bool,
    pub two_transitive: bool,
    pub all_generators_even: bool,
    /// Blocks of the minimal block system, when one was computed.
    pub blocks: Option<Vec<Vec<u32>>>,
}

#[derive(Serialize)]
struct ClassificationDoc<'a> {
    tag: GroupTag,
    #[serde(rename = "N")]
    n: usize,
    k: Option<usize>,
    order: String,
    transitive: bool,
    two_transitive: bool,
    generators_even: bool,
    d_verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    blocks: Option<&'a Vec<Vec<u32>>>,
}

impl Classification {
    /// Short label such as `Alternating(48)` or `WeylD(8)`.
    pub fn label(&self) -> String {
        match self.tag {
            GroupTag::Trivial => "Trivial".into(),
            GroupTag::Symmetric => format!("Symmetric({})", self.degree),
            GroupTag::Alternating => format!("Alternating({})", self.degree),
            GroupTag::WeylD => format!("WeylD({})", self.rank.unwrap_or(0)),
            GroupTag::Other => format!("Other({})", self.order),
        }
    }

    pub fn to_json_value(&self, with_blocks: bool) -> serde_json::Value {
        serde_json::to_value(ClassificationDoc {
            tag: self.tag,
            n: self.degree,
            k: self.rank,
            order: self.order.to_string(),
            transitive: self.transitive,
            two_transitive: self.two_transitive,
            generators_even: self.all_generators_even,
            d_verified: self.d_verified,
            blocks: if with_blocks { self.blocks.as_ref() } else { None },
        })
        .expect("classification serializes")
    }
}

/// A proven upper bound on `|⟨gens⟩|` from orbits, parity and 2-blocks.
fn upper_bound(gens: &[Permutation], degree: usize, blocks: Option<&[Vec<u32>]>) -> BigUint {
    let orbs = orbits(gens, degree);
    let mut bound = orbs
        .iter()
        .fold(BigUint::one(), |acc, o| acc * factorial(o.len() as u64));
    let all_even = gens.iter().all(Permutation::is_even);
    if all_even && orbs.iter().any(|o| o.len() >= 2) {
        bound >>= 1;
    }
    if let Some(blocks) = blocks {
        let (m, b) = (blocks.len(), blocks[0].len());
        let wreath = factorial(b as u64).pow(m as u32) * factorial(m as u64);
        bound = bound.min(wreath);
        if b == 2 {
            if let Ok((_, changes)) = signed_generators(gens, blocks) {
                if changes.iter().all(|c| c % 2 == 0) {
                    bound = bound.min(weyl_d_order(m));
                }
            }
        }
    }
    bound
}

/// Schreier–Sims chain for `⟨gens⟩`, stopping early at the orbit/parity bound.
pub fn schreier_sims(gens: &[Permutation], degree: usize) -> Result<StrongGeneratingChain, GroupError> {
    let bound = upper_bound(gens, degree, None);
    Ok(StrongGeneratingChain::with_bound(gens, degree, Some(&bound))?)
}

pub fn group_order(gens: &[Permutation], degree: usize) -> Result<BigUint, GroupError> {
    Ok(schreier_sims(gens, degree)?.order())
}

/// Tags the group by its exact order.
///
/// `Symmetric` and `Alternating` are certified by order alone (an index-2
/// subgroup of the full symmetric group is the alternating group). `WeylD`
/// requires a system of 2-blocks; `d_verified` additionally requires the
/// action to be the natural signed action of `D_k`.
pub fn classify_group(gens: &[Permutation], degree: usize) -> Result<Classification, GroupError> {
    for g in gens {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch(g.degree(), degree));
        }
    }
    let transitive = is_transitive(gens, degree);
    let two_transitive = is_two_transitive(gens, degree);
    let all_generators_even = gens.iter().all(Permutation::is_even);
    let blocks = if transitive && !two_transitive && degree >= 4 {
        minimal_block_system(gens, degree)?
    } else {
        None
    };
    let bound = upper_bound(gens, degree, blocks.as_deref());
    let chain = StrongGeneratingChain::with_bound(gens, degree, Some(&bound))?;
    let order = chain.order();

    let mut out = Classification {
        tag: GroupTag::Other,
        degree,
        rank: None,
        d_verified: false,
        order,
        transitive,
        two_transitive,
        all_generators_even,
        blocks: None,
    };
    let full = factorial(degree as u64);
    if out.order.is_one() {
        out.tag = GroupTag::Trivial;
    } else if out.order == full {
        out.tag = GroupTag::Symmetric;
    } else if degree >= 3 && out.order == &full >> 1 {
        out.tag = GroupTag::Alternating;
    } else if degree.is_multiple_of(2) && degree >= 4 && out.order == weyl_d_order(degree / 2) {
        if let Some(b) = blocks.as_ref().filter(|b| b[0].len() == 2) {
            out.tag = GroupTag::WeylD;
            out.rank = Some(degree / 2);
            out.d_verified = signed_perm_image(gens, b)?.verified;
        }
    }
    out.blocks = blocks;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, c).unwrap()
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(weyl_d_order(8), 5_160_960u32.into());
        assert_eq!(weyl_d_order(3), 24u32.into());
    }

    #[test]
    fn single_flip_is_not_type_d() {
        let img = signed_perm_image(&[cyc(2, &[&[0, 1]])], &[vec![0, 1]]).unwrap();
        assert!(!img.verified);
        assert_eq!(img.sign_changes, vec![1]);
    }

    #[test]
    fn s4_does_not_preserve_arbitrary_pairs() {
        let gens = [cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])];
        let e = signed_perm_image(&gens, &[vec![0, 2], vec![1, 3]]).unwrap_err();
        assert!(matches!(e, GroupError::BadBlocks(_)));
    }

    #[test]
    fn natural_d3_is_verified() {
        // D_3 on ±{1,2,3}, points 2i / 2i+1 for +i / -i
        let swap12 = cyc(6, &[&[0, 2], &[1, 3]]);
        let swap23 = cyc(6, &[&[2, 4], &[3, 5]]);
        let flip_pair = cyc(6, &[&[0, 3], &[1, 2]]);
        let blocks = vec![vec![0, 1], vec![2, 3], vec![4, 5]];
        let img = signed_perm_image(&[swap12.clone(), swap23.clone(), flip_pair.clone()], &blocks).unwrap();
        assert!(img.verified);
        assert_eq!(img.image_order, 24u32.into());
        let c = classify_group(&[swap12, swap23, flip_pair], 6).unwrap();
        assert_eq!(c.tag, GroupTag::WeylD);
        assert!(c.d_verified);
        assert_eq!(c.label(), "WeylD(3)");
    }

    #[test]
    fn classifies_small_cases() {
        let s3 = classify_group(&[cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])], 3).unwrap();
        assert_eq!(s3.tag, GroupTag::Symmetric);
        let a4 = classify_group(&[cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[1, 2, 3]])], 4).unwrap();
        assert_eq!(a4.tag, GroupTag::Alternating);
        assert!(a4.all_generators_even);
        let t = classify_group(&[], 1).unwrap();
        assert_eq!(t.tag, GroupTag::Trivial);
        let s2 = classify_group(&[cyc(2, &[&[0, 1]])], 2).unwrap();
        assert_eq!(s2.label(), "Symmetric(2)");
        let c5 = classify_group(&[cyc(5, &[&[0, 1, 2, 3, 4]])], 5).unwrap();
        assert_eq!(c5.tag, GroupTag::Other);
        assert_eq!(c5.order, 5u32.into());
    }

    #[test]
    fn json_shape() {
        let s3 = classify_group(&[cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])], 3).unwrap();
        let v = s3.to_json_value(false);
        assert_eq!(v["tag"], "Symmetric");
        assert_eq!(v["N"], 3);
        assert_eq!(v["order"], "6");
        assert!(v["k"].is_null());
        assert_eq!(v["d_verified"], false);
    }
}
