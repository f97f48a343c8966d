//! Permutations of {1..7}, the SL(3,2) embedding through the action on
//! the seven nonzero vectors of F₂³, and the 21-bit packing.

use super::mat3::Mat3;
use crate::error::{Error, Result};

/// A permutation of `{1, ..., 7}`; `images[i]` is the image of `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Perm7 {
    images: [u8; 7],
}

impl Perm7 {
    pub const IDENTITY: Perm7 = Perm7 { images: [1, 2, 3, 4, 5, 6, 7] };

    pub fn new(images: [u8; 7]) -> Result<Perm7> {
        let mut seen = [false; 8];
        for &v in &images {
            if v == 0 || v > 7 || seen[v as usize] {
                return Err(Error::Parameter("images must be a permutation of 1..=7".into()));
            }
            seen[v as usize] = true;
        }
        Ok(Perm7 { images })
    }

    pub fn image(&self, point: u8) -> u8 {
        debug_assert!((1..=7).contains(&point));
        self.images[(point - 1) as usize]
    }

    pub fn images(&self) -> [u8; 7] {
        self.images
    }

    /// `self ∘ other`: apply `other` first. Matches matrix order, so
    /// `embed(A·B) = embed(A).compose(embed(B))`.
    pub fn compose(&self, other: &Perm7) -> Perm7 {
        let mut images = [0u8; 7];
        for i in 1..=7u8 {
            images[(i - 1) as usize] = self.image(other.image(i));
        }
        Perm7 { images }
    }

    pub fn inverse(&self) -> Perm7 {
        let mut images = [0u8; 7];
        for i in 1..=7u8 {
            images[(self.image(i) - 1) as usize] = i;
        }
        Perm7 { images }
    }
}

/// Index 1..=7 read as a 3-bit vector, most significant bit first.
fn index_to_vec(i: u8) -> [u8; 3] {
    [(i >> 2) & 1, (i >> 1) & 1, i & 1]
}

fn vec_to_index(v: [u8; 3]) -> u8 {
    (v[0] << 2) | (v[1] << 1) | v[2]
}

/// The action of an invertible matrix on the seven nonzero vectors of
/// F₂³: a group monomorphism SL(3,2) → S₇.
pub fn embed_sl32_s7(m: &Mat3) -> Result<Perm7> {
    if !m.is_invertible() {
        return Err(Error::Parameter("only invertible matrices embed into S7".into()));
    }
    let mut images = [0u8; 7];
    for i in 1..=7u8 {
        images[(i - 1) as usize] = vec_to_index(m.apply(index_to_vec(i)));
    }
    Ok(Perm7 { images })
}

/// Invert the embedding: rebuild the matrix from the images of the three
/// basis vectors and confirm the permutation really is in the image.
#[allow(clippy::needless_range_loop)]
pub fn matrix_from_perm(p: &Perm7) -> Result<Mat3> {
    // e₁ = index 4, e₂ = index 2, e₃ = index 1
    let cols = [index_to_vec(p.image(4)), index_to_vec(p.image(2)), index_to_vec(p.image(1))];
    let mut rows = [[0u8; 3]; 3];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..3 {
            rows[i][j] = col[i];
        }
    }
    let m = Mat3::new(rows).expect("bits by construction");
    if !m.is_invertible() || &embed_sl32_s7(&m)? != p {
        return Err(Error::Parameter(
            "permutation is not in the embedded copy of SL(3,2)".into(),
        ));
    }
    Ok(m)
}

/// A permutation of {1..7} packed into 21 bits: the field for point `i`
/// occupies bit positions `3(i−1)..3i` (position 0 is the leftmost /
/// most significant bit of the string) and holds `image − 1` big-endian.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PackedS7 {
    bits: u32,
}

impl PackedS7 {
    /// Wrap a raw 21-bit string. Contents are validated by [`unpack_s7`].
    pub fn from_bits(bits: u32) -> Result<PackedS7> {
        if bits >> 21 != 0 {
            return Err(Error::format("packed", "more than 21 bits"));
        }
        Ok(PackedS7 { bits })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn to_bit_string(&self) -> String {
        (0..21).map(|pos| if self.bit(pos) { '1' } else { '0' }).collect()
    }

    pub fn from_bit_string(s: &str) -> Result<PackedS7> {
        if s.len() != 21 {
            return Err(Error::format("packed", format!("expected 21 bits, got {}", s.len())));
        }
        let mut bits = 0u32;
        for c in s.chars() {
            bits = (bits << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::format("packed", format!("invalid bit `{c}`"))),
                };
        }
        Ok(PackedS7 { bits })
    }

    fn bit(&self, pos: u32) -> bool {
        (self.bits >> (20 - pos)) & 1 == 1
    }
}

/// Pack a permutation into its 21-bit representation.
pub fn pack_s7(p: &Perm7) -> PackedS7 {
    let mut bits = 0u32;
    for i in 1..=7u8 {
        bits = (bits << 3) | u32::from(p.image(i) - 1);
    }
    PackedS7 { bits }
}

/// Decode 21 bits back into a permutation; any string that is not the
/// packing of a valid permutation is rejected.
pub fn unpack_s7(packed: &PackedS7) -> Result<Perm7> {
    let mut images = [0u8; 7];
    let mut seen = [false; 8];
    for (i, slot) in images.iter_mut().enumerate() {
        let field = ((packed.bits >> (3 * (6 - i))) & 0b111) as u8;
        if field > 6 {
            return Err(Error::format("packed", format!("field {i} out of range")));
        }
        let image = field + 1;
        if seen[image as usize] {
            return Err(Error::format("packed", format!("image {image} repeated")));
        }
        seen[image as usize] = true;
        *slot = image;
    }
    Ok(Perm7 { images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn identity_embeds_to_identity() {
        assert_eq!(embed_sl32_s7(&Mat3::IDENTITY).unwrap(), Perm7::IDENTITY);
    }

    #[test]
    fn transvection_embedding_worked_example() {
        // oracle: enumerate m·v for all seven indices
        let m = Mat3::transvection(0, 2);
        let mut expected = [0u8; 7];
        for i in 1..=7u8 {
            let v = index_to_vec(i);
            let w = [(v[0] ^ v[2]), v[1], v[2]];
            expected[(i - 1) as usize] = vec_to_index(w);
        }
        assert_eq!(expected, [5, 2, 7, 4, 1, 6, 3]); // (1 5)(3 7), fixing 2,4,6
        assert_eq!(embed_sl32_s7(&m).unwrap().images(), expected);
    }

    #[test]
    fn embedding_is_injective_on_all_168() {
        let all = Mat3::enumerate_sl32();
        let images: std::collections::HashSet<_> =
            all.iter().map(|m| embed_sl32_s7(m).unwrap()).collect();
        assert_eq!(images.len(), 168);
    }

    #[test]
    fn embedding_is_multiplicative() {
        let all = Mat3::enumerate_sl32();
        for a in all.iter().step_by(7) {
            for b in all.iter().step_by(5) {
                let lhs = embed_sl32_s7(&a.mul(b)).unwrap();
                let rhs = embed_sl32_s7(a).unwrap().compose(&embed_sl32_s7(b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn singular_matrix_rejected() {
        let zero = Mat3::new([[0; 3]; 3]).unwrap();
        assert!(embed_sl32_s7(&zero).is_err());
    }

    #[test]
    fn matrix_from_perm_inverts_embedding() {
        for m in Mat3::enumerate_sl32() {
            let p = embed_sl32_s7(&m).unwrap();
            assert_eq!(matrix_from_perm(&p).unwrap(), m);
        }
    }

    #[test]
    fn matrix_from_perm_rejects_outsiders() {
        // a transposition of two points; |image of SL(3,2)| = 168 < 5040
        let swap = Perm7::new([2, 1, 3, 4, 5, 6, 7]).unwrap();
        assert!(matrix_from_perm(&swap).is_err());
    }

    #[test]
    fn identity_packing_layout() {
        let packed = pack_s7(&Perm7::IDENTITY);
        assert_eq!(packed.to_bit_string(), "000001010011100101110");
        assert_eq!(unpack_s7(&packed).unwrap(), Perm7::IDENTITY);
    }

    #[test]
    fn pack_unpack_roundtrip_random() {
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(21);
        let mut points = [1u8, 2, 3, 4, 5, 6, 7];
        for _ in 0..1000 {
            points.shuffle(&mut rng);
            let p = Perm7::new(points).unwrap();
            let packed = pack_s7(&p);
            assert_eq!(unpack_s7(&packed).unwrap(), p);
            assert_eq!(PackedS7::from_bit_string(&packed.to_bit_string()).unwrap(), packed);
        }
    }

    #[test]
    fn invalid_packings_rejected() {
        // all zeros: image 1 repeated seven times
        assert!(unpack_s7(&PackedS7::from_bits(0).unwrap()).is_err());
        // a field holding 7
        assert!(unpack_s7(&PackedS7::from_bits(0b111 << 18).unwrap()).is_err());
        assert!(PackedS7::from_bits(1 << 21).is_err());
        assert!(PackedS7::from_bit_string("0101").is_err());
        assert!(PackedS7::from_bit_string("00000101001110010111x").is_err());
    }

    #[test]
    fn every_21_bit_string_splits_into_image_or_rejected() {
        // packing is a bijection onto its image: sample the raw space
        let mut hits = 0u32;
        for bits in (0..1 << 21).step_by(97) {
            if let Ok(p) = unpack_s7(&PackedS7::from_bits(bits).unwrap()) {
                assert_eq!(pack_s7(&p).bits(), bits);
                hits += 1;
            }
        }
        assert!(hits > 0);
    }

    #[test]
    fn compose_and_inverse() {
        let a = Perm7::new([2, 3, 1, 4, 5, 6, 7]).unwrap();
        assert_eq!(a.compose(&a.inverse()), Perm7::IDENTITY);
        assert_eq!(a.inverse().compose(&a), Perm7::IDENTITY);
    }
}
