//! 3×3 matrices over F₂ and the bit encoding `x ↦ I + x·E₁₃`.

use crate::error::{Error, Result};

/// A 3×3 bit matrix, row-major. Group programs only ever hold invertible
/// ones (over F₂ that is exactly `det = 1`, i.e. membership in SL(3,2)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat3 {
    rows: [[u8; 3]; 3],
}

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3 { rows: [[1, 0, 0], [0, 1, 0], [0, 0, 1]] };

    pub fn new(rows: [[u8; 3]; 3]) -> Result<Mat3> {
        for row in &rows {
            for &e in row {
                if e > 1 {
                    return Err(Error::Parameter("matrix entries must be bits".into()));
                }
            }
        }
        Ok(Mat3 { rows })
    }

    /// The transvection `I + E_rc` (0-indexed, `r != c`).
    pub fn transvection(r: usize, c: usize) -> Mat3 {
        assert!(r < 3 && c < 3 && r != c, "transvection needs distinct indices");
        let mut m = Mat3::IDENTITY;
        m.rows[r][c] = 1;
        m
    }

    /// Permutation matrix sending basis vector `e_j` to `e_{perm[j]}`.
    pub(crate) fn permutation(perm: [usize; 3]) -> Mat3 {
        let mut rows = [[0u8; 3]; 3];
        for (j, &i) in perm.iter().enumerate() {
            rows[i][j] = 1;
        }
        Mat3 { rows }
    }

    pub fn entry(&self, r: usize, c: usize) -> u8 {
        self.rows[r][c]
    }

    #[allow(clippy::needless_range_loop)] // index form mirrors the math
    pub fn mul(&self, other: &Mat3) -> Mat3 {
        let mut rows = [[0u8; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = 0u8;
                for k in 0..3 {
                    acc ^= self.rows[i][k] & other.rows[k][j];
                }
                rows[i][j] = acc;
            }
        }
        Mat3 { rows }
    }

    #[allow(clippy::needless_range_loop)]
    pub fn transpose(&self) -> Mat3 {
        let mut rows = [[0u8; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                rows[j][i] = self.rows[i][j];
            }
        }
        Mat3 { rows }
    }

    /// Determinant over F₂.
    pub fn det(&self) -> u8 {
        let r = &self.rows;
        (r[0][0] & (r[1][1] & r[2][2] ^ r[1][2] & r[2][1]))
            ^ (r[0][1] & (r[1][0] & r[2][2] ^ r[1][2] & r[2][0]))
            ^ (r[0][2] & (r[1][0] & r[2][1] ^ r[1][1] & r[2][0]))
    }

    pub fn is_invertible(&self) -> bool {
        self.det() == 1
    }

    /// Apply to a column vector over F₂.
    #[allow(clippy::needless_range_loop)]
    pub fn apply(&self, v: [u8; 3]) -> [u8; 3] {
        let mut out = [0u8; 3];
        for i in 0..3 {
            out[i] = (self.rows[i][0] & v[0]) ^ (self.rows[i][1] & v[1]) ^ (self.rows[i][2] & v[2]);
        }
        out
    }

    /// All 168 elements of SL(3,2), by filtering the 512 bit matrices.
    pub fn enumerate_sl32() -> Vec<Mat3> {
        let mut out = Vec::with_capacity(168);
        for bits in 0u16..512 {
            let mut rows = [[0u8; 3]; 3];
            for (idx, cell) in rows.iter_mut().flatten().enumerate() {
                *cell = ((bits >> idx) & 1) as u8;
            }
            let m = Mat3 { rows };
            if m.is_invertible() {
                out.push(m);
            }
        }
        out
    }
}

/// Encode a bit as `I + x·E₁₃`: matrix multiplication then realizes XOR
/// in the (1,3) entry.
pub fn encode_bit(x: bool) -> Mat3 {
    if x {
        Mat3::transvection(0, 2)
    } else {
        Mat3::IDENTITY
    }
}
