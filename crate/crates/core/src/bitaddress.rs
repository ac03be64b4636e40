//! Bit-level arithmetic on vertex addresses.
//!
//! A vertex of an n-dimensional cube is an n-bit address `u_{n-1}...u_0`,
//! stored as a plain unsigned integer. The dimension is carried by context.
//! Everything here is a pure function on values.

/// Vertex address. Valid addresses satisfy `u < 2^n` for the ambient
/// dimension `n`.
pub type Vertex = u32;

/// Largest supported dimension for address arithmetic.
pub const MAX_DIM: usize = 28;

/// Largest dimension for which graphs are materialized.
pub const MAX_BUILD_DIM: usize = 20;

/// The i-th binary digit of `u`.
#[inline]
pub fn bit(u: Vertex, i: usize) -> u32 {
    assert!(i < MAX_DIM, "bit index {i} out of range");
    (u >> i) & 1
}

/// `u` with bit `i` negated. An involution.
#[inline]
pub fn flip(u: Vertex, i: usize) -> Vertex {
    assert!(i < MAX_DIM, "bit index {i} out of range");
    u ^ (1 << i)
}

/// A vertex is even exactly when its address value is even.
#[inline]
pub fn is_even(u: Vertex) -> bool {
    u & 1 == 0
}

/// A 2-bit block value `x_2 x_1` in `{00, 01, 10, 11}`.
///
/// The pair relation on blocks is `{(00,00), (10,10), (01,11), (11,01)}`;
/// it is a fixed involution with `00` and `10` self-paired.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PairCode(u8);

impl PairCode {
    pub fn new(value: u8) -> PairCode {
        assert!(value < 4, "pair code {value} out of range");
        PairCode(value)
    }

    /// The i-th disjoint 2-bit block of `u`, i.e. bits `2i+1` and `2i`.
    pub fn block_of(u: Vertex, i: usize) -> PairCode {
        assert!(2 * i + 1 < MAX_DIM, "block index {i} out of range");
        PairCode(((u >> (2 * i)) & 3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// The unique pair-related partner: toggles the high bit when the low
    /// bit is set, so `01 <-> 11` while `00` and `10` are fixed.
    pub fn partner(self) -> PairCode {
        PairCode(self.0 ^ ((self.0 & 1) << 1))
    }

    pub fn pair_related(self, other: PairCode) -> bool {
        self.partner() == other
    }
}

/// True iff `u` and `v` agree on every bit strictly above `x`.
///
/// Vacuously true when `x = n-1`.
#[inline]
pub fn prefix_equal(u: Vertex, v: Vertex, x: usize, n: usize) -> bool {
    assert!(
        x < n && n <= MAX_DIM,
        "prefix index x={x} out of range for n={n}"
    );
    (u >> (x + 1)) == (v >> (x + 1))
}

/// True iff every complete 2-bit block of the suffixes below `x` is
/// pair-related, i.e. `u_{2i+1}u_{2i} ~ v_{2i+1}v_{2i}` for `0 <= i < x/2`.
///
/// When `x` is odd the bit `x-1` is not part of any block here; it is
/// constrained separately by the edge rule. For `x` in `{0, 1}` the block
/// range is empty and the relation holds vacuously.
pub fn suffix_pair_related(u: Vertex, v: Vertex, x: usize) -> bool {
    assert!(x < MAX_DIM, "suffix index {x} out of range");
    (0..x / 2).all(|i| PairCode::block_of(u, i).pair_related(PairCode::block_of(v, i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_reads_digits() {
        assert_eq!(bit(0b0011, 0), 1);
        assert_eq!(bit(0b0011, 2), 0);
        assert_eq!(bit(0b1000, 3), 1);
    }

    #[test]
    fn flip_negates_and_inverts() {
        assert_eq!(flip(0b0000, 1), 0b0010);
        assert_eq!(flip(0b0010, 1), 0b0000);
        assert_eq!(flip(0b0100, 1), 0b0110);
        for u in 0..32 {
            for i in 0..5 {
                assert_eq!(flip(flip(u, i), i), u);
            }
        }
    }

    #[test]
    fn flip_is_a_bijection() {
        let n = 6;
        for i in 0..n {
            let mut seen = vec![false; 1 << n];
            for u in 0..(1u32 << n) {
                let v = flip(u, i) as usize;
                assert!(!seen[v]);
                seen[v] = true;
            }
        }
    }

    #[test]
    fn pair_relation_table() {
        let related = [(0b00, 0b00), (0b10, 0b10), (0b01, 0b11), (0b11, 0b01)];
        for a in 0..4u8 {
            for b in 0..4u8 {
                let expect = related.contains(&(a, b));
                assert_eq!(
                    PairCode::new(a).pair_related(PairCode::new(b)),
                    expect,
                    "{a} ~ {b}"
                );
            }
        }
        assert!(PairCode::new(0b01).pair_related(PairCode::new(0b11)));
        assert!(!PairCode::new(0b01).pair_related(PairCode::new(0b01)));
        assert!(PairCode::new(0b10).pair_related(PairCode::new(0b10)));
    }

    #[test]
    fn pair_relation_is_symmetric() {
        for a in 0..4u8 {
            for b in 0..4u8 {
                let ab = PairCode::new(a).pair_related(PairCode::new(b));
                let ba = PairCode::new(b).pair_related(PairCode::new(a));
                assert_eq!(ab, ba);
            }
        }
    }

    #[test]
    fn partner_is_an_involution() {
        assert_eq!(PairCode::new(0b00).partner(), PairCode::new(0b00));
        assert_eq!(PairCode::new(0b01).partner(), PairCode::new(0b11));
        assert_eq!(PairCode::new(0b11).partner(), PairCode::new(0b01));
        for a in 0..4u8 {
            let code = PairCode::new(a);
            assert_eq!(code.partner().partner(), code);
        }
    }

    #[test]
    fn prefix_comparisons() {
        assert!(prefix_equal(0b0011, 0b0101, 2, 4));
        assert!(!prefix_equal(0b0011, 0b1011, 2, 4));
        for u in 0..16 {
            for v in 0..16 {
                assert!(prefix_equal(u, v, 3, 4), "empty prefix must match");
            }
        }
    }

    #[test]
    fn suffix_blocks() {
        assert!(suffix_pair_related(0b0011, 0b0101, 2));
        // 01 pairs only with 11, so a block equal to 01 on both sides fails.
        assert!(!suffix_pair_related(0b0001, 0b0001, 2));
        for u in 0..16 {
            for v in 0..16 {
                assert!(suffix_pair_related(u, v, 0));
                assert!(suffix_pair_related(u, v, 1));
            }
        }
    }

    #[test]
    fn self_related_suffix_means_blocks_00_or_10() {
        for u in 0..(1u32 << 8) {
            for x in 0..8 {
                let expect =
                    (0..x / 2).all(|i| matches!(PairCode::block_of(u, i).value(), 0b00 | 0b10));
                assert_eq!(suffix_pair_related(u, u, x), expect);
            }
        }
    }
}
