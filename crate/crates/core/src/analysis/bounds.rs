//! Known lower and upper bounds on chromatic numbers of bounded-degree classes.

use serde::{Deserialize, Serialize};

/// An integer interval `lower ..= upper`; a fractional lower bound is
/// rounded up since chromatic numbers are integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub lower: u64,
    pub upper: u64,
}

impl Bound {
    fn exact(v: u64) -> Bound {
        Bound { lower: v, upper: v }
    }

    fn range(lower: u64, upper: u64) -> Bound {
        Bound { lower, upper }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    /// Render against a symbol such as `χ₂(D₄)`.
    pub fn render(&self, symbol: &str) -> String {
        if self.is_exact() {
            format!("{} = {}", symbol, self.lower)
        } else {
            format!("{} ≤ {} ≤ {}", self.lower, symbol, self.upper)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsRow {
    pub k: u32,
    /// 2-edge-colored graphs of maximum degree `k`.
    pub chi2: Bound,
    /// Connected 2-edge-colored graphs of maximum degree `k`.
    pub chi2_connected: Bound,
    pub chis: Bound,
    pub chis_connected: Bound,
}

fn subscript(k: u32) -> String {
    k.to_string().chars().map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap()).collect()
}

impl BoundsRow {
    /// The four cells as strings, e.g. `12 ≤ χ₂(D₄) ≤ 30`.
    pub fn cells(&self) -> [String; 4] {
        let k = subscript(self.k);
        [
            self.chi2.render(&format!("χ₂(D{})", k)),
            self.chi2_connected.render(&format!("χ₂(D{}ᶜ)", k)),
            self.chis.render(&format!("χₛ(D{})", k)),
            self.chis_connected.render(&format!("χₛ(D{}ᶜ)", k)),
        ]
    }
}

/// `ceil(2^(e/2))` for an integer `e >= 0`.
fn pow2_half(e: u32) -> u64 {
    if e.is_multiple_of(2) {
        1 << (e / 2)
    } else {
        // 2^(e/2) = 2^((e-1)/2) * sqrt 2, never an integer
        ((1u64 << (e / 2)) as f64 * std::f64::consts::SQRT_2).ceil() as u64
    }
}

/// Row of the bounds tables for maximum degree `k >= 1`.
pub fn bounds_table(k: u32) -> BoundsRow {
    assert!(k >= 1, "maximum degree must be positive");
    let kk = k as u64;
    let up = kk * kk * (1u64 << (k + 1));
    let up_c = (kk - 1) * (kk - 1) * (1u64 << k) + 2;
    let (chi2, chi2_connected) = match k {
        1 => (Bound::exact(3), Bound::exact(2)),
        2 => (Bound::exact(6), Bound::exact(5)),
        3 => (Bound::range(8, 11), Bound::range(8, 10)),
        4 => (Bound::range(12, 30), Bound::range(12, 30)),
        5 => (Bound::range(16, 110), Bound::range(16, 110)),
        6..=10 => (Bound::range(4 * (kk - 1), up), Bound::range(4 * (kk - 1), up_c)),
        _ => (Bound::range(pow2_half(k), up), Bound::range(pow2_half(k), up_c)),
    };
    let (chis, chis_connected) = match k {
        1 => (Bound::exact(2), Bound::exact(2)),
        2 => (Bound::exact(4), Bound::exact(4)),
        3 => (Bound::range(6, 7), Bound::exact(6)),
        4 => (Bound::range(10, 16), Bound::range(10, 16)),
        5 => (Bound::range(12, 56), Bound::range(12, 56)),
        6..=8 => (Bound::range(2 * (kk + 1), up), Bound::range(2 * (kk + 1), up_c)),
        // 2^(k/2 - 1) = 2^((k-2)/2)
        _ => (Bound::range(pow2_half(k - 2), up), Bound::range(pow2_half(k - 2), up_c)),
    };
    BoundsRow { k, chi2, chi2_connected, chis, chis_connected }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows() {
        assert_eq!(bounds_table(2).chi2, Bound::exact(6));
        assert_eq!(bounds_table(2).chis, Bound::exact(4));
        assert_eq!(bounds_table(4).cells()[0], "12 ≤ χ₂(D₄) ≤ 30");
        assert_eq!(bounds_table(3).cells()[3], "χₛ(D₃ᶜ) = 6");
        assert_eq!(bounds_table(6).chi2, Bound::range(20, 4608));
    }

    #[test]
    fn regime_switch() {
        assert_eq!(bounds_table(10).chi2.lower, 36);
        assert_eq!(bounds_table(11).chi2.lower, 46);
        assert_eq!(bounds_table(12).chi2.lower, 64);
        assert_eq!(bounds_table(9).chis.lower, 12);
        assert_eq!(bounds_table(12).cells()[0], "64 ≤ χ₂(D₁₂) ≤ 1179648");
    }
}
