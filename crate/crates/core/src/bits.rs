//! Machine-word subsets of small index sets.
//!
//! Every lattice, poset and point set in this crate has at most
//! [`MAX_ELEMENTS`] members, so a subset fits in one `u64`.

/// A subset of `0..64` stored as a bitmask.
pub type Mask = u64;

/// Hard upper bound on the number of elements of any lattice side or point set.
pub const MAX_ELEMENTS: usize = 64;

#[inline]
pub fn bit(i: usize) -> Mask {
    1u64 << i
}

#[inline]
pub fn full(n: usize) -> Mask {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn contains(m: Mask, i: usize) -> bool {
    m >> i & 1 == 1
}

#[inline]
pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

/// Iterates the members of `m` in increasing order.
pub fn members(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Mask {
    it.into_iter().fold(0, |m, i| m | bit(i))
}

/// Renders a subset using the given labels, e.g. `{p,q}` or `∅`.
pub fn render(m: Mask, labels: &[String]) -> String {
    if m == 0 {
        return "∅".to_string();
    }
    let parts: Vec<&str> = members(m).map(|i| labels[i].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_roundtrip() {
        let m = from_indices([0, 3, 63]);
        assert_eq!(members(m).collect::<Vec<_>>(), vec![0, 3, 63]);
        assert_eq!(full(64), !0);
        assert_eq!(full(3), 0b111);
        assert!(is_subset(0b101, 0b111));
        assert!(!is_subset(0b1000, 0b111));
    }
}
