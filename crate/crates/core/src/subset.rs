//! Subsets of a small ground set as `u32` bitmasks.

pub type Subset = u32;

pub fn full(n: usize) -> Subset {
    assert!(n <= 32, "ground set too large for a u32 mask");
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub fn size(s: Subset) -> usize {
    s.count_ones() as usize
}

pub fn contains(s: Subset, i: usize) -> bool {
    s >> i & 1 == 1
}

pub fn singleton(i: usize) -> Subset {
    1 << i
}

pub fn from_iter<I: IntoIterator<Item = usize>>(items: I) -> Subset {
    items.into_iter().fold(0, |acc, i| acc | 1 << i)
}

/// Members in increasing order.
pub fn elements(s: Subset) -> Elements {
    Elements(s)
}

pub struct Elements(Subset);

impl Iterator for Elements {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

pub fn to_vec(s: Subset) -> Vec<usize> {
    elements(s).collect()
}

/// 1-based, comma separated, in braces.
pub fn show(s: Subset) -> String {
    let items: Vec<String> = elements(s).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let s = from_iter([0, 3, 5]);
        assert_eq!(to_vec(s), vec![0, 3, 5]);
        assert_eq!(size(s), 3);
        assert_eq!(show(s), "{1,4,6}");
        assert_eq!(full(3), 0b111);
    }
}
