//! A small growable bitset used for subset sums and cover masks.

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        if i < self.len {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self |= self << shift`, truncated to `len`.
    pub fn or_shifted(&mut self, shift: usize) {
        if shift == 0 {
            return;
        }
        let word_shift = shift / 64;
        let bit_shift = shift % 64;
        for i in (0..self.words.len()).rev() {
            if i < word_shift {
                break;
            }
            let src = i - word_shift;
            let mut v = self.words[src] << bit_shift;
            if bit_shift != 0 && src > 0 {
                v |= self.words[src - 1] >> (64 - bit_shift);
            }
            self.words[i] |= v;
        }
        self.trim();
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    fn trim(&mut self) {
        let extra = self.words.len() * 64 - self.len;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_across_words() {
        let mut b = Bits::new(200);
        b.set(0);
        b.set(63);
        b.or_shifted(70);
        let got: Vec<usize> = b.iter().collect();
        assert_eq!(got, vec![0, 63, 70, 133]);
        b.or_shifted(100);
        assert!(b.get(170) && b.get(100) && !b.get(233));
        assert_eq!(b.len(), 200);
    }
}
