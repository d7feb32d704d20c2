use std::fmt;
use std::ops::{BitXor, BitXorAssign};

use super::Colouring;
use crate::error::{invalid_input, Result};

const WORD: usize = 64;

/// Length-`k` bit vector over GF(2); bit `i - 1` is the parity of colour `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParityVector {
    k: usize,
    words: Vec<u64>,
}

impl ParityVector {
    pub fn zero(k: usize) -> Self {
        ParityVector { k, words: vec![0; k.div_ceil(WORD)] }
    }

    pub fn len(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.k == 0
    }

    /// Flips the parity of `colour` (1-based).
    pub fn toggle(&mut self, colour: usize) {
        let i = colour - 1;
        self.words[i / WORD] ^= 1 << (i % WORD);
    }

    pub fn get(&self, colour: usize) -> bool {
        let i = colour - 1;
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn bits(&self) -> Vec<u8> {
        (1..=self.k).map(|c| self.get(c) as u8).collect()
    }
}

impl BitXorAssign<&ParityVector> for ParityVector {
    fn bitxor_assign(&mut self, rhs: &ParityVector) {
        assert_eq!(self.k, rhs.k, "parity vectors of different lengths");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl BitXor for &ParityVector {
    type Output = ParityVector;

    fn bitxor(self, rhs: &ParityVector) -> ParityVector {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

impl fmt::Display for ParityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: Vec<String> = self.bits().iter().map(u8::to_string).collect();
        write!(f, "({})", bits.join(","))
    }
}

/// Parity vector of a vertex list. Duplicates count with multiplicity.
pub fn parity_vector(colouring: &Colouring, vertices: &[usize]) -> Result<ParityVector> {
    let mut pv = ParityVector::zero(colouring.k());
    for &v in vertices {
        if v >= colouring.len() {
            return invalid_input(format!("vertex {v} is not coloured"));
        }
        pv.toggle(colouring.colour(v));
    }
    Ok(pv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = Colouring::new(3, vec![1, 2, 1]).unwrap();
        assert_eq!(parity_vector(&c, &[0, 1, 2]).unwrap().bits(), vec![0, 1, 0]);
        assert!(parity_vector(&c, &[]).unwrap().is_zero());
        let c2 = Colouring::new(2, vec![2]).unwrap();
        assert_eq!(parity_vector(&c2, &[0]).unwrap().to_string(), "(0,1)");
        assert!(parity_vector(&c, &[3]).is_err());
    }

    #[test]
    fn wide_palettes_do_not_truncate() {
        let c = Colouring::new(130, vec![1, 65, 130]).unwrap();
        let pv = parity_vector(&c, &[0, 1, 2]).unwrap();
        assert_eq!(pv.words().len(), 3);
        assert!(pv.get(1) && pv.get(65) && pv.get(130) && !pv.get(64));
    }
}
