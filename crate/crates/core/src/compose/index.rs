use std::fmt;

use crate::error::ComposeError;

/// Fixed-width binary code of an instance number, most significant bit first.
/// Numbers `1..2^L` use their ordinary expansion; `2^L` is all zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexCode(Vec<bool>);

impl IndexCode {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Bit at 1-based position `j`; position 1 is the most significant.
    pub fn bit(&self, j: usize) -> bool {
        self.0[j - 1]
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Inverse of [`encode_index`].
    pub fn decode(&self) -> usize {
        let v = self.0.iter().fold(0usize, |acc, &b| acc << 1 | b as usize);
        if v == 0 {
            1 << self.0.len()
        } else {
            v
        }
    }
}

impl fmt::Display for IndexCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub fn encode_index(index: usize, bits: u32) -> Result<IndexCode, ComposeError> {
    let limit = 1usize
        .checked_shl(bits)
        .ok_or(ComposeError::IndexOutOfRange { index, bits })?;
    if index == 0 || index > limit {
        return Err(ComposeError::IndexOutOfRange { index, bits });
    }
    let value = if index == limit { 0 } else { index };
    Ok(IndexCode((0..bits).rev().map(|k| value >> k & 1 == 1).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_bit_codes() {
        assert_eq!(encode_index(1, 2).unwrap().to_string(), "01");
        assert_eq!(encode_index(4, 2).unwrap().to_string(), "00");
        assert_eq!(encode_index(3, 2).unwrap().to_string(), "11");
        assert!(encode_index(5, 2).is_err());
        assert!(encode_index(0, 2).is_err());
        assert_eq!(encode_index(1, 0).unwrap().len(), 0);
    }

    #[test]
    fn codes_are_distinct_and_decode() {
        for bits in 0..6u32 {
            let codes: std::collections::HashSet<String> = (1..=1usize << bits)
                .map(|i| {
                    let c = encode_index(i, bits).unwrap();
                    assert_eq!(c.decode(), i);
                    c.to_string()
                })
                .collect();
            assert_eq!(codes.len(), 1 << bits);
        }
    }
}
