//! Bitstring helpers. Registers are read most-significant-bit first, so the
//! string "0110" denotes the integer 6 on a 4-bit register.

use crate::error::{Error, Result};

/// Format `value` as an MSB-first bitstring of exactly `width` bits.
pub fn to_bitstring(value: u64, width: usize) -> String {
    (0..width)
        .map(|i| {
            if value >> (width - 1 - i) & 1 == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

/// Parse an MSB-first bitstring into `(value, width)`.
pub fn parse_bitstring(s: &str) -> Result<(u64, usize)> {
    if s.is_empty() {
        return Err(Error::InvalidParameter("empty bitstring".into()));
    }
    if s.len() > 63 {
        return Err(Error::InvalidParameter(format!(
            "bitstring of {} bits is too long",
            s.len()
        )));
    }
    let mut value = 0u64;
    for c in s.chars() {
        value <<= 1;
        match c {
            '0' => {}
            '1' => value |= 1,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "bitstring may contain only 0 and 1, found {other:?}"
                )))
            }
        }
    }
    Ok((value, s.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        assert_eq!(to_bitstring(6, 4), "0110");
        assert_eq!(parse_bitstring("0110").unwrap(), (6, 4));
        assert_eq!(parse_bitstring("00").unwrap(), (0, 2));
        assert_eq!(to_bitstring(0, 3), "000");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_bitstring("").is_err());
        assert!(parse_bitstring("01x").is_err());
    }
}
