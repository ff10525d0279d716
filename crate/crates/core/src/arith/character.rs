use crate::error::{usage, Result};

/// The real primitive characters modulo 3 and 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u64,
    values: &'static [i8],
}

const CHI3: [i8; 3] = [0, 1, -1];
const CHI4: [i8; 4] = [0, 1, 0, -1];

impl DirichletCharacter {
    pub fn new(modulus: u64) -> Result<Self> {
        let values: &'static [i8] = match modulus {
            3 => &CHI3,
            4 => &CHI4,
            other => {
                return Err(usage(format!(
                    "only the characters modulo 3 and 4 are supported, got {other}"
                )))
            }
        };
        Ok(Self { modulus, values })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[i8] {
        self.values
    }

    pub fn value(&self, n: u64) -> i8 {
        self.values[(n % self.modulus) as usize]
    }
}

/// `χ_modulus(n)` for modulus 3 or 4.
pub fn character(modulus: u64, n: u64) -> Result<i8> {
    Ok(DirichletCharacter::new(modulus)?.value(n))
}
