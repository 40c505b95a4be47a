use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::BitXor;

/// A Grundy value `*n`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Nimber(pub u32);

impl Nimber {
    pub const ZERO: Nimber = Nimber(0);
    pub const STAR: Nimber = Nimber(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl From<u32> for Nimber {
    fn from(v: u32) -> Self {
        Nimber(v)
    }
}

impl fmt::Display for Nimber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("0"),
            1 => f.write_str("*"),
            n => write!(f, "*{n}"),
        }
    }
}

impl BitXor for Nimber {
    type Output = Nimber;

    fn bitxor(self, rhs: Nimber) -> Nimber {
        Nimber(self.0 ^ rhs.0)
    }
}

/// Smallest non-negative integer not in `values`.
pub fn mex<I>(values: I) -> Nimber
where
    I: IntoIterator<Item = Nimber>,
{
    let mut present: Vec<bool> = Vec::new();
    for Nimber(v) in values {
        let v = v as usize;
        // values above the option count cannot affect the result
        if v < 1 << 20 {
            if v >= present.len() {
                present.resize(v + 1, false);
            }
            present[v] = true;
        }
    }
    Nimber(present.iter().position(|&p| !p).unwrap_or(present.len()) as u32)
}

pub fn nim_sum(a: Nimber, b: Nimber) -> Nimber {
    a ^ b
}
