//! Numerical semigroups presented by generators.
//!
//! A numerical semigroup is a cofinite submonoid of the non-negative
//! integers. Given generators `g1, ..., gk` with `gcd = 1`, this module
//! materializes the membership table up to the conductor with a bitset
//! dynamic program and derives the classical invariants from it: the gap
//! set, genus, Frobenius number, conductor, and Apéry sets.
//!
//! The table scan stops as soon as `multiplicity` consecutive members
//! have been seen: if `[c, c + multiplicity)` lies in the semigroup, so
//! does everything above it, and `c` found this way is exactly the
//! conductor. The scan is therefore proportional to the conductor, never
//! to the a-priori Schur-like bound `(min-1)(max-1)`.

use thiserror::Error;

/// Default ceiling on the membership table, in bits (2^28 bits = 32 MiB).
pub const DEFAULT_CAP_BITS: u64 = 1 << 28;

/// Ceiling on materializing the gap list as a vector.
pub const GAPS_MATERIALIZE_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty (or contains only zeros)")]
    EmptyGenerators,
    #[error("generators have gcd {gcd} != 1, so the complement is infinite")]
    NonCoprimeGenerators { gcd: u64 },
    #[error("arithmetic overflow while sizing the membership table")]
    Overflow,
    #[error("{value} is not a nonzero member of the semigroup")]
    NotAMember { value: u64 },
    #[error("membership table would need {needed_bits} bits, cap is {cap_bits}")]
    CapExceeded { needed_bits: u128, cap_bits: u64 },
}

/// Plain bitset over `u64` words, indexed by non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn with_capacity(bits: usize) -> Self {
        Bits {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    #[inline]
    fn get(&self, i: usize) -> bool {
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.words[i >> 6] |= 1 << (i & 63);
    }

    fn ensure(&mut self, bits: usize) {
        let need = bits.div_ceil(64);
        if need > self.words.len() {
            self.words.resize(need, 0);
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A numerical semigroup with its membership table materialized up to
/// the conductor.
#[derive(Debug, Clone)]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
    conductor: u64,
    genus: u64,
    bits: Bits,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens` (zeros are ignored,
    /// duplicates collapsed) under the default table cap.
    pub fn from_generators(gens: &[u64]) -> Result<Self, Error> {
        Self::from_generators_capped(gens, DEFAULT_CAP_BITS)
    }

    /// Same as [`Self::from_generators`] with an explicit cap on the
    /// membership table size in bits.
    pub fn from_generators_capped(gens: &[u64], cap_bits: u64) -> Result<Self, Error> {
        let mut g: Vec<u64> = gens.iter().copied().filter(|&x| x != 0).collect();
        if g.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        g.sort_unstable();
        g.dedup();
        let d = g.iter().copied().fold(0, gcd);
        if d != 1 {
            return Err(Error::NonCoprimeGenerators { gcd: d });
        }

        let min = g[0];
        if min == 1 {
            let mut bits = Bits::with_capacity(1);
            bits.set(0);
            return Ok(NumericalSemigroup {
                gens: g,
                conductor: 0,
                genus: 0,
                bits,
            });
        }

        let max = *g.last().unwrap();
        // Frobenius <= (min-1)(max-1) - 1, so the run of `min` members
        // starting at the conductor completes before this bound.
        let needed_bits: u128 = (min as u128 - 1) * (max as u128 - 1) + min as u128;
        let scan_end: u64 = if needed_bits <= cap_bits as u128 {
            needed_bits as u64
        } else {
            cap_bits
        };
        if scan_end > usize::MAX as u64 {
            return Err(Error::Overflow);
        }

        let mut bits = Bits::with_capacity((1usize << 16).min(scan_end as usize));
        bits.set(0);
        let mut run: u64 = 1; // consecutive members ending at the current x
        let mut genus: u64 = 0;
        let mut x: u64 = 1;
        while x < scan_end {
            if x as usize >= bits.words.len() * 64 {
                let grown = (bits.words.len() * 128).min(scan_end.div_ceil(64) as usize * 64);
                bits.ensure(grown.max(x as usize + 1));
            }
            let mut member = false;
            for &gi in &g {
                if gi > x {
                    break;
                }
                if bits.get((x - gi) as usize) {
                    member = true;
                    break;
                }
            }
            if member {
                bits.set(x as usize);
                run += 1;
                if run == min {
                    // [x-min+1, x] are all members; closure under adding
                    // `min` makes everything above x-min+1 a member, and
                    // the position just below the run is a gap, so this
                    // is the conductor exactly.
                    let conductor = x - min + 1;
                    return Ok(NumericalSemigroup {
                        gens: g,
                        conductor,
                        genus,
                        bits,
                    });
                }
            } else {
                run = 0;
                genus += 1;
            }
            x += 1;
        }
        if needed_bits > cap_bits as u128 {
            Err(Error::CapExceeded {
                needed_bits,
                cap_bits,
            })
        } else {
            // Unreachable for coprime generators: the run must complete
            // before the Schur-like bound.
            Err(Error::Overflow)
        }
    }

    /// The normalized (sorted, deduplicated, zero-free) generator list.
    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    /// Smallest nonzero member.
    pub fn multiplicity(&self) -> u64 {
        self.gens[0]
    }

    /// Smallest `c` with `[c, infinity)` contained in the semigroup.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Largest integer not in the semigroup; `-1` when there are no gaps.
    pub fn frobenius(&self) -> i128 {
        self.conductor as i128 - 1
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    #[inline]
    pub fn contains(&self, x: u64) -> bool {
        if x >= self.conductor {
            true
        } else {
            self.bits.get(x as usize)
        }
    }

    /// The gap set in increasing order. Errors if the genus exceeds
    /// [`GAPS_MATERIALIZE_CAP`].
    pub fn gaps(&self) -> Result<Vec<u64>, Error> {
        if self.genus > GAPS_MATERIALIZE_CAP {
            return Err(Error::CapExceeded {
                needed_bits: self.genus as u128,
                cap_bits: GAPS_MATERIALIZE_CAP,
            });
        }
        let mut out = Vec::with_capacity(self.genus as usize);
        for x in 1..self.conductor {
            if !self.bits.get(x as usize) {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// Apéry set of a nonzero member `m`: for each residue `r` mod `m`,
    /// the smallest member congruent to `r`. Index `r` of the result
    /// holds that member; index 0 is always 0.
    pub fn apery_set(&self, m: u64) -> Result<Vec<u64>, Error> {
        if m == 0 || !self.contains(m) {
            return Err(Error::NotAMember { value: m });
        }
        let mut ap: Vec<Option<u64>> = vec![None; m as usize];
        let mut found: u64 = 0;
        let mut x: u64 = 0;
        while found < m {
            // Every residue has a member below conductor + m.
            debug_assert!(x < self.conductor + m);
            if self.contains(x) {
                let r = (x % m) as usize;
                if ap[r].is_none() {
                    ap[r] = Some(x);
                    found += 1;
                }
            }
            x += 1;
        }
        Ok(ap.into_iter().map(|v| v.unwrap()).collect())
    }

    /// True when `self` and `other` contain exactly the same integers.
    pub fn eq_members(&self, other: &Self) -> bool {
        if self.conductor != other.conductor || self.genus != other.genus {
            return false;
        }
        (0..self.conductor).all(|x| self.contains(x) == other.contains(x))
    }
}
