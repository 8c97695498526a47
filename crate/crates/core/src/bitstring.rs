//! Bitstrings, the value domain of both function algebras.
//!
//! Every recursion rule destructs the least significant bit, so the API is
//! phrased lsb-first: position 0 is the lsb and `append_lsb` / `split_lsb`
//! are the constructor/destructor pair. Internally the bits are kept
//! msb-first in a shared buffer, which makes `append_lsb` an amortized push,
//! `split_lsb` a view shrink, and the prefixes visited by recursion on
//! notation free to produce.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

/// A binary digit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bit {
    Zero,
    One,
}

impl Bit {
    pub fn from_bool(b: bool) -> Bit {
        if b {
            Bit::One
        } else {
            Bit::Zero
        }
    }

    pub fn is_one(self) -> bool {
        self == Bit::One
    }

    pub fn flip(self) -> Bit {
        match self {
            Bit::Zero => Bit::One,
            Bit::One => Bit::Zero,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Bit::Zero => '0',
            Bit::One => '1',
        }
    }
}

impl fmt::Display for Bit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite sequence of bits, possibly empty.
///
/// Cloning is O(1): clones and prefixes share one buffer.
#[derive(Clone)]
pub struct Bitstring {
    // msb-first; only `buf[..len]` belongs to this value.
    buf: Arc<Vec<Bit>>,
    len: usize,
}

/// Error returned by [`Bitstring::parse_literal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MalformedLiteral {
    pub text: String,
    pub position: usize,
    pub found: char,
}

impl fmt::Display for MalformedLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "malformed bitstring literal {:?}: unexpected {:?} at offset {} (expected '0', '1' or \"eps\")",
            self.text, self.found, self.position
        )
    }
}

impl core::error::Error for MalformedLiteral {}

impl Bitstring {
    /// The empty bitstring.
    pub fn empty() -> Bitstring {
        Bitstring {
            buf: Arc::new(Vec::new()),
            len: 0,
        }
    }

    /// Builds a bitstring from bits listed msb first (reading order).
    pub fn from_msb_first<I: IntoIterator<Item = Bit>>(bits: I) -> Bitstring {
        let buf: Vec<Bit> = bits.into_iter().collect();
        let len = buf.len();
        Bitstring {
            buf: Arc::new(buf),
            len,
        }
    }

    /// Builds a bitstring from bits listed lsb first.
    pub fn from_lsb_first<I: IntoIterator<Item = Bit>>(bits: I) -> Bitstring {
        let mut buf: Vec<Bit> = bits.into_iter().collect();
        buf.reverse();
        Bitstring::from_msb_first(buf)
    }

    /// `n` copies of `bit`.
    pub fn repeat(bit: Bit, n: usize) -> Bitstring {
        Bitstring::from_msb_first(core::iter::repeat(bit).take(n))
    }

    /// `1` followed by `n` zeros: the shape of every smash result.
    pub fn one_then_zeros(n: usize) -> Bitstring {
        let mut buf = Vec::with_capacity(n + 1);
        buf.push(Bit::One);
        buf.resize(n + 1, Bit::Zero);
        Bitstring::from_msb_first(buf)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The bits in reading order (msb first).
    pub fn msb_first(&self) -> &[Bit] {
        &self.buf[..self.len]
    }

    /// Bit at position `i`, counting from the least significant bit.
    pub fn bit(&self, i: usize) -> Option<Bit> {
        if i < self.len {
            Some(self.buf[self.len - 1 - i])
        } else {
            None
        }
    }

    pub fn lsb(&self) -> Option<Bit> {
        self.bit(0)
    }

    /// Iterates lsb first.
    pub fn iter_lsb(&self) -> impl DoubleEndedIterator<Item = Bit> + '_ {
        self.msb_first().iter().rev().copied()
    }

    /// `xb`: this string with `b` appended in the least significant position.
    pub fn append_lsb(&self, b: Bit) -> Bitstring {
        self.clone().push_lsb(b)
    }

    /// Owned variant of [`append_lsb`](Self::append_lsb); reuses the buffer
    /// when it is not shared.
    pub fn push_lsb(mut self, b: Bit) -> Bitstring {
        match Arc::get_mut(&mut self.buf) {
            Some(buf) => {
                buf.truncate(self.len);
                buf.push(b);
            }
            None => {
                let mut buf = Vec::with_capacity(self.len + 1);
                buf.extend_from_slice(self.msb_first());
                buf.push(b);
                self.buf = Arc::new(buf);
            }
        }
        self.len += 1;
        self
    }

    /// Inverse of `append_lsb`: `None` exactly for the empty string.
    pub fn split_lsb(&self) -> Option<(Bitstring, Bit)> {
        if self.len == 0 {
            return None;
        }
        let b = self.buf[self.len - 1];
        Some((self.prefix(self.len - 1), b))
    }

    /// Drops the least significant bit; the empty string is left unchanged.
    pub fn drop_lsb(&self) -> Bitstring {
        self.prefix(self.len.saturating_sub(1))
    }

    /// Removes the `k` least significant bits (the empty string if `k >= len`).
    pub fn drop_lsbs(&self, k: usize) -> Bitstring {
        self.prefix(self.len.saturating_sub(k))
    }

    /// The `k` most significant bits. O(1).
    pub fn prefix(&self, k: usize) -> Bitstring {
        assert!(k <= self.len, "prefix longer than the string");
        Bitstring {
            buf: Arc::clone(&self.buf),
            len: k,
        }
    }

    /// Parses a literal written msb first: `"eps"` and `""` denote ε.
    pub fn parse_literal(text: &str) -> Result<Bitstring, MalformedLiteral> {
        if text == "eps" {
            return Ok(Bitstring::empty());
        }
        let mut buf = Vec::with_capacity(text.len());
        for (position, c) in text.char_indices() {
            match c {
                '0' => buf.push(Bit::Zero),
                '1' => buf.push(Bit::One),
                found => {
                    return Err(MalformedLiteral {
                        text: text.into(),
                        position,
                        found,
                    })
                }
            }
        }
        Ok(Bitstring::from_msb_first(buf))
    }

    /// Renders msb first; ε renders as `eps`.
    pub fn render_literal(&self) -> String {
        if self.is_empty() {
            return String::from("eps");
        }
        self.msb_first().iter().map(|b| b.as_char()).collect()
    }
}

impl Default for Bitstring {
    fn default() -> Self {
        Bitstring::empty()
    }
}

impl PartialEq for Bitstring {
    fn eq(&self, other: &Self) -> bool {
        self.msb_first() == other.msb_first()
    }
}

impl Eq for Bitstring {}

impl Hash for Bitstring {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.msb_first().hash(state)
    }
}

impl PartialOrd for Bitstring {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bitstring {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.msb_first().cmp(other.msb_first()))
    }
}

impl fmt::Debug for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bitstring({})", self.render_literal())
    }
}

impl fmt::Display for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_literal())
    }
}

/// Length of every component: `|x̄|` in vector form.
pub fn size_vector(args: &[Bitstring]) -> Vec<u64> {
    args.iter().map(|x| x.len() as u64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn lit(s: &str) -> Bitstring {
        Bitstring::parse_literal(s).unwrap()
    }

    #[test]
    fn append_examples() {
        assert_eq!(Bitstring::empty().append_lsb(Bit::One), lit("1"));
        assert_eq!(lit("1").append_lsb(Bit::Zero), lit("10"));
        assert_eq!(lit("10").append_lsb(Bit::One), lit("101"));
    }

    #[test]
    fn split_examples() {
        assert_eq!(Bitstring::empty().split_lsb(), None);
        assert_eq!(lit("10").split_lsb(), Some((lit("1"), Bit::Zero)));
        assert_eq!(lit("1").split_lsb(), Some((Bitstring::empty(), Bit::One)));
    }

    #[test]
    fn lengths() {
        assert_eq!(Bitstring::empty().len(), 0);
        assert_eq!(lit("10").len(), 2);
        assert_eq!(lit("00000").len(), 5);
    }

    #[test]
    fn literal_conventions() {
        let x = lit("101");
        assert_eq!(x.len(), 3);
        assert_eq!(x.lsb(), Some(Bit::One));
        assert_eq!(x.bit(1), Some(Bit::Zero));
        assert_eq!(lit("eps"), Bitstring::empty());
        assert_eq!(lit(""), Bitstring::empty());
        let err = Bitstring::parse_literal("10a").unwrap_err();
        assert_eq!(err.found, 'a');
        assert_eq!(err.position, 2);
    }

    #[test]
    fn rendering() {
        assert_eq!(Bitstring::empty().render_literal(), "eps");
        assert_eq!(
            Bitstring::from_lsb_first(vec![Bit::Zero, Bit::One]).render_literal(),
            "10"
        );
        assert_eq!(Bitstring::from_lsb_first(vec![Bit::One]).render_literal(), "1");
    }

    #[test]
    fn leading_zeros_matter() {
        assert_ne!(lit("0"), lit("00"));
        assert_ne!(lit("1"), lit("01"));
    }

    #[test]
    fn shared_buffers_do_not_alias() {
        let x = lit("11");
        let y = x.append_lsb(Bit::Zero);
        let z = x.append_lsb(Bit::One);
        assert_eq!(y, lit("110"));
        assert_eq!(z, lit("111"));
        assert_eq!(x, lit("11"));
        let p = y.drop_lsb();
        let q = p.clone().push_lsb(Bit::One);
        assert_eq!(y, lit("110"));
        assert_eq!(q, lit("111"));
    }

    #[test]
    fn drop_lsbs_saturates() {
        assert_eq!(lit("1010").drop_lsbs(2), lit("10"));
        assert_eq!(lit("1010").drop_lsbs(9), Bitstring::empty());
        assert_eq!(Bitstring::empty().drop_lsb(), Bitstring::empty());
    }

    fn literal() -> impl Strategy<Value = String> {
        "[01]{1,24}"
    }

    proptest! {
        #[test]
        fn parse_render_round_trip(t in literal()) {
            prop_assert_eq!(lit(&t).render_literal(), t);
        }

        #[test]
        fn split_inverts_append(bits in proptest::collection::vec(any::<bool>(), 0..24), b in any::<bool>()) {
            let x = Bitstring::from_lsb_first(bits.into_iter().map(Bit::from_bool));
            let b = Bit::from_bool(b);
            let y = x.append_lsb(b);
            prop_assert_eq!(y.len(), x.len() + 1);
            prop_assert_eq!(y.split_lsb(), Some((x, b)));
        }
    }
}
