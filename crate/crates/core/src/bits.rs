//! Bit-packed storage.
//!
//! Certificates are written MSB-first into byte strings and read back through
//! [`BitView`] without copying. Verifier state that scales with `n` lives in
//! [`PackedArray`], whose footprint is exactly `len * width` bits of payload.

/// Number of bits needed to write every value in `0..=max_value`.
pub fn bits_for(max_value: u64) -> u32 {
    64 - max_value.leading_zeros()
}

/// `⌈log2 x⌉`, with `ceil_log2(0) = ceil_log2(1) = 0`.
pub fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        bits_for(x - 1)
    }
}

/// Appends fixed-width unsigned fields, most significant bit first.
#[derive(Debug, Default, Clone)]
pub struct BitWriter {
    bytes: Vec<u8>,
    len: u64,
}

impl BitWriter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Writes the low `width` bits of `value`.
    pub fn push(&mut self, value: u64, width: u32) {
        debug_assert!(width <= 64);
        debug_assert!(width == 64 || value >> width == 0, "value {value} does not fit in {width} bits");
        for i in (0..width).rev() {
            let bit = (value >> i) & 1;
            if self.len % 8 == 0 {
                self.bytes.push(0);
            }
            if bit == 1 {
                let last = self.bytes.len() - 1;
                self.bytes[last] |= 0x80 >> (self.len % 8);
            }
            self.len += 1;
        }
    }

    pub fn push_bit(&mut self, bit: bool) {
        self.push(bit as u64, 1);
    }

    pub fn bit_len(&self) -> u64 {
        self.len
    }

    /// Finished payload (zero padded to a byte boundary) and its bit length.
    pub fn finish(self) -> (Vec<u8>, u64) {
        (self.bytes, self.len)
    }
}

/// Read-only random access to an MSB-first bit string.
#[derive(Debug, Clone, Copy)]
pub struct BitView<'a> {
    bytes: &'a [u8],
    bit_len: u64,
}

impl<'a> BitView<'a> {
    /// `bit_len` must not exceed `8 * bytes.len()`.
    pub fn new(bytes: &'a [u8], bit_len: u64) -> Self {
        assert!(bit_len <= 8 * bytes.len() as u64);
        BitView { bytes, bit_len }
    }

    pub fn bit_len(&self) -> u64 {
        self.bit_len
    }

    pub fn bit(&self, pos: u64) -> bool {
        debug_assert!(pos < self.bit_len);
        (self.bytes[(pos / 8) as usize] >> (7 - pos % 8)) & 1 == 1
    }

    /// The `width`-bit field starting at bit `pos`.
    pub fn read(&self, pos: u64, width: u32) -> u64 {
        debug_assert!(width <= 64 && pos + width as u64 <= self.bit_len);
        if width == 0 {
            return 0;
        }
        let first = (pos / 8) as usize;
        let last = ((pos + width as u64 - 1) / 8) as usize;
        let mut window: u128 = 0;
        for &b in &self.bytes[first..=last] {
            window = (window << 8) | b as u128;
        }
        let window_bits = 8 * (last - first + 1) as u64;
        let shift = window_bits - (pos % 8) - width as u64;
        let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        ((window >> shift) as u64) & mask
    }

    /// Number of set bits in `[start, end)`.
    pub fn count_ones(&self, start: u64, end: u64) -> u64 {
        let mut count = 0;
        let mut pos = start;
        while pos < end && pos % 8 != 0 {
            count += self.bit(pos) as u64;
            pos += 1;
        }
        while pos + 8 <= end {
            count += self.bytes[(pos / 8) as usize].count_ones() as u64;
            pos += 8;
        }
        while pos < end {
            count += self.bit(pos) as u64;
            pos += 1;
        }
        count
    }

    /// True when every bit from `bit_len` to the end of the last byte is zero.
    pub fn padding_is_zero(&self) -> bool {
        let total = 8 * self.bytes.len() as u64;
        (self.bit_len..total).all(|p| (self.bytes[(p / 8) as usize] >> (7 - p % 8)) & 1 == 0)
    }
}

/// Fixed-width unsigned integers packed back to back into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackedArray {
    words: Vec<u64>,
    width: u32,
    len: usize,
}

impl PackedArray {
    /// `len` zero-initialised entries of `width` bits.
    pub fn new(len: usize, width: u32) -> Self {
        assert!(width <= 64);
        let words = (len as u64 * width as u64).div_ceil(64) as usize;
        PackedArray { words: vec![0; words], width, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    /// Payload size in bits.
    pub fn bits(&self) -> u64 {
        self.len as u64 * self.width as u64
    }

    pub fn max_value(&self) -> u64 {
        if self.width == 64 {
            u64::MAX
        } else {
            (1u64 << self.width) - 1
        }
    }

    pub fn get(&self, index: usize) -> u64 {
        assert!(index < self.len, "index {index} out of bounds for length {}", self.len);
        if self.width == 0 {
            return 0;
        }
        let bit = index as u64 * self.width as u64;
        let (w, off) = ((bit / 64) as usize, bit % 64);
        let mut value = self.words[w] >> off;
        if off + self.width as u64 > 64 {
            value |= self.words[w + 1] << (64 - off);
        }
        value & self.max_value()
    }

    pub fn set(&mut self, index: usize, value: u64) {
        assert!(index < self.len, "index {index} out of bounds for length {}", self.len);
        assert!(value <= self.max_value(), "value {value} does not fit in {} bits", self.width);
        if self.width == 0 {
            return;
        }
        let mask = self.max_value();
        let bit = index as u64 * self.width as u64;
        let (w, off) = ((bit / 64) as usize, bit % 64);
        self.words[w] = (self.words[w] & !(mask << off)) | (value << off);
        if off + self.width as u64 > 64 {
            let spill = 64 - off;
            self.words[w + 1] = (self.words[w + 1] & !(mask >> spill)) | (value >> spill);
        }
    }

    pub fn push(&mut self, value: u64) {
        self.len += 1;
        let needed = (self.len as u64 * self.width as u64).div_ceil(64) as usize;
        if needed > self.words.len() {
            self.words.resize(needed, 0);
        }
        self.set(self.len - 1, value);
    }

    pub fn fill(&mut self, value: u64) {
        for i in 0..self.len {
            self.set(i, value);
        }
    }
}
