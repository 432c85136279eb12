#pragma once

// MAA primitive operations over gate-level words.

#include <utility>

#include "maa/word.hpp"

namespace maa {

/// Masking constants used by FIX1 (A, C) and FIX2 (B, D).
inline constexpr Block kFixA = 0x02040801_blk;
inline constexpr Block kFixB = 0x00804021_blk;
inline constexpr Block kFixC = 0xBFEF7FDF_blk;
inline constexpr Block kFixD = 0x7DFEFBFF_blk;

/// Rotate left by one bit.
Block cyc(const Block& w);

/// AND(OR(w, or_mask), and_mask).
Block fix_with(const Block& w, const Block& or_mask, const Block& and_mask);

inline Block fix1(const Block& w) { return fix_with(w, kFixA, kFixC); }
inline Block fix2(const Block& w) { return fix_with(w, kFixB, kFixD); }

/// True for the bytes 0x00 and 0xFF.
bool needs_adjust(const Octet& o);

/// Bit i (MSB first) is One iff byte i of w1||w2 is 0x00 or 0xFF.
Octet pat(const Block& w1, const Block& w2);

/// Replaces every 0x00/0xFF byte of w1||w2 by its XOR with the PAT octet
/// shifted so the byte's own pattern bit lands in the least significant
/// position.
std::pair<Block, Block> byt(const Block& w1, const Block& w2);

/// Pair(carry as 0 or 1, sum mod 2^32).
Pair addc(const Block& w1, const Block& w2);

/// Product folded modulo 2^32-1 with end-around carry.
Block mul1(const Block& a, const Block& b);

/// Product folded modulo 2^32-2: the upper half is doubled and each
/// carry is fed back twice.
Block mul2(const Block& a, const Block& b);

/// MUL2 without the carry of the upper-half doubling. Agrees with mul2
/// whenever the upper half of a*b is below 2^31.
Block mul2a(const Block& a, const Block& b);

/// (o + 1)^2.
Block q(const Octet& o);

}  // namespace maa
