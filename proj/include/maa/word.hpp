#pragma once

// Gate-level machine words for the MAA.
//
// Every value is a tree of two-valued Bits with big-endian field order
// (the first field is always the most significant). Arithmetic on these
// types is built from single-bit full adders and shift-and-add
// multipliers; host integer arithmetic is used only when converting to
// and from native integers at the boundary.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace maa {

enum class Bit : std::uint8_t { Zero = 0, One = 1 };

constexpr Bit not_bit(Bit x) { return x == Bit::Zero ? Bit::One : Bit::Zero; }
constexpr Bit and_bit(Bit x, Bit y) {
  return (x == Bit::One && y == Bit::One) ? Bit::One : Bit::Zero;
}
constexpr Bit or_bit(Bit x, Bit y) {
  return (x == Bit::One || y == Bit::One) ? Bit::One : Bit::Zero;
}
constexpr Bit xor_bit(Bit x, Bit y) { return x == y ? Bit::Zero : Bit::One; }

/// Sum output of a full adder.
constexpr Bit add_bit(Bit x1, Bit x2, Bit x3) { return xor_bit(xor_bit(x1, x2), x3); }

/// Carry output of a full adder.
constexpr Bit car_bit(Bit x1, Bit x2, Bit x3) {
  return or_bit(and_bit(and_bit(x1, x2), not_bit(x3)), and_bit(or_bit(x1, x2), x3));
}

/// Eight bits; bits[0] is the most significant (x1), bits[7] the least (x8).
struct Octet {
  std::array<Bit, 8> bits{};

  static constexpr Octet from_uint(std::uint8_t v) {
    Octet o;
    for (int i = 0; i < 8; ++i) {
      o.bits[i] = ((v >> (7 - i)) & 1u) ? Bit::One : Bit::Zero;
    }
    return o;
  }

  constexpr std::uint8_t to_uint() const {
    unsigned v = 0;
    for (Bit b : bits) v = (v << 1) | static_cast<unsigned>(b);
    return static_cast<std::uint8_t>(v);
  }

  constexpr Bit msb() const { return bits[0]; }

  friend constexpr bool operator==(const Octet&, const Octet&) = default;
};

/// 16-bit half word: hi is o1, lo is o2.
struct Half {
  Octet hi;
  Octet lo;

  static constexpr Half from_uint(std::uint16_t v) {
    return {Octet::from_uint(static_cast<std::uint8_t>(v >> 8)),
            Octet::from_uint(static_cast<std::uint8_t>(v))};
  }
  constexpr std::uint16_t to_uint() const {
    return static_cast<std::uint16_t>((unsigned{hi.to_uint()} << 8) | lo.to_uint());
  }

  friend constexpr bool operator==(const Half&, const Half&) = default;
};

/// 32-bit block; octets[0] is o1 (most significant), octets[3] is o4.
struct Block {
  std::array<Octet, 4> octets{};

  static constexpr Block from_uint(std::uint32_t v) {
    Block w;
    for (int i = 0; i < 4; ++i) {
      w.octets[i] = Octet::from_uint(static_cast<std::uint8_t>(v >> (24 - 8 * i)));
    }
    return w;
  }

  constexpr std::uint32_t to_uint() const {
    std::uint32_t v = 0;
    for (const Octet& o : octets) v = (v << 8) | o.to_uint();
    return v;
  }

  constexpr Bit bit(int i) const { return octets[i / 8].bits[i % 8]; }

  friend constexpr bool operator==(const Block&, const Block&) = default;
};

/// 64-bit pair: hi is w1 (upper 32 bits), lo is w2.
struct Pair {
  Block hi;
  Block lo;

  static constexpr Pair from_uint(std::uint64_t v) {
    return {Block::from_uint(static_cast<std::uint32_t>(v >> 32)),
            Block::from_uint(static_cast<std::uint32_t>(v))};
  }
  constexpr std::uint64_t to_uint() const {
    return (std::uint64_t{hi.to_uint()} << 32) | lo.to_uint();
  }

  friend constexpr bool operator==(const Pair&, const Pair&) = default;
};

/// A (width+1)-bit addition result: carry * 2^width + sum.
template <typename Word>
struct CarrySum {
  Bit carry = Bit::Zero;
  Word sum{};

  friend constexpr bool operator==(const CarrySum&, const CarrySum&) = default;
};

constexpr Block operator""_blk(unsigned long long v) {
  return Block::from_uint(static_cast<std::uint32_t>(v));
}

// --- Hex text -------------------------------------------------------------
// Output is uppercase without prefix; input is case-insensitive and must
// have exactly the width's digit count (2/4/8/16).

std::string to_hex(const Octet& o);
std::string to_hex(const Half& h);
std::string to_hex(const Block& w);
std::string to_hex(const Pair& p);

Octet parse_octet(std::string_view text);
Half parse_half(std::string_view text);
Block parse_block(std::string_view text);
Pair parse_pair(std::string_view text);

/// Parses exactly `digits` hex digits; throws ParseError naming the first
/// bad position.
std::uint64_t parse_hex_digits(std::string_view text, std::size_t digits);

// --- Logic ----------------------------------------------------------------

enum class LogicOp { And, Or, Xor, Not };

Octet and_octet(const Octet& a, const Octet& b);
Octet or_octet(const Octet& a, const Octet& b);
Octet xor_octet(const Octet& a, const Octet& b);
Octet not_octet(const Octet& a);

/// Dispatches on `op`; `b` must be present for every op except Not and
/// absent for Not (std::invalid_argument otherwise).
Octet octet_logic(LogicOp op, const Octet& a, std::optional<Octet> b = std::nullopt);

Block and_block(const Block& a, const Block& b);
Block or_block(const Block& a, const Block& b);
Block xor_block(const Block& a, const Block& b);

inline Block operator&(const Block& a, const Block& b) { return and_block(a, b); }
inline Block operator|(const Block& a, const Block& b) { return or_block(a, b); }
inline Block operator^(const Block& a, const Block& b) { return xor_block(a, b); }

enum class ShiftDir { Left, Right };

/// Logical shift by 1..7 positions, filling with Zero. Throws
/// std::out_of_range for any other count.
Octet shift_octet(const Octet& a, int n, ShiftDir dir);

// --- Widening / narrowing -------------------------------------------------

constexpr Half half_upper(const Block& w) { return {w.octets[0], w.octets[1]}; }
constexpr Half half_lower(const Block& w) { return {w.octets[2], w.octets[3]}; }
constexpr Half widen(const Octet& o) { return {Octet{}, o}; }
constexpr Block widen(const Half& h) { return {{Octet{}, Octet{}, h.hi, h.lo}}; }

// --- Adders ---------------------------------------------------------------

/// Ripple-carry 8-bit adder with carry in.
CarrySum<Octet> add_octet_carry(const Octet& a, const Octet& b, Bit cin);
Octet add_octet(const Octet& a, const Octet& b);

CarrySum<Half> add_half_carry(const Half& a, const Half& b);
Half add_half(const Half& a, const Half& b);

/// 32-bit adder chained through four octet adders, least significant first.
CarrySum<Block> add_block_carry(const Block& a, const Block& b);
Block add_block(const Block& a, const Block& b);

// --- Multipliers ----------------------------------------------------------

/// 8x8 -> 16 shift-and-add multiplier, scanning `a` from its MSB.
Half mul_octet(const Octet& a, const Octet& b);

/// 16x16 -> 32 from four 8x8 partial products.
Block mul_half(const Half& a, const Half& b);

inline Block square_half(const Half& h) { return mul_half(h, h); }

/// 32x32 -> 64 from four 16x16 partial products.
Pair mul_block(const Block& a, const Block& b);

}  // namespace maa
