#include "maa/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "maa/error.hpp"

namespace maa {

namespace {

constexpr char kHexDigits[] = "0123456789ABCDEF";

std::string hex_of(std::uint64_t v, std::size_t digits) {
  std::string s(digits, '0');
  for (std::size_t i = 0; i < digits; ++i) {
    s[digits - 1 - i] = kHexDigits[v & 0xF];
    v >>= 4;
  }
  return s;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

template <typename F>
Octet bitwise(const Octet& a, const Octet& b, F f) {
  Octet o;
  for (int i = 0; i < 8; ++i) o.bits[i] = f(a.bits[i], b.bits[i]);
  return o;
}

template <typename F>
Block blockwise(const Block& a, const Block& b, F f) {
  Block w;
  for (int i = 0; i < 4; ++i) w.octets[i] = f(a.octets[i], b.octets[i]);
  return w;
}

// One shift-and-add step: h + (hi_part:lo_part), carry from the low
// byte propagated into the high byte, overflow of the high byte dropped.
Half mul_octet_step(const Half& h, const Octet& hi_part, const Octet& lo_part) {
  const Octet upper = add_octet(h.hi, hi_part);
  const CarrySum<Octet> lower = add_octet_carry(h.lo, lo_part, Bit::Zero);
  if (lower.carry == Bit::Zero) return {upper, lower.sum};
  return {add_octet(upper, Octet::from_uint(0x01)), lower.sum};
}

Half add_half_octet(const Octet& o, const Half& h) { return add_half(widen(o), h); }
Half add_half_octets(const Octet& a, const Octet& b) { return add_half(widen(a), widen(b)); }

Block add_block_half(const Half& h, const Block& w) { return add_block(widen(h), w); }
Block add_block_halves(const Half& a, const Half& b) { return add_block(widen(a), widen(b)); }

}  // namespace

std::string to_hex(const Octet& o) { return hex_of(o.to_uint(), 2); }
std::string to_hex(const Half& h) { return hex_of(h.to_uint(), 4); }
std::string to_hex(const Block& w) { return hex_of(w.to_uint(), 8); }
std::string to_hex(const Pair& p) { return hex_of(p.to_uint(), 16); }

std::uint64_t parse_hex_digits(std::string_view text, std::size_t digits) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < text.size() && i < digits; ++i) {
    const int d = hex_value(text[i]);
    if (d < 0) {
      throw ParseError("invalid hex digit '" + std::string(1, text[i]) + "' at position " +
                           std::to_string(i + 1),
                       0, i + 1);
    }
    v = (v << 4) | static_cast<unsigned>(d);
  }
  if (text.size() != digits) {
    throw ParseError("expected " + std::to_string(digits) + " hex digits, got " +
                         std::to_string(text.size()),
                     0, std::min(text.size(), digits) + 1);
  }
  return v;
}

Octet parse_octet(std::string_view text) {
  return Octet::from_uint(static_cast<std::uint8_t>(parse_hex_digits(text, 2)));
}
Half parse_half(std::string_view text) {
  return Half::from_uint(static_cast<std::uint16_t>(parse_hex_digits(text, 4)));
}
Block parse_block(std::string_view text) {
  return Block::from_uint(static_cast<std::uint32_t>(parse_hex_digits(text, 8)));
}
Pair parse_pair(std::string_view text) { return Pair::from_uint(parse_hex_digits(text, 16)); }

Octet and_octet(const Octet& a, const Octet& b) { return bitwise(a, b, and_bit); }
Octet or_octet(const Octet& a, const Octet& b) { return bitwise(a, b, or_bit); }
Octet xor_octet(const Octet& a, const Octet& b) { return bitwise(a, b, xor_bit); }

Octet not_octet(const Octet& a) {
  Octet o;
  for (int i = 0; i < 8; ++i) o.bits[i] = not_bit(a.bits[i]);
  return o;
}

Octet octet_logic(LogicOp op, const Octet& a, std::optional<Octet> b) {
  if (op == LogicOp::Not) {
    if (b) throw std::invalid_argument("NOT takes a single operand");
    return not_octet(a);
  }
  if (!b) throw std::invalid_argument("binary logic op requires two operands");
  switch (op) {
    case LogicOp::And: return and_octet(a, *b);
    case LogicOp::Or: return or_octet(a, *b);
    case LogicOp::Xor: return xor_octet(a, *b);
    case LogicOp::Not: break;
  }
  throw std::invalid_argument("unknown logic op");
}

Block and_block(const Block& a, const Block& b) { return blockwise(a, b, and_octet); }
Block or_block(const Block& a, const Block& b) { return blockwise(a, b, or_octet); }
Block xor_block(const Block& a, const Block& b) { return blockwise(a, b, xor_octet); }

Octet shift_octet(const Octet& a, int n, ShiftDir dir) {
  if (n < 1 || n > 7) throw std::out_of_range("octet shift count must be 1..7");
  Octet o;
  for (int i = 0; i < 8; ++i) {
    const int src = dir == ShiftDir::Left ? i + n : i - n;
    o.bits[i] = (src >= 0 && src < 8) ? a.bits[src] : Bit::Zero;
  }
  return o;
}

CarrySum<Octet> add_octet_carry(const Octet& a, const Octet& b, Bit cin) {
  CarrySum<Octet> r;
  Bit carry = cin;
  for (int i = 7; i >= 0; --i) {
    r.sum.bits[i] = add_bit(a.bits[i], b.bits[i], carry);
    carry = car_bit(a.bits[i], b.bits[i], carry);
  }
  r.carry = carry;
  return r;
}

Octet add_octet(const Octet& a, const Octet& b) { return add_octet_carry(a, b, Bit::Zero).sum; }

CarrySum<Half> add_half_carry(const Half& a, const Half& b) {
  const CarrySum<Octet> lo = add_octet_carry(a.lo, b.lo, Bit::Zero);
  const CarrySum<Octet> hi = add_octet_carry(a.hi, b.hi, lo.carry);
  return {hi.carry, {hi.sum, lo.sum}};
}

Half add_half(const Half& a, const Half& b) { return add_half_carry(a, b).sum; }

CarrySum<Block> add_block_carry(const Block& a, const Block& b) {
  CarrySum<Block> r;
  Bit carry = Bit::Zero;
  for (int i = 3; i >= 0; --i) {
    const CarrySum<Octet> os = add_octet_carry(a.octets[i], b.octets[i], carry);
    r.sum.octets[i] = os.sum;
    carry = os.carry;
  }
  r.carry = carry;
  return r;
}

Block add_block(const Block& a, const Block& b) { return add_block_carry(a, b).sum; }

Half mul_octet(const Octet& a, const Octet& b) {
  Half h{};
  for (int i = 1; i <= 7; ++i) {
    if (a.bits[i - 1] == Bit::One) {
      h = mul_octet_step(h, shift_octet(b, i, ShiftDir::Right),
                         shift_octet(b, 8 - i, ShiftDir::Left));
    }
  }
  if (a.bits[7] == Bit::One) h = mul_octet_step(h, Octet{}, b);
  return h;
}

Block mul_half(const Half& a, const Half& b) {
  const Half hh = mul_octet(a.hi, b.hi);
  const Half hl = mul_octet(a.hi, b.lo);
  const Half lh = mul_octet(a.lo, b.hi);
  const Half ll = mul_octet(a.lo, b.lo);
  const Half col1 = add_half_octet(hl.lo, add_half_octets(lh.lo, ll.hi));
  const Half col2 = add_half_octet(col1.hi, add_half_octet(hh.lo, add_half_octets(hl.hi, lh.hi)));
  const Half col3 = add_half_octets(col2.hi, hh.hi);
  return {{col3.lo, col2.lo, col1.lo, ll.lo}};
}

Pair mul_block(const Block& a, const Block& b) {
  const Block uu = mul_half(half_upper(a), half_upper(b));
  const Block ul = mul_half(half_upper(a), half_lower(b));
  const Block lu = mul_half(half_lower(a), half_upper(b));
  const Block ll = mul_half(half_lower(a), half_lower(b));
  const Block mid = add_block_half(half_lower(ul), add_block_halves(half_lower(lu), half_upper(ll)));
  const Block high = add_block_half(
      half_upper(mid),
      add_block_half(half_lower(uu), add_block_halves(half_upper(ul), half_upper(lu))));
  const Block top = add_block_halves(half_upper(high), half_upper(uu));
  return {{{top.octets[2], top.octets[3], high.octets[2], high.octets[3]}},
          {{mid.octets[2], mid.octets[3], ll.octets[2], ll.octets[3]}}};
}

}  // namespace maa
