#include "maa/ops.hpp"

namespace maa {

namespace {

constexpr Block kZero = 0x00000000_blk;
constexpr Block kOne = 0x00000001_blk;

Bit adjust_code(const Octet& o) { return needs_adjust(o) ? Bit::One : Bit::Zero; }

Octet adjust(const Octet& o, const Octet& mask) { return needs_adjust(o) ? xor_octet(o, mask) : o; }

// PAT shifted right by `n` positions; 0 leaves it unchanged.
Octet pattern_shift(const Octet& pattern, int n) {
  return n == 0 ? pattern : shift_octet(pattern, n, ShiftDir::Right);
}

}  // namespace

Block cyc(const Block& w) {
  Block r;
  for (int i = 0; i < 32; ++i) {
    r.octets[i / 8].bits[i % 8] = w.bit((i + 1) % 32);
  }
  return r;
}

Block fix_with(const Block& w, const Block& or_mask, const Block& and_mask) {
  return and_block(or_block(w, or_mask), and_mask);
}

bool needs_adjust(const Octet& o) {
  return o == Octet::from_uint(0x00) || o == Octet::from_uint(0xFF);
}

Octet pat(const Block& w1, const Block& w2) {
  Octet o;
  for (int i = 0; i < 4; ++i) {
    o.bits[i] = adjust_code(w1.octets[i]);
    o.bits[i + 4] = adjust_code(w2.octets[i]);
  }
  return o;
}

std::pair<Block, Block> byt(const Block& w1, const Block& w2) {
  const Octet pattern = pat(w1, w2);
  Block u;
  Block l;
  for (int i = 0; i < 4; ++i) {
    u.octets[i] = adjust(w1.octets[i], pattern_shift(pattern, 7 - i));
    l.octets[i] = adjust(w2.octets[i], pattern_shift(pattern, 3 - i));
  }
  return {u, l};
}

Pair addc(const Block& w1, const Block& w2) {
  const CarrySum<Block> s = add_block_carry(w1, w2);
  return {s.carry == Bit::Zero ? kZero : kOne, s.sum};
}

Block mul1(const Block& a, const Block& b) {
  const Pair product = mul_block(a, b);
  const Pair folded = addc(product.hi, product.lo);
  return add_block(folded.lo, folded.hi);
}

Block mul2(const Block& a, const Block& b) {
  const Pair product = mul_block(a, b);
  const Pair doubled = addc(product.hi, product.hi);
  const Block upper = add_block(doubled.lo, add_block(doubled.hi, doubled.hi));
  const Pair folded = addc(upper, product.lo);
  return add_block(folded.lo, add_block(folded.hi, folded.hi));
}

Block mul2a(const Block& a, const Block& b) {
  const Pair product = mul_block(a, b);
  const Block upper = add_block(product.hi, product.hi);
  const Pair folded = addc(upper, product.lo);
  return add_block(folded.lo, add_block(folded.hi, folded.hi));
}

Block q(const Octet& o) { return square_half(add_half(widen(o), Half::from_uint(0x0001))); }

}  // namespace maa
