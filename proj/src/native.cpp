#include "maa/native.hpp"

#include <string>
#include <tuple>
#include <vector>

#include "maa/error.hpp"

namespace maa::native {

namespace {

bool needs_adjust(Word byte) { return byte == 0x00 || byte == 0xFF; }

struct Fold {
  Word carry;
  Word sum;
};

// ADDC: 33-bit sum split into carry and low word.
Fold addc(Word a, Word b) {
  const std::uint64_t s = std::uint64_t{a} + b;
  return {static_cast<Word>(s >> 32), static_cast<Word>(s)};
}

}  // namespace

std::uint8_t pat(Word w1, Word w2) {
  unsigned p = 0;
  for (int i = 0; i < 4; ++i) {
    p = (p << 1) | (needs_adjust((w1 >> (24 - 8 * i)) & 0xFF) ? 1u : 0u);
  }
  for (int i = 0; i < 4; ++i) {
    p = (p << 1) | (needs_adjust((w2 >> (24 - 8 * i)) & 0xFF) ? 1u : 0u);
  }
  return static_cast<std::uint8_t>(p);
}

std::pair<Word, Word> byt(Word w1, Word w2) {
  const Word p = pat(w1, w2);
  Word u = 0;
  Word l = 0;
  for (int i = 0; i < 4; ++i) {
    const int shift = 24 - 8 * i;
    Word b1 = (w1 >> shift) & 0xFF;
    Word b2 = (w2 >> shift) & 0xFF;
    if (needs_adjust(b1)) b1 ^= p >> (7 - i);
    if (needs_adjust(b2)) b2 ^= p >> (3 - i);
    u |= b1 << shift;
    l |= b2 << shift;
  }
  return {u, l};
}

Word mul1(Word a, Word b) {
  const std::uint64_t product = std::uint64_t{a} * b;
  const Fold f = addc(static_cast<Word>(product >> 32), static_cast<Word>(product));
  return f.sum + f.carry;
}

Word mul2(Word a, Word b) {
  const std::uint64_t product = std::uint64_t{a} * b;
  const Word hi = static_cast<Word>(product >> 32);
  const Word lo = static_cast<Word>(product);
  const Fold doubled = addc(hi, hi);
  const Word upper = doubled.sum + 2 * doubled.carry;
  const Fold f = addc(upper, lo);
  return f.sum + 2 * f.carry;
}

Word mul2a(Word a, Word b) {
  const std::uint64_t product = std::uint64_t{a} * b;
  const Word hi = static_cast<Word>(product >> 32);
  const Word lo = static_cast<Word>(product);
  const Fold f = addc(hi + hi, lo);
  return f.sum + 2 * f.carry;
}

PreludeTrace prelude_chain(Word j1, Word k1, std::uint8_t p) {
  PreludeTrace t;
  auto& d = t.detail;
  d.j1 = j1;
  d.k1 = k1;
  d.p = p;

  d.j12 = mul1(j1, j1);
  d.j14 = mul1(d.j12, d.j12);
  d.j16 = mul1(d.j12, d.j14);
  d.j18 = mul1(d.j12, d.j16);
  d.j22 = mul2(j1, j1);
  d.j24 = mul2(d.j22, d.j22);
  d.j26 = mul2(d.j22, d.j24);
  d.j28 = mul2(d.j22, d.j26);

  d.k12 = mul1(k1, k1);
  d.k14 = mul1(d.k12, d.k12);
  d.k15 = mul1(k1, d.k14);
  d.k17 = mul1(d.k12, d.k15);
  d.k19 = mul1(d.k12, d.k17);
  d.k22 = mul2(k1, k1);
  d.k24 = mul2(d.k22, d.k22);
  d.k25 = mul2(k1, d.k24);
  d.k27 = mul2(d.k22, d.k25);
  d.k29 = mul2(d.k22, d.k27);

  d.h4 = d.j14 ^ d.j24;
  d.h6 = d.j16 ^ d.j26;
  d.h8 = d.j18 ^ d.j28;
  d.h0 = d.k15 ^ d.k25;
  d.h5 = mul2(d.h0, q(p));
  d.h7 = d.k17 ^ d.k27;
  d.h9 = d.k19 ^ d.k29;

  std::tie(t.out.x0, t.out.y0) = byt(d.h4, d.h5);
  std::tie(t.out.v0, t.out.w) = byt(d.h6, d.h7);
  std::tie(t.out.s, t.out.t) = byt(d.h8, d.h9);
  return t;
}

PreludeTrace prelude_trace(NativeKey key) {
  const auto [j1, k1] = byt(key.j, key.k);
  return prelude_chain(j1, k1, pat(key.j, key.k));
}

LoopState main_loop(const LoopState& state, Word w, Word m) {
  const Word vp = cyc(state.v);
  const Word e = vp ^ w;
  const Word x = state.x ^ m;
  const Word y = state.y ^ m;
  return {mul1(x, fix1(y + e)), mul2a(y, fix2(x + e)), vp};
}

Word coda(const LoopState& state, Word w, Word s, Word t) {
  const LoopState last = main_loop(main_loop(state, w, s), w, t);
  return last.x ^ last.y;
}

LoopTrace loop_trace(const LoopState& state, Word w, Word m, const LoopConstants& consts) {
  LoopTrace t;
  t.vp = cyc(state.v);
  t.e = t.vp ^ w;
  t.x = state.x ^ m;
  t.y = state.y ^ m;
  t.f = t.e + t.y;
  t.g = t.e + t.x;
  t.fp = t.f | consts.a;
  t.gp = t.g | consts.b;
  t.fpp = t.fp & consts.c;
  t.gpp = t.gp & consts.d;
  t.xp = mul1(t.x, t.fpp);
  t.yp = mul2a(t.y, t.gpp);
  t.z = t.xp ^ t.yp;
  return t;
}

std::vector<Word> pack_words(std::span<const std::uint8_t> bytes, ByteOrder order) {
  std::vector<Word> words((bytes.size() + 3) / 4, 0);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const std::size_t lane = i % 4;
    const unsigned shift = order == ByteOrder::BigEndian ? 24 - 8 * lane : 8 * lane;
    words[i / 4] |= Word{bytes[i]} << shift;
  }
  return words;
}

Word mac(NativeKey key, std::span<const Word> blocks, std::uint64_t limit) {
  if (blocks.empty()) throw EmptyMessageError("MAC of an empty message is undefined");
  if (blocks.size() >= limit) {
    throw SizeLimitError("message must contain fewer than " + std::to_string(limit) +
                         " blocks");
  }
  const PreludeOut p = prelude(key);
  const LoopState initial{p.x0, p.y0, p.v0};
  LoopState state = initial;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0 && i % kSegmentBlocks == 0) {
      const Word segment_mac = coda(state, p.w, p.s, p.t);
      state = main_loop(initial, p.w, segment_mac);
    }
    state = main_loop(state, p.w, blocks[i]);
  }
  return coda(state, p.w, p.s, p.t);
}

Block mac(const Key& key, std::span<const Block> blocks, std::uint64_t limit) {
  std::vector<Word> words;
  words.reserve(blocks.size());
  for (const Block& b : blocks) words.push_back(b.to_uint());
  return Block::from_uint(mac(to_native(key), words, limit));
}

}  // namespace maa::native
