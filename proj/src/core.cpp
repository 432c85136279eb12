#include "maa/core.hpp"

#include <stdexcept>
#include <string>
#include <tuple>

#include "maa/error.hpp"

namespace maa {

Key Key::from_hex(std::string_view text) {
  const Pair p = parse_pair(text);
  return {p.hi, p.lo};
}

std::string Key::to_hex() const { return maa::to_hex(j) + maa::to_hex(k); }

PreludeTrace prelude_chain(const Block& j1, const Block& k1, const Octet& p) {
  PreludeTrace t;
  PreludeIntermediates& d = t.detail;
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

  d.h4 = xor_block(d.j14, d.j24);
  d.h6 = xor_block(d.j16, d.j26);
  d.h8 = xor_block(d.j18, d.j28);
  d.h0 = xor_block(d.k15, d.k25);
  d.h5 = mul2(d.h0, q(p));
  d.h7 = xor_block(d.k17, d.k27);
  d.h9 = xor_block(d.k19, d.k29);

  std::tie(t.out.x0, t.out.y0) = byt(d.h4, d.h5);
  std::tie(t.out.v0, t.out.w) = byt(d.h6, d.h7);
  std::tie(t.out.s, t.out.t) = byt(d.h8, d.h9);
  return t;
}

PreludeTrace prelude_trace(const Key& key) {
  const auto [j1, k1] = byt(key.j, key.k);
  return prelude_chain(j1, k1, pat(key.j, key.k));
}

LoopState main_loop(const LoopState& state, const Block& w, const Block& m) {
  const Block vp = cyc(state.v);
  const Block e = xor_block(vp, w);
  const Block x = xor_block(state.x, m);
  const Block y = xor_block(state.y, m);
  return {mul1(x, fix1(add_block(y, e))), mul2a(y, fix2(add_block(x, e))), vp};
}

LoopState main_loop2(const LoopState& initial, const Block& w, const Block& z, const Block& m) {
  return main_loop(main_loop(initial, w, z), w, m);
}

Block coda(const LoopState& state, const Block& w, const Block& s, const Block& t) {
  const LoopState last = main_loop(main_loop(state, w, s), w, t);
  return xor_block(last.x, last.y);
}

LoopTrace loop_trace(const LoopState& state, const Block& w, const Block& m,
                     const LoopConstants& consts) {
  LoopTrace t;
  t.vp = cyc(state.v);
  t.e = xor_block(t.vp, w);
  t.x = xor_block(state.x, m);
  t.y = xor_block(state.y, m);
  t.f = add_block(t.e, t.y);
  t.g = add_block(t.e, t.x);
  t.fp = or_block(t.f, consts.a);
  t.gp = or_block(t.g, consts.b);
  t.fpp = and_block(t.fp, consts.c);
  t.gpp = and_block(t.gp, consts.d);
  t.xp = mul1(t.x, t.fpp);
  t.yp = mul2a(t.y, t.gpp);
  t.z = xor_block(t.xp, t.yp);
  return t;
}

std::vector<Block> pack_blocks(std::span<const std::uint8_t> bytes, ByteOrder order) {
  std::vector<Block> blocks((bytes.size() + 3) / 4);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const std::size_t lane = i % 4;
    const std::size_t slot = order == ByteOrder::BigEndian ? lane : 3 - lane;
    blocks[i / 4].octets[slot] = Octet::from_uint(bytes[i]);
  }
  return blocks;
}

std::vector<std::uint8_t> unpack_blocks(std::span<const Block> blocks, ByteOrder order) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(blocks.size() * 4);
  for (const Block& b : blocks) {
    for (std::size_t lane = 0; lane < 4; ++lane) {
      const std::size_t slot = order == ByteOrder::BigEndian ? lane : 3 - lane;
      bytes.push_back(b.octets[slot].to_uint());
    }
  }
  return bytes;
}

MacStream::MacStream(const Key& key, std::uint64_t limit)
    : prelude_(prelude(key)), state_(initial_state(prelude_)), limit_(limit) {
  if (limit < 1) throw std::invalid_argument("block limit must be at least 1");
}

const LoopState& MacStream::push(const Block& m) {
  if (total_ + 1 >= limit_) {
    throw SizeLimitError("message must contain fewer than " + std::to_string(limit_) +
                         " blocks");
  }
  if (total_ == 0) {
    state_ = main_loop(initial_state(prelude_), prelude_.w, m);
    position_ = 0;
  } else if (position_ == kSegmentBlocks - 1) {
    const Block segment_mac = coda(state_, prelude_);
    state_ = main_loop2(initial_state(prelude_), prelude_.w, segment_mac, m);
    position_ = 0;
  } else {
    state_ = main_loop(state_, prelude_.w, m);
    ++position_;
  }
  ++total_;
  return state_;
}

CycleOutput MacStream::push_cycle(const Block& m) {
  const LoopState& s = push(m);
  return {s.x, s.y, s.v, coda(s, prelude_)};
}

Block MacStream::finish() const {
  if (total_ == 0) throw EmptyMessageError("MAC of an empty message is undefined");
  return coda(state_, prelude_);
}

void MacStream::restart() {
  state_ = initial_state(prelude_);
  total_ = 0;
  position_ = 0;
}

Block mac_blocks(const Key& key, std::span<const Block> blocks, std::uint64_t limit) {
  if (blocks.empty()) throw EmptyMessageError("MAC of an empty message is undefined");
  if (blocks.size() >= limit) {
    throw SizeLimitError("message must contain fewer than " + std::to_string(limit) +
                         " blocks");
  }
  MacStream stream(key, limit);
  for (const Block& b : blocks) stream.push(b);
  return stream.finish();
}

Block mac_message(const Key& key, std::span<const std::uint8_t> payload, std::uint64_t limit,
                  ByteOrder order) {
  if (payload.empty()) throw EmptyMessageError("MAC of an empty message is undefined");
  if ((payload.size() + 3) / 4 >= limit) {
    throw SizeLimitError("message must contain fewer than " + std::to_string(limit) +
                         " blocks");
  }
  const std::vector<Block> blocks = pack_blocks(payload, order);
  return mac_blocks(key, blocks, limit);
}

}  // namespace maa
