#include "properties.hpp"

#include <array>
#include <random>
#include <sstream>
#include <vector>

#include "maa/core.hpp"
#include "maa/native.hpp"

namespace maa::props {

namespace {

std::string hex32(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::uppercase << v;
  return s.str();
}

Key random_key(std::mt19937_64& rng) {
  return {Block::from_uint(static_cast<std::uint32_t>(rng())),
          Block::from_uint(static_cast<std::uint32_t>(rng()))};
}

}  // namespace

Result octet_adder() {
  Result r;
  for (unsigned a = 0; a < 256; ++a) {
    for (unsigned b = 0; b < 256; ++b) {
      for (unsigned c = 0; c < 2; ++c) {
        ++r.cases;
        const auto got = add_octet_carry(Octet::from_uint(static_cast<std::uint8_t>(a)),
                                         Octet::from_uint(static_cast<std::uint8_t>(b)),
                                         c ? Bit::One : Bit::Zero);
        const unsigned want = a + b + c;
        const unsigned have = (got.carry == Bit::One ? 256u : 0u) + got.sum.to_uint();
        if (have != want) r.fail(hex32(a) + "+" + hex32(b) + "+" + std::to_string(c));
      }
    }
  }
  return r;
}

Result octet_multiplier() {
  Result r;
  for (unsigned a = 0; a < 256; ++a) {
    for (unsigned b = 0; b < 256; ++b) {
      ++r.cases;
      const Half p = mul_octet(Octet::from_uint(static_cast<std::uint8_t>(a)),
                               Octet::from_uint(static_cast<std::uint8_t>(b)));
      if (p.to_uint() != a * b) r.fail(hex32(a) + "*" + hex32(b));
    }
  }
  return r;
}

Result mul_congruence(std::uint64_t pairs, std::uint64_t seed) {
  constexpr std::uint64_t kM1 = 0xFFFFFFFFull;
  constexpr std::uint64_t kM2 = 0xFFFFFFFEull;
  std::mt19937_64 rng(seed);
  Result r;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const std::uint64_t a = static_cast<std::uint32_t>(rng());
    const std::uint64_t b = static_cast<std::uint32_t>(rng());
    const Block ba = Block::from_uint(static_cast<std::uint32_t>(a));
    const Block bb = Block::from_uint(static_cast<std::uint32_t>(b));
    ++r.cases;
    // The operands are reduced first so the 64-bit product cannot overflow.
    const std::uint64_t want1 = (a % kM1) * (b % kM1) % kM1;
    const std::uint64_t want2 = (a % kM2) * (b % kM2) % kM2;
    if (std::uint64_t{mul1(ba, bb).to_uint()} % kM1 != want1) {
      r.fail("mul1 " + hex32(a) + " " + hex32(b));
    }
    if (std::uint64_t{mul2(ba, bb).to_uint()} % kM2 != want2) {
      r.fail("mul2 " + hex32(a) + " " + hex32(b));
    }
  }
  return r;
}

Result cross_core_mac(std::uint64_t messages, std::uint64_t seed) {
  constexpr std::array<std::size_t, 6> kBoundaries{1, 255, 256, 257, 512, 513};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(1, 600);
  Result r;
  for (std::uint64_t i = 0; i < messages; ++i) {
    const std::size_t n = i < kBoundaries.size() ? kBoundaries[i] : length(rng);
    const Key key = random_key(rng);
    std::vector<Block> blocks(n);
    for (Block& b : blocks) b = Block::from_uint(static_cast<std::uint32_t>(rng()));
    ++r.cases;
    const Block gate = mac_blocks(key, blocks);
    const Block fast = native::mac(key, blocks);
    if (!(gate == fast)) r.fail("key " + key.to_hex() + " length " + std::to_string(n));
  }
  return r;
}

Result streaming_vs_batch(std::uint64_t payloads, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(1, 2100);
  Result r;
  for (std::uint64_t i = 0; i < payloads; ++i) {
    const Key key = random_key(rng);
    std::vector<std::uint8_t> bytes(length(rng));
    for (std::uint8_t& b : bytes) b = static_cast<std::uint8_t>(rng());
    ++r.cases;

    MacStream stream(key);
    std::vector<Block> prefix;
    bool prefix_ok = true;
    for (std::size_t off = 0; off < bytes.size(); off += 4) {
      Block m{};
      for (std::size_t lane = 0; lane < 4 && off + lane < bytes.size(); ++lane) {
        m.octets[lane] = Octet::from_uint(bytes[off + lane]);
      }
      prefix.push_back(m);
      const CycleOutput c = stream.push_cycle(m);
      // Prefix MACs are costly; sample the early cycles and segment edges.
      const std::size_t k = prefix.size();
      if (k <= 3 || k % 256 <= 1) prefix_ok = prefix_ok && c.z == mac_blocks(key, prefix);
    }
    const Block batch = mac_message(key, bytes);
    if (!(stream.finish() == batch) || !prefix_ok) {
      r.fail("key " + key.to_hex() + " bytes " + std::to_string(bytes.size()));
    }
  }
  return r;
}

}  // namespace maa::props
