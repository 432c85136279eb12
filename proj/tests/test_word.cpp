#include <doctest.h>

#include <random>
#include <stdexcept>

#include "maa/error.hpp"
#include "maa/word.hpp"
#include "properties.hpp"

using namespace maa;

namespace {

Octet oct(unsigned v) { return Octet::from_uint(static_cast<std::uint8_t>(v)); }

}  // namespace

TEST_CASE("bit gates match integer truth tables") {
  for (unsigned x = 0; x < 2; ++x) {
    for (unsigned y = 0; y < 2; ++y) {
      const Bit bx = static_cast<Bit>(x);
      const Bit by = static_cast<Bit>(y);
      CHECK(static_cast<unsigned>(and_bit(bx, by)) == (x & y));
      CHECK(static_cast<unsigned>(or_bit(bx, by)) == (x | y));
      CHECK(static_cast<unsigned>(xor_bit(bx, by)) == (x ^ y));
      for (unsigned z = 0; z < 2; ++z) {
        const Bit bz = static_cast<Bit>(z);
        CHECK(static_cast<unsigned>(add_bit(bx, by, bz)) == ((x + y + z) & 1));
        CHECK(static_cast<unsigned>(car_bit(bx, by, bz)) == ((x + y + z) >> 1));
      }
    }
    CHECK(static_cast<unsigned>(not_bit(static_cast<Bit>(x))) == 1 - x);
  }
}

TEST_CASE("bit zero of an octet is the most significant") {
  CHECK(oct(0x80).bits[0] == Bit::One);
  CHECK(oct(0x80).bits[7] == Bit::Zero);
  CHECK(Block::from_uint(0x80000000).bit(0) == Bit::One);
  CHECK(Block::from_uint(0x00000001).bit(31) == Bit::One);
}

TEST_CASE("octet adder is exact on every input") {
  const props::Result r = props::octet_adder();
  CHECK(r.cases == 131072);
  CHECK_MESSAGE(r.counterexamples == 0, r.first);
}

TEST_CASE("octet multiplier is exact on every input") {
  const props::Result r = props::octet_multiplier();
  CHECK(r.cases == 65536);
  CHECK_MESSAGE(r.counterexamples == 0, r.first);
}

TEST_CASE("octet logic and shifts agree with machine operators") {
  for (unsigned a = 0; a < 256; ++a) {
    CHECK(not_octet(oct(a)).to_uint() == static_cast<std::uint8_t>(~a));
    CHECK(octet_logic(LogicOp::Not, oct(a)) == not_octet(oct(a)));
    for (int n = 1; n <= 7; ++n) {
      CHECK(shift_octet(oct(a), n, ShiftDir::Left).to_uint() == static_cast<std::uint8_t>(a << n));
      CHECK(shift_octet(oct(a), n, ShiftDir::Right).to_uint() == (a >> n));
    }
    for (unsigned b = 0; b < 256; b += 7) {
      CHECK(and_octet(oct(a), oct(b)).to_uint() == (a & b));
      CHECK(or_octet(oct(a), oct(b)).to_uint() == (a | b));
      CHECK(xor_octet(oct(a), oct(b)).to_uint() == (a ^ b));
      CHECK(octet_logic(LogicOp::Xor, oct(a), oct(b)).to_uint() == (a ^ b));
    }
  }
}

TEST_CASE("octet operations reject bad arguments") {
  CHECK_THROWS_AS(shift_octet(oct(1), 0, ShiftDir::Left), std::out_of_range);
  CHECK_THROWS_AS(shift_octet(oct(1), 8, ShiftDir::Right), std::out_of_range);
  CHECK_THROWS_AS(octet_logic(LogicOp::And, oct(1)), std::invalid_argument);
  CHECK_THROWS_AS(octet_logic(LogicOp::Not, oct(1), oct(2)), std::invalid_argument);
}

TEST_CASE("block adder and multipliers agree with machine arithmetic") {
  std::mt19937_64 rng(0x5EED0001);
  for (int i = 0; i < 100000; ++i) {
    const std::uint32_t a = static_cast<std::uint32_t>(rng());
    const std::uint32_t b = static_cast<std::uint32_t>(rng());
    const Block ba = Block::from_uint(a);
    const Block bb = Block::from_uint(b);
    const auto sum = add_block_carry(ba, bb);
    const std::uint64_t wide = std::uint64_t{a} + b;
    REQUIRE(sum.sum.to_uint() == static_cast<std::uint32_t>(wide));
    REQUIRE((sum.carry == Bit::One) == (wide >> 32 != 0));
    REQUIRE(add_block(ba, bb).to_uint() == a + b);
    REQUIRE(mul_block(ba, bb).to_uint() == std::uint64_t{a} * b);
    const std::uint16_t ha = static_cast<std::uint16_t>(a);
    const std::uint16_t hb = static_cast<std::uint16_t>(b);
    REQUIRE(mul_half(Half::from_uint(ha), Half::from_uint(hb)).to_uint() == std::uint32_t{ha} * hb);
    REQUIRE(add_half(Half::from_uint(ha), Half::from_uint(hb)).to_uint() ==
            static_cast<std::uint16_t>(ha + hb));
  }
}

TEST_CASE("multiplier boundary operands") {
  const std::uint32_t edges[] = {0, 1, 2, 0x7FFFFFFF, 0x80000000, 0xFFFFFFFE, 0xFFFFFFFF, 0x0000FFFF,
                                 0xFFFF0000};
  for (std::uint32_t a : edges) {
    for (std::uint32_t b : edges) {
      CHECK(mul_block(Block::from_uint(a), Block::from_uint(b)).to_uint() == std::uint64_t{a} * b);
    }
  }
  CHECK(square_half(Half::from_uint(0xFFFF)).to_uint() == 0xFFFE0001u);
}

TEST_CASE("hex round trips and strict parsing") {
  std::mt19937_64 rng(0x5EED0002);
  for (int i = 0; i < 1000; ++i) {
    const Block b = Block::from_uint(static_cast<std::uint32_t>(rng()));
    CHECK(parse_block(to_hex(b)) == b);
  }
  CHECK(to_hex(Block::from_uint(0xABCDEF01)) == "ABCDEF01");
  CHECK(to_hex(oct(0x0A)) == "0A");
  CHECK(parse_block("abcdef01").to_uint() == 0xABCDEF01u);
  CHECK(parse_pair("00FF00FF00000000").to_uint() == 0x00FF00FF00000000ull);
  CHECK_THROWS_AS(parse_block("1234567"), ParseError);
  CHECK_THROWS_AS(parse_block("123456789"), ParseError);
  try {
    parse_block("12x45678");
    FAIL("accepted a non-hex digit");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
  }
}

TEST_CASE("widening and halves") {
  const Block w = Block::from_uint(0x12345678);
  CHECK(half_upper(w).to_uint() == 0x1234);
  CHECK(half_lower(w).to_uint() == 0x5678);
  CHECK(widen(Half::from_uint(0xBEEF)).to_uint() == 0x0000BEEFu);
  CHECK(widen(oct(0x7F)).to_uint() == 0x007F);
  CHECK((w ^ w).to_uint() == 0u);
  CHECK((w | Block::from_uint(0x0F)).to_uint() == 0x1234567Fu);
  CHECK((w & Block::from_uint(0xFF)).to_uint() == 0x78u);
}
