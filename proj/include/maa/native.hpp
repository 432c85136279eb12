#pragma once

// Second MAA implementation on host 32/64-bit integers.
//
// Mirrors the fold sequences of the gate-level core literally (explicit
// carries, not remainders) so results agree bit for bit, including the
// choice of representative for degenerate residues.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "maa/core.hpp"
#include "maa/records.hpp"

namespace maa::native {

using Word = std::uint32_t;
using PreludeOut = PreludeOutT<Word>;
using PreludeTrace = PreludeTraceT<Word>;
using LoopState = LoopStateT<Word>;
using LoopConstants = LoopConstantsT<Word>;
using LoopTrace = LoopTraceT<Word>;

inline constexpr Word kFixA = 0x02040801u;
inline constexpr Word kFixB = 0x00804021u;
inline constexpr Word kFixC = 0xBFEF7FDFu;
inline constexpr Word kFixD = 0x7DFEFBFFu;
inline constexpr LoopConstants kStandardLoopConstants{kFixA, kFixB, kFixC, kFixD};

struct NativeKey {
  Word j = 0;
  Word k = 0;
};

inline NativeKey to_native(const Key& key) { return {key.j.to_uint(), key.k.to_uint()}; }

constexpr Word cyc(Word w) { return (w << 1) | (w >> 31); }
constexpr Word fix1(Word w) { return (w | kFixA) & kFixC; }
constexpr Word fix2(Word w) { return (w | kFixB) & kFixD; }

std::uint8_t pat(Word w1, Word w2);
std::pair<Word, Word> byt(Word w1, Word w2);

Word mul1(Word a, Word b);
Word mul2(Word a, Word b);
Word mul2a(Word a, Word b);

constexpr Word q(std::uint8_t o) { return (Word{o} + 1) * (Word{o} + 1); }

PreludeTrace prelude_chain(Word j1, Word k1, std::uint8_t p);
PreludeTrace prelude_trace(NativeKey key);
inline PreludeOut prelude(NativeKey key) { return prelude_trace(key).out; }

LoopState main_loop(const LoopState& state, Word w, Word m);
Word coda(const LoopState& state, Word w, Word s, Word t);
LoopTrace loop_trace(const LoopState& state, Word w, Word m,
                     const LoopConstants& consts = kStandardLoopConstants);

/// Zero-padded big- or little-endian grouping of bytes into words.
std::vector<Word> pack_words(std::span<const std::uint8_t> bytes,
                             ByteOrder order = ByteOrder::BigEndian);

/// Full segmented MAC. Throws EmptyMessageError / SizeLimitError under the
/// same rules as maa::mac_blocks.
Word mac(NativeKey key, std::span<const Word> blocks,
         std::uint64_t limit = kDefaultBlockLimit);

/// Boundary adaptor over gate-level blocks.
Block mac(const Key& key, std::span<const Block> blocks,
          std::uint64_t limit = kDefaultBlockLimit);

}  // namespace maa::native
