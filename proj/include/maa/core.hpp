#pragma once

// The MAA on gate-level words: prelude, main loop, coda, and the
// segmented mode of operation as a streaming state machine.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "maa/ops.hpp"
#include "maa/records.hpp"
#include "maa/word.hpp"

namespace maa {

/// The 64-bit key. Textual form is J followed by K, 16 hex digits.
struct Key {
  Block j;
  Block k;

  static Key from_hex(std::string_view text);
  std::string to_hex() const;

  friend constexpr bool operator==(const Key&, const Key&) = default;
};

using PreludeOut = PreludeOutT<Block>;
using PreludeIntermediates = PreludeIntermediatesT<Block>;
using PreludeTrace = PreludeTraceT<Block>;
using LoopState = LoopStateT<Block>;
using LoopConstants = LoopConstantsT<Block>;
using LoopTrace = LoopTraceT<Block>;
using CycleOutput = CycleOutputT<Block>;

inline constexpr LoopConstants kStandardLoopConstants{kFixA, kFixB, kFixC, kFixD};

/// Power chains, H values and the final BYT calls, starting from the
/// already-adjusted key halves and the key pattern octet.
PreludeTrace prelude_chain(const Block& j1, const Block& k1, const Octet& p);

PreludeTrace prelude_trace(const Key& key);

inline PreludeOut prelude(const Key& key) { return prelude_trace(key).out; }

inline LoopState initial_state(const PreludeOut& p) { return {p.x0, p.y0, p.v0}; }

LoopState main_loop(const LoopState& state, const Block& w, const Block& m);

/// Segment restart: one iteration on the previous segment's MAC `z`
/// from the initial state, then one on `m`.
LoopState main_loop2(const LoopState& initial, const Block& w, const Block& z, const Block& m);

/// Two iterations on S then T; returns XOR of the final X and Y.
Block coda(const LoopState& state, const Block& w, const Block& s, const Block& t);

inline Block coda(const LoopState& state, const PreludeOut& p) {
  return coda(state, p.w, p.s, p.t);
}

LoopTrace loop_trace(const LoopState& state, const Block& w, const Block& m,
                     const LoopConstants& consts = kStandardLoopConstants);

enum class ByteOrder { BigEndian, LittleEndian };

/// Zero-pads to a multiple of four bytes and groups each four bytes into
/// a block. ISO MAA uses BigEndian; LittleEndian exists for mutation
/// testing of the byte-to-block mapping.
std::vector<Block> pack_blocks(std::span<const std::uint8_t> bytes,
                               ByteOrder order = ByteOrder::BigEndian);

/// Inverse of pack_blocks for whole blocks.
std::vector<std::uint8_t> unpack_blocks(std::span<const Block> blocks,
                                        ByteOrder order = ByteOrder::BigEndian);

inline constexpr std::uint64_t kDefaultBlockLimit = 1'000'000;
inline constexpr unsigned kSegmentBlocks = 256;

/// Incremental MAC computation, one block per cycle.
///
/// The key is consumed by the prelude in the constructor and not kept.
/// Messages are cut into 256-block segments; the first block of every
/// segment after the first restarts from the prelude state, and is
/// preceded by an iteration on the previous segment's MAC.
///
/// `limit` is exclusive: a message must contain fewer than `limit`
/// blocks, and the push that would reach it throws SizeLimitError.
///
/// Single-writer value type; copy it to fork a computation.
class MacStream {
 public:
  explicit MacStream(const Key& key, std::uint64_t limit = kDefaultBlockLimit);

  /// Advances by one block and returns the carried (X, Y, V).
  const LoopState& push(const Block& m);

  /// push() plus the coda of the resulting state, matching the
  /// synchronous node's per-cycle outputs.
  CycleOutput push_cycle(const Block& m);

  /// MAC of the blocks pushed so far. Throws EmptyMessageError if none.
  Block finish() const;

  /// Starts a new message under the same key.
  void restart();

  const PreludeOut& prelude_out() const { return prelude_; }
  const LoopState& state() const { return state_; }
  std::uint64_t blocks() const { return total_; }
  /// Index of the last pushed block inside its segment, 0..255.
  unsigned segment_position() const { return position_; }
  std::uint64_t limit() const { return limit_; }
  bool started() const { return total_ > 0; }

 private:
  PreludeOut prelude_;
  LoopState state_;
  std::uint64_t limit_;
  std::uint64_t total_ = 0;
  unsigned position_ = 0;
};

/// MAC of a block sequence. Throws EmptyMessageError / SizeLimitError.
Block mac_blocks(const Key& key, std::span<const Block> blocks,
                 std::uint64_t limit = kDefaultBlockLimit);

/// MAC of a byte string after zero padding.
Block mac_message(const Key& key, std::span<const std::uint8_t> payload,
                  std::uint64_t limit = kDefaultBlockLimit,
                  ByteOrder order = ByteOrder::BigEndian);

}  // namespace maa
