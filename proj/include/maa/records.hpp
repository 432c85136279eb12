#pragma once

// Value records shared by the gate-level core (Word = Block) and the
// native core (Word = std::uint32_t).

#include <cstdint>

#include "maa/word.hpp"

namespace maa {

template <typename Word>
struct WordTraits;

template <>
struct WordTraits<Block> {
  using Byte = Octet;
};

template <>
struct WordTraits<std::uint32_t> {
  using Byte = std::uint8_t;
};

template <typename Word>
using ByteOf = typename WordTraits<Word>::Byte;

/// The six blocks derived from the key.
template <typename Word>
struct PreludeOutT {
  Word x0{}, y0{}, v0{}, w{}, s{}, t{};
  friend constexpr bool operator==(const PreludeOutT&, const PreludeOutT&) = default;
};

/// Every intermediate of the key expansion. j1/k1/p come from BYT/PAT on
/// the raw key; the rest are the MUL1/MUL2 power chains and H values.
template <typename Word>
struct PreludeIntermediatesT {
  Word j1{}, k1{};
  ByteOf<Word> p{};
  Word j12{}, j14{}, j16{}, j18{}, j22{}, j24{}, j26{}, j28{};
  Word k12{}, k14{}, k15{}, k17{}, k19{}, k22{}, k24{}, k25{}, k27{}, k29{};
  Word h0{}, h4{}, h5{}, h6{}, h7{}, h8{}, h9{};
  friend constexpr bool operator==(const PreludeIntermediatesT&,
                                   const PreludeIntermediatesT&) = default;
};

template <typename Word>
struct PreludeTraceT {
  PreludeIntermediatesT<Word> detail;
  PreludeOutT<Word> out;
};

template <typename Word>
struct LoopStateT {
  Word x{}, y{}, v{};
  friend constexpr bool operator==(const LoopStateT&, const LoopStateT&) = default;
};

/// The four masking constants of one loop iteration. The real algorithm
/// always uses standard(); the main-loop test tables substitute others.
template <typename Word>
struct LoopConstantsT {
  Word a{}, b{}, c{}, d{};
};

/// One fully decomposed main-loop iteration. x/y are the inputs after
/// XOR with the message block; f/g the sums, fp/gp after OR, fpp/gpp
/// after AND; xp/yp the products; z = xp ^ yp.
template <typename Word>
struct LoopTraceT {
  Word vp{}, e{}, x{}, y{}, f{}, g{}, fp{}, gp{}, fpp{}, gpp{}, xp{}, yp{}, z{};
  friend constexpr bool operator==(const LoopTraceT&, const LoopTraceT&) = default;
};

/// Outputs of one stream cycle: the carried state and the coda of it.
template <typename Word>
struct CycleOutputT {
  Word x{}, y{}, v{}, z{};
};

}  // namespace maa
