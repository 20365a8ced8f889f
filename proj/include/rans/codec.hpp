#pragma once

// Core push/pop stack codec. A message is a pair (head, tail): the head is an
// unsigned integer of head_bits bits, the tail a stack of word_bits-bit words.
// Popping extracts one symbol from the head and refills it from the tail;
// pushing is the exact inverse. All operations keep the head inside
// [2^(head_bits - word_bits), 2^head_bits), which is what makes the
// per-symbol cost at most h(x) + epsilon bits.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rans/error.hpp"

namespace rans {

using Symbol = std::uint32_t;

// Precision triple (head_bits, word_bits, prob_bits) plus derived constants.
// Immutable after construction; freely shareable across threads.
class CodecParams {
 public:
  // The stock configuration: 64-bit head, 32-bit tail words, 16-bit
  // probabilities. epsilon = log2(1/(1 - 2^-16)) ~= 2.2e-5 bits per symbol.
  CodecParams() : CodecParams(64, 32, 16) {}

  CodecParams(std::uint32_t head_bits, std::uint32_t word_bits,
              std::uint32_t prob_bits)
      : head_bits_(head_bits), word_bits_(word_bits), prob_bits_(prob_bits) {
    if (head_bits < 2 || head_bits > 64)
      throw std::invalid_argument("head precision must be in [2, 64] bits");
    if (word_bits == 0 || word_bits >= head_bits)
      throw std::invalid_argument(
          "tail word precision must satisfy 0 < word_bits < head_bits");
    if (prob_bits == 0)
      throw std::invalid_argument("probability precision must be >= 1 bit");
    if (head_bits - word_bits <= prob_bits)
      throw std::invalid_argument(
          "need head_bits - word_bits - prob_bits >= 1 for renormalization "
          "headroom");
    // log2(1 / (1 - 2^-spare)); log1p keeps this positive even when
    // 2^-spare underflows the 1-x subtraction.
    epsilon_ = -std::log1p(-std::ldexp(1.0, -static_cast<int>(spare_bits()))) /
               std::numbers::ln2;
  }

  std::uint32_t head_bits() const { return head_bits_; }
  std::uint32_t word_bits() const { return word_bits_; }
  std::uint32_t prob_bits() const { return prob_bits_; }
  std::uint32_t spare_bits() const {
    return head_bits_ - word_bits_ - prob_bits_;
  }

  // Lower end of the head's working range, 2^(head_bits - word_bits).
  std::uint64_t head_min() const {
    return std::uint64_t{1} << (head_bits_ - word_bits_);
  }
  std::uint64_t prob_scale() const { return std::uint64_t{1} << prob_bits_; }
  std::uint64_t prob_mask() const { return prob_scale() - 1; }
  std::uint64_t word_mask() const {
    return (std::uint64_t{1} << word_bits_) - 1;
  }

  bool fits_head(std::uint64_t head) const {
    return head_bits_ == 64 || (head >> head_bits_) == 0;
  }
  bool fits_word(std::uint64_t word) const {
    return (word >> word_bits_) == 0;
  }

  // Per-symbol overhead bound in bits, log2(1/(1 - 2^-spare_bits)).
  double epsilon() const { return epsilon_; }

  bool operator==(const CodecParams&) const = default;

 private:
  std::uint32_t head_bits_;
  std::uint32_t word_bits_;
  std::uint32_t prob_bits_;
  double epsilon_;
};

// One symbol's interval within [0, 2^prob_bits): probability weight and
// cumulative weight of everything before it.
struct SymbolSlot {
  Symbol symbol = 0;
  std::uint64_t weight = 0;      // in {1 .. 2^prob_bits}
  std::uint64_t cumulative = 0;  // in {0 .. 2^prob_bits - 1}

  bool operator==(const SymbolSlot&) const = default;
};

// Codec state. Single-owner mutable value: operations on one Message are
// strictly sequential; independent Messages need no coordination.
struct Message {
  std::uint64_t head = 0;
  std::vector<std::uint64_t> tail;  // back() is the top of the stack

  bool operator==(const Message&) const = default;
};

// The shortest valid message: head at the bottom of the working range and an
// empty tail. Encoding starts here so the final stream is as small as
// possible.
inline Message init_message(const CodecParams& params) {
  return Message{params.head_min(), {}};
}

// Flattened size in bits: head_bits + word_bits * |tail|.
inline std::uint64_t bit_length(const Message& m, const CodecParams& params) {
  return params.head_bits() +
         std::uint64_t{params.word_bits()} * m.tail.size();
}

// Real-valued size in bits: log2(head) + word_bits * |tail|. Always within
// word_bits below bit_length; used to prove and check the rate bounds.
inline double effective_bit_length(const Message& m,
                                   const CodecParams& params) {
  return std::log2(static_cast<double>(m.head)) +
         static_cast<double>(params.word_bits()) *
             static_cast<double>(m.tail.size());
}

struct DecodeStep {
  std::uint64_t head;
  SymbolSlot slot;
};

// The decode bijection on the head alone: splits the head into an interval
// index and an offset, selects the symbol owning that offset, and counts how
// many integers below `head` decode to the same symbol. Total function of the
// head; the working-range constraint (and with it the rate guarantee) is
// enforced by pop(), not here.
//
// SlotLookup maps an offset in [0, 2^prob_bits) to the SymbolSlot whose
// interval [cumulative, cumulative + weight) contains it.
template <typename SlotLookup>
inline DecodeStep decode_symbol(std::uint64_t head, SlotLookup&& lookup,
                                const CodecParams& params) {
  const std::uint64_t offset = head & params.prob_mask();
  const SymbolSlot slot = lookup(offset);
  // weight * (head >> prob_bits) stays below 2^head_bits, so 64-bit
  // arithmetic never overflows even at head_bits = 64.
  const std::uint64_t next =
      slot.weight * (head >> params.prob_bits()) + offset - slot.cumulative;
  return DecodeStep{next, slot};
}

// Exact inverse of decode_symbol for a fixed symbol. Requires
//   weight * 2^(spare_bits) <= head < weight * 2^(head_bits - prob_bits),
// which renorm_inverse establishes; outside that range the result would not
// land back in the working range.
inline std::uint64_t encode_symbol(std::uint64_t head, const SymbolSlot& slot,
                                   const CodecParams& params) {
  if (slot.weight == 0 || slot.weight > params.prob_scale())
    throw PreconditionError("encode_symbol: weight out of range");
  const std::uint64_t lo = slot.weight << params.spare_bits();
  const bool below_hi =
      (head >> (params.head_bits() - params.prob_bits())) < slot.weight;
  if (head < lo || !below_hi)
    throw PreconditionError(
        "encode_symbol: head outside the renormalized interval (call "
        "renorm_inverse first)");
  return ((head / slot.weight) << params.prob_bits()) + head % slot.weight +
         slot.cumulative;
}

// Refill the head from the tail until it is back in the working range.
// Throws TailUnderflowError if the tail runs dry first, which means the
// stream was decoded past its end.
inline void renorm(Message& m, const CodecParams& params) {
  const std::uint64_t lo = params.head_min();
  while (m.head < lo) {
    if (m.tail.empty())
      throw TailUnderflowError(
          "renorm: tail exhausted while refilling the head (truncated or "
          "over-popped stream)");
    m.head = (m.head << params.word_bits()) | m.tail.back();
    m.tail.pop_back();
  }
}

// Spill low-order words from the head onto the tail until the head is inside
// [weight * 2^(spare_bits), weight * 2^(head_bits - prob_bits)). The loop can
// land in that interval at most once (each step shrinks the head by a full
// word), so stopping at the first opportunity is exact.
inline void renorm_inverse(Message& m, std::uint64_t weight,
                           const CodecParams& params) {
  if (weight == 0 || weight > params.prob_scale())
    throw PreconditionError("renorm_inverse: weight out of range");
  const std::uint32_t hi_shift = params.head_bits() - params.prob_bits();
  while ((m.head >> hi_shift) >= weight) {
    m.tail.push_back(m.head & params.word_mask());
    m.head >>= params.word_bits();
  }
  if (m.head < (weight << params.spare_bits()))
    throw PreconditionError(
        "renorm_inverse: head below the target interval (input message was "
        "invalid)");
}

// Decode one symbol: split it out of the head, then refill the head from the
// tail. The drop in effective_bit_length is at most
// log2(prob_scale / weight) + epsilon.
template <typename SlotLookup>
inline SymbolSlot pop(Message& m, SlotLookup&& lookup,
                      const CodecParams& params) {
  if (m.head < params.head_min() || !params.fits_head(m.head))
    throw PreconditionError("pop: message head outside the working range");
  DecodeStep step =
      decode_symbol(m.head, std::forward<SlotLookup>(lookup), params);
  m.head = step.head;
  renorm(m, params);
  return step.slot;
}

// Encode one symbol: spill words so the encode step cannot overflow, then
// apply the inverse bijection. push and pop are exact inverses:
// pop(push(m, x)) == (m, x) and push(pop(m)) == m.
inline void push(Message& m, const SymbolSlot& slot,
                 const CodecParams& params) {
  if (m.head < params.head_min() || !params.fits_head(m.head))
    throw PreconditionError("push: message head outside the working range");
  renorm_inverse(m, slot.weight, params);
  m.head = encode_symbol(m.head, slot, params);
}

}  // namespace rans
