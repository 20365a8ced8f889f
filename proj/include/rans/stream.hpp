#pragma once

// Whole-sequence encode/decode over a SymbolModel. The codec is
// last-in-first-out, so the encoder materializes the forward slot schedule,
// then pushes symbols in reverse; the decoder pops in forward order, feeding
// each decoded symbol back into the model.

#include <cstdint>
#include <span>
#include <vector>

#include "rans/codec.hpp"
#include "rans/model.hpp"

namespace rans {

// Rate accounting for one encode. bound_bits is the provable ceiling on the
// flattened length: shannon_bits + n_symbols * epsilon + head_bits.
struct RateReport {
  std::uint64_t n_symbols = 0;
  double shannon_bits = 0.0;    // joint information content of the data
  std::uint64_t actual_bits = 0;  // flattened length of the final message
  double effective_bits = 0.0;  // log2(head) + word_bits * |tail|
  double epsilon = 0.0;         // per-symbol overhead bound
  double bound_bits = 0.0;      // shannon_bits + n_symbols * epsilon + head_bits
  CodecParams params;
};

struct EncodeResult {
  Message message;
  RateReport report;
};

struct DecodeResult {
  std::vector<Symbol> symbols;
  // True when the final message equals init_message(params), i.e. the stream
  // ended exactly where encoding started. A false value means the input was
  // not produced by a matching encode (corruption or model mismatch).
  bool ended_at_init = false;
};

// Encode data against the model. The model is reset first; the per-position
// distributions are computed in forward order, then symbols are pushed last
// to first so that decoding pops them first to last.
EncodeResult encode(std::span<const Symbol> data, SymbolModel& model,
                    const CodecParams& params);

// Pop n_symbols symbols from a copy of m, updating the model with each one.
// Throws TailUnderflowError if the stream is shorter than n_symbols claims.
DecodeResult decode(const Message& m, std::uint64_t n_symbols,
                    SymbolModel& model, const CodecParams& params);

struct BoundCheck {
  bool pass = false;
  // bound minus measured, in bits; negative means the bound was violated.
  double flat_margin_bits = 0.0;       // vs actual_bits
  double effective_margin_bits = 0.0;  // vs effective_bits
};

// Check the encode output against both length bounds:
//   effective_bits <= shannon + N*epsilon + head_bits - word_bits
//   actual_bits    <= shannon + N*epsilon + head_bits
// Both hold for every well-formed encode; 1e-6 slack absorbs floating-point
// rounding in the shannon sum.
BoundCheck verify_bound(const RateReport& report);

}  // namespace rans
