#pragma once

// Quantized probability models. A QuantizedDistribution carries integer
// weights p_i >= 1 summing to exactly 2^prob_bits, so P(a_i) = p_i / 2^r and
// the intervals [c_i, c_i + p_i) tile [0, 2^r). SymbolModel produces the
// distribution for each position given the symbols decoded so far; encoder
// and decoder run the same deterministic update rule, so they always agree.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "rans/codec.hpp"
#include "rans/error.hpp"

namespace rans {

class QuantizedDistribution {
 public:
  // Takes ownership of validated weights: every entry >= 1, sum exactly
  // 2^prob_bits. Throws ModelError otherwise.
  QuantizedDistribution(std::vector<std::uint64_t> weights,
                        std::uint32_t prob_bits);

  std::uint32_t prob_bits() const { return prob_bits_; }
  std::uint64_t total() const { return std::uint64_t{1} << prob_bits_; }
  std::uint32_t alphabet_size() const {
    return static_cast<std::uint32_t>(weights_.size());
  }
  const std::vector<std::uint64_t>& weights() const { return weights_; }
  std::uint64_t weight(Symbol s) const { return weights_[s]; }
  std::uint64_t cumulative(Symbol s) const { return cumulatives_[s]; }

  // Inverse CDF: the unique slot whose interval contains `value`. Binary
  // search by default; O(1) after build_lookup_table().
  SymbolSlot slot_from_cumulative(std::uint64_t value) const;

  // CDF lookup by symbol index.
  SymbolSlot slot_from_symbol(Symbol s) const;

  // Opt-in direct value->symbol table of 2^prob_bits entries. A memory/speed
  // trade (64Ki entries at prob_bits = 16); only allowed for prob_bits <= 16.
  void build_lookup_table();
  bool has_lookup_table() const { return !lookup_.empty(); }

  bool operator==(const QuantizedDistribution& other) const {
    return prob_bits_ == other.prob_bits_ && weights_ == other.weights_;
  }

 private:
  std::uint32_t prob_bits_;
  std::vector<std::uint64_t> weights_;
  std::vector<std::uint64_t> cumulatives_;  // cumulatives_[0] == 0, ascending
  std::vector<Symbol> lookup_;              // empty unless built
};

// Deterministic largest-remainder quantization of raw counts to weights
// summing to 2^prob_bits, every symbol getting at least weight 1 (zero-count
// symbols stay decodable). Scale-invariant: counts and k*counts quantize
// identically.
QuantizedDistribution quantize_counts(std::span<const std::uint64_t> counts,
                                      std::uint32_t prob_bits);

// Information content of one symbol under a quantized distribution,
// log2(2^prob_bits / weight), in bits.
inline double symbol_information(std::uint64_t weight,
                                 std::uint32_t prob_bits) {
  return static_cast<double>(prob_bits) -
         std::log2(static_cast<double>(weight));
}

// Per-position conditional distribution supplier. Contract: after identical
// observe() histories, distribution() is identical — that is what keeps the
// encoder and decoder in sync.
class SymbolModel {
 public:
  virtual ~SymbolModel() = default;

  virtual std::uint32_t alphabet_size() const = 0;

  // Distribution for the current position. The reference stays valid until
  // the next observe() or reset().
  virtual const QuantizedDistribution& distribution() const = 0;

  // Append one symbol to the history, advancing to the next position.
  virtual void observe(Symbol s) = 0;

  // Forget all history (back to position 1).
  virtual void reset() = 0;
};

// Fixed distribution for every position.
class StaticModel final : public SymbolModel {
 public:
  explicit StaticModel(QuantizedDistribution dist) : dist_(std::move(dist)) {}

  std::uint32_t alphabet_size() const override {
    return dist_.alphabet_size();
  }
  const QuantizedDistribution& distribution() const override { return dist_; }
  void observe(Symbol) override {}
  void reset() override {}

 private:
  QuantizedDistribution dist_;
};

// Order-0 adaptive model: per-symbol counts starting at 1, requantized after
// every observed symbol.
class AdaptiveOrder0Model final : public SymbolModel {
 public:
  AdaptiveOrder0Model(std::uint32_t alphabet_size, std::uint32_t prob_bits);

  std::uint32_t alphabet_size() const override {
    return static_cast<std::uint32_t>(counts_.size());
  }
  const QuantizedDistribution& distribution() const override { return dist_; }
  void observe(Symbol s) override;
  void reset() override;

 private:
  std::uint32_t prob_bits_;
  std::vector<std::uint64_t> counts_;
  QuantizedDistribution dist_;
};

// Joint information content of `data` under the model's per-position
// distributions: sum of log2(2^r / p(x_n)) in double precision. Resets the
// model first.
double shannon_info(SymbolModel& model, std::span<const Symbol> data);

}  // namespace rans
