#pragma once

// Bit-exact file format: a fixed header (magic, version, precisions), a model
// descriptor, the symbol count, and the flattened message. All multi-byte
// integers are big-endian. See docs/FORMAT.md for the byte-exact layout.

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "rans/codec.hpp"

namespace rans {

inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::uint8_t kMagic[4] = {'r', 'A', 'N', 'S'};

struct ModelDescriptor {
  enum class Kind : std::uint8_t {
    static_weights = 1,   // alphabet size + full weight table
    adaptive_order0 = 2,  // alphabet size only; weights are recomputed
  };

  Kind kind = Kind::static_weights;
  std::uint32_t alphabet_size = 0;
  std::vector<std::uint64_t> weights;  // static_weights only; sums to 2^r

  bool operator==(const ModelDescriptor&) const = default;
};

struct CompressedContainer {
  CodecParams params;
  ModelDescriptor model;
  std::uint64_t n_symbols = 0;
  Message message;

  bool operator==(const CompressedContainer&) const = default;
};

// Concatenate head and tail into bytes: head big-endian in head_bits/8 bytes,
// then tail words top of stack first, each big-endian in word_bits/8 bytes.
// Requires byte-aligned precisions (head_bits and word_bits multiples of 8).
std::vector<std::uint8_t> flatten(const Message& m, const CodecParams& params);

// Inverse of flatten. Rejects byte sequences whose length does not decompose
// into one head plus whole tail words, and heads outside the working range.
Message unflatten(std::span<const std::uint8_t> bytes,
                  const CodecParams& params);

// Whole-container (de)serialization as pure byte functions.
std::vector<std::uint8_t> serialize(const CompressedContainer& c);
CompressedContainer deserialize(std::span<const std::uint8_t> bytes);

void write_container(const std::filesystem::path& path,
                     const CompressedContainer& c);
CompressedContainer read_container(const std::filesystem::path& path);

}  // namespace rans
