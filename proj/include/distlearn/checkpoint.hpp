#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "distlearn/model.hpp"

namespace distlearn {

// Checkpoint layout (all integers little-endian):
//
//   bytes 0..7    ASCII "DLCKPT01"
//   bytes 8..15   u64 header length H
//   next H bytes  UTF-8 JSON header:
//                   {"format": "distlearn-checkpoint", "version": 1,
//                    "name": ..., "seed": ..., "spec": {...},
//                    "blocks": [{"name": "0.weight", "rows": R, "cols": C}, ...]}
//   remainder     float64 values of every block, row-major, in header order
struct Checkpoint {
  Model model;
  std::uint64_t seed;
};

std::vector<std::uint8_t> encode_checkpoint(const Model& model, std::uint64_t seed);
Checkpoint decode_checkpoint(std::span<const std::uint8_t> bytes);

void save_checkpoint(const std::filesystem::path& path, const Model& model, std::uint64_t seed);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace distlearn
