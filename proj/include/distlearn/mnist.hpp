#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "distlearn/matrix.hpp"
#include "distlearn/objective.hpp"
#include "distlearn/rng.hpp"

namespace distlearn {

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;
inline constexpr std::size_t kImageSide = 28;
inline constexpr std::size_t kImagePixels = kImageSide * kImageSide;
inline constexpr std::size_t kNumClasses = 10;

// Pixels scaled to [0, 1].
struct RawMnist {
  Matrix images;
  std::vector<Label> labels;

  std::size_t size() const { return labels.size(); }
};

struct Dataset {
  Matrix images;
  std::vector<Label> labels;
  double norm_mean = 0.0;
  double norm_std = 1.0;

  std::size_t size() const { return labels.size(); }
};

struct DatasetPair {
  Dataset train;
  Dataset test;
};

// Big-endian IDX3: magic 0x803, N, 28, 28, then N*784 pixel bytes.
Matrix parse_idx_images(std::span<const std::uint8_t> bytes);
// Big-endian IDX1: magic 0x801, N, then N label bytes in [0, 9].
std::vector<Label> parse_idx_labels(std::span<const std::uint8_t> bytes);

// Inverse of the parsers; pixels are rounded back to bytes.
std::vector<std::uint8_t> serialize_idx_images(const Matrix& images);
std::vector<std::uint8_t> serialize_idx_labels(std::span<const Label> labels);

// Whole file, gunzipped if it carries the gzip signature.
std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);

struct MnistFileNames {
  static constexpr const char* kTrainImages = "train-images-idx3-ubyte";
  static constexpr const char* kTrainLabels = "train-labels-idx1-ubyte";
  static constexpr const char* kTestImages = "t10k-images-idx3-ubyte";
  static constexpr const char* kTestLabels = "t10k-labels-idx1-ubyte";
};

// Locates `name` or `name.gz` inside `dir`; throws kIo when neither exists.
std::filesystem::path find_idx_file(const std::filesystem::path& dir, const std::string& name);

RawMnist load_raw(const std::filesystem::path& images, const std::filesystem::path& labels);
// Loads the train and t10k splits from the canonical file names in `dir`.
std::pair<RawMnist, RawMnist> load_mnist(const std::filesystem::path& dir);

// One scalar mean and std over every training pixel; both splits are mapped
// through (x - mean) / std with the training statistics.
DatasetPair normalize(const RawMnist& train, const RawMnist& test);

// Keeps round(fraction * count) examples of each class, chosen by a seeded
// shuffle. Surviving examples retain their original relative order.
Dataset stratified_subset(const Dataset& d, double fraction, Rng& rng);

std::vector<std::size_t> class_histogram(std::span<const Label> labels,
                                         std::size_t classes = kNumClasses);

}  // namespace distlearn
