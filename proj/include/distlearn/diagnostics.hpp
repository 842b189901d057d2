#pragma once

#include <optional>
#include <vector>

#include "distlearn/mnist.hpp"
#include "distlearn/model.hpp"

namespace distlearn {

struct DeadNodeStats {
  std::size_t stage = 0;            // index of the analysed layer
  double fraction_inactive = 0.0;   // zero output on every input
  double fraction_rarely_active = 0.0;  // active on > 0 but < threshold of inputs
  std::vector<double> activation_rates;  // per node, fraction of inputs with output > 0
};

// Index of the last ReLU / Abs / OffsetL2 layer when nothing but Neg layers
// follow it; empty when the model output is not a non-negative stage.
std::optional<std::size_t> nonnegative_output_stage(const ModelSpec& spec);

// Throws kInvalidArgument for models without a non-negative output stage.
DeadNodeStats dead_node_stats(const Model& model, const Matrix& inputs,
                              double rare_threshold = 0.05);

struct ProjectionCell {
  bool present = false;  // false when the class has no examples
  std::size_t count = 0;
  double mean = 0.0;
  double std = 0.0;       // population
  double skewness = 0.0;  // m3 / m2^1.5, 0 when std == 0
};

struct ClassProjectionStats {
  std::size_t nodes = 0;
  std::size_t classes = 0;
  std::vector<ProjectionCell> cells;  // node-major

  const ProjectionCell& at(std::size_t node, std::size_t cls) const {
    return cells[node * classes + cls];
  }
};

struct Moments {
  double mean = 0.0;
  double std = 0.0;
  double skewness = 0.0;
};
Moments population_moments(std::span<const double> xs);

// Statistics of the first Linear layer's preactivations, per (node, class).
ClassProjectionStats class_projection_stats(const Model& model, const Matrix& inputs,
                                            std::span<const Label> labels,
                                            std::size_t classes = kNumClasses);

struct ProjectionHistogram {
  std::size_t node = 0;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::vector<std::size_t>> counts;  // [class][bin]
};

std::vector<ProjectionHistogram> projection_histograms(const Model& model, const Matrix& inputs,
                                                       std::span<const Label> labels,
                                                       std::span<const std::size_t> nodes,
                                                       std::size_t bins = 40,
                                                       std::size_t classes = kNumClasses);

}  // namespace distlearn
