#pragma once

#include <string>
#include <vector>

#include "distlearn/model.hpp"
#include "distlearn/objective.hpp"

namespace distlearn {

// Block error is max_k |analytic_k - numeric_k| / max(max_k |analytic_k|, max_k |numeric_k|),
// 0 when both gradients vanish. Central differences use h = 1e-6 * max(1, |theta|);
// the divisor is the step actually realised in floating point.
struct BlockError {
  std::string name;
  double max_rel_error = 0.0;
};

struct GradCheckReport {
  std::string subject;
  double tolerance = 0.0;
  std::vector<BlockError> blocks;

  double max_error() const;
  bool passed() const { return max_error() < tolerance; }
};

// Loss is sum(probe ⊙ layer(x)) for a fixed random probe; checks every
// parameter block and the input gradient.
GradCheckReport grad_check_layer(Layer& layer, const Matrix& x, double tolerance, Rng& rng);

// Loss is cross_entropy(model(x), labels); checks every parameter block.
GradCheckReport grad_check_model(Model& model, const Matrix& x, std::span<const Label> labels,
                                 double tolerance);

// Every layer kind plus two toy models, on seeded inputs kept more than 1e-3
// away from the ReLU/Abs kinks.
std::vector<GradCheckReport> gradcheck_suite(std::uint64_t seed = 7);

}  // namespace distlearn
