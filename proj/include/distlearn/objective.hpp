#pragma once

#include <cstdint>
#include <span>

#include "distlearn/matrix.hpp"

namespace distlearn {

using Label = std::uint8_t;

struct LossResult {
  double loss = 0.0;  // mean over the batch
  Matrix d_logits;    // (softmax - onehot) / N
};

// Log-softmax cross-entropy with max subtraction.
LossResult cross_entropy(const Matrix& logits, std::span<const Label> labels);
// Loss only; skips building the gradient.
double cross_entropy_loss(const Matrix& logits, std::span<const Label> labels);

Matrix softmax(const Matrix& logits);

// Row argmax with ties resolved to the lowest index.
std::size_t argmax_row(std::span<const double> row);
double accuracy(const Matrix& logits, std::span<const Label> labels);

}  // namespace distlearn
