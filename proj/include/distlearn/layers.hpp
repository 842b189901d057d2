#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "distlearn/matrix.hpp"
#include "distlearn/rng.hpp"

namespace distlearn {

enum class LayerKind { kLinear, kReLU, kAbs, kNeg, kOffsetL2 };

std::string_view layer_kind_name(LayerKind kind);
LayerKind parse_layer_kind(std::string_view name);
bool is_elementwise(LayerKind kind);

inline constexpr double kDefaultOffsetL2Epsilon = 1e-12;

// y = x·Wᵀ (+ b). W is out_dim × in_dim; the bias, when enabled, is 1 × out_dim.
struct LinearParams {
  Matrix weight;
  std::optional<Matrix> bias;
  Matrix grad_weight;
  std::optional<Matrix> grad_bias;

  LinearParams() = default;
  LinearParams(std::size_t in_dim, std::size_t out_dim, bool with_bias);
  LinearParams(Matrix weight, std::optional<Matrix> bias);

  std::size_t in_dim() const { return weight.cols(); }
  std::size_t out_dim() const { return weight.rows(); }
  bool has_bias() const { return bias.has_value(); }
  void zero_grad();
};

// y_i = sqrt(sum_d alpha_id² (x_d - mu_id)² + epsilon), one row of alpha/mu
// per output.
struct OffsetL2Params {
  Matrix alpha;
  Matrix mu;
  double epsilon = kDefaultOffsetL2Epsilon;
  Matrix grad_alpha;
  Matrix grad_mu;

  OffsetL2Params() = default;
  OffsetL2Params(std::size_t in_dim, std::size_t out_dim,
                 double epsilon = kDefaultOffsetL2Epsilon);
  OffsetL2Params(Matrix alpha, Matrix mu, double epsilon = kDefaultOffsetL2Epsilon);

  std::size_t in_dim() const { return alpha.cols(); }
  std::size_t out_dim() const { return alpha.rows(); }
  void zero_grad();
};

// Uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) for weights and bias.
void init_linear(LinearParams& p, Rng& rng);
// alpha = 1, mu ~ Uniform(-1/sqrt(in_dim), 1/sqrt(in_dim)).
void init_offsetl2(OffsetL2Params& p, Rng& rng);

struct LayerCache {
  std::shared_ptr<const Matrix> input;
  std::shared_ptr<const Matrix> output;

  bool ready() const { return input != nullptr && output != nullptr; }
};

struct LayerOutput {
  std::shared_ptr<const Matrix> output;
  LayerCache cache;

  const Matrix& value() const { return *output; }
};

LayerOutput linear_forward(const LinearParams& p, std::shared_ptr<const Matrix> x,
                           unsigned threads = 1);
LayerOutput linear_forward(const LinearParams& p, const Matrix& x);
// Accumulates into grad_weight / grad_bias. Returns dY·W, or an empty matrix
// when `need_input_grad` is false.
Matrix linear_backward(LinearParams& p, const LayerCache& cache, const Matrix& dy,
                       bool need_input_grad = true, unsigned threads = 1);

LayerOutput relu_forward(std::shared_ptr<const Matrix> x);
LayerOutput abs_forward(std::shared_ptr<const Matrix> x);
LayerOutput neg_forward(std::shared_ptr<const Matrix> x);
LayerOutput elementwise_forward(LayerKind kind, std::shared_ptr<const Matrix> x);
LayerOutput elementwise_forward(LayerKind kind, const Matrix& x);
// ReLU: dy where x > 0. Abs: dy·sign(x), sign(0) = 0. Neg: -dy.
Matrix elementwise_backward(LayerKind kind, const LayerCache& cache, const Matrix& dy);

LayerOutput offsetl2_forward(const OffsetL2Params& p, std::shared_ptr<const Matrix> x);
LayerOutput offsetl2_forward(const OffsetL2Params& p, const Matrix& x);
Matrix offsetl2_backward(OffsetL2Params& p, const LayerCache& cache, const Matrix& dy,
                         bool need_input_grad = true);

// Test hook: Layer::backward of `kind` multiplies its input gradient by
// `scale`. Pass std::nullopt to restore normal behaviour.
void inject_backward_fault(std::optional<LayerKind> kind, double scale = 1.5);

// A named view of one trainable tensor and its gradient buffer.
struct ParamBlock {
  std::string name;
  Matrix* value;
  Matrix* grad;
};

struct NamedMatrix {
  std::string name;
  const Matrix* value;
};

// One stage of a model: parameters (if any) plus the cache of its last forward.
class Layer {
 public:
  Layer(LayerKind kind, std::size_t in_dim, std::size_t out_dim, bool with_bias = false);
  explicit Layer(LinearParams p);
  explicit Layer(OffsetL2Params p);

  LayerKind kind() const { return kind_; }
  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return out_dim_; }

  LinearParams& linear() { return std::get<LinearParams>(params_); }
  const LinearParams& linear() const { return std::get<LinearParams>(params_); }
  OffsetL2Params& offsetl2() { return std::get<OffsetL2Params>(params_); }
  const OffsetL2Params& offsetl2() const { return std::get<OffsetL2Params>(params_); }

  void initialize(Rng& rng);
  std::shared_ptr<const Matrix> forward(std::shared_ptr<const Matrix> x,
                                        unsigned threads = 1);
  Matrix backward(const Matrix& dy, bool need_input_grad = true, unsigned threads = 1);
  // Forward pass that leaves the cache untouched.
  std::shared_ptr<const Matrix> evaluate(std::shared_ptr<const Matrix> x,
                                         unsigned threads = 1) const;

  const LayerCache& cache() const { return cache_; }
  void clear_cache() { cache_ = {}; }

  std::vector<ParamBlock> parameters();
  std::vector<NamedMatrix> parameter_values() const;
  void zero_grad();

 private:
  LayerKind kind_;
  std::size_t in_dim_;
  std::size_t out_dim_;
  std::variant<std::monostate, LinearParams, OffsetL2Params> params_;
  LayerCache cache_;
};

}  // namespace distlearn
