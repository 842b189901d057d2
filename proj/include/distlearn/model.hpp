#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "distlearn/layers.hpp"

namespace distlearn {

struct LayerSpec {
  LayerKind kind;
  std::size_t in_dim;
  std::size_t out_dim;
  bool bias = false;

  bool operator==(const LayerSpec&) const = default;
};

struct ModelSpec {
  std::string name;
  std::vector<LayerSpec> layers;
  std::size_t input_dim = 784;
  std::size_t hidden_width = 128;
  std::size_t output_dim = 10;

  // Throws kShapeMismatch when consecutive dims do not chain or the ends do
  // not match input_dim / output_dim.
  void validate() const;
  std::size_t parameter_count() const;

  bool operator==(const ModelSpec&) const = default;
};

void to_json(nlohmann::json& j, const ModelSpec& spec);
void from_json(const nlohmann::json& j, ModelSpec& spec);

// The sixteen registered architectures:
//
//   Abs, ReLU                    x -> Linear -> act -> Linear -> y
//   Abs2, ReLU2                  x -> Linear -> act -> Linear -> act -> y
//   Abs2-Neg, ReLU2-Neg          x -> Linear -> act -> Linear -> act -> Neg -> y
//   <any of the six>_Bias        same, with a bias on the final Linear
//   ReLU-L2, Abs-L2              x -> Linear -> act -> OffsetL2 -> y
//   ReLU-L2-Neg, Abs-L2-Neg      x -> Linear -> act -> OffsetL2 -> Neg -> y
//
// The first Linear always has a bias. The final Linear has none unless the
// name ends in "_Bias". Older result sheets use other spellings:
// "ReLU2_Neg" among the bias runs is ReLU2-Neg_Bias here, and
// "Abs2_Neg_Bias" is Abs2-Neg_Bias. The OffsetL2 stacks (a Linear layer
// feeding OffsetL2) are an inferred composition.
const std::vector<std::string>& canonical_model_names();
bool is_canonical_model(std::string_view name);
ModelSpec canonical_spec(std::string_view name, std::size_t hidden_width = 128,
                         std::size_t input_dim = 784, std::size_t output_dim = 10);

class Model {
 public:
  // Parameters are zero until initialize() is called.
  explicit Model(ModelSpec spec);

  const ModelSpec& spec() const { return spec_; }
  std::vector<Layer>& layers() { return layers_; }
  const std::vector<Layer>& layers() const { return layers_; }

  void initialize(Rng& rng);

  // Intra-run matmul threads. Results are identical for any value.
  void set_threads(unsigned threads) { threads_ = threads == 0 ? 1 : threads; }

  const Matrix& forward(std::shared_ptr<const Matrix> x);
  const Matrix& forward(const Matrix& x);
  // Output of layers [0, stop) without touching the caches.
  Matrix forward_prefix(const Matrix& x, std::size_t stop) const;

  // Accumulates parameter gradients. Requires a preceding forward().
  void backward(const Matrix& d_logits);
  // theta -= lr * grad, then zeroes the gradients.
  void sgd_step(double lr);
  void zero_grad();
  void clear_caches();

  std::vector<ParamBlock> parameters();
  std::vector<NamedMatrix> parameter_values() const;
  std::size_t parameter_count() const;
  // Every parameter value, concatenated in layer/block order.
  std::vector<double> flat_parameters() const;

 private:
  ModelSpec spec_;
  std::vector<Layer> layers_;
  std::shared_ptr<const Matrix> last_output_;
  unsigned threads_ = 1;
};

Model build_model(const ModelSpec& spec, Rng& rng);
Model build_model(std::string_view name, Rng& rng, std::size_t hidden_width = 128);

}  // namespace distlearn
