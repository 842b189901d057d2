#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "distlearn/diagnostics.hpp"
#include "distlearn/mnist.hpp"
#include "distlearn/model.hpp"

namespace distlearn {

inline constexpr std::size_t kDefaultEpochs = 5000;
inline constexpr std::size_t kDefaultL2Epochs = 50000;

struct TrainConfig {
  std::string model_name;
  double learning_rate = 0.001;
  std::optional<std::size_t> epochs;  // unset: 5000, or 50000 for OffsetL2 models
  std::vector<std::uint64_t> seeds = default_seeds();
  double train_fraction = 1.0;
  double test_fraction = 1.0;
  std::size_t loss_log_stride = 50;
  bool deterministic = true;
  std::size_t hidden_width = 128;
  std::string offsetl2_init = "uniform";  // or "exemplar"
  // Test accuracy every `eval_stride` epochs for a best-epoch record; 0 disables.
  std::size_t eval_stride = 0;

  static std::vector<std::uint64_t> default_seeds();
  std::size_t resolved_epochs() const;
  ModelSpec model_spec(std::size_t input_dim = kImagePixels) const;
  // Throws kConfig.
  void validate() const;
};

void to_json(nlohmann::json& j, const TrainConfig& cfg);

enum class RunStatus { kOk, kDiverged, kFailed };
std::string_view run_status_name(RunStatus s);
RunStatus parse_run_status(std::string_view s);

struct LossPoint {
  std::size_t epoch;
  double loss;
  bool operator==(const LossPoint&) const = default;
};

struct DeadNodeSummary {
  std::size_t stage = 0;
  double fraction_inactive = 0.0;
  double fraction_rarely_active = 0.0;
  std::vector<double> activation_rates;
  bool operator==(const DeadNodeSummary&) const = default;
};

struct RunResult {
  std::string model_name;
  std::uint64_t seed = 0;
  RunStatus status = RunStatus::kOk;
  std::string message;
  std::size_t epochs = 0;
  std::size_t updates = 0;
  std::optional<std::size_t> divergence_epoch;
  std::optional<double> final_test_accuracy;
  std::optional<double> final_train_accuracy;
  std::optional<double> final_train_loss;
  std::optional<double> best_test_accuracy;
  std::optional<std::size_t> best_epoch;
  std::vector<LossPoint> loss_curve;
  std::optional<DeadNodeSummary> dead_nodes;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::string config_hash;
  std::string checkpoint;  // file name relative to the run directory
  double wall_time = 0.0;  // seconds

  // Every field except wall_time.
  bool same_outcome(const RunResult& other) const;
};

void to_json(nlohmann::json& j, const RunResult& r);
void from_json(const nlohmann::json& j, RunResult& r);

struct TrainHooks {
  // Replaces the configured learning rate for a given epoch.
  std::function<double(std::size_t epoch)> learning_rate;
  // Called after every parameter update.
  std::function<void(std::size_t epoch, Model& model)> after_update;
};

struct TrainedRun {
  RunResult result;
  Model model;
};

// Digest of everything that determines a run's outcome: config, seed, data shape
// and normalization statistics.
std::string run_config_hash(const TrainConfig& cfg, std::uint64_t seed, const DatasetPair& data);

// One seed of full-batch gradient descent. Rng streams forked from the seed:
// 1 selects the training subset, 2 initializes parameters, 3 selects the test
// subset. Divergence is reported through the result status.
TrainedRun train_model(const TrainConfig& cfg, const DatasetPair& data, std::uint64_t seed,
                       const TrainHooks& hooks = {});
RunResult train_run(const TrainConfig& cfg, const DatasetPair& data, std::uint64_t seed,
                    const TrainHooks& hooks = {});

struct ExperimentOptions {
  std::string name = "experiment";
  std::filesystem::path out_dir = "results";
  unsigned jobs = 0;    // 0: min(runs, hardware threads)
  bool resume = true;   // reuse run.json files whose config hash matches
  bool write_checkpoints = true;
  std::function<TrainHooks(const TrainConfig&, std::uint64_t seed)> hooks;
  std::function<void(const RunResult&, bool reused)> on_result;
  nlohmann::json manifest_extra = nlohmann::json::object();  // merged into experiment.json
};

struct ExperimentResult {
  std::string experiment_id;
  std::filesystem::path directory;
  std::vector<RunResult> results;  // config order, then seed order
  std::size_t failures = 0;        // status != ok
};

std::string experiment_id(const std::string& name, const std::vector<TrainConfig>& configs);

ExperimentResult run_experiment(const std::vector<TrainConfig>& configs, const DatasetPair& data,
                                const ExperimentOptions& options = {});

// Every run.json below `dir`, ordered like the experiment.json config list when
// one is present (by model name otherwise), then by seed. Unreadable files are
// skipped and described in `warnings`.
std::vector<RunResult> load_run_results(const std::filesystem::path& dir,
                                        std::vector<std::string>* warnings = nullptr);

std::filesystem::path run_directory(const std::filesystem::path& experiment_dir,
                                    const std::string& model, std::uint64_t seed);

}  // namespace distlearn
