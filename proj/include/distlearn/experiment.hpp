#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "distlearn/report.hpp"
#include "distlearn/trainer.hpp"

namespace distlearn {

// Experiment file schema (JSON, unknown keys rejected):
//
//   {
//     "name": "desk",                       required, [A-Za-z0-9_.-]+
//     "description": "...",                 optional
//     "data_dir": "data/mnist",             optional
//     "output_dir": "results",              optional
//     "report_formats": ["csv", "json"],    optional, subset of csv/json/svg
//     "paired_tests": false,                optional
//     "defaults": { <run fields> },         optional, applied to every run
//     "runs": [ {"model": "ReLU", <run fields>}, ... ]   required, nonempty
//   }
//
// Run fields: learning_rate, epochs, seeds (list) or seed_count (0..n-1),
// train_fraction, test_fraction, loss_log_stride, deterministic,
// hidden_width, offsetl2_init, eval_stride. Relative paths resolve against
// the working directory.
struct ExperimentFile {
  std::string name;
  std::string description;
  std::optional<std::filesystem::path> data_dir;
  std::optional<std::filesystem::path> output_dir;
  std::vector<ReportFormat> report_formats{ReportFormat::kCsv, ReportFormat::kJson};
  bool paired_tests = false;
  std::vector<TrainConfig> runs;
};

// Throws kConfig with "origin:line: message", line being where the offending
// element starts.
ExperimentFile parse_experiment(const std::string& text, const std::string& origin = "<string>");
ExperimentFile load_experiment(const std::filesystem::path& path);

// JSON pointer -> 1-based line where that element or key starts.
std::map<std::string, std::size_t> json_line_index(const std::string& text);

}  // namespace distlearn
