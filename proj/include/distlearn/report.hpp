#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "distlearn/diagnostics.hpp"
#include "distlearn/stats.hpp"
#include "distlearn/trainer.hpp"

namespace distlearn {

// Accuracies are fractions; the renderers convert to percent.
struct ModelAggregate {
  std::string model_name;
  std::size_t n_runs = 0;     // successful runs
  std::size_t n_failed = 0;   // diverged or failed
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;  // sample std, n - 1
  std::optional<double> mean_fraction_inactive;
  std::optional<double> mean_fraction_rarely_active;

  bool operator==(const ModelAggregate&) const = default;
};

// Uses the successful runs of `model_name`; throws kInvalidArgument below two.
ModelAggregate aggregate(std::span<const RunResult> results, const std::string& model_name);

struct PairwiseTest {
  std::string model_a;
  std::string model_b;
  StatTestResult test;

  bool operator==(const PairwiseTest&) const = default;
};

struct ExperimentReport {
  std::string experiment_id;
  bool paired = false;
  std::vector<ModelAggregate> models;
  std::vector<PairwiseTest> tests;
  std::vector<std::string> skipped;  // models with fewer than two successful runs

  bool operator==(const ExperimentReport&) const = default;
};

// Models appear in first-seen order of `results`. Paired tests align runs by seed.
ExperimentReport build_report(std::span<const RunResult> results, bool paired = false,
                              std::string experiment_id = {});

// "96.62 / 0.17" from fractions 0.9662 and 0.0017.
std::string format_mean_std(double mean, double std);

// Header: Model,Test Accuracy (%),Standard Deviation (%),n
std::string report_csv(const ExperimentReport& report);
// Infinite statistics are written as the strings "inf" / "-inf".
nlohmann::json report_json(const ExperimentReport& report);
ExperimentReport report_from_json(const nlohmann::json& j);
// Console table, one row per model.
std::string summary_table(const ExperimentReport& report);

struct ProjectionFigure {
  std::string model_name;
  std::vector<ProjectionHistogram> histograms;
};
std::string projection_svg(const ProjectionFigure& figure);

enum class ReportFormat { kCsv, kJson, kSvg };
ReportFormat parse_report_format(std::string_view s);
std::string_view report_format_name(ReportFormat f);

// Writes report.csv / report.json / projections-<model>.svg into `dir` and
// returns the written paths.
std::vector<std::filesystem::path> emit_report(const ExperimentReport& report,
                                               const std::filesystem::path& dir,
                                               std::span<const ReportFormat> formats,
                                               std::span<const ProjectionFigure> figures = {});

}  // namespace distlearn
