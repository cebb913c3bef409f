#ifndef DNN2LR_PIPELINE_HPP_
#define DNN2LR_PIPELINE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dnn2lr/dnn.hpp"
#include "dnn2lr/lr.hpp"

namespace dnn2lr {

enum class Stage { kDiscretize, kEncode, kTrainDnn, kInterpret, kCandidates, kTrainLr, kSelect, kEvaluate, kReport };

inline constexpr std::array<Stage, 9> kStages = {Stage::kDiscretize, Stage::kEncode,  Stage::kTrainDnn,
                                                 Stage::kInterpret,  Stage::kCandidates, Stage::kTrainLr,
                                                 Stage::kSelect,     Stage::kEvaluate,   Stage::kReport};

std::string_view StageName(Stage stage);
// Throws a config error for unknown names.
Stage ParseStage(std::string_view name);

DnnConfig DnnConfigFromJson(const nlohmann::json& j);
nlohmann::json DnnConfigToJson(const DnnConfig& cfg);
LrConfig LrConfigFromJson(const nlohmann::json& j);
nlohmann::json LrConfigToJson(const LrConfig& cfg);

struct RunConfig {
  std::filesystem::path train_path;
  std::filesystem::path test_path;
  std::filesystem::path schema_path;
  std::filesystem::path out_dir;
  double valid_fraction = 0.2;
  std::vector<std::size_t> granularities = {10, 100, 1000};
  double eta = 0.033;
  std::size_t epsilon_multiplier = 3;
  std::size_t max_order = 4;
  std::size_t per_sample_cap = 16;
  std::size_t min_count_original = 1;
  std::size_t min_count_cross = 2;
  bool dump_matrices = false;
  std::uint64_t seed = 0;
  DnnConfig dnn;
  LrConfig lr;

  // Relative paths resolve against base_dir. Unknown keys are rejected.
  static RunConfig FromJson(const nlohmann::json& j, const std::filesystem::path& base_dir);
  static RunConfig Load(const std::filesystem::path& path);
  nlohmann::json ToJson() const;

  // The DNN uses `seed`, LR `seed + 1`.
  void SetSeed(std::uint64_t s);
  void Validate() const;
};

struct StageRecord {
  std::string stage;
  std::string status;  // "completed" or "failed"
  double seconds = 0.0;
  std::map<std::string, std::string> inputs;   // artifact -> digest
  std::map<std::string, std::string> outputs;  // artifact -> digest
  nlohmann::json metrics = nlohmann::json::object();
  std::string error;
};

struct RunManifest {
  nlohmann::json config = nlohmann::json::object();
  std::vector<StageRecord> stages;  // in execution order, one per stage

  const StageRecord* Find(Stage stage) const;
  bool Completed(Stage stage) const;
  // Artifact -> digest over all completed stages.
  std::map<std::string, std::string> Digests() const;
  // LR baseline, DNN and DNN2LR test metrics once `evaluate` has completed.
  nlohmann::json FinalMetrics() const;

  nlohmann::json ToJson() const;
  static RunManifest FromJson(const nlohmann::json& j);
  void Save(const std::filesystem::path& path) const;
  static RunManifest Load(const std::filesystem::path& path);
};

inline constexpr std::string_view kManifestFile = "manifest.json";

// File-mediated driver; every stage reads its inputs from and writes its
// outputs to the output directory and records them in manifest.json.
class Pipeline {
 public:
  explicit Pipeline(RunConfig cfg);

  const RunConfig& config() const { return cfg_; }
  std::filesystem::path Artifact(std::string_view name) const { return cfg_.out_dir / std::string(name); }
  RunManifest LoadManifest() const;

  // Checks that upstream artifacts exist and still match their recorded
  // digests, runs the stage and records it. Records of later stages are
  // dropped since they no longer describe the current inputs. A failing stage
  // is recorded as failed before the error propagates.
  void Run(Stage stage);

  // Every stage in order. With `resume`, stages whose record is complete,
  // whose outputs verify and whose config matches are skipped.
  RunManifest RunFull(bool resume = false);

 private:
  RunConfig cfg_;
};

// Output files of each stage, relative to the output directory.
std::vector<std::string> StageOutputs(Stage stage, bool dump_matrices);
// Upstream artifacts each stage consumes, paired with their producing stage.
std::vector<std::pair<std::string, Stage>> StageInputs(Stage stage);

}  // namespace dnn2lr

#endif  // DNN2LR_PIPELINE_HPP_
