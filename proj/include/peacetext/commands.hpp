#ifndef PEACETEXT_COMMANDS_HPP
#define PEACETEXT_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "peacetext/frequency.hpp"
#include "peacetext/logistic_regression.hpp"
#include "peacetext/random_forest.hpp"

namespace peacetext {

inline constexpr const char* kPipelineVersion = "0.1.0";

struct RunConfig {
  std::filesystem::path manifest;
  std::filesystem::path stopwords;
  std::filesystem::path gazetteer;
  std::filesystem::path lemma_map;
  double boilerplate_threshold = 0.5;
  bool entity_heuristic = true;
  std::size_t min_articles = 1000;

  std::size_t k = 300;
  Normalization normalization = Normalization::per_million;

  std::filesystem::path index_csv;
  std::filesystem::path labels_file;  // bypasses tertile grouping when set

  std::string model = "both";   // lr | rf | both
  std::string scheme = "loocv"; // loocv | split
  int n_classes = 2;            // 2 (lower/higher only) | 3
  LRHyper lr;
  RFHyper rf;

  std::uint64_t seed = 42;
  std::size_t runs = 20;
  std::size_t workers = 1;
  std::string sem_choice = "model_runs";  // model_runs | pooled

  std::size_t top_n = 100;
  std::size_t flag_n = 50;

  std::filesystem::path out = "out";

  nlohmann::json to_json() const;
  std::uint64_t config_hash() const;  // FNV-1a of the canonical JSON
};

// Each stage writes its outputs plus a `<name>.meta.json` sidecar carrying
// the config hash, seed, and pipeline version; outputs are byte-identical
// across reruns with the same effective config.
void cmd_preprocess(const RunConfig& config);
void cmd_featurize(const RunConfig& config);
void cmd_classify_countries(const RunConfig& config);
void cmd_train(const RunConfig& config);
void cmd_evaluate(const RunConfig& config);
void cmd_importance(const RunConfig& config);
void cmd_score(const RunConfig& config);
void cmd_report(const RunConfig& config);

}  // namespace peacetext

#endif  // PEACETEXT_COMMANDS_HPP
