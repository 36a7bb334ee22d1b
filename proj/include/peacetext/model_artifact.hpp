#ifndef PEACETEXT_MODEL_ARTIFACT_HPP
#define PEACETEXT_MODEL_ARTIFACT_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "peacetext/frequency.hpp"
#include "peacetext/logistic_regression.hpp"
#include "peacetext/random_forest.hpp"

namespace peacetext {

inline constexpr const char* kModelFormat = "peacetext-model";
inline constexpr int kModelFormatVersion = 1;

// Self-contained trained-model document: which vocabulary and normalization
// the features came from, the classifier parameters, hyperparameters, and
// seeds. load(save(m)) predicts identically.
struct ModelArtifact {
  std::uint64_t vocab_hash = 0;
  std::size_t vocab_size = 0;
  Normalization normalization = Normalization::per_million;
  std::uint64_t seed = 0;
  std::optional<LRModel> lr;
  std::optional<RFModel> rf;
  nlohmann::json meta;  // config hash, stage versions
};

nlohmann::json artifact_to_json(const ModelArtifact& artifact);
ModelArtifact artifact_from_json(const nlohmann::json& doc);

void save_artifact(const ModelArtifact& artifact, const std::filesystem::path& path);
ModelArtifact load_artifact(const std::filesystem::path& path);

}  // namespace peacetext

#endif  // PEACETEXT_MODEL_ARTIFACT_HPP
