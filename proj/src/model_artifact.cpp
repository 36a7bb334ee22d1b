#include "peacetext/model_artifact.hpp"

#include <fstream>

#include "peacetext/errors.hpp"

namespace peacetext {

namespace {

nlohmann::json lr_to_json(const LRModel& m) {
  nlohmann::json j;
  j["classes"] = m.classes;
  j["weights"] = m.weights;
  j["bias"] = m.bias;
  if (m.standardization) {
    j["standardization"] = {{"mean", m.standardization->mean}, {"std", m.standardization->std}};
  } else {
    j["standardization"] = nullptr;
  }
  j["hyper"] = {{"l2_strength", m.hyper.l2_strength},
                {"max_iterations", m.hyper.max_iterations},
                {"tolerance", m.hyper.tolerance},
                {"standardize", m.hyper.standardize}};
  return j;
}

LRModel lr_from_json(const nlohmann::json& j) {
  LRModel m;
  m.classes = j.at("classes").get<std::vector<int>>();
  m.weights = j.at("weights").get<std::vector<std::vector<double>>>();
  m.bias = j.at("bias").get<std::vector<double>>();
  if (!j.at("standardization").is_null()) {
    Standardization s;
    s.mean = j["standardization"].at("mean").get<std::vector<double>>();
    s.std = j["standardization"].at("std").get<std::vector<double>>();
    m.standardization = std::move(s);
  }
  const auto& h = j.at("hyper");
  m.hyper.l2_strength = h.at("l2_strength").get<double>();
  m.hyper.max_iterations = h.at("max_iterations").get<std::size_t>();
  m.hyper.tolerance = h.at("tolerance").get<double>();
  m.hyper.standardize = h.at("standardize").get<bool>();
  return m;
}

// trees as flattened per-field node arrays
nlohmann::json rf_to_json(const RFModel& m) {
  nlohmann::json j;
  j["classes"] = m.classes;
  j["n_features"] = m.n_features;
  j["seed"] = m.seed;
  j["hyper"] = {{"n_trees", m.hyper.n_trees}, {"min_samples_leaf", m.hyper.min_samples_leaf}};
  nlohmann::json trees = nlohmann::json::array();
  for (const auto& tree : m.trees) {
    nlohmann::json t;
    std::vector<int> feature, left, right;
    std::vector<double> threshold;
    std::vector<std::uint32_t> counts;  // nodes x classes, row-major
    for (const auto& node : tree.nodes) {
      feature.push_back(node.feature);
      threshold.push_back(node.threshold);
      left.push_back(node.left);
      right.push_back(node.right);
      counts.insert(counts.end(), node.class_counts.begin(), node.class_counts.end());
    }
    t["feature"] = feature;
    t["threshold"] = threshold;
    t["left"] = left;
    t["right"] = right;
    t["counts"] = counts;
    trees.push_back(std::move(t));
  }
  j["trees"] = std::move(trees);
  return j;
}

RFModel rf_from_json(const nlohmann::json& j) {
  RFModel m;
  m.classes = j.at("classes").get<std::vector<int>>();
  m.n_features = j.at("n_features").get<std::size_t>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.hyper.n_trees = j.at("hyper").at("n_trees").get<std::size_t>();
  m.hyper.min_samples_leaf = j.at("hyper").at("min_samples_leaf").get<std::size_t>();
  const std::size_t k = m.classes.size();
  for (const auto& t : j.at("trees")) {
    DecisionTree tree;
    auto feature = t.at("feature").get<std::vector<int>>();
    auto threshold = t.at("threshold").get<std::vector<double>>();
    auto left = t.at("left").get<std::vector<int>>();
    auto right = t.at("right").get<std::vector<int>>();
    auto counts = t.at("counts").get<std::vector<std::uint32_t>>();
    if (threshold.size() != feature.size() || left.size() != feature.size() ||
        right.size() != feature.size() || counts.size() != feature.size() * k) {
      throw DataError("model artifact: inconsistent tree arrays");
    }
    tree.nodes.resize(feature.size());
    for (std::size_t i = 0; i < feature.size(); ++i) {
      tree.nodes[i].feature = feature[i];
      tree.nodes[i].threshold = threshold[i];
      tree.nodes[i].left = left[i];
      tree.nodes[i].right = right[i];
      tree.nodes[i].class_counts.assign(counts.begin() + static_cast<std::ptrdiff_t>(i * k),
                                        counts.begin() + static_cast<std::ptrdiff_t>((i + 1) * k));
    }
    m.trees.push_back(std::move(tree));
  }
  return m;
}

}  // namespace

nlohmann::json artifact_to_json(const ModelArtifact& artifact) {
  nlohmann::json doc;
  doc["format"] = kModelFormat;
  doc["version"] = kModelFormatVersion;
  doc["vocabulary"] = {{"hash", artifact.vocab_hash}, {"size", artifact.vocab_size}};
  doc["normalization"] = to_string(artifact.normalization);
  doc["seed"] = artifact.seed;
  doc["meta"] = artifact.meta.is_null() ? nlohmann::json::object() : artifact.meta;
  doc["lr"] = artifact.lr ? lr_to_json(*artifact.lr) : nlohmann::json(nullptr);
  doc["rf"] = artifact.rf ? rf_to_json(*artifact.rf) : nlohmann::json(nullptr);
  return doc;
}

ModelArtifact artifact_from_json(const nlohmann::json& doc) {
  if (doc.value("format", "") != kModelFormat) {
    throw DataError("not a " + std::string(kModelFormat) + " document");
  }
  if (doc.at("version").get<int>() != kModelFormatVersion) {
    throw DataError("unsupported model format version");
  }
  ModelArtifact artifact;
  artifact.vocab_hash = doc.at("vocabulary").at("hash").get<std::uint64_t>();
  artifact.vocab_size = doc.at("vocabulary").at("size").get<std::size_t>();
  artifact.normalization = normalization_from_string(doc.at("normalization").get<std::string>());
  artifact.seed = doc.at("seed").get<std::uint64_t>();
  artifact.meta = doc.value("meta", nlohmann::json::object());
  if (!doc.at("lr").is_null()) artifact.lr = lr_from_json(doc["lr"]);
  if (!doc.at("rf").is_null()) artifact.rf = rf_from_json(doc["rf"]);
  return artifact;
}

void save_artifact(const ModelArtifact& artifact, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write model artifact: " + path.string());
  out << artifact_to_json(artifact).dump(2) << "\n";
}

ModelArtifact load_artifact(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open model artifact: " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError("model artifact " + path.string() + ": " + e.what());
  }
  return artifact_from_json(doc);
}

}  // namespace peacetext
