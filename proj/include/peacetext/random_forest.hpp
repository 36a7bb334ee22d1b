#ifndef PEACETEXT_RANDOM_FOREST_HPP
#define PEACETEXT_RANDOM_FOREST_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace peacetext {

struct RFHyper {
  std::size_t n_trees = 100;
  std::size_t min_samples_leaf = 1;
  // features per split: ceil(sqrt(n_features))
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  std::vector<std::uint32_t> class_counts;  // bootstrap samples reaching the node
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // node 0 is the root, children follow in DFS order
};

struct RFModel {
  std::vector<DecisionTree> trees;
  std::vector<int> classes;  // sorted distinct labels
  std::size_t n_features = 0;
  RFHyper hyper;
  std::uint64_t seed = 0;
};

// Gini impurity 1 - sum((c/n)^2) of a class-count vector; 0 for empty nodes.
double gini_impurity(const std::vector<std::uint32_t>& class_counts);

// CART trees on bootstrap resamples. Each node evaluates ceil(sqrt(d))
// randomly chosen features, with candidate thresholds at the midpoints of
// consecutive sorted unique values; the best Gini decrease wins (ties toward
// the smaller feature index, then smaller threshold). Per-tree RNGs are
// derived from the master seed, so results are identical for any worker
// count.
RFModel train_forest(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                     const RFHyper& hyper, std::uint64_t seed, std::size_t workers = 1);

// Majority vote over trees; ties go to the lower class index.
int rf_predict(const RFModel& model, std::span<const double> row);

// Per-tree votes, for recount-style checks.
std::vector<int> rf_tree_votes(const RFModel& model, std::span<const double> row);

// Mean over trees of the node-weighted Gini decrease per feature, normalized
// to sum to 1; all zeros when no tree contains a split.
std::vector<double> gini_importance(const RFModel& model);

}  // namespace peacetext

#endif  // PEACETEXT_RANDOM_FOREST_HPP
