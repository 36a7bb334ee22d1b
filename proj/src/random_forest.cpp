#include "peacetext/random_forest.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "peacetext/errors.hpp"
#include "peacetext/rng.hpp"

namespace peacetext {

double gini_impurity(const std::vector<std::uint32_t>& class_counts) {
  std::uint64_t n = 0;
  for (auto c : class_counts) n += c;
  if (n == 0) return 0.0;
  double sum_sq = 0.0;
  for (auto c : class_counts) {
    double f = static_cast<double>(c) / static_cast<double>(n);
    sum_sq += f * f;
  }
  return 1.0 - sum_sq;
}

namespace {

struct TreeBuilder {
  const std::vector<std::vector<double>>& X;
  const std::vector<std::size_t>& y;  // class indices
  std::size_t n_classes;
  std::size_t max_features;
  std::size_t min_samples_leaf;
  Rng rng;
  DecisionTree tree;

  std::vector<std::uint32_t> count_classes(const std::vector<std::size_t>& samples) const {
    std::vector<std::uint32_t> counts(n_classes, 0);
    for (auto i : samples) ++counts[y[i]];
    return counts;
  }

  // distinct feature indices, ascending, chosen uniformly without replacement
  std::vector<std::size_t> sample_features() {
    const std::size_t d = X[0].size();
    std::vector<std::size_t> pool(d);
    for (std::size_t j = 0; j < d; ++j) pool[j] = j;
    for (std::size_t j = 0; j < max_features; ++j) {
      std::size_t pick = j + rng.below(d - j);
      std::swap(pool[j], pool[pick]);
    }
    pool.resize(max_features);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

  struct Split {
    bool found = false;
    std::size_t feature = 0;
    double threshold = 0.0;
    double decrease = 0.0;
  };

  Split best_split(const std::vector<std::size_t>& samples,
                   const std::vector<std::uint32_t>& counts) {
    const double impurity = gini_impurity(counts);
    const double n = static_cast<double>(samples.size());
    Split best;
    for (std::size_t feature : sample_features()) {
      std::vector<std::pair<double, std::size_t>> values;  // (value, class)
      values.reserve(samples.size());
      for (auto i : samples) values.emplace_back(X[i][feature], y[i]);
      std::sort(values.begin(), values.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });

      std::vector<std::uint32_t> left(n_classes, 0);
      std::vector<std::uint32_t> right = counts;
      std::size_t i = 0;
      while (i < values.size()) {
        // advance over one run of equal values
        double v = values[i].first;
        while (i < values.size() && values[i].first == v) {
          ++left[values[i].second];
          --right[values[i].second];
          ++i;
        }
        if (i == values.size()) break;
        double threshold = v + 0.5 * (values[i].first - v);
        // if the midpoint rounds up onto the next value, fall back to v so
        // the x <= threshold partition matches the evaluated counts
        if (!(threshold < values[i].first)) threshold = v;
        std::size_t n_left = i, n_right = values.size() - i;
        if (n_left < min_samples_leaf || n_right < min_samples_leaf) continue;
        double child =
            (static_cast<double>(n_left) * gini_impurity(left) +
             static_cast<double>(n_right) * gini_impurity(right)) /
            n;
        double decrease = impurity - child;
        // candidates are scanned feature- then threshold-ascending, so a
        // strict improvement test breaks ties toward the smaller pair
        if (decrease > best.decrease) {
          best.found = true;
          best.feature = feature;
          best.threshold = threshold;
          best.decrease = decrease;
        }
      }
    }
    return best;
  }

  int build(std::vector<std::size_t> samples) {
    auto counts = count_classes(samples);
    const int node_index = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes[node_index].class_counts = counts;

    const bool pure = std::count_if(counts.begin(), counts.end(),
                                    [](std::uint32_t c) { return c > 0; }) <= 1;
    if (pure || samples.size() < 2 * min_samples_leaf) return node_index;

    Split split = best_split(samples, counts);
    if (!split.found) return node_index;

    std::vector<std::size_t> left_samples, right_samples;
    for (auto i : samples) {
      (X[i][split.feature] <= split.threshold ? left_samples : right_samples).push_back(i);
    }
    samples.clear();
    samples.shrink_to_fit();

    tree.nodes[node_index].feature = static_cast<int>(split.feature);
    tree.nodes[node_index].threshold = split.threshold;
    int left = build(std::move(left_samples));
    tree.nodes[node_index].left = left;
    int right = build(std::move(right_samples));
    tree.nodes[node_index].right = right;
    return node_index;
  }
};

DecisionTree train_tree(const std::vector<std::vector<double>>& X, const std::vector<std::size_t>& y,
                        std::size_t n_classes, const RFHyper& hyper, std::uint64_t tree_seed) {
  TreeBuilder builder{X, y, n_classes,
                      static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(X[0].size())))),
                      hyper.min_samples_leaf, Rng(tree_seed), {}};
  const std::size_t n = X.size();
  std::vector<std::size_t> bootstrap(n);
  for (std::size_t i = 0; i < n; ++i) bootstrap[i] = builder.rng.below(n);
  std::sort(bootstrap.begin(), bootstrap.end());
  builder.build(std::move(bootstrap));
  return std::move(builder.tree);
}

int tree_vote(const DecisionTree& tree, std::span<const double> row) {
  int node = 0;
  while (tree.nodes[node].feature >= 0) {
    const auto& n = tree.nodes[node];
    node = row[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
  }
  const auto& counts = tree.nodes[node].class_counts;
  std::size_t best = 0;
  for (std::size_t c = 1; c < counts.size(); ++c) {
    if (counts[c] > counts[best]) best = c;  // tie keeps the lower index
  }
  return static_cast<int>(best);
}

}  // namespace

RFModel train_forest(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                     const RFHyper& hyper, std::uint64_t seed, std::size_t workers) {
  if (X.size() < 2 || X.size() != y.size()) throw DataError("need at least 2 aligned samples");
  const std::size_t d = X[0].size();
  if (d == 0) throw DataError("no features");
  for (const auto& row : X) {
    if (row.size() != d) throw DataError("ragged feature matrix");
    for (double v : row) {
      if (!std::isfinite(v)) throw DataError("non-finite feature value");
    }
  }
  std::vector<int> classes(y.begin(), y.end());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  if (classes.size() < 2) throw DataError("training labels contain a single class");

  std::vector<std::size_t> y_idx(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    y_idx[i] = static_cast<std::size_t>(
        std::lower_bound(classes.begin(), classes.end(), y[i]) - classes.begin());
  }

  RFModel model;
  model.classes = classes;
  model.n_features = d;
  model.hyper = hyper;
  model.seed = seed;
  model.trees.resize(hyper.n_trees);

  auto build_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      model.trees[t] = train_tree(X, y_idx, classes.size(), hyper, mix_seed(seed, t));
    }
  };

  workers = std::max<std::size_t>(1, std::min(workers, hyper.n_trees));
  if (workers == 1) {
    build_range(0, hyper.n_trees);
  } else {
    std::vector<std::future<void>> futures;
    const std::size_t chunk = (hyper.n_trees + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(hyper.n_trees, begin + chunk);
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, build_range, begin, end));
    }
    for (auto& f : futures) f.get();
  }
  return model;
}

std::vector<int> rf_tree_votes(const RFModel& model, std::span<const double> row) {
  if (row.size() != model.n_features) {
    throw DataError("feature row has " + std::to_string(row.size()) + " values, model expects " +
                    std::to_string(model.n_features));
  }
  std::vector<int> votes;
  votes.reserve(model.trees.size());
  for (const auto& tree : model.trees) votes.push_back(tree_vote(tree, row));
  return votes;
}

int rf_predict(const RFModel& model, std::span<const double> row) {
  auto votes = rf_tree_votes(model, row);
  std::vector<std::size_t> tally(model.classes.size(), 0);
  for (int v : votes) ++tally[static_cast<std::size_t>(v)];
  std::size_t best = 0;
  for (std::size_t c = 1; c < tally.size(); ++c) {
    if (tally[c] > tally[best]) best = c;  // tie goes to the lower class index
  }
  return model.classes[best];
}

std::vector<double> gini_importance(const RFModel& model) {
  std::vector<double> importance(model.n_features, 0.0);
  for (const auto& tree : model.trees) {
    if (tree.nodes.empty()) continue;
    std::uint64_t root_n = 0;
    for (auto c : tree.nodes[0].class_counts) root_n += c;
    if (root_n == 0) continue;
    for (const auto& node : tree.nodes) {
      if (node.feature < 0) continue;
      const auto& left = tree.nodes[static_cast<std::size_t>(node.left)].class_counts;
      const auto& right = tree.nodes[static_cast<std::size_t>(node.right)].class_counts;
      std::uint64_t n = 0, nl = 0, nr = 0;
      for (auto c : node.class_counts) n += c;
      for (auto c : left) nl += c;
      for (auto c : right) nr += c;
      double decrease = gini_impurity(node.class_counts) -
                        (static_cast<double>(nl) * gini_impurity(left) +
                         static_cast<double>(nr) * gini_impurity(right)) /
                            static_cast<double>(n);
      importance[static_cast<std::size_t>(node.feature)] +=
          (static_cast<double>(n) / static_cast<double>(root_n)) * decrease;
    }
  }
  double total = 0.0;
  for (double v : importance) total += v;
  if (total > 0.0) {
    for (auto& v : importance) v /= total;
  }
  return importance;
}

}  // namespace peacetext
