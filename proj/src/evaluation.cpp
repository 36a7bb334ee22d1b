#include "peacetext/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <map>

#include "peacetext/errors.hpp"
#include "peacetext/rng.hpp"

namespace peacetext {

ConfusionMatrix confusion(const std::vector<int>& y_true, const std::vector<int>& y_pred,
                          const std::vector<int>& classes) {
  if (y_true.size() != y_pred.size()) throw DataError("y_true and y_pred differ in length");
  auto class_index = [&](int label) {
    auto it = std::find(classes.begin(), classes.end(), label);
    if (it == classes.end()) throw DataError("label " + std::to_string(label) + " outside class list");
    return static_cast<std::size_t>(it - classes.begin());
  };
  ConfusionMatrix cm;
  cm.classes = classes;
  cm.per_class.resize(classes.size());
  cm.total = y_true.size();
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const std::size_t t = class_index(y_true[i]);
    const std::size_t p = class_index(y_pred[i]);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const bool is_true = t == c, is_pred = p == c;
      if (is_true && is_pred) ++cm.per_class[c].tp;
      else if (!is_true && is_pred) ++cm.per_class[c].fp;
      else if (is_true && !is_pred) ++cm.per_class[c].fn;
      else ++cm.per_class[c].tn;
    }
  }
  return cm;
}

namespace {

double safe_precision(const ConfusionMatrix::Cell& c, const std::string& what) {
  const std::uint64_t denom = c.tp + c.fp;
  if (denom == 0) {
    std::cerr << "warning: precision undefined (TP+FP=0) for " << what << ", using 0\n";
    return 0.0;
  }
  return static_cast<double>(c.tp) / static_cast<double>(denom);
}

double f1_of(double precision, double recall) {
  const double denom = precision + recall;
  return denom > 0.0 ? 2.0 * precision * recall / denom : 0.0;
}

}  // namespace

MetricsReport metrics(const ConfusionMatrix& cm, Averaging averaging) {
  if (cm.total == 0) throw DataError("empty confusion matrix");
  MetricsReport report;
  report.averaging = averaging;
  if (averaging == Averaging::binary_overall) {
    if (cm.classes.size() != 2) throw DataError("binary metrics require exactly 2 classes");
    const auto& c = cm.per_class[1];  // positive class
    report.accuracy = static_cast<double>(c.tp + c.tn) / static_cast<double>(c.fp + c.fn + c.tp + c.tn);
    report.precision = safe_precision(c, "positive class");
    report.recall = (c.tp + c.fn) == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
    report.f1 = f1_of(report.precision, report.recall);
    return report;
  }

  const double n = static_cast<double>(cm.total);
  std::uint64_t tp_sum = 0;        // doubles as the weighted-recall numerator:
  double precision_sum = 0.0;      // support_c * (tp_c / support_c) == tp_c exactly
  double f1_sum = 0.0;
  for (std::size_t c = 0; c < cm.classes.size(); ++c) {
    const auto& cell = cm.per_class[c];
    const std::uint64_t support = cell.tp + cell.fn;
    tp_sum += cell.tp;
    if (support == 0) continue;
    const double p = safe_precision(cell, "class " + std::to_string(cm.classes[c]));
    const double r = static_cast<double>(cell.tp) / static_cast<double>(support);
    precision_sum += static_cast<double>(support) * p;
    f1_sum += static_cast<double>(support) * f1_of(p, r);
  }
  report.accuracy = static_cast<double>(tp_sum) / n;
  report.precision = precision_sum / n;
  report.recall = static_cast<double>(tp_sum) / n;  // weighted recall reduces to accuracy
  report.f1 = f1_sum / n;
  return report;
}

SplitResult split_80_20(const std::vector<int>& labels, std::uint64_t seed) {
  const std::size_t n = labels.size();
  if (n < 5) throw DataError("80/20 split needs at least 5 samples");
  const std::size_t test_size = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(0.2 * static_cast<double>(n))));

  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < n; ++i) by_class[labels[i]].push_back(i);

  Rng rng(seed);
  // per-class quota: floor(0.2 * n_c), remainder to the largest fractions
  std::vector<std::pair<int, std::size_t>> quotas;
  std::vector<std::pair<double, int>> fractions;
  std::size_t allocated = 0;
  for (const auto& [label, indices] : by_class) {
    const double exact = 0.2 * static_cast<double>(indices.size());
    const std::size_t q = std::min(indices.size(), static_cast<std::size_t>(exact));
    quotas.emplace_back(label, q);
    fractions.emplace_back(exact - static_cast<double>(q), label);
    allocated += q;
  }
  std::sort(fractions.begin(), fractions.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::size_t cursor = 0;
  while (allocated < test_size && cursor < 2 * fractions.size()) {
    int label = fractions[cursor % fractions.size()].second;
    auto& q = *std::find_if(quotas.begin(), quotas.end(),
                            [&](const auto& kv) { return kv.first == label; });
    if (q.second < by_class[label].size()) {
      ++q.second;
      ++allocated;
    }
    ++cursor;
  }

  SplitResult result;
  for (auto& [label, quota] : quotas) {
    auto indices = by_class[label];
    rng.shuffle(indices);
    for (std::size_t i = 0; i < indices.size(); ++i) {
      (i < quota ? result.test : result.train).push_back(indices[i]);
    }
  }
  std::sort(result.train.begin(), result.train.end());
  std::sort(result.test.begin(), result.test.end());
  return result;
}

LoocvResult loocv(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                  const LearnerSpec& learner, std::uint64_t seed) {
  if (X.size() < 2 || X.size() != y.size()) throw DataError("LOOCV needs at least 2 aligned samples");
  {
    std::vector<int> distinct(y.begin(), y.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 2) throw DataError("LOOCV needs at least 2 classes");
  }
  const std::size_t n = X.size();
  LoocvResult result;
  result.predictions.resize(n);
  result.probabilities.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<double>> Xtr;
    std::vector<int> ytr;
    Xtr.reserve(n - 1);
    ytr.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Xtr.push_back(X[j]);
      ytr.push_back(y[j]);
    }
    const bool single_class = std::all_of(ytr.begin(), ytr.end(),
                                          [&](int label) { return label == ytr.front(); });
    if (single_class) {
      std::cerr << "warning: LOOCV fold " << i << " has a single-class training set, skipped\n";
      result.skipped_folds.push_back(i);
      continue;
    }
    if (learner.kind == LearnerSpec::Kind::logistic) {
      LRModel model = train_logistic(Xtr, ytr, learner.lr);
      result.predictions[i] = lr_predict(model, X[i]);
      if (model.is_binary()) {
        result.probabilities[i] = predict_proba(model, X[i]);
      } else {
        auto dist = predict_distribution(model, X[i]);
        result.probabilities[i] = *std::max_element(dist.begin(), dist.end());
      }
    } else {
      RFModel model = train_forest(Xtr, ytr, learner.rf, mix_seed(seed, i));
      result.predictions[i] = rf_predict(model, X[i]);
    }
  }
  return result;
}

RunAggregate aggregate_runs(const std::vector<double>& runs) {
  if (runs.empty()) throw DataError("no runs to aggregate");
  RunAggregate agg;
  agg.n_runs = runs.size();
  for (double v : runs) agg.mean += v;
  agg.mean /= static_cast<double>(runs.size());
  if (runs.size() > 1) {
    double ss = 0.0;
    for (double v : runs) {
      const double d = v - agg.mean;
      ss += d * d;
    }
    const double sd = std::sqrt(ss / static_cast<double>(runs.size() - 1));
    agg.sem = sd / std::sqrt(static_cast<double>(runs.size()));
  }
  return agg;
}

BaselineResult random_baseline(const std::vector<int>& labels, std::size_t n_runs, std::uint64_t seed) {
  if (labels.empty()) throw DataError("no labels for the baseline");
  if (n_runs == 0) throw DataError("n_runs must be >= 1");
  std::vector<int> classes(labels.begin(), labels.end());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  std::vector<double> acc, prec, rec, f1;
  for (std::size_t run = 0; run < n_runs; ++run) {
    Rng rng(mix_seed(seed, run));
    std::vector<int> guesses(labels.size());
    for (auto& g : guesses) g = classes[rng.below(classes.size())];
    if (classes.size() == 1) {
      acc.push_back(1.0);
      prec.push_back(1.0);
      rec.push_back(1.0);
      f1.push_back(1.0);
      continue;
    }
    auto report = metrics(confusion(labels, guesses, classes), Averaging::weighted);
    acc.push_back(report.accuracy);
    prec.push_back(report.precision);
    rec.push_back(report.recall);
    f1.push_back(report.f1);
  }
  return {aggregate_runs(acc), aggregate_runs(prec), aggregate_runs(rec), aggregate_runs(f1)};
}

SignificanceResult z_test(const RunAggregate& model, const RunAggregate& baseline,
                          SemChoice sem_choice) {
  if (model.n_runs == 0 || baseline.n_runs == 0) throw DataError("z-test needs populated aggregates");
  const double delta = model.mean - baseline.mean;
  const double sem = sem_choice == SemChoice::model_runs
                         ? model.sem
                         : std::sqrt(model.sem * model.sem + baseline.sem * baseline.sem);
  SignificanceResult result;
  result.sem_choice = sem_choice;
  if (sem == 0.0) {
    std::cerr << "warning: z-test sem is 0, reporting an infinite z\n";
    result.z = delta > 0.0   ? std::numeric_limits<double>::infinity()
               : delta < 0.0 ? -std::numeric_limits<double>::infinity()
                             : 0.0;
  } else {
    result.z = delta / sem;
  }
  double p = 0.5 * std::erfc(result.z / std::sqrt(2.0));
  result.p_value = std::clamp(p, std::numeric_limits<double>::min(),
                              1.0 - std::numeric_limits<double>::epsilon());
  return result;
}

}  // namespace peacetext
