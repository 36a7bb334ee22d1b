#ifndef PEACETEXT_EVALUATION_HPP
#define PEACETEXT_EVALUATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "peacetext/logistic_regression.hpp"
#include "peacetext/random_forest.hpp"

namespace peacetext {

struct ConfusionMatrix {
  struct Cell {
    std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
  };
  std::vector<int> classes;
  std::vector<Cell> per_class;  // one-vs-rest counts, aligned to classes
  std::uint64_t total = 0;
};

ConfusionMatrix confusion(const std::vector<int>& y_true, const std::vector<int>& y_pred,
                          const std::vector<int>& classes);

enum class Averaging { binary_overall, weighted };

struct MetricsReport {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  Averaging averaging = Averaging::weighted;
};

// binary_overall: the four formulas on the positive (second) class's
// one-vs-rest counts. weighted: per-class one-vs-rest metrics averaged with
// class-support weights; a class with TP+FP = 0 scores precision 0 (warned).
MetricsReport metrics(const ConfusionMatrix& cm, Averaging averaging);

struct SplitResult {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

// Stratified where possible; test size = round(0.2*n), at least 1.
SplitResult split_80_20(const std::vector<int>& labels, std::uint64_t seed);

struct LearnerSpec {
  enum class Kind { logistic, forest };
  Kind kind = Kind::logistic;
  LRHyper lr;
  RFHyper rf;
};

struct LoocvResult {
  std::vector<std::optional<int>> predictions;      // input order; nullopt = skipped fold
  std::vector<std::optional<double>> probabilities; // LR: p(higher class) / p(predicted); RF: nullopt
  std::vector<std::size_t> skipped_folds;
};

// Hold each sample out in turn, train on the rest, predict it. Folds whose
// training set collapses to one class are skipped with a warning. Forest
// folds draw their seeds from `seed`; logistic folds ignore it.
LoocvResult loocv(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                  const LearnerSpec& learner, std::uint64_t seed);

struct RunAggregate {
  double mean = 0.0;
  double sem = 0.0;  // sample stddev / sqrt(n); 0 when all runs agree
  std::size_t n_runs = 0;
};

RunAggregate aggregate_runs(const std::vector<double>& runs);

struct BaselineResult {
  RunAggregate accuracy, precision, recall, f1;
};

// Uniform guessing over the observed class set, weighted metrics per run.
BaselineResult random_baseline(const std::vector<int>& labels, std::size_t n_runs, std::uint64_t seed);

enum class SemChoice { model_runs, pooled };

struct SignificanceResult {
  double z = 0.0;
  double p_value = 0.5;  // one-tailed, standard normal upper tail
  SemChoice sem_choice = SemChoice::model_runs;
};

// z = (mean_model - mean_baseline) / sem, with the denominator taken from
// the model runs (default) or pooled sqrt(sem1^2 + sem2^2). A zero sem
// yields an infinite z with a warning.
SignificanceResult z_test(const RunAggregate& model, const RunAggregate& baseline,
                          SemChoice sem_choice = SemChoice::model_runs);

}  // namespace peacetext

#endif  // PEACETEXT_EVALUATION_HPP
