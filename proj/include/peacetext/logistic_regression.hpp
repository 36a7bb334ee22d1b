#ifndef PEACETEXT_LOGISTIC_REGRESSION_HPP
#define PEACETEXT_LOGISTIC_REGRESSION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace peacetext {

struct LRHyper {
  double l2_strength = 1.0;         // weight penalty, bias unpenalized
  std::size_t max_iterations = 5000;
  double tolerance = 1e-8;          // inf-norm of the gradient
  bool standardize = true;          // z-score features from the training rows
};

struct Standardization {
  std::vector<double> mean;
  std::vector<double> std;  // strictly positive (constant features pinned to 1)
};

struct LRModel {
  std::vector<int> classes;                  // sorted distinct labels, e.g. {0,1}
  std::vector<std::vector<double>> weights;  // binary: 1 x d; multiclass: k x d
  std::vector<double> bias;                  // binary: 1; multiclass: k
  std::optional<Standardization> standardization;
  LRHyper hyper;

  bool is_binary() const { return classes.size() == 2; }
  std::size_t n_features() const { return weights.empty() ? 0 : weights[0].size(); }
};

struct TrainTrace {
  std::vector<double> loss;  // regularized NLL per accepted iterate, non-increasing
};

// Full-batch gradient descent with Armijo backtracking on the L2-regularized
// negative log-likelihood (sigmoid link for 2 classes, softmax for more).
// Deterministic: identical input yields a bit-identical model.
LRModel train_logistic(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                       const LRHyper& hyper = {}, TrainTrace* trace = nullptr);

// Probability of the higher class (classes[1]); binary models only.
double predict_proba(const LRModel& model, std::span<const double> row);

// Class distribution; sums to 1. Binary models return {1-p, p}.
std::vector<double> predict_distribution(const LRModel& model, std::span<const double> row);

int lr_predict(const LRModel& model, std::span<const double> row);

// Regularized NLL of the model's current parameters on (X, y). Applies the
// model's standardization, matching the training objective.
double lr_loss(const LRModel& model, const std::vector<std::vector<double>>& X,
               const std::vector<int>& y);

// Analytic gradient, flattened in lr_parameters() order.
std::vector<double> lr_gradient(const LRModel& model, const std::vector<std::vector<double>>& X,
                                const std::vector<int>& y);

// Parameter vector layout: class-major [w_c0..., b_c0, w_c1..., b_c1, ...]
// (binary models have a single block).
std::vector<double> lr_parameters(const LRModel& model);
void lr_set_parameters(LRModel& model, std::span<const double> params);

}  // namespace peacetext

#endif  // PEACETEXT_LOGISTIC_REGRESSION_HPP
