#include "peacetext/logistic_regression.hpp"

#include <algorithm>
#include <cmath>

#include "peacetext/errors.hpp"

namespace peacetext {

namespace {

// log(1 + exp(t)) without overflow
double softplus(double t) {
  if (t > 0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

struct Problem {
  std::vector<std::vector<double>> X;  // standardized
  std::vector<std::size_t> y;          // class indices
  std::size_t n_classes = 0;
  std::size_t n_features = 0;
  double l2 = 0.0;

  // parameter blocks: binary = 1, multiclass = n_classes
  std::size_t blocks() const { return n_classes == 2 ? 1 : n_classes; }
  std::size_t n_params() const { return blocks() * (n_features + 1); }
};

double loss_at(const Problem& p, const std::vector<double>& params) {
  const std::size_t d = p.n_features;
  double nll = 0.0;
  if (p.n_classes == 2) {
    const double* w = params.data();
    const double b = params[d];
    for (std::size_t i = 0; i < p.X.size(); ++i) {
      double z = b;
      for (std::size_t j = 0; j < d; ++j) z += w[j] * p.X[i][j];
      nll += p.y[i] == 1 ? softplus(-z) : softplus(z);
    }
  } else {
    std::vector<double> logits(p.n_classes);
    for (std::size_t i = 0; i < p.X.size(); ++i) {
      for (std::size_t c = 0; c < p.n_classes; ++c) {
        const double* w = params.data() + c * (d + 1);
        double z = w[d];
        for (std::size_t j = 0; j < d; ++j) z += w[j] * p.X[i][j];
        logits[c] = z;
      }
      double zmax = *std::max_element(logits.begin(), logits.end());
      double sum = 0.0;
      for (double z : logits) sum += std::exp(z - zmax);
      nll += zmax + std::log(sum) - logits[p.y[i]];
    }
  }
  double penalty = 0.0;
  for (std::size_t c = 0; c < p.blocks(); ++c) {
    const double* w = params.data() + c * (d + 1);
    for (std::size_t j = 0; j < d; ++j) penalty += w[j] * w[j];
  }
  return nll + 0.5 * p.l2 * penalty;
}

std::vector<double> gradient_at(const Problem& p, const std::vector<double>& params) {
  const std::size_t d = p.n_features;
  std::vector<double> grad(p.n_params(), 0.0);
  if (p.n_classes == 2) {
    const double* w = params.data();
    const double b = params[d];
    for (std::size_t i = 0; i < p.X.size(); ++i) {
      double z = b;
      for (std::size_t j = 0; j < d; ++j) z += w[j] * p.X[i][j];
      double r = sigmoid(z) - (p.y[i] == 1 ? 1.0 : 0.0);
      for (std::size_t j = 0; j < d; ++j) grad[j] += r * p.X[i][j];
      grad[d] += r;
    }
    for (std::size_t j = 0; j < d; ++j) grad[j] += p.l2 * w[j];
  } else {
    std::vector<double> logits(p.n_classes), probs(p.n_classes);
    for (std::size_t i = 0; i < p.X.size(); ++i) {
      for (std::size_t c = 0; c < p.n_classes; ++c) {
        const double* w = params.data() + c * (d + 1);
        double z = w[d];
        for (std::size_t j = 0; j < d; ++j) z += w[j] * p.X[i][j];
        logits[c] = z;
      }
      double zmax = *std::max_element(logits.begin(), logits.end());
      double sum = 0.0;
      for (std::size_t c = 0; c < p.n_classes; ++c) {
        probs[c] = std::exp(logits[c] - zmax);
        sum += probs[c];
      }
      for (std::size_t c = 0; c < p.n_classes; ++c) {
        double r = probs[c] / sum - (p.y[i] == c ? 1.0 : 0.0);
        double* g = grad.data() + c * (d + 1);
        for (std::size_t j = 0; j < d; ++j) g[j] += r * p.X[i][j];
        g[d] += r;
      }
    }
    for (std::size_t c = 0; c < p.n_classes; ++c) {
      const double* w = params.data() + c * (d + 1);
      double* g = grad.data() + c * (d + 1);
      for (std::size_t j = 0; j < d; ++j) g[j] += p.l2 * w[j];
    }
  }
  return grad;
}

std::vector<std::vector<double>> apply_standardization(const std::vector<std::vector<double>>& X,
                                                       const std::optional<Standardization>& s) {
  if (!s) return X;
  std::vector<std::vector<double>> out(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    out[i].resize(X[i].size());
    for (std::size_t j = 0; j < X[i].size(); ++j) {
      out[i][j] = (X[i][j] - s->mean[j]) / s->std[j];
    }
  }
  return out;
}

Problem make_problem(const LRModel& model, const std::vector<std::vector<double>>& X,
                     const std::vector<int>& y) {
  if (X.size() != y.size()) throw DataError("feature rows and labels differ in length");
  Problem p;
  p.X = apply_standardization(X, model.standardization);
  p.n_classes = model.classes.size();
  p.n_features = model.n_features();
  p.l2 = model.hyper.l2_strength;
  p.y.reserve(y.size());
  for (int label : y) {
    auto it = std::find(model.classes.begin(), model.classes.end(), label);
    if (it == model.classes.end()) throw DataError("label " + std::to_string(label) + " not in model classes");
    p.y.push_back(static_cast<std::size_t>(it - model.classes.begin()));
  }
  for (const auto& row : p.X) {
    if (row.size() != p.n_features) throw DataError("feature row length mismatch");
  }
  return p;
}

std::vector<double> standardized_row(const LRModel& model, std::span<const double> row) {
  if (row.size() != model.n_features()) {
    throw DataError("feature row has " + std::to_string(row.size()) + " values, model expects " +
                    std::to_string(model.n_features()));
  }
  std::vector<double> z(row.begin(), row.end());
  if (model.standardization) {
    for (std::size_t j = 0; j < z.size(); ++j) {
      z[j] = (z[j] - model.standardization->mean[j]) / model.standardization->std[j];
    }
  }
  return z;
}

}  // namespace

LRModel train_logistic(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                       const LRHyper& hyper, TrainTrace* trace) {
  if (X.empty() || X.size() != y.size()) throw DataError("training data empty or misaligned");
  const std::size_t d = X[0].size();
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

  LRModel model;
  model.classes = classes;
  model.hyper = hyper;
  if (hyper.standardize) {
    Standardization s;
    s.mean.assign(d, 0.0);
    s.std.assign(d, 0.0);
    for (const auto& row : X) {
      for (std::size_t j = 0; j < d; ++j) s.mean[j] += row[j];
    }
    for (std::size_t j = 0; j < d; ++j) s.mean[j] /= static_cast<double>(X.size());
    for (const auto& row : X) {
      for (std::size_t j = 0; j < d; ++j) {
        double c = row[j] - s.mean[j];
        s.std[j] += c * c;
      }
    }
    for (std::size_t j = 0; j < d; ++j) {
      s.std[j] = std::sqrt(s.std[j] / static_cast<double>(X.size()));
      if (s.std[j] == 0.0) s.std[j] = 1.0;  // constant feature
    }
    model.standardization = std::move(s);
  }
  const std::size_t blocks = classes.size() == 2 ? 1 : classes.size();
  model.weights.assign(blocks, std::vector<double>(d, 0.0));
  model.bias.assign(blocks, 0.0);

  Problem problem = make_problem(model, X, y);
  std::vector<double> params(problem.n_params(), 0.0);
  double loss = loss_at(problem, params);
  if (trace) trace->loss.push_back(loss);

  double step = 1.0;
  std::vector<double> candidate(params.size());
  for (std::size_t iter = 0; iter < hyper.max_iterations; ++iter) {
    auto grad = gradient_at(problem, params);
    double ginf = 0.0, g2 = 0.0;
    for (double g : grad) {
      ginf = std::max(ginf, std::abs(g));
      g2 += g * g;
    }
    if (ginf < hyper.tolerance) break;

    double t = std::min(step * 2.0, 1e6);
    bool accepted = false;
    while (t >= 1e-18) {
      for (std::size_t j = 0; j < params.size(); ++j) candidate[j] = params[j] - t * grad[j];
      double candidate_loss = loss_at(problem, candidate);
      if (candidate_loss <= loss - 1e-4 * t * g2) {
        params.swap(candidate);
        loss = candidate_loss;
        step = t;
        accepted = true;
        break;
      }
      t /= 2.0;
    }
    if (!accepted) break;  // step underflow: no further descent possible
    if (trace) trace->loss.push_back(loss);
  }

  lr_set_parameters(model, params);
  return model;
}

double predict_proba(const LRModel& model, std::span<const double> row) {
  if (!model.is_binary()) throw DataError("predict_proba requires a binary model");
  auto z = standardized_row(model, row);
  double logit = model.bias[0];
  for (std::size_t j = 0; j < z.size(); ++j) logit += model.weights[0][j] * z[j];
  return sigmoid(logit);
}

std::vector<double> predict_distribution(const LRModel& model, std::span<const double> row) {
  if (model.is_binary()) {
    double p = predict_proba(model, row);
    return {1.0 - p, p};
  }
  auto z = standardized_row(model, row);
  std::vector<double> logits(model.classes.size());
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    double v = model.bias[c];
    for (std::size_t j = 0; j < z.size(); ++j) v += model.weights[c][j] * z[j];
    logits[c] = v;
  }
  double zmax = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  std::vector<double> probs(logits.size());
  for (std::size_t c = 0; c < logits.size(); ++c) {
    probs[c] = std::exp(logits[c] - zmax);
    sum += probs[c];
  }
  for (auto& p : probs) p /= sum;
  return probs;
}

int lr_predict(const LRModel& model, std::span<const double> row) {
  auto probs = predict_distribution(model, row);
  std::size_t best = 0;
  for (std::size_t c = 1; c < probs.size(); ++c) {
    if (probs[c] > probs[best]) best = c;
  }
  return model.classes[best];
}

double lr_loss(const LRModel& model, const std::vector<std::vector<double>>& X,
               const std::vector<int>& y) {
  return loss_at(make_problem(model, X, y), lr_parameters(model));
}

std::vector<double> lr_gradient(const LRModel& model, const std::vector<std::vector<double>>& X,
                                const std::vector<int>& y) {
  return gradient_at(make_problem(model, X, y), lr_parameters(model));
}

std::vector<double> lr_parameters(const LRModel& model) {
  std::vector<double> params;
  params.reserve(model.weights.size() * (model.n_features() + 1));
  for (std::size_t c = 0; c < model.weights.size(); ++c) {
    params.insert(params.end(), model.weights[c].begin(), model.weights[c].end());
    params.push_back(model.bias[c]);
  }
  return params;
}

void lr_set_parameters(LRModel& model, std::span<const double> params) {
  const std::size_t d = model.n_features();
  const std::size_t blocks = model.weights.size();
  if (params.size() != blocks * (d + 1)) throw DataError("parameter vector length mismatch");
  for (std::size_t c = 0; c < blocks; ++c) {
    const double* block = params.data() + c * (d + 1);
    std::copy(block, block + d, model.weights[c].begin());
    model.bias[c] = block[d];
  }
}

}  // namespace peacetext
