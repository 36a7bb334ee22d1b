#include <exception>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "peacetext/commands.hpp"
#include "peacetext/errors.hpp"

namespace {

using peacetext::RunConfig;

void add_common_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--out", config.out, "output directory for this pipeline run");
  cmd->add_option("--seed", config.seed, "master seed recorded into every output");
  cmd->add_option("--workers", config.workers, "worker threads (results are identical for any count)");
}

void add_filter_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--stopwords", config.stopwords, "stopword list, one word per line");
  cmd->add_option("--gazetteer", config.gazetteer, "proper-noun list, one entry per line");
  cmd->add_option("--lemma-map", config.lemma_map, "surface<TAB>lemma dictionary");
  cmd->add_option("--boilerplate-threshold", config.boilerplate_threshold,
                  "drop paragraphs shared by more than this fraction of a source's articles");
  cmd->add_flag("--entity-heuristic,!--no-entity-heuristic", config.entity_heuristic,
                "drop words capitalized mid-sentence");
}

void add_model_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--model", config.model, "lr | rf | both")
      ->check(CLI::IsMember({"lr", "rf", "both"}));
  cmd->add_option("--classes", config.n_classes, "2 (lower/higher only) or 3")
      ->check(CLI::IsMember({2, 3}));
  cmd->add_option("--l2", config.lr.l2_strength, "logistic-regression L2 strength");
  cmd->add_option("--max-iterations", config.lr.max_iterations, "gradient-descent iteration cap");
  cmd->add_option("--lr-tolerance", config.lr.tolerance, "gradient inf-norm stopping tolerance");
  cmd->add_flag("--standardize,!--no-standardize", config.lr.standardize,
                "z-score features for logistic regression");
  cmd->add_option("--trees", config.rf.n_trees, "random-forest tree count");
  cmd->add_option("--min-leaf", config.rf.min_samples_leaf, "minimum samples per leaf");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"news-corpus peace classification pipeline"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI config file; flags override its values");
  app.option_defaults()->configurable();

  RunConfig config;
  std::function<void(const RunConfig&)> action;

  auto* preprocess = app.add_subcommand(
      "preprocess", "clean and tokenize the corpus into per-country token files");
  preprocess->add_option("--manifest", config.manifest, "corpus manifest (country<TAB>path lines)")
      ->required();
  preprocess->add_option("--min-articles", config.min_articles,
                         "exclude countries with fewer articles");
  add_filter_options(preprocess, config);
  add_common_options(preprocess, config);
  preprocess->callback([&] { action = peacetext::cmd_preprocess; });

  auto* featurize =
      app.add_subcommand("featurize", "build frequency tables, the union vocabulary, and the feature matrix");
  featurize->add_option("--k", config.k, "top words kept per country");
  featurize->add_option("--normalization", config.normalization, "raw_count | per_million")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, peacetext::Normalization>{
              {"raw_count", peacetext::Normalization::raw_count},
              {"per_million", peacetext::Normalization::per_million}},
          CLI::ignore_case));
  add_common_options(featurize, config);
  featurize->callback([&] { action = peacetext::cmd_featurize; });

  auto* classify = app.add_subcommand(
      "classify-countries", "scale peace indices, form tertile groups, and assign classes");
  classify->add_option("--indices", config.index_csv, "CSV country,GPI,PPI,WHI,FSI,HDI");
  classify->add_option("--labels-file", config.labels_file,
                       "CSV country,class; bypasses tertile grouping");
  add_common_options(classify, config);
  classify->callback([&] { action = peacetext::cmd_classify_countries; });

  auto* train = app.add_subcommand("train", "fit the classifiers and write the model artifact");
  add_model_options(train, config);
  add_common_options(train, config);
  train->callback([&] { action = peacetext::cmd_train; });

  auto* evaluate =
      app.add_subcommand("evaluate", "run LOOCV or 80/20 evaluations against a random baseline");
  evaluate->add_option("--scheme", config.scheme, "loocv | split")
      ->check(CLI::IsMember({"loocv", "split"}));
  evaluate->add_option("--runs", config.runs, "evaluation runs to aggregate");
  evaluate->add_option("--sem-choice", config.sem_choice, "model_runs | pooled")
      ->check(CLI::IsMember({"model_runs", "pooled"}));
  add_model_options(evaluate, config);
  add_common_options(evaluate, config);
  evaluate->callback([&] { action = peacetext::cmd_evaluate; });

  auto* importance =
      app.add_subcommand("importance", "rank words by Gini importance and write the word reports");
  importance->add_option("--top-n", config.top_n, "most-frequent words per class in the report");
  importance->add_option("--flag-n", config.flag_n, "size of the highest-importance set");
  add_common_options(importance, config);
  importance->callback([&] { action = peacetext::cmd_importance; });

  auto* score =
      app.add_subcommand("score", "compute the 0-100 peace index for every country and rank them");
  add_common_options(score, config);
  score->callback([&] { action = peacetext::cmd_score; });

  auto* report = app.add_subcommand("report", "collate pipeline outputs into summary.json");
  add_common_options(report, config);
  report->callback([&] { action = peacetext::cmd_report; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    action(config);
  } catch (const peacetext::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const peacetext::NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const peacetext::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
