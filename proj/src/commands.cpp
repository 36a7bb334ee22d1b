#include "peacetext/commands.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "peacetext/corpus.hpp"
#include "peacetext/csv.hpp"
#include "peacetext/errors.hpp"
#include "peacetext/evaluation.hpp"
#include "peacetext/model_artifact.hpp"
#include "peacetext/peace_indices.hpp"
#include "peacetext/rng.hpp"
#include "peacetext/scoring.hpp"
#include "peacetext/text_pipeline.hpp"

namespace peacetext {

namespace fs = std::filesystem;

nlohmann::json RunConfig::to_json() const {
  return {
      {"manifest", manifest.string()},
      {"stopwords", stopwords.string()},
      {"gazetteer", gazetteer.string()},
      {"lemma_map", lemma_map.string()},
      {"boilerplate_threshold", boilerplate_threshold},
      {"entity_heuristic", entity_heuristic},
      {"min_articles", min_articles},
      {"k", k},
      {"normalization", peacetext::to_string(normalization)},
      {"index_csv", index_csv.string()},
      {"labels_file", labels_file.string()},
      {"model", model},
      {"scheme", scheme},
      {"n_classes", n_classes},
      {"lr", {{"l2_strength", lr.l2_strength},
              {"max_iterations", lr.max_iterations},
              {"tolerance", lr.tolerance},
              {"standardize", lr.standardize}}},
      {"rf", {{"n_trees", rf.n_trees}, {"min_samples_leaf", rf.min_samples_leaf}}},
      {"seed", seed},
      {"runs", runs},
      {"workers", workers},
      {"sem_choice", sem_choice},
      {"top_n", top_n},
      {"flag_n", flag_n},
      {"out", out.string()},
  };
}

std::uint64_t RunConfig::config_hash() const {
  const std::string canonical = to_json().dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw DataError("cannot write output: " + path.string());
  return out;
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open: " + path.string());
  return in;
}

char hex_digit(std::uint64_t v) { return "0123456789abcdef"[v & 0xf]; }

std::string hex64(std::uint64_t v) {
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = hex_digit(v);
    v >>= 4;
  }
  return s;
}

// Every output gets a sidecar recording how it was produced.
void write_meta(const RunConfig& config, const fs::path& target, const std::string& stage) {
  nlohmann::json meta = {
      {"stage", stage},
      {"version", kPipelineVersion},
      {"config_hash", hex64(config.config_hash())},
      {"seed", config.seed},
  };
  if (stage == "featurize") meta["normalization"] = peacetext::to_string(config.normalization);
  auto out = open_output(fs::path(target.string() + ".meta.json"));
  out << meta.dump(2) << "\n";
}

nlohmann::json read_meta(const fs::path& target) {
  auto in = open_input(fs::path(target.string() + ".meta.json"));
  nlohmann::json meta;
  in >> meta;
  return meta;
}

std::string sanitize_filename(const std::string& name) {
  std::string out;
  for (char c : name) {
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  return out;
}

FilterConfig load_filters(const RunConfig& config) {
  return load_filter_config(config.stopwords, config.gazetteer, config.lemma_map,
                            config.boilerplate_threshold, config.entity_heuristic);
}

struct TokenIndexEntry {
  std::string country;
  std::string file;  // relative to the out directory
  std::size_t articles = 0;
  std::size_t words = 0;
};

std::vector<TokenIndexEntry> read_token_index(const fs::path& out_dir) {
  auto in = open_input(out_dir / "tokens" / "index.tsv");
  std::vector<TokenIndexEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == '\t') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() != 4) throw DataError("malformed token index line: " + line);
    entries.push_back({fields[0], fields[1], std::stoull(fields[2]), std::stoull(fields[3])});
  }
  if (entries.empty()) throw DataError("token index is empty");
  return entries;
}

std::map<std::string, CountryClass> read_classes(const RunConfig& config) {
  auto in = open_input(config.out / "classes.csv");
  return load_labels_csv(in);
}

Vocabulary read_vocab_file(const fs::path& out_dir) {
  auto in = open_input(out_dir / "vocabulary.tsv");
  return read_vocabulary(in);
}

FeatureMatrix read_matrix_file(const RunConfig& config) {
  auto meta = read_meta(config.out / "matrix.csv");
  auto normalization = normalization_from_string(meta.at("normalization").get<std::string>());
  auto in = open_input(config.out / "matrix.csv");
  return read_matrix_csv(in, normalization);
}

struct LabeledData {
  std::vector<std::vector<double>> X;
  std::vector<int> y;
  std::vector<std::string> countries;
};

// Joins the feature matrix with classes.csv. Two-class mode keeps only the
// lower/higher rows (the extreme-groups setup); unlabeled rows are skipped
// with a warning.
LabeledData labeled_data(const FeatureMatrix& matrix, const std::map<std::string, CountryClass>& classes,
                         int n_classes) {
  LabeledData data;
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    auto it = classes.find(matrix.countries[i]);
    if (it == classes.end()) {
      std::cerr << "warning: no class label for " << matrix.countries[i] << ", row skipped\n";
      continue;
    }
    const int label = static_cast<int>(it->second);
    if (n_classes == 2 && label == static_cast<int>(CountryClass::intermediate)) continue;
    data.X.push_back(matrix.rows[i]);
    data.y.push_back(label);
    data.countries.push_back(matrix.countries[i]);
  }
  if (data.X.empty()) throw DataError("no labeled rows after joining matrix and classes");
  return data;
}

}  // namespace

void cmd_preprocess(const RunConfig& config) {
  auto manifest = load_manifest(config.manifest);
  std::vector<std::string> excluded;
  manifest = filter_min_articles(manifest, config.min_articles, &excluded);
  for (const auto& country : excluded) {
    std::cerr << "excluded " << country << ": fewer than " << config.min_articles << " articles\n";
  }
  if (manifest.countries.empty()) throw DataError("no countries left after the article-count threshold");
  const auto filters = load_filters(config);

  fs::create_directories(config.out / "tokens");
  const auto& countries = manifest.countries;
  std::vector<std::size_t> word_counts(countries.size(), 0);
  std::vector<std::string> files(countries.size());

  auto process_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      const auto& country = countries[c];
      auto articles = read_articles(manifest, country);
      auto lemma_lists = preprocess_articles(articles, filters);
      std::string file = "tokens/" + sanitize_filename(country) + ".txt";
      auto out = open_output(config.out / file);
      std::size_t words = 0;
      for (const auto& lemmas : lemma_lists) {
        for (const auto& lemma : lemmas) {
          out << lemma << '\n';
          ++words;
        }
      }
      word_counts[c] = words;
      files[c] = std::move(file);
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(config.workers, countries.size()));
  if (workers == 1) {
    process_range(0, countries.size());
  } else {
    std::vector<std::future<void>> futures;
    const std::size_t chunk = (countries.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(countries.size(), begin + chunk);
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, process_range, begin, end));
    }
    for (auto& f : futures) f.get();
  }

  std::map<std::string, std::size_t> words_per_country;
  {
    auto index = open_output(config.out / "tokens" / "index.tsv");
    for (std::size_t c = 0; c < countries.size(); ++c) {
      index << countries[c] << '\t' << files[c] << '\t' << manifest.articles_for(countries[c]) << '\t'
            << word_counts[c] << '\n';
      words_per_country[countries[c]] = word_counts[c];
    }
  }
  write_meta(config, config.out / "tokens" / "index.tsv", "preprocess");

  auto stats = corpus_stats(manifest, words_per_country);
  auto out = open_output(config.out / "stats.csv");
  write_stats_csv(stats, out);
  write_meta(config, config.out / "stats.csv", "preprocess");
}

void cmd_featurize(const RunConfig& config) {
  auto index = read_token_index(config.out);
  std::vector<FreqTable> tables;
  std::vector<std::pair<std::string, std::vector<std::string>>> topk_lists;
  fs::create_directories(config.out / "freq");
  for (const auto& entry : index) {
    auto in = open_input(config.out / entry.file);
    std::vector<std::string> lemmas;
    lemmas.reserve(entry.words);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) lemmas.push_back(line);
    }
    auto table = count_words(entry.country, lemmas);
    auto freq_out = open_output(config.out / "freq" / (sanitize_filename(entry.country) + ".csv"));
    write_freq_csv(table, freq_out);
    topk_lists.emplace_back(entry.country, top_k(table, config.k));
    tables.push_back(std::move(table));
  }
  auto vocab = build_vocabulary(topk_lists);
  {
    auto out = open_output(config.out / "vocabulary.tsv");
    write_vocabulary(vocab, out);
  }
  write_meta(config, config.out / "vocabulary.tsv", "featurize");

  auto matrix = featurize(tables, vocab, config.normalization);
  {
    auto out = open_output(config.out / "matrix.csv");
    write_matrix_csv(matrix, out);
  }
  write_meta(config, config.out / "matrix.csv", "featurize");
}

void cmd_classify_countries(const RunConfig& config) {
  const auto descriptors = default_index_descriptors();
  if (!config.labels_file.empty()) {
    auto in = open_input(config.labels_file);
    auto classes = load_labels_csv(in);
    std::vector<std::string> countries;
    for (const auto& [country, _] : classes) countries.push_back(country);
    auto out = open_output(config.out / "classes.csv");
    write_classes_csv(classes, countries, out);
    write_meta(config, config.out / "classes.csv", "classify-countries");
    return;
  }
  if (config.index_csv.empty()) {
    throw UsageError("classify-countries needs --indices or --labels-file");
  }
  auto in = open_input(config.index_csv);
  auto table = load_index_csv(in, descriptors);
  auto scaled = scale_all(table, descriptors);
  {
    auto out = open_output(config.out / "scaled.csv");
    write_scaled_csv(scaled, descriptors, out);
  }
  write_meta(config, config.out / "scaled.csv", "classify-countries");

  std::map<std::string, std::map<std::string, TertileGroup>> groups_by_index;
  for (const auto& d : descriptors) {
    std::map<std::string, double> values;
    for (const auto& [country, row] : scaled.values) {
      auto it = row.find(d.name);
      if (it != row.end()) values[country] = it->second;
    }
    if (values.empty()) {
      std::cerr << "warning: index " << d.name << " has no values, column skipped\n";
      continue;
    }
    if (values.size() < 3) {
      std::cerr << "warning: index " << d.name << " has fewer than 3 values, column skipped\n";
      continue;
    }
    groups_by_index[d.name] = tertile_groups(values);
  }
  auto classes = assign_classes(groups_by_index, scaled.countries);
  {
    auto out = open_output(config.out / "groups.csv");
    write_groups_csv(scaled, groups_by_index, classes, descriptors, out);
  }
  write_meta(config, config.out / "groups.csv", "classify-countries");
  {
    auto out = open_output(config.out / "classes.csv");
    write_classes_csv(classes, scaled.countries, out);
  }
  write_meta(config, config.out / "classes.csv", "classify-countries");
}

void cmd_train(const RunConfig& config) {
  auto matrix = read_matrix_file(config);
  auto classes = read_classes(config);
  auto data = labeled_data(matrix, classes, config.n_classes);

  ModelArtifact artifact;
  artifact.vocab_hash = matrix.vocab.hash();
  artifact.vocab_size = matrix.vocab.words.size();
  artifact.normalization = matrix.normalization;
  artifact.seed = config.seed;
  artifact.meta = {{"config_hash", hex64(config.config_hash())},
                   {"version", kPipelineVersion},
                   {"countries", data.countries}};
  if (config.model == "lr" || config.model == "both") {
    artifact.lr = train_logistic(data.X, data.y, config.lr);
  }
  if (config.model == "rf" || config.model == "both") {
    artifact.rf = train_forest(data.X, data.y, config.rf, config.seed, config.workers);
  }
  if (!artifact.lr && !artifact.rf) throw UsageError("unknown model selection: " + config.model);
  save_artifact(artifact, config.out / "model.json");
  write_meta(config, config.out / "model.json", "train");
}

namespace {

struct EvalRow {
  std::string model;
  std::string scheme;
  RunAggregate accuracy, precision, recall, f1;
};

void append_eval_row(std::ostream& out, const EvalRow& row) {
  std::vector<std::string> fields{row.model, row.scheme};
  for (const auto* agg : {&row.accuracy, &row.precision, &row.recall, &row.f1}) {
    fields.push_back(csv::format_fixed(agg->mean, 3));
    fields.push_back(csv::format_fixed(agg->sem, 3));
  }
  out << csv::join(fields) << "\n";
}

}  // namespace

void cmd_evaluate(const RunConfig& config) {
  auto matrix = read_matrix_file(config);
  auto classes = read_classes(config);
  auto data = labeled_data(matrix, classes, config.n_classes);
  const std::string scheme_name =
      config.scheme == "loocv" ? (std::to_string(data.X.size() - 1) + "_to_predict_one") : "80_20_split";

  std::vector<std::string> model_names;
  if (config.model == "rf" || config.model == "both") model_names.push_back("random_forest");
  if (config.model == "lr" || config.model == "both") model_names.push_back("logistic_regression");
  if (model_names.empty()) throw UsageError("unknown model selection: " + config.model);

  auto predictions_out = open_output(config.out / "predictions.csv");
  predictions_out << "model,run,fold,country,true,pred,p\n";

  std::vector<EvalRow> rows;
  auto baseline = random_baseline(data.y, config.runs, mix_seed(config.seed, 0x5eedu));
  rows.push_back({"random_guessing", "uniform", baseline.accuracy, baseline.precision,
                  baseline.recall, baseline.f1});

  for (const auto& model_name : model_names) {
    LearnerSpec spec;
    spec.kind = model_name == "random_forest" ? LearnerSpec::Kind::forest : LearnerSpec::Kind::logistic;
    spec.lr = config.lr;
    spec.rf = config.rf;

    std::vector<double> acc, prec, rec, f1;
    for (std::size_t run = 0; run < config.runs; ++run) {
      const std::uint64_t run_seed = mix_seed(config.seed, run);
      std::vector<int> y_true, y_pred;
      if (config.scheme == "loocv") {
        auto result = loocv(data.X, data.y, spec, run_seed);
        for (std::size_t i = 0; i < data.X.size(); ++i) {
          if (!result.predictions[i]) continue;
          y_true.push_back(data.y[i]);
          y_pred.push_back(*result.predictions[i]);
          predictions_out << csv::join({model_name, std::to_string(run), std::to_string(i),
                                        data.countries[i], std::to_string(data.y[i]),
                                        std::to_string(*result.predictions[i]),
                                        result.probabilities[i]
                                            ? csv::format_double(*result.probabilities[i])
                                            : ""})
                          << "\n";
        }
      } else if (config.scheme == "split") {
        auto split = split_80_20(data.y, run_seed);
        std::vector<std::vector<double>> Xtr;
        std::vector<int> ytr;
        for (auto i : split.train) {
          Xtr.push_back(data.X[i]);
          ytr.push_back(data.y[i]);
        }
        std::optional<LRModel> lr_model;
        std::optional<RFModel> rf_model;
        if (spec.kind == LearnerSpec::Kind::logistic) {
          lr_model = train_logistic(Xtr, ytr, spec.lr);
        } else {
          rf_model = train_forest(Xtr, ytr, spec.rf, run_seed, config.workers);
        }
        for (std::size_t slot = 0; slot < split.test.size(); ++slot) {
          const std::size_t i = split.test[slot];
          int pred;
          std::string p_field;
          if (lr_model) {
            pred = lr_predict(*lr_model, data.X[i]);
            if (lr_model->is_binary()) p_field = csv::format_double(predict_proba(*lr_model, data.X[i]));
          } else {
            pred = rf_predict(*rf_model, data.X[i]);
          }
          y_true.push_back(data.y[i]);
          y_pred.push_back(pred);
          predictions_out << csv::join({model_name, std::to_string(run), std::to_string(slot),
                                        data.countries[i], std::to_string(data.y[i]),
                                        std::to_string(pred), p_field})
                          << "\n";
        }
      } else {
        throw UsageError("unknown scheme: " + config.scheme);
      }
      std::vector<int> label_set(data.y.begin(), data.y.end());
      std::sort(label_set.begin(), label_set.end());
      label_set.erase(std::unique(label_set.begin(), label_set.end()), label_set.end());
      auto report = metrics(confusion(y_true, y_pred, label_set), Averaging::weighted);
      acc.push_back(report.accuracy);
      prec.push_back(report.precision);
      rec.push_back(report.recall);
      f1.push_back(report.f1);
    }
    rows.push_back({model_name, scheme_name, aggregate_runs(acc), aggregate_runs(prec),
                    aggregate_runs(rec), aggregate_runs(f1)});
  }
  write_meta(config, config.out / "predictions.csv", "evaluate");

  {
    auto out = open_output(config.out / "report.csv");
    out << "model,scheme,accuracy_mean,accuracy_sem,precision_mean,precision_sem,"
           "recall_mean,recall_sem,f1_mean,f1_sem\n";
    for (const auto& row : rows) append_eval_row(out, row);
  }
  write_meta(config, config.out / "report.csv", "evaluate");

  {
    const SemChoice sem_choice =
        config.sem_choice == "pooled" ? SemChoice::pooled : SemChoice::model_runs;
    auto out = open_output(config.out / "ztest.csv");
    out << "model,metric,z,p_value,sem_choice\n";
    for (std::size_t r = 1; r < rows.size(); ++r) {
      auto sig = z_test(rows[r].accuracy, rows[0].accuracy, sem_choice);
      out << csv::join({rows[r].model, "accuracy", csv::format_double(sig.z),
                        csv::format_double(sig.p_value), config.sem_choice})
          << "\n";
    }
  }
  write_meta(config, config.out / "ztest.csv", "evaluate");
}

void cmd_importance(const RunConfig& config) {
  auto artifact = load_artifact(config.out / "model.json");
  if (!artifact.rf) throw DataError("model artifact has no random forest to take importances from");
  auto vocab = read_vocab_file(config.out);
  if (vocab.hash() != artifact.vocab_hash || vocab.words.size() != artifact.vocab_size) {
    throw DataError("vocabulary does not match the model artifact");
  }
  auto importance = gini_importance(*artifact.rf);

  {
    std::vector<std::size_t> order(importance.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (importance[a] != importance[b]) return importance[a] > importance[b];
      return vocab.words[a] < vocab.words[b];
    });
    auto out = open_output(config.out / "importance.csv");
    out << "word,importance\n";
    for (auto j : order) {
      out << csv::join({vocab.words[j], csv::format_double(importance[j])}) << "\n";
    }
  }
  write_meta(config, config.out / "importance.csv", "importance");

  auto classes = read_classes(config);
  auto index = read_token_index(config.out);
  std::map<int, std::vector<FreqTable>> tables_by_class;
  for (const auto& entry : index) {
    auto it = classes.find(entry.country);
    if (it == classes.end()) continue;
    if (it->second != CountryClass::lower && it->second != CountryClass::higher) continue;
    auto in = open_input(config.out / "freq" / (sanitize_filename(entry.country) + ".csv"));
    tables_by_class[static_cast<int>(it->second)].push_back(read_freq_csv(entry.country, in));
  }
  if (tables_by_class.empty()) throw DataError("no lower/higher countries with frequency tables");
  auto report = word_report(tables_by_class, importance, vocab, config.top_n, config.flag_n);
  {
    auto out = open_output(config.out / "word_report.csv");
    write_word_report_csv(report, out);
  }
  write_meta(config, config.out / "word_report.csv", "importance");
  {
    auto out = open_output(config.out / "wordcloud.csv");
    wordcloud_export(report, /*important_only=*/true, out);
  }
  write_meta(config, config.out / "wordcloud.csv", "importance");
}

void cmd_score(const RunConfig& config) {
  auto artifact = load_artifact(config.out / "model.json");
  if (!artifact.lr) throw DataError("model artifact has no logistic-regression model");
  auto matrix = read_matrix_file(config);
  if (matrix.vocab.hash() != artifact.vocab_hash || matrix.vocab.words.size() != artifact.vocab_size) {
    throw DataError("feature matrix vocabulary does not match the model artifact");
  }
  if (matrix.normalization != artifact.normalization) {
    throw DataError("feature matrix normalization does not match the model artifact");
  }
  ScaledIndexTable reference;
  const fs::path scaled_path = config.out / "scaled.csv";
  if (fs::exists(scaled_path)) {
    auto in = open_input(scaled_path);
    reference = read_scaled_csv(in);
  }
  auto scores = score_countries(*artifact.lr, matrix);
  auto rows = rank_countries(std::move(scores), reference);
  {
    auto out = open_output(config.out / "ranking.csv");
    write_ranking_csv(rows, default_index_descriptors(), out);
  }
  write_meta(config, config.out / "ranking.csv", "score");
  {
    auto out = open_output(config.out / "ranking_full.csv");
    write_ranking_sidecar(rows, out);
  }
  write_meta(config, config.out / "ranking_full.csv", "score");
}

void cmd_report(const RunConfig& config) {
  nlohmann::json summary;
  summary["version"] = kPipelineVersion;
  summary["config_hash"] = hex64(config.config_hash());

  auto slurp_csv = [&](const char* name) -> nlohmann::json {
    const fs::path path = config.out / name;
    if (!fs::exists(path)) return nullptr;
    auto in = open_input(path);
    std::string line;
    if (!std::getline(in, line)) return nullptr;
    const auto header = csv::split(line);
    nlohmann::json rows = nlohmann::json::array();
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto fields = csv::split(line);
      nlohmann::json row;
      for (std::size_t i = 0; i < header.size() && i < fields.size(); ++i) {
        row[header[i]] = fields[i];
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };

  for (const char* name : {"stats.csv", "report.csv", "ztest.csv", "ranking.csv", "classes.csv"}) {
    auto rows = slurp_csv(name);
    if (!rows.is_null()) summary[fs::path(name).stem().string()] = std::move(rows);
  }
  {
    auto out = open_output(config.out / "summary.json");
    out << summary.dump(2) << "\n";
  }
  write_meta(config, config.out / "summary.json", "report");

  std::cout << "pipeline summary (" << config.out.string() << ")\n";
  for (const char* name : {"stats.csv", "classes.csv", "report.csv", "ztest.csv", "ranking.csv"}) {
    const fs::path path = config.out / name;
    std::cout << "  " << name << ": " << (fs::exists(path) ? "present" : "missing") << "\n";
  }
  if (summary.contains("report")) {
    for (const auto& row : summary["report"]) {
      std::cout << "  " << row.value("model", "?") << " [" << row.value("scheme", "?")
                << "] accuracy " << row.value("accuracy_mean", "?") << " +/- "
                << row.value("accuracy_sem", "?") << "\n";
    }
  }
  if (summary.contains("ranking") && !summary["ranking"].empty()) {
    const auto& first = summary["ranking"].front();
    const auto& last = summary["ranking"].back();
    std::cout << "  ranking: " << first.value("country", "?") << " ("
              << first.value("ml_peace_index", "?") << ") ... " << last.value("country", "?") << " ("
              << last.value("ml_peace_index", "?") << ")\n";
  }
}

}  // namespace peacetext
