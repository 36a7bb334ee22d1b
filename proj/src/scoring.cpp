#include "peacetext/scoring.hpp"

#include <algorithm>
#include <set>

#include "peacetext/csv.hpp"
#include "peacetext/errors.hpp"

namespace peacetext {

PeaceScore ml_peace_index(const LRModel& model, const std::string& country,
                          std::span<const double> row) {
  if (!model.is_binary()) throw DataError("peace index requires a 2-class model");
  PeaceScore score;
  score.country = country;
  score.p = predict_proba(model, row);
  score.index = 100.0 * score.p;
  score.classified_as = score.p >= 0.5 ? CountryClass::higher : CountryClass::lower;
  return score;
}

std::vector<PeaceScore> score_countries(const LRModel& model, const FeatureMatrix& matrix) {
  std::vector<PeaceScore> scores;
  scores.reserve(matrix.rows.size());
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    scores.push_back(ml_peace_index(model, matrix.countries[i], matrix.rows[i]));
  }
  return scores;
}

std::vector<RankingRow> rank_countries(std::vector<PeaceScore> scores,
                                       const ScaledIndexTable& reference) {
  if (scores.empty()) throw DataError("no scores to rank");
  std::sort(scores.begin(), scores.end(), [](const PeaceScore& a, const PeaceScore& b) {
    if (a.index != b.index) return a.index < b.index;
    return a.country < b.country;
  });
  std::vector<RankingRow> rows;
  rows.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    RankingRow row;
    row.rank = i + 1;
    row.score = scores[i];
    auto it = reference.values.find(scores[i].country);
    if (it != reference.values.end()) row.reference = it->second;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_ranking_csv(const std::vector<RankingRow>& rows,
                       const std::vector<IndexDescriptor>& descriptors, std::ostream& out) {
  std::vector<std::string> header{"rank", "country", "ml_peace_index"};
  for (const auto& d : descriptors) header.push_back(d.name);
  out << csv::join(header) << "\n";
  for (const auto& row : rows) {
    std::vector<std::string> fields{std::to_string(row.rank), row.score.country,
                                    csv::format_fixed(row.score.index, 2)};
    for (const auto& d : descriptors) {
      auto it = row.reference.find(d.name);
      fields.push_back(it != row.reference.end() ? csv::format_fixed(it->second, 2) : "");
    }
    out << csv::join(fields) << "\n";
  }
}

void write_ranking_sidecar(const std::vector<RankingRow>& rows, std::ostream& out) {
  out << "rank,country,p,ml_peace_index\n";
  for (const auto& row : rows) {
    out << csv::join({std::to_string(row.rank), row.score.country, csv::format_double(row.score.p),
                      csv::format_double(row.score.index)})
        << "\n";
  }
}

std::map<int, std::vector<WordReportRow>> word_report(
    const std::map<int, std::vector<FreqTable>>& tables_by_class,
    const std::vector<double>& importance, const Vocabulary& vocab, std::size_t top_n,
    std::size_t flag_n) {
  if (importance.size() != vocab.words.size()) {
    throw DataError("importance vector length " + std::to_string(importance.size()) +
                    " does not match vocabulary size " + std::to_string(vocab.words.size()));
  }
  // the flagged set is model-global: flag_n highest importances, ties toward
  // the earlier feature index
  std::vector<std::size_t> order(importance.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return importance[a] > importance[b]; });
  std::set<std::string> flagged;
  for (std::size_t j = 0; j < std::min(flag_n, order.size()); ++j) {
    if (importance[order[j]] > 0.0) flagged.insert(vocab.words[order[j]]);
  }

  std::map<int, std::vector<WordReportRow>> report;
  for (const auto& [class_label, tables] : tables_by_class) {
    std::map<std::string, std::uint64_t> aggregate;
    for (const auto& table : tables) {
      for (const auto& [word, count] : table.counts) aggregate[word] += count;
    }
    std::vector<std::pair<std::string, std::uint64_t>> items(aggregate.begin(), aggregate.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    std::vector<WordReportRow> rows;
    const std::size_t limit = std::min(top_n, items.size());
    rows.reserve(limit);
    for (std::size_t i = 0; i < limit; ++i) {
      WordReportRow row;
      row.word = items[i].first;
      row.count = items[i].second;
      row.rank = i + 1;
      row.important = flagged.count(row.word) > 0;
      rows.push_back(std::move(row));
    }
    report[class_label] = std::move(rows);
  }
  return report;
}

void write_word_report_csv(const std::map<int, std::vector<WordReportRow>>& report,
                           std::ostream& out) {
  out << "class,rank,word,count,important\n";
  for (const auto& [class_label, rows] : report) {
    for (const auto& row : rows) {
      out << csv::join({std::to_string(class_label), std::to_string(row.rank), row.word,
                        std::to_string(row.count), row.important ? "1" : "0"})
          << "\n";
    }
  }
}

void wordcloud_export(const std::map<int, std::vector<WordReportRow>>& report, bool important_only,
                      std::ostream& out) {
  out << "word,frequency,class,important\n";
  for (const auto& [class_label, rows] : report) {
    for (const auto& row : rows) {
      if (important_only && !row.important) continue;
      out << csv::join({row.word, std::to_string(row.count), std::to_string(class_label),
                        row.important ? "1" : "0"})
          << "\n";
    }
  }
}

std::map<int, std::vector<WordReportRow>> wordcloud_import(std::istream& in) {
  std::map<int, std::vector<WordReportRow>> report;
  std::string line;
  if (!std::getline(in, line) ||
      csv::split(line) != std::vector<std::string>{"word", "frequency", "class", "important"}) {
    throw DataError("word-cloud CSV missing its header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = csv::split(line);
    if (fields.size() != 4) throw DataError("malformed word-cloud line: " + line);
    WordReportRow row;
    row.word = fields[0];
    row.count = std::stoull(fields[1]);
    row.important = fields[3] == "1";
    auto& rows = report[std::stoi(fields[2])];
    row.rank = rows.size() + 1;
    rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace peacetext
