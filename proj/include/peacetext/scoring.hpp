#ifndef PEACETEXT_SCORING_HPP
#define PEACETEXT_SCORING_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "peacetext/frequency.hpp"
#include "peacetext/logistic_regression.hpp"
#include "peacetext/peace_indices.hpp"

namespace peacetext {

struct PeaceScore {
  std::string country;
  double p = 0.0;       // probability of the higher-peace class
  double index = 0.0;   // 100 * p
  CountryClass classified_as = CountryClass::lower;  // higher iff p >= 0.5
};

// The 0-100 peace index of one feature row under a 2-class model. Applies to
// any country, trained on or not. A 3-class model is rejected.
PeaceScore ml_peace_index(const LRModel& model, const std::string& country,
                          std::span<const double> row);

std::vector<PeaceScore> score_countries(const LRModel& model, const FeatureMatrix& matrix);

struct RankingRow {
  std::size_t rank = 0;  // 1 = lowest index
  PeaceScore score;
  std::map<std::string, double> reference;  // scaled index values present for the country
};

// Ascending by index, ties by country code, with the scaled reference
// indices side by side.
std::vector<RankingRow> rank_countries(std::vector<PeaceScore> scores,
                                       const ScaledIndexTable& reference);

void write_ranking_csv(const std::vector<RankingRow>& rows,
                       const std::vector<IndexDescriptor>& descriptors, std::ostream& out);
// Full-precision sidecar for the two-decimal CSV.
void write_ranking_sidecar(const std::vector<RankingRow>& rows, std::ostream& out);

struct WordReportRow {
  std::string word;
  std::uint64_t count = 0;  // aggregate over the class's countries
  std::size_t rank = 0;     // 1-based by count, ties by lemma
  bool important = false;   // among the flag_n highest-importance features
};

// Per class: the top_n most frequent words over that class's countries, each
// flagged if it is one of the flag_n features with the highest importance.
std::map<int, std::vector<WordReportRow>> word_report(
    const std::map<int, std::vector<FreqTable>>& tables_by_class,
    const std::vector<double>& importance, const Vocabulary& vocab, std::size_t top_n = 100,
    std::size_t flag_n = 50);

void write_word_report_csv(const std::map<int, std::vector<WordReportRow>>& report,
                           std::ostream& out);

// CSV word,frequency,class,important — the inputs a word-cloud renderer
// needs (size scales with frequency).
void wordcloud_export(const std::map<int, std::vector<WordReportRow>>& report, bool important_only,
                      std::ostream& out);
std::map<int, std::vector<WordReportRow>> wordcloud_import(std::istream& in);

}  // namespace peacetext

#endif  // PEACETEXT_SCORING_HPP
