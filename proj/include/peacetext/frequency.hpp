#ifndef PEACETEXT_FREQUENCY_HPP
#define PEACETEXT_FREQUENCY_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace peacetext {

enum class Normalization { raw_count, per_million };

std::string to_string(Normalization n);
Normalization normalization_from_string(std::string_view s);

struct FreqTable {
  std::string country;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total_words = 0;
};

// Exact multiset counts; throws DataError on an empty lemma list.
FreqTable count_words(const std::string& country, const std::vector<std::string>& lemmas);

// Shard merge: counts and totals add (integer addition, order-independent).
void merge_counts(FreqTable& into, const FreqTable& shard);

// The k highest-count words, ties broken lexicographically ascending. If the
// table has fewer than k distinct words, all of them are returned and a
// warning is printed.
std::vector<std::string> top_k(const FreqTable& table, std::size_t k);

struct Vocabulary {
  std::vector<std::string> words;  // unique, lexicographic
  std::map<std::string, std::vector<std::string>> provenance;  // word -> contributing countries

  std::optional<std::size_t> index_of(std::string_view word) const;
  std::uint64_t hash() const;  // FNV-1a over newline-joined words
};

Vocabulary build_vocabulary(const std::vector<std::pair<std::string, std::vector<std::string>>>& topk_per_country);

struct FeatureMatrix {
  Vocabulary vocab;
  std::vector<std::string> countries;
  std::vector<std::vector<double>> rows;  // aligned to vocab.words
  Normalization normalization = Normalization::per_million;
  std::vector<int> labels;  // empty, or one class per row
};

// Feature value for (country, word): the raw count, or 1e6 * count / total.
// Words absent from a country are 0.
FeatureMatrix featurize(const std::vector<FreqTable>& tables, const Vocabulary& vocab,
                        Normalization normalization);

// CSV `word,count`, count descending then word ascending.
void write_freq_csv(const FreqTable& table, std::ostream& out);
FreqTable read_freq_csv(const std::string& country, std::istream& in);

// `word<TAB>country1,country2,...` per line.
void write_vocabulary(const Vocabulary& vocab, std::ostream& out);
Vocabulary read_vocabulary(std::istream& in);

// Header row `country,<word>...`, one row per country, full-precision values.
void write_matrix_csv(const FeatureMatrix& matrix, std::ostream& out);
FeatureMatrix read_matrix_csv(std::istream& in, Normalization normalization);

}  // namespace peacetext

#endif  // PEACETEXT_FREQUENCY_HPP
