#include "peacetext/frequency.hpp"

#include <algorithm>
#include <iostream>
#include <set>

#include "peacetext/csv.hpp"
#include "peacetext/errors.hpp"

namespace peacetext {

std::string to_string(Normalization n) {
  return n == Normalization::raw_count ? "raw_count" : "per_million";
}

Normalization normalization_from_string(std::string_view s) {
  if (s == "raw_count") return Normalization::raw_count;
  if (s == "per_million") return Normalization::per_million;
  throw DataError("unknown normalization: '" + std::string(s) + "'");
}

FreqTable count_words(const std::string& country, const std::vector<std::string>& lemmas) {
  if (lemmas.empty()) throw DataError("no lemmas to count for country: " + country);
  FreqTable table;
  table.country = country;
  table.total_words = lemmas.size();
  for (const auto& lemma : lemmas) ++table.counts[lemma];
  return table;
}

void merge_counts(FreqTable& into, const FreqTable& shard) {
  for (const auto& [word, count] : shard.counts) into.counts[word] += count;
  into.total_words += shard.total_words;
}

std::vector<std::string> top_k(const FreqTable& table, std::size_t k) {
  if (k == 0) throw DataError("top_k requires k >= 1");
  std::vector<std::pair<std::string, std::uint64_t>> items(table.counts.begin(), table.counts.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (items.size() < k) {
    std::cerr << "warning: " << table.country << " has only " << items.size()
              << " distinct words (requested top " << k << ")\n";
    k = items.size();
  }
  std::vector<std::string> words;
  words.reserve(k);
  for (std::size_t i = 0; i < k; ++i) words.push_back(items[i].first);
  return words;
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view word) const {
  auto it = std::lower_bound(words.begin(), words.end(), word);
  if (it != words.end() && *it == word) return static_cast<std::size_t>(it - words.begin());
  return std::nullopt;
}

std::uint64_t Vocabulary::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const auto& word : words) {
    for (unsigned char c : word) mix(c);
    mix('\n');
  }
  return h;
}

Vocabulary build_vocabulary(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& topk_per_country) {
  if (topk_per_country.empty()) throw DataError("no top-k lists supplied");
  Vocabulary vocab;
  for (const auto& [country, words] : topk_per_country) {
    for (const auto& word : words) {
      auto& contributors = vocab.provenance[word];
      if (std::find(contributors.begin(), contributors.end(), country) == contributors.end()) {
        contributors.push_back(country);
      }
    }
  }
  for (const auto& [word, _] : vocab.provenance) vocab.words.push_back(word);
  // provenance is a sorted map, so words are already lexicographic
  return vocab;
}

FeatureMatrix featurize(const std::vector<FreqTable>& tables, const Vocabulary& vocab,
                        Normalization normalization) {
  std::set<std::string> seen;
  for (const auto& table : tables) {
    if (!seen.insert(table.country).second) {
      throw DataError("duplicate country in feature tables: " + table.country);
    }
  }
  FeatureMatrix matrix;
  matrix.vocab = vocab;
  matrix.normalization = normalization;
  for (const auto& table : tables) {
    if (table.total_words == 0) throw DataError("zero total words for country: " + table.country);
    std::vector<double> row(vocab.words.size(), 0.0);
    for (std::size_t j = 0; j < vocab.words.size(); ++j) {
      auto it = table.counts.find(vocab.words[j]);
      if (it == table.counts.end()) continue;
      double value = static_cast<double>(it->second);
      if (normalization == Normalization::per_million) {
        value = 1e6 * value / static_cast<double>(table.total_words);
      }
      row[j] = value;
    }
    matrix.countries.push_back(table.country);
    matrix.rows.push_back(std::move(row));
  }
  return matrix;
}

void write_freq_csv(const FreqTable& table, std::ostream& out) {
  std::vector<std::pair<std::string, std::uint64_t>> items(table.counts.begin(), table.counts.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  out << "word,count\n";
  for (const auto& [word, count] : items) {
    out << csv::join({word, std::to_string(count)}) << "\n";
  }
}

FreqTable read_freq_csv(const std::string& country, std::istream& in) {
  FreqTable table;
  table.country = country;
  std::string line;
  if (!std::getline(in, line) || csv::split(line) != std::vector<std::string>{"word", "count"}) {
    throw DataError("frequency CSV missing 'word,count' header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = csv::split(line);
    if (fields.size() != 2) throw DataError("malformed frequency CSV line: " + line);
    std::uint64_t count = std::stoull(fields[1]);
    table.counts[fields[0]] += count;
    table.total_words += count;
  }
  return table;
}

void write_vocabulary(const Vocabulary& vocab, std::ostream& out) {
  for (const auto& word : vocab.words) {
    out << word << '\t';
    const auto& contributors = vocab.provenance.at(word);
    for (std::size_t i = 0; i < contributors.size(); ++i) {
      if (i) out << ',';
      out << contributors[i];
    }
    out << '\n';
  }
}

Vocabulary read_vocabulary(std::istream& in) {
  Vocabulary vocab;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw DataError("malformed vocabulary line: " + line);
    std::string word = line.substr(0, tab);
    std::vector<std::string> contributors;
    std::string rest = line.substr(tab + 1);
    std::size_t start = 0;
    for (std::size_t i = 0; i <= rest.size(); ++i) {
      if (i == rest.size() || rest[i] == ',') {
        if (i > start) contributors.push_back(rest.substr(start, i - start));
        start = i + 1;
      }
    }
    vocab.words.push_back(word);
    vocab.provenance[word] = std::move(contributors);
  }
  if (!std::is_sorted(vocab.words.begin(), vocab.words.end())) {
    throw DataError("vocabulary file is not in canonical (lexicographic) order");
  }
  return vocab;
}

void write_matrix_csv(const FeatureMatrix& matrix, std::ostream& out) {
  std::vector<std::string> header{"country"};
  header.insert(header.end(), matrix.vocab.words.begin(), matrix.vocab.words.end());
  out << csv::join(header) << "\n";
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    std::vector<std::string> fields{matrix.countries[i]};
    for (double v : matrix.rows[i]) fields.push_back(csv::format_double(v));
    out << csv::join(fields) << "\n";
  }
}

FeatureMatrix read_matrix_csv(std::istream& in, Normalization normalization) {
  FeatureMatrix matrix;
  matrix.normalization = normalization;
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty feature matrix CSV");
  auto header = csv::split(line);
  if (header.size() < 2 || header[0] != "country") {
    throw DataError("feature matrix CSV must start with a 'country,<word>...' header");
  }
  matrix.vocab.words.assign(header.begin() + 1, header.end());
  if (!std::is_sorted(matrix.vocab.words.begin(), matrix.vocab.words.end())) {
    throw DataError("feature matrix vocabulary is not in canonical order");
  }
  for (const auto& word : matrix.vocab.words) matrix.vocab.provenance[word] = {};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = csv::split(line);
    if (fields.size() != header.size()) {
      throw DataError("feature matrix row has " + std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(header.size()));
    }
    matrix.countries.push_back(fields[0]);
    std::vector<double> row;
    row.reserve(fields.size() - 1);
    for (std::size_t j = 1; j < fields.size(); ++j) row.push_back(csv::parse_double(fields[j]));
    matrix.rows.push_back(std::move(row));
  }
  return matrix;
}

}  // namespace peacetext
