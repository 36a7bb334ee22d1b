#ifndef PEACETEXT_TEXT_PIPELINE_HPP
#define PEACETEXT_TEXT_PIPELINE_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "peacetext/corpus.hpp"

namespace peacetext {

struct Token {
  std::string surface;         // original case
  std::string lemma;           // lowercase; initialized to lowercase surface
  std::size_t position = 0;    // index within the article, strictly increasing
  bool sentence_start = false; // first token after ./!/? or article start
};

struct FilterConfig {
  std::unordered_set<std::string> stopwords;  // lowercase lemmas
  std::unordered_set<std::string> gazetteer;  // lowercase proper-noun surfaces
  double boilerplate_threshold = 0.5;         // fraction in (0, 1]
  std::unordered_map<std::string, std::string> lemma_map;  // lowercase surface -> lemma
  bool entity_heuristic = true;

  void validate() const;  // throws DataError on a violated invariant
};

// Loads the three resource files (one entry per line; lemma map lines are
// `surface<TAB>lemma`). The lemma map is composed to a fixpoint at load so
// repeated application is stable.
FilterConfig load_filter_config(const std::filesystem::path& stopwords_path,
                                const std::filesystem::path& gazetteer_path,
                                const std::filesystem::path& lemma_map_path,
                                double boilerplate_threshold = 0.5,
                                bool entity_heuristic = true);

// Splits on any character that is not an ASCII letter or digit, then drops
// tokens shorter than 2 letters or containing a digit. Surface case is kept
// for the capitalization heuristic; lemma starts as the lowercase surface.
std::vector<Token> tokenize(std::string_view text);

// Removes every exact paragraph (blank-line separated, trimmed) that appears
// in more than `threshold` of the given articles. Fewer than two articles:
// returned unchanged.
std::vector<std::string> strip_boilerplate(const std::vector<std::string>& texts, double threshold);

// Dictionary lookup first, then suffix fallbacks (ies->y, plural -s).
std::string lemmatize(const std::string& lower_surface, const FilterConfig& config);

// Drops stopwords (by lemma), gazetteer matches (by lowercase surface), and,
// with the heuristic on, tokens capitalized mid-sentence. Survivors get their
// dictionary lemma; a token whose final lemma lands in the stopword set or
// gazetteer is dropped too, so output lemmas never intersect either list.
std::vector<Token> filter_tokens(std::vector<Token> tokens, const FilterConfig& config);

// tokenize + filter_tokens, returning just the lemmas.
std::vector<std::string> preprocess(std::string_view text, const FilterConfig& config);

// Corpus-level pipeline for one country's articles: boilerplate statistics
// are gathered per source (articles without a source are left untouched),
// then every article is preprocessed in its original order.
std::vector<std::vector<std::string>> preprocess_articles(const std::vector<Article>& articles,
                                                          const FilterConfig& config);

}  // namespace peacetext

#endif  // PEACETEXT_TEXT_PIPELINE_HPP
