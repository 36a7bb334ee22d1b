#ifndef PEACETEXT_CORPUS_HPP
#define PEACETEXT_CORPUS_HPP

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace peacetext {

struct Article {
  std::string country;
  std::string text;
  std::string source;  // optional, empty if absent
  std::string date;    // optional ISO-8601, empty if absent
};

struct ManifestEntry {
  std::string country;
  std::filesystem::path path;
  std::size_t article_count = 0;
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;
  std::vector<std::string> countries;  // unique, first-seen order

  bool has_country(const std::string& country) const;
  std::size_t articles_for(const std::string& country) const;
};

// Manifest format: one `country<TAB>path` line per entry. Paths are resolved
// relative to the manifest's directory. Every listed file is opened to count
// its articles, so missing files fail here rather than mid-pipeline.
CorpusManifest load_manifest(const std::filesystem::path& path);

// Yields articles for one country in file order (files in manifest order).
// The sink sees each article exactly once; parse failures abort with the
// offending path and line number.
void stream_articles(const CorpusManifest& manifest, const std::string& country,
                     const std::function<void(const Article&)>& sink);

std::vector<Article> read_articles(const CorpusManifest& manifest, const std::string& country);

// Drops countries whose article count is below min_articles. Excluded
// countries are returned so callers can report them.
CorpusManifest filter_min_articles(const CorpusManifest& manifest, std::size_t min_articles,
                                   std::vector<std::string>* excluded = nullptr);

struct CountryStats {
  std::string country;
  std::size_t articles = 0;
  std::size_t words = 0;
  double pct_articles = 0.0;
  double pct_words = 0.0;
};

struct CorpusStats {
  std::vector<CountryStats> rows;  // manifest country order
  std::size_t total_articles = 0;
  std::size_t total_words = 0;
};

// Article counts come from the manifest; word counts (post-tokenization) are
// supplied per country by the preprocessing stage.
CorpusStats corpus_stats(const CorpusManifest& manifest,
                         const std::map<std::string, std::size_t>& words_per_country);

// CSV: country,articles,words,pct_articles,pct_words with a final total row.
// Percentages are rounded to two decimals for display only.
void write_stats_csv(const CorpusStats& stats, std::ostream& out);

}  // namespace peacetext

#endif  // PEACETEXT_CORPUS_HPP
