#include "peacetext/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "peacetext/csv.hpp"
#include "peacetext/errors.hpp"

namespace peacetext {

namespace {

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

std::size_t count_article_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open article file: " + path.string());
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!is_blank(line)) ++n;
  }
  return n;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Article parse_article_line(const std::string& line, const std::string& expected_country,
                           const std::filesystem::path& path, std::size_t line_no) {
  const std::string where = path.string() + ":" + std::to_string(line_no);
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(where + ": invalid JSON: " + e.what());
  }
  if (!obj.is_object()) throw DataError(where + ": article line is not a JSON object");
  Article a;
  for (const auto& [key, value] : obj.items()) {
    if (key == "country") a.country = value.get<std::string>();
    else if (key == "text") a.text = value.get<std::string>();
    else if (key == "source") a.source = value.get<std::string>();
    else if (key == "date") a.date = value.get<std::string>();
    else throw DataError(where + ": unknown field '" + key + "'");
  }
  if (a.country.empty()) throw DataError(where + ": missing or empty 'country'");
  if (a.country != expected_country) {
    throw DataError(where + ": article country '" + a.country + "' does not match manifest country '" +
                    expected_country + "'");
  }
  if (trim(a.text).empty()) throw DataError(where + ": empty 'text'");
  return a;
}

}  // namespace

bool CorpusManifest::has_country(const std::string& country) const {
  return std::find(countries.begin(), countries.end(), country) != countries.end();
}

std::size_t CorpusManifest::articles_for(const std::string& country) const {
  std::size_t n = 0;
  for (const auto& e : entries) {
    if (e.country == country) n += e.article_count;
  }
  return n;
}

CorpusManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open manifest: " + path.string());
  const auto base = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");

  CorpusManifest manifest;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    const auto where = path.string() + ":" + std::to_string(line_no);
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == '\t') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r') {
      fields.back().pop_back();
    }
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw DataError(where + ": malformed manifest line (expected country<TAB>path)");
    }
    const std::string& country = fields[0];
    const std::string& rel = fields[1];
    if (!seen.insert({country, rel}).second) {
      throw DataError(where + ": duplicate entry (" + country + ", " + rel + ")");
    }
    ManifestEntry entry;
    entry.country = country;
    entry.path = std::filesystem::path(rel).is_absolute() ? std::filesystem::path(rel) : base / rel;
    if (!std::filesystem::exists(entry.path)) {
      throw DataError(where + ": article file does not exist: " + entry.path.string());
    }
    entry.article_count = count_article_lines(entry.path);
    if (!manifest.has_country(country)) manifest.countries.push_back(country);
    manifest.entries.push_back(std::move(entry));
  }
  if (manifest.entries.empty()) throw DataError("empty manifest: " + path.string());
  return manifest;
}

void stream_articles(const CorpusManifest& manifest, const std::string& country,
                     const std::function<void(const Article&)>& sink) {
  if (!manifest.has_country(country)) throw DataError("unknown country: " + country);
  for (const auto& entry : manifest.entries) {
    if (entry.country != country) continue;
    std::ifstream in(entry.path);
    if (!in) throw DataError("cannot open article file: " + entry.path.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (is_blank(line)) continue;
      sink(parse_article_line(line, country, entry.path, line_no));
    }
  }
}

std::vector<Article> read_articles(const CorpusManifest& manifest, const std::string& country) {
  std::vector<Article> out;
  stream_articles(manifest, country, [&](const Article& a) { out.push_back(a); });
  return out;
}

CorpusManifest filter_min_articles(const CorpusManifest& manifest, std::size_t min_articles,
                                   std::vector<std::string>* excluded) {
  CorpusManifest kept;
  for (const auto& country : manifest.countries) {
    if (manifest.articles_for(country) >= min_articles) {
      kept.countries.push_back(country);
    } else if (excluded) {
      excluded->push_back(country);
    }
  }
  for (const auto& entry : manifest.entries) {
    if (kept.has_country(entry.country)) kept.entries.push_back(entry);
  }
  return kept;
}

CorpusStats corpus_stats(const CorpusManifest& manifest,
                         const std::map<std::string, std::size_t>& words_per_country) {
  CorpusStats stats;
  for (const auto& country : manifest.countries) {
    auto it = words_per_country.find(country);
    if (it == words_per_country.end()) {
      throw DataError("no token count supplied for country: " + country);
    }
    CountryStats row;
    row.country = country;
    row.articles = manifest.articles_for(country);
    row.words = it->second;
    stats.rows.push_back(row);
    stats.total_articles += row.articles;
    stats.total_words += row.words;
  }
  if (stats.total_words == 0) throw DataError("corpus has zero total words");
  for (auto& row : stats.rows) {
    row.pct_articles = 100.0 * static_cast<double>(row.articles) / static_cast<double>(stats.total_articles);
    row.pct_words = 100.0 * static_cast<double>(row.words) / static_cast<double>(stats.total_words);
  }
  return stats;
}

void write_stats_csv(const CorpusStats& stats, std::ostream& out) {
  out << "country,articles,words,pct_articles,pct_words\n";
  for (const auto& row : stats.rows) {
    out << csv::join({row.country, std::to_string(row.articles), std::to_string(row.words),
                      csv::format_fixed(row.pct_articles, 2), csv::format_fixed(row.pct_words, 2)})
        << "\n";
  }
  out << csv::join({"total", std::to_string(stats.total_articles), std::to_string(stats.total_words),
                    "100.00", "100.00"})
      << "\n";
}

}  // namespace peacetext
