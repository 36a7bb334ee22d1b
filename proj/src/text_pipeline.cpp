#include "peacetext/text_pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>

#include "peacetext/errors.hpp"

namespace peacetext {

namespace {

bool is_ascii_letter(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ascii_digit(unsigned char c) { return c >= '0' && c <= '9'; }

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool all_lower_letters(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return c >= 'a' && c <= 'z'; });
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<std::string> read_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open word list: " + path.string());
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    auto w = trim(line);
    if (!w.empty()) words.push_back(std::move(w));
  }
  return words;
}

// Splits a text into trimmed, non-empty paragraphs on blank lines.
std::vector<std::string> split_paragraphs(const std::string& text) {
  std::vector<std::string> paragraphs;
  std::string cur;
  std::size_t i = 0;
  auto flush = [&] {
    auto p = trim(cur);
    if (!p.empty()) paragraphs.push_back(std::move(p));
    cur.clear();
  };
  while (i < text.size()) {
    if (text[i] == '\n') {
      // blank line (possibly with spaces) ends the paragraph
      std::size_t j = i + 1;
      while (j < text.size() && (text[j] == ' ' || text[j] == '\t' || text[j] == '\r')) ++j;
      if (j < text.size() && text[j] == '\n') {
        flush();
        i = j + 1;
        continue;
      }
    }
    cur += text[i];
    ++i;
  }
  flush();
  return paragraphs;
}

}  // namespace

void FilterConfig::validate() const {
  if (!(boilerplate_threshold > 0.0 && boilerplate_threshold <= 1.0)) {
    throw DataError("boilerplate threshold must be in (0,1]");
  }
  for (const auto& w : stopwords) {
    if (w != to_lower(w)) throw DataError("stopword not lowercase: '" + w + "'");
  }
  for (const auto& w : gazetteer) {
    if (w != to_lower(w)) throw DataError("gazetteer entry not lowercase: '" + w + "'");
  }
  for (const auto& [surface, lemma] : lemma_map) {
    if (surface.empty() || !all_lower_letters(lemma)) {
      throw DataError("lemma map entry '" + surface + "' -> '" + lemma +
                      "' (lemmas must be lowercase letters)");
    }
  }
}

FilterConfig load_filter_config(const std::filesystem::path& stopwords_path,
                                const std::filesystem::path& gazetteer_path,
                                const std::filesystem::path& lemma_map_path,
                                double boilerplate_threshold, bool entity_heuristic) {
  FilterConfig config;
  config.boilerplate_threshold = boilerplate_threshold;
  config.entity_heuristic = entity_heuristic;
  for (auto& w : read_word_list(stopwords_path)) config.stopwords.insert(to_lower(w));
  for (auto& w : read_word_list(gazetteer_path)) config.gazetteer.insert(to_lower(w));

  std::ifstream in(lemma_map_path);
  if (!in) throw DataError("cannot open lemma map: " + lemma_map_path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError(lemma_map_path.string() + ":" + std::to_string(line_no) +
                      ": expected surface<TAB>lemma");
    }
    auto surface = to_lower(trim(line.substr(0, tab)));
    auto lemma = to_lower(trim(line.substr(tab + 1)));
    if (surface.empty() || lemma.empty()) {
      throw DataError(lemma_map_path.string() + ":" + std::to_string(line_no) + ": empty field");
    }
    config.lemma_map[surface] = lemma;
  }
  // Compose chains (a->b, b->c becomes a->c) so the map is idempotent.
  for (auto& [surface, lemma] : config.lemma_map) {
    std::size_t hops = 0;
    auto it = config.lemma_map.find(lemma);
    while (it != config.lemma_map.end() && it->second != lemma && hops < config.lemma_map.size()) {
      lemma = it->second;
      it = config.lemma_map.find(lemma);
      ++hops;
    }
  }
  config.validate();
  return config;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::string cur;
  bool cur_has_digit = false;
  std::size_t position = 0;
  bool next_is_sentence_start = true;

  auto flush = [&] {
    if (!cur.empty()) {
      if (!cur_has_digit && cur.size() >= 2) {
        Token t;
        t.surface = cur;
        t.lemma = to_lower(cur);
        t.position = position++;
        t.sentence_start = next_is_sentence_start;
        next_is_sentence_start = false;
        tokens.push_back(std::move(t));
      }
      cur.clear();
      cur_has_digit = false;
    }
  };

  for (unsigned char c : text) {
    if (is_ascii_letter(c) || is_ascii_digit(c)) {
      if (is_ascii_digit(c)) cur_has_digit = true;
      cur += static_cast<char>(c);
    } else {
      flush();
      if (c == '.' || c == '!' || c == '?') next_is_sentence_start = true;
    }
  }
  flush();
  return tokens;
}

std::vector<std::string> strip_boilerplate(const std::vector<std::string>& texts, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) throw DataError("boilerplate threshold must be in (0,1]");
  if (texts.size() < 2) return texts;

  std::map<std::string, std::size_t> article_count;  // paragraph -> #articles containing it
  for (const auto& text : texts) {
    std::set<std::string> distinct;
    for (auto& p : split_paragraphs(text)) distinct.insert(std::move(p));
    for (const auto& p : distinct) ++article_count[p];
  }
  const double cutoff = threshold * static_cast<double>(texts.size());

  std::vector<std::string> cleaned;
  cleaned.reserve(texts.size());
  for (const auto& text : texts) {
    std::string out;
    for (auto& p : split_paragraphs(text)) {
      if (static_cast<double>(article_count[p]) > cutoff) continue;
      if (!out.empty()) out += "\n\n";
      out += p;
    }
    cleaned.push_back(std::move(out));
  }
  return cleaned;
}

std::string lemmatize(const std::string& lower_surface, const FilterConfig& config) {
  auto it = config.lemma_map.find(lower_surface);
  if (it != config.lemma_map.end()) return it->second;
  const std::string& w = lower_surface;
  if (ends_with(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
  if (ends_with(w, "sses")) return w.substr(0, w.size() - 2);
  // e-insertion plurals: boxes, churches, dishes, heroes, quizzes
  if (w.size() > 3 && (ends_with(w, "xes") || ends_with(w, "ches") || ends_with(w, "shes") ||
                       ends_with(w, "oes") || ends_with(w, "zes"))) {
    return w.substr(0, w.size() - 2);
  }
  if (w.size() > 3 && w.back() == 's' && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is")) {
    return w.substr(0, w.size() - 1);
  }
  return w;
}

std::vector<Token> filter_tokens(std::vector<Token> tokens, const FilterConfig& config) {
  std::vector<Token> kept;
  kept.reserve(tokens.size());
  for (auto& token : tokens) {
    if (config.stopwords.count(token.lemma)) continue;
    const std::string lower_surface = to_lower(token.surface);
    if (config.gazetteer.count(lower_surface)) continue;
    if (config.entity_heuristic && !token.sentence_start &&
        std::isupper(static_cast<unsigned char>(token.surface.front()))) {
      continue;
    }
    std::string lemma = lemmatize(lower_surface, config);
    if (lemma.empty() || config.stopwords.count(lemma) || config.gazetteer.count(lemma)) continue;
    token.lemma = std::move(lemma);
    kept.push_back(std::move(token));
  }
  return kept;
}

std::vector<std::string> preprocess(std::string_view text, const FilterConfig& config) {
  auto tokens = filter_tokens(tokenize(text), config);
  std::vector<std::string> lemmas;
  lemmas.reserve(tokens.size());
  for (auto& t : tokens) lemmas.push_back(std::move(t.lemma));
  return lemmas;
}

std::vector<std::vector<std::string>> preprocess_articles(const std::vector<Article>& articles,
                                                          const FilterConfig& config) {
  std::vector<std::string> texts(articles.size());
  std::map<std::string, std::vector<std::size_t>> by_source;
  for (std::size_t i = 0; i < articles.size(); ++i) {
    texts[i] = articles[i].text;
    if (!articles[i].source.empty()) by_source[articles[i].source].push_back(i);
  }
  for (const auto& [source, indices] : by_source) {
    if (indices.size() < 2) continue;
    std::vector<std::string> group;
    group.reserve(indices.size());
    for (auto i : indices) group.push_back(texts[i]);
    auto cleaned = strip_boilerplate(group, config.boilerplate_threshold);
    for (std::size_t j = 0; j < indices.size(); ++j) texts[indices[j]] = std::move(cleaned[j]);
  }

  std::vector<std::vector<std::string>> lemmas(articles.size());
  for (std::size_t i = 0; i < articles.size(); ++i) {
    lemmas[i] = preprocess(texts[i], config);
  }
  return lemmas;
}

}  // namespace peacetext
