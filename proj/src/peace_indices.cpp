#include "peacetext/peace_indices.hpp"

#include <algorithm>
#include <cmath>

#include "peacetext/csv.hpp"
#include "peacetext/errors.hpp"

namespace peacetext {

std::vector<IndexDescriptor> default_index_descriptors() {
  return {
      {"GPI", 1.0, 5.0, IndexDirection::lower_raw_is_more_peaceful},
      {"PPI", 1.0, 5.0, IndexDirection::lower_raw_is_more_peaceful},
      {"WHI", 0.0, 10.0, IndexDirection::higher_raw_is_more_peaceful},
      {"FSI", 0.0, 120.0, IndexDirection::lower_raw_is_more_peaceful},
      {"HDI", 0.0, 1.0, IndexDirection::higher_raw_is_more_peaceful},
  };
}

PeaceIndexTable load_index_csv(std::istream& in, const std::vector<IndexDescriptor>& descriptors) {
  PeaceIndexTable table;
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty index CSV");
  auto header = csv::split(line);
  if (header.empty() || header[0] != "country") {
    throw DataError("index CSV must start with a 'country,...' header");
  }
  std::vector<const IndexDescriptor*> columns;
  for (std::size_t j = 1; j < header.size(); ++j) {
    auto it = std::find_if(descriptors.begin(), descriptors.end(),
                           [&](const IndexDescriptor& d) { return d.name == header[j]; });
    if (it == descriptors.end()) throw DataError("unknown index column: '" + header[j] + "'");
    columns.push_back(&*it);
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = csv::split(line);
    if (fields.size() != header.size()) {
      throw DataError("index CSV line " + std::to_string(line_no) + ": expected " +
                      std::to_string(header.size()) + " fields");
    }
    const std::string& country = fields[0];
    if (country.empty()) throw DataError("index CSV line " + std::to_string(line_no) + ": empty country");
    if (table.values.count(country)) {
      throw DataError("index CSV line " + std::to_string(line_no) + ": duplicate country " + country);
    }
    table.countries.push_back(country);
    auto& row = table.values[country];
    for (std::size_t j = 1; j < fields.size(); ++j) {
      if (fields[j].empty()) continue;  // missing value
      const IndexDescriptor& d = *columns[j - 1];
      double v = csv::parse_double(fields[j]);
      if (v < d.raw_min || v > d.raw_max) {
        throw DataError(country + " " + d.name + " value " + fields[j] + " outside raw range [" +
                        csv::format_double(d.raw_min) + ", " + csv::format_double(d.raw_max) + "]");
      }
      row[d.name] = v;
    }
  }
  if (table.countries.empty()) throw DataError("index CSV has no data rows");
  return table;
}

std::map<std::string, double> scale_index(const std::map<std::string, double>& values,
                                          const IndexDescriptor& descriptor) {
  if (values.size() < 2) {
    throw DataError("index " + descriptor.name + ": need at least 2 countries to scale");
  }
  double min = values.begin()->second, max = values.begin()->second;
  for (const auto& [country, v] : values) {
    if (v < descriptor.raw_min || v > descriptor.raw_max) {
      throw DataError(country + " " + descriptor.name + " value outside raw range");
    }
    min = std::min(min, v);
    max = std::max(max, v);
  }
  if (min == max) {
    throw NumericError("index " + descriptor.name + ": all values equal, cannot scale");
  }
  std::map<std::string, double> scaled;
  for (const auto& [country, v] : values) {
    double s = descriptor.direction == IndexDirection::higher_raw_is_more_peaceful
                   ? 100.0 * (v - min) / (max - min)
                   : 100.0 * (max - v) / (max - min);
    scaled[country] = s;
  }
  return scaled;
}

ScaledIndexTable scale_all(const PeaceIndexTable& table,
                           const std::vector<IndexDescriptor>& descriptors) {
  ScaledIndexTable scaled;
  scaled.countries = table.countries;
  for (const auto& d : descriptors) {
    std::map<std::string, double> values;
    for (const auto& [country, row] : table.values) {
      auto it = row.find(d.name);
      if (it != row.end()) values[country] = it->second;
    }
    if (values.empty()) continue;
    for (const auto& [country, s] : scale_index(values, d)) {
      scaled.values[country][d.name] = s;
    }
  }
  return scaled;
}

std::map<std::string, TertileGroup> tertile_groups(const std::map<std::string, double>& scaled) {
  if (scaled.size() < 3) throw DataError("tertile grouping needs at least 3 countries");
  std::vector<std::pair<double, std::string>> order;
  order.reserve(scaled.size());
  for (const auto& [country, v] : scaled) order.emplace_back(v, country);
  std::sort(order.begin(), order.end());  // value ascending, ties by country code
  const std::size_t n = order.size();
  const std::size_t outer = (n + 2) / 3;  // ceil(n/3)
  std::map<std::string, TertileGroup> groups;
  for (std::size_t i = 0; i < n; ++i) {
    TertileGroup g = TertileGroup::middle;
    if (i < outer) g = TertileGroup::low;
    else if (i >= n - outer) g = TertileGroup::high;
    groups[order[i].second] = g;
  }
  return groups;
}

std::string to_string(CountryClass c) {
  switch (c) {
    case CountryClass::lower: return "lower";
    case CountryClass::higher: return "higher";
    case CountryClass::intermediate: return "intermediate";
  }
  return "?";
}

CountryClass country_class_from_string(const std::string& s) {
  if (s == "0" || s == "lower") return CountryClass::lower;
  if (s == "1" || s == "higher") return CountryClass::higher;
  if (s == "2" || s == "intermediate") return CountryClass::intermediate;
  throw DataError("unknown class label: '" + s + "'");
}

std::map<std::string, CountryClass> assign_classes(
    const std::map<std::string, std::map<std::string, TertileGroup>>& groups_by_index,
    const std::vector<std::string>& countries) {
  std::map<std::string, CountryClass> classes;
  for (const auto& country : countries) {
    int low = 0, high = 0;
    for (const auto& [index_name, groups] : groups_by_index) {
      auto it = groups.find(country);
      if (it == groups.end()) continue;
      if (it->second == TertileGroup::low) ++low;
      else if (it->second == TertileGroup::high) ++high;
    }
    CountryClass c = CountryClass::intermediate;
    if (low >= 3) c = CountryClass::lower;
    else if (high >= 3) c = CountryClass::higher;
    classes[country] = c;
  }
  return classes;
}

std::map<std::string, CountryClass> load_labels_csv(std::istream& in) {
  std::map<std::string, CountryClass> classes;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = csv::split(line);
    if (line_no == 1 && fields.size() >= 2 && fields[0] == "country") continue;  // optional header
    if (fields.size() != 2) throw DataError("labels line " + std::to_string(line_no) + ": expected country,class");
    if (classes.count(fields[0])) {
      throw DataError("labels line " + std::to_string(line_no) + ": duplicate country " + fields[0]);
    }
    classes[fields[0]] = country_class_from_string(fields[1]);
  }
  if (classes.empty()) throw DataError("empty labels file");
  return classes;
}

void write_scaled_csv(const ScaledIndexTable& table, const std::vector<IndexDescriptor>& descriptors,
                      std::ostream& out) {
  std::vector<std::string> header{"country"};
  for (const auto& d : descriptors) header.push_back(d.name);
  out << csv::join(header) << "\n";
  for (const auto& country : table.countries) {
    std::vector<std::string> fields{country};
    auto row = table.values.find(country);
    for (const auto& d : descriptors) {
      if (row != table.values.end()) {
        auto it = row->second.find(d.name);
        fields.push_back(it != row->second.end() ? csv::format_fixed(it->second, 2) : "");
      } else {
        fields.push_back("");
      }
    }
    out << csv::join(fields) << "\n";
  }
}

ScaledIndexTable read_scaled_csv(std::istream& in) {
  ScaledIndexTable table;
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty scaled index CSV");
  auto header = csv::split(line);
  if (header.empty() || header[0] != "country") {
    throw DataError("scaled index CSV must start with a 'country,...' header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = csv::split(line);
    if (fields.size() != header.size()) throw DataError("malformed scaled index row: " + line);
    table.countries.push_back(fields[0]);
    for (std::size_t j = 1; j < fields.size(); ++j) {
      if (fields[j].empty()) continue;
      table.values[fields[0]][header[j]] = csv::parse_double(fields[j]);
    }
  }
  return table;
}

namespace {
std::string group_name(TertileGroup g) {
  switch (g) {
    case TertileGroup::low: return "low";
    case TertileGroup::middle: return "mid";
    case TertileGroup::high: return "high";
  }
  return "?";
}
}  // namespace

void write_groups_csv(const ScaledIndexTable& table,
                      const std::map<std::string, std::map<std::string, TertileGroup>>& groups_by_index,
                      const std::map<std::string, CountryClass>& classes,
                      const std::vector<IndexDescriptor>& descriptors, std::ostream& out) {
  std::vector<std::string> header{"country"};
  for (const auto& d : descriptors) header.push_back(d.name);
  header.push_back("class");
  out << csv::join(header) << "\n";
  for (const auto& country : table.countries) {
    std::vector<std::string> fields{country};
    for (const auto& d : descriptors) {
      auto by_index = groups_by_index.find(d.name);
      std::string cell;
      if (by_index != groups_by_index.end()) {
        auto it = by_index->second.find(country);
        if (it != by_index->second.end()) cell = group_name(it->second);
      }
      fields.push_back(cell);
    }
    fields.push_back(std::to_string(static_cast<int>(classes.at(country))));
    out << csv::join(fields) << "\n";
  }
}

void write_classes_csv(const std::map<std::string, CountryClass>& classes,
                       const std::vector<std::string>& countries, std::ostream& out) {
  out << "country,class\n";
  for (const auto& country : countries) {
    out << csv::join({country, std::to_string(static_cast<int>(classes.at(country)))}) << "\n";
  }
}

}  // namespace peacetext
