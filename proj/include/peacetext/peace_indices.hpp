#ifndef PEACETEXT_PEACE_INDICES_HPP
#define PEACETEXT_PEACE_INDICES_HPP

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace peacetext {

enum class IndexDirection { lower_raw_is_more_peaceful, higher_raw_is_more_peaceful };

struct IndexDescriptor {
  std::string name;
  double raw_min = 0.0;
  double raw_max = 0.0;
  IndexDirection direction = IndexDirection::higher_raw_is_more_peaceful;
};

// GPI 1-5 (lower better), PPI 1-5 (lower better), WHI 0-10 (higher better),
// FSI 0-120 (lower better), HDI 0-1 (higher better).
std::vector<IndexDescriptor> default_index_descriptors();

// country -> index name -> raw average value; missing entries simply absent.
struct PeaceIndexTable {
  std::vector<std::string> countries;  // input order
  std::map<std::string, std::map<std::string, double>> values;
};

struct ScaledIndexTable {
  std::vector<std::string> countries;
  std::map<std::string, std::map<std::string, double>> values;  // in [0,100]
};

// CSV `country,GPI,PPI,WHI,FSI,HDI`; blank cells mean the index is missing
// for that country. Values are range-checked against the descriptors.
PeaceIndexTable load_index_csv(std::istream& in, const std::vector<IndexDescriptor>& descriptors);

// 100*(x-min)/(max-min) for higher-is-more-peaceful indices and
// 100*(max-x)/(max-min) for inverted ones, min/max over the supplied
// countries only. Throws on fewer than two values or max == min.
std::map<std::string, double> scale_index(const std::map<std::string, double>& values,
                                          const IndexDescriptor& descriptor);

ScaledIndexTable scale_all(const PeaceIndexTable& table,
                           const std::vector<IndexDescriptor>& descriptors);

enum class TertileGroup { low, middle, high };

// Sort ascending (ties by country code); the first ceil(n/3) countries form
// the low group, the last ceil(n/3) the high group, the rest the middle.
std::map<std::string, TertileGroup> tertile_groups(const std::map<std::string, double>& scaled);

enum class CountryClass : int { lower = 0, higher = 1, intermediate = 2 };

std::string to_string(CountryClass c);
CountryClass country_class_from_string(const std::string& s);

// Majority vote: Lower with >= 3 indices in the low group, Higher with >= 3
// in the high group, Intermediate otherwise. Missing indices never count.
std::map<std::string, CountryClass> assign_classes(
    const std::map<std::string, std::map<std::string, TertileGroup>>& groups_by_index,
    const std::vector<std::string>& countries);

// Labels file: CSV `country,class` where class is 0/1/2 or
// lower/higher/intermediate.
std::map<std::string, CountryClass> load_labels_csv(std::istream& in);

void write_scaled_csv(const ScaledIndexTable& table, const std::vector<IndexDescriptor>& descriptors,
                      std::ostream& out);
void write_groups_csv(const ScaledIndexTable& table,
                      const std::map<std::string, std::map<std::string, TertileGroup>>& groups_by_index,
                      const std::map<std::string, CountryClass>& classes,
                      const std::vector<IndexDescriptor>& descriptors, std::ostream& out);
void write_classes_csv(const std::map<std::string, CountryClass>& classes,
                       const std::vector<std::string>& countries, std::ostream& out);

ScaledIndexTable read_scaled_csv(std::istream& in);

}  // namespace peacetext

#endif  // PEACETEXT_PEACE_INDICES_HPP
