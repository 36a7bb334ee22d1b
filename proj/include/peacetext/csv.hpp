#ifndef PEACETEXT_CSV_HPP
#define PEACETEXT_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

namespace peacetext::csv {

// Quotes a field if it contains a comma, quote, or newline.
std::string escape(std::string_view field);

std::string join(const std::vector<std::string>& fields);

// Splits one CSV line, honoring quoted fields. Throws DataError on an
// unterminated quote.
std::vector<std::string> split(std::string_view line);

// Shortest representation that round-trips the exact double value.
std::string format_double(double v);

// Fixed-point with the given number of decimals (table display format).
std::string format_fixed(double v, int decimals);

double parse_double(std::string_view field);

}  // namespace peacetext::csv

#endif  // PEACETEXT_CSV_HPP
