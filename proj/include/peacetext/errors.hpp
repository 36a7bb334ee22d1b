#ifndef PEACETEXT_ERRORS_HPP
#define PEACETEXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace peacetext {

// Exit-code mapping used by the CLI: usage=1, data=2, numeric=3.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace peacetext

#endif  // PEACETEXT_ERRORS_HPP
