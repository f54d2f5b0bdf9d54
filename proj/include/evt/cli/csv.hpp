#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace evt::cli {

/// Shortest decimal that round-trips to the same double; locale independent.
/// Non-finite values are written as nan, inf, -inf.
[[nodiscard]] std::string format_double(double v);

using CsvCell = std::variant<std::uint64_t, double, std::string>;

/// Comma-separated rows with a header line. Strings are written verbatim;
/// callers keep commas and quotes out of them.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string>& columns);
  void row(const std::vector<CsvCell>& cells);
  /// A trailing "# ..." line, used to flag partial output.
  void comment(const std::string& text);

 private:
  std::ostream& out_;
  std::size_t columns_ = 0;
};

}  // namespace evt::cli
