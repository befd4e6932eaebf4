#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsirelson/schreier.hpp"
#include "tsirelson/vector.hpp"

namespace tsirelson::io {

/// Vector file: "position value" lines, '#' comments, blank lines ignored.
/// Positions strictly increase and values are nonzero. Errors name the line.
FinVec parse_vector(std::string_view text);
FinVec read_vector_file(const std::string& path);
std::string format_vector(const FinVec& x);

/// "{2,3,4}", "2,3,4" or "2 3 4".
FinSet parse_set(std::string_view text);
/// "[{2},{3,4}]" or "{2} {3,4}".
SetSequence parse_sequence(std::string_view text);
std::string format_set(const FinSet& set);

/// "3/2 (1.5)".
std::string format_value(const Scalar& v);

/// "key = value" lines with '#' comments.
class Config {
 public:
  static Config parse(std::string_view text);
  static Config read_file(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::string get(const std::string& key, const std::string& fallback) const;
  long get_int(const std::string& key, long fallback) const;
  Scalar get_scalar(const std::string& key, const Scalar& fallback) const;
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

struct CsvRow {
  std::string experiment;
  int n = 0;
  int j = 0;
  Scalar value;
  std::optional<Scalar> d;  // empty cells when not applicable
  std::optional<Scalar> ratio;
};

/// Header "experiment,n,j,value_exact,value_decimal,d,ratio".
void write_csv(std::ostream& out, const std::vector<CsvRow>& rows);

}  // namespace tsirelson::io
