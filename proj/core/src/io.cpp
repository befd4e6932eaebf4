#include "tsirelson/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "tsirelson/errors.hpp"

namespace tsirelson::io {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(trim(line.substr(0, hash)));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

[[noreturn]] void line_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

Pos parse_pos(std::string_view token) {
  Scalar v = parse_scalar(token);
  if (v.get_den() != 1) throw Error(ErrorKind::Parse, "position '" + std::string(token) + "' is not an integer");
  if (!v.get_num().fits_slong_p()) throw Error(ErrorKind::Parse, "position '" + std::string(token) + "' too large");
  return static_cast<Pos>(v.get_num().get_si());
}

std::vector<std::string> split_numbers(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

}  // namespace

FinVec parse_vector(std::string_view text) {
  FinVec x;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  std::optional<Pos> last;
  while (std::getline(in, raw)) {
    ++line;
    std::string body = strip_comment(raw);
    if (body.empty()) continue;
    std::istringstream fields(body);
    std::string pos_text, value_text, extra;
    if (!(fields >> pos_text >> value_text)) line_error(line, "expected 'position value'");
    if (fields >> extra) line_error(line, "unexpected '" + extra + "'");
    Pos p;
    Scalar v;
    try {
      p = parse_pos(pos_text);
      v = parse_scalar(value_text);
    } catch (const Error& e) {
      line_error(line, e.what());
    }
    if (p < 1) line_error(line, "positions start at 1");
    if (last && p <= *last) line_error(line, "positions must strictly increase");
    if (v == 0) line_error(line, "values must be nonzero");
    x.set(p, v);
    last = p;
  }
  return x;
}

FinVec read_vector_file(const std::string& path) {
  try {
    return parse_vector(slurp(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.message());
  }
}

std::string format_vector(const FinVec& x) {
  std::ostringstream out;
  for (const auto& [p, v] : x.entries()) out << p << ' ' << to_exact_string(v) << '\n';
  return out.str();
}

FinSet parse_set(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw Error(ErrorKind::Parse, "unbalanced braces in '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Pos> elements;
  for (const auto& token : split_numbers(body)) {
    Pos p = parse_pos(token);
    if (p < 1) throw Error(ErrorKind::Parse, "set elements start at 1");
    elements.push_back(p);
  }
  return FinSet(std::move(elements));
}

SetSequence parse_sequence(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw Error(ErrorKind::Parse, "unbalanced brackets in '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<FinSet> sets;
  std::size_t i = 0;
  while (i < body.size()) {
    if (body[i] == '{') {
      auto close = body.find('}', i);
      if (close == std::string_view::npos) throw Error(ErrorKind::Parse, "unclosed '{' in sequence");
      sets.push_back(parse_set(body.substr(i, close - i + 1)));
      i = close + 1;
    } else if (body[i] == ',' || std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
    } else {
      throw Error(ErrorKind::Parse, "expected '{' in sequence at offset " + std::to_string(i));
    }
  }
  for (const auto& s : sets) {
    if (s.empty()) throw Error(ErrorKind::Parse, "sequence sets must be nonempty");
  }
  if (!SetSequence::is_successive(sets)) throw Error(ErrorKind::Parse, "sequence sets are not successive");
  return SetSequence(std::move(sets));
}

std::string format_set(const FinSet& set) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < set.size(); ++i) out << (i ? "," : "") << set.elements()[i];
  out << '}';
  return out.str();
}

std::string format_value(const Scalar& v) { return to_exact_string(v) + " (" + to_decimal_string(v) + ")"; }

Config Config::parse(std::string_view text) {
  Config c;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string body = strip_comment(raw);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos) line_error(line, "expected 'key = value'");
    std::string key(trim(std::string_view(body).substr(0, eq)));
    std::string value(trim(std::string_view(body).substr(eq + 1)));
    if (key.empty()) line_error(line, "empty key");
    if (!c.values_.emplace(key, value).second) line_error(line, "duplicate key '" + key + "'");
  }
  return c;
}

Config Config::read_file(const std::string& path) {
  try {
    return parse(slurp(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.message());
  }
}

std::string Config::get(const std::string& key, const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

long Config::get_int(const std::string& key, long fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  Scalar v = parse_scalar(it->second);
  if (v.get_den() != 1 || !v.get_num().fits_slong_p()) {
    throw Error(ErrorKind::Parse, "key '" + key + "' needs an integer, got '" + it->second + "'");
  }
  return v.get_num().get_si();
}

Scalar Config::get_scalar(const std::string& key, const Scalar& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : parse_scalar(it->second);
}

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows) {
  out << "experiment,n,j,value_exact,value_decimal,d,ratio\n";
  for (const auto& r : rows) {
    out << r.experiment << ',' << r.n << ',' << r.j << ',' << to_exact_string(r.value) << ','
        << to_decimal_string(r.value) << ',' << (r.d ? to_exact_string(*r.d) : "") << ','
        << (r.ratio ? to_exact_string(*r.ratio) : "") << '\n';
  }
}

}  // namespace tsirelson::io
