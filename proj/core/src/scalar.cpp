#include "tsirelson/scalar.hpp"

#include <cctype>
#include <string>

#include "tsirelson/errors.hpp"

namespace tsirelson {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::SupportTooLarge: return "SupportTooLarge";
    case ErrorKind::InvalidDef: return "InvalidDef";
    case ErrorKind::BadTree: return "BadTree";
    case ErrorKind::Exhausted: return "Exhausted";
    case ErrorKind::InsufficientBasis: return "InsufficientBasis";
    case ErrorKind::EpsilonTooSmallForBudget: return "EpsilonTooSmallForBudget";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnverifiedUnconditionality: return "UnverifiedUnconditionality";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Domain: return "DomainError";
  }
  return "Error";
}

const char* to_string(BadTreeReason reason) {
  switch (reason) {
    case BadTreeReason::NonSuccessive: return "non-successive children";
    case BadTreeReason::NotAPartition: return "children do not partition node";
    case BadTreeReason::AdmissibilityViolation: return "admissibility violation";
    case BadTreeReason::WrongTerminalLevel: return "wrong terminal level";
    case BadTreeReason::LeafValueMismatch: return "leaf value mismatch";
    case BadTreeReason::Malformed: return "malformed tree";
  }
  return "bad tree";
}

Scalar pow2(int exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Scalar(p);
  Scalar r(mpz_class(1), p);
  r.canonicalize();
  return r;
}

Scalar pow(const Scalar& base, int exponent) {
  Scalar result(1);
  Scalar b = exponent < 0 ? Scalar(1 / base) : base;
  for (int e = exponent < 0 ? -exponent : exponent; e > 0; e >>= 1) {
    if (e & 1) result *= b;
    b *= b;
  }
  return result;
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view t = trim(text);
  std::size_t slash = t.find('/');
  std::string_view num = slash == std::string_view::npos ? t : t.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorKind::Parse, "not an exact rational: '" + std::string(text) + "'");
  }
  std::string n(num[0] == '+' ? num.substr(1) : num);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorKind::Parse, "zero denominator: '" + std::string(text) + "'");
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

std::string to_exact_string(const Scalar& value) { return value.get_str(10); }

std::string to_decimal_string(const Scalar& value, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Scalar magnitude = abs(value) * scale + Scalar(1, 2);
  mpz_class rounded = magnitude.get_num() / magnitude.get_den();  // floor, nonnegative
  std::string body = rounded.get_str(10);
  if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string integer_part = body.substr(0, body.size() - digits);
  std::string fraction = body.substr(body.size() - digits);
  while (!fraction.empty() && fraction.back() == '0') fraction.pop_back();
  std::string out = (value < 0 && rounded != 0) ? "-" : "";
  out += integer_part;
  if (!fraction.empty()) out += "." + fraction;
  return out;
}

}  // namespace tsirelson
