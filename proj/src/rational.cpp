#include "lp01/rational.hpp"

#include <stdexcept>

#include "lp01/errors.hpp"

namespace lp01 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSingular: return "Singular";
    case ErrorCode::kUnbounded: return "Unbounded";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kCycleSuspected: return "CycleSuspected";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kConePropertyViolated: return "ConePropertyViolated";
    case ErrorCode::kNondegenerateEscape: return "NondegenerateEscape";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational component");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad rational: " + std::string(text));
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("bad rational: " + std::string(text));
      }
    }
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return make_rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Rational dot(const RatVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) s += a[i] * static_cast<long>(b[i]);
  }
  return s;
}

}  // namespace lp01
