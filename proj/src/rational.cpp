#include "wonder/rational.hpp"

#include <sstream>

namespace wonder {

namespace {

Int parse_integer(const std::string& text) {
  if (text.empty()) throw ValidationError("empty integer literal");
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  if (i == text.size()) throw ValidationError("sign with no digits: '" + text + "'");
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw ValidationError("invalid integer literal: '" + text + "'");
  }
  return Int(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Int num = parse_integer(text.substr(0, slash));
  Int den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator: '" + text + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) out << '/' << denominator(value);
  return out.str();
}

std::string format_vector(const QVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(v[i]);
  }
  out += ")";
  return out;
}

bool is_zero_vector(const QVector& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

QVector operator+(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw ValidationError("vector dimension mismatch in addition");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVector operator-(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw ValidationError("vector dimension mismatch in subtraction");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVector operator*(const Rational& c, const QVector& v) {
  QVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw ValidationError("vector dimension mismatch in dot product");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace wonder
