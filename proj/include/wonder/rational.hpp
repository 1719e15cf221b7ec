#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wonder {

/// Arbitrary-precision integer and exact rational scalar.
/// cpp_rational keeps values in lowest terms with a positive denominator,
/// which is exactly the canonical form the rest of the library relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coordinate vector over the rationals.
using QVector = std::vector<Rational>;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input (bad file, non-orthogonal generator,
/// dimension mismatch, invalid encoding data). CLI maps this to exit code 2.
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// An enumeration or closure exceeded its configured cap.
class BudgetError : public Error {
public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

/// Bounded rejection sampling failed to produce a generic point.
class SamplingError : public Error {
public:
  explicit SamplingError(const std::string& what) : Error(what) {}
};

/// Parses "p/q" or "p" (q > 0 after normalization). Rejects zero denominators,
/// stray whitespace and malformed digits.
Rational parse_rational(const std::string& text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

std::string format_vector(const QVector& v);

bool is_zero_vector(const QVector& v);

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& c, const QVector& v);

Rational dot(const QVector& a, const QVector& b);

}  // namespace wonder
