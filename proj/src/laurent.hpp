/**
 * @file laurent.hpp
 * @brief Exact Laurent polynomials in one variable q with arbitrary-precision
 *        integer coefficients.
 *
 * Every quantity the evaluation engines produce lives in Z[q, q^-1].  The
 * representation is a sparse ordered map from exponent to coefficient with the
 * invariant that no stored coefficient is zero, so equality of values is
 * equality of representations.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

namespace kauffman {

using Integer = boost::multiprecision::cpp_int;

/**
 * @brief Sparse exact Laurent polynomial in q.
 *
 * Supports ring arithmetic, substitution q -> q^-1, a canonical text form
 * (descending exponents, e.g. "q^4 - 2 + 3q^-2"), a parser for that form, and
 * a JSON term-list form.  Immutable value semantics; all operations return
 * normalized results (no zero coefficients stored).
 */
class LaurentPoly {
 public:
  /// Zero polynomial.
  LaurentPoly() = default;

  /// The constant polynomial c.
  static LaurentPoly constant(const Integer& c);

  /// The monomial coeff * q^exp.
  static LaurentPoly monomial(int exp, Integer coeff = 1);

  /// The constant polynomial 1.
  static LaurentPoly one() { return constant(1); }

  /// The monomial q^k.
  static LaurentPoly q_power(int k) { return monomial(k); }

  bool is_zero() const { return terms_.empty(); }

  /// Term map, exponent -> nonzero coefficient, ascending by exponent.
  const std::map<int, Integer>& terms() const { return terms_; }

  /// Coefficient of q^exp (zero if absent).
  Integer coefficient(int exp) const;

  /// Lowest/highest exponent present.  @throws std::logic_error on zero.
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const LaurentPoly& rhs) const { return terms_ != rhs.terms_; }

  /// this * q^k.
  LaurentPoly shifted(int k) const;

  /// Substitution q -> q^-1 (negates every exponent).
  LaurentPoly bar() const;

  /// Non-negative integer power.
  LaurentPoly pow(unsigned e) const;

  /**
   * @brief Canonical text form.
   *
   * Terms in descending exponent order, " + " / " - " separators, magnitude-1
   * coefficients suppressed next to q, exponent 1 written "q", exponent 0 as
   * the bare coefficient, negative exponents as "q^-k".  Zero renders "0".
   */
  std::string to_text() const;

  /**
   * @brief Parse the text form (tolerant of arbitrary spacing).
   * @throws std::invalid_argument on malformed input.
   */
  static LaurentPoly parse(const std::string& text);

  /// JSON: descending [[exp, "coeff"], ...] with decimal-string coefficients.
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  std::map<int, Integer> terms_;  ///< exponent -> coefficient, never zero
};

/**
 * @brief Quantum integer [m] = (q^m - q^-m) / (q - q^-1).
 *
 * [m] = q^{m-1} + q^{m-3} + ... + q^{1-m} for m > 0, [0] = 0, [-m] = -[m].
 */
LaurentPoly quantum_integer(int m);

/// Value of the unknotted circle: delta(n) = [2n-1] + 1.
LaurentPoly unknot_value(int n);

/// q^m - q^-m, the numerator (q - q^-1) * [m].
LaurentPoly q_power_difference(int m);

}  // namespace kauffman
