#ifndef PARKLC_POLYNOMIAL_HPP
#define PARKLC_POLYNOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "json.hpp"

namespace parklc {

using Integer = mpz_class;
using Exponent = std::uint32_t;

// Sparse univariate polynomial over Z. Only nonzero coefficients are stored,
// so the zero polynomial is the empty map.
class IntPolynomial {
 public:
  using TermMap = std::map<Exponent, Integer>;

  IntPolynomial() = default;

  // Dense ascending coefficients: {a0, a1, a2, ...}.
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(Exponent e, const Integer& c = 1);

  const TermMap& terms() const { return terms_; }
  Integer coefficient(Exponent e) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Both throw std::domain_error on the zero polynomial.
  Exponent min_degree() const;
  Exponent degree() const;

  // Adds c·x^e, dropping the term if it cancels.
  void add_term(Exponent e, const Integer& c);

  Integer evaluate(const Integer& at) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  TermMap terms_;
};

IntPolynomial poly_mul(const IntPolynomial& f, const IntPolynomial& g);

// f(1 + x), expanded.
IntPolynomial shift_compose(const IntPolynomial& f);

// x^N · f(1/x). Throws std::invalid_argument when N < degree(f).
IntPolynomial reciprocal_reverse(const IntPolynomial& f, Exponent N);

struct LcReport {
  bool is_log_concave = true;
  bool is_unimodal = true;
  bool has_internal_zeros = false;
  std::optional<Exponent> first_violation;

  friend bool operator==(const LcReport&, const LcReport&) = default;
};

// Log-concavity and unimodality over the support range [min_degree, degree],
// absent coefficients counting as zero. The zero polynomial passes vacuously.
LcReport lc_diagnostics(const IntPolynomial& f);

// "6 + 6y + 3y^2 + y^3" (ascending exponent), "0" for the zero polynomial.
std::string to_string(const IntPolynomial& f, std::string_view var = "x");

// {"coeffs": {"<exp>": "<decimal>"}} with keys in ascending numeric order.
nlohmann::ordered_json to_json(const IntPolynomial& f);
IntPolynomial int_polynomial_from_json(const nlohmann::json& j);

// "exponent,coefficient" rows, ascending, with a header line.
std::string to_csv(const IntPolynomial& f);

nlohmann::ordered_json to_json(const LcReport& r);

// Bivariate polynomial over Z in x and y; terms keyed by (x exponent, y exponent).
class BivariatePolynomial {
 public:
  using Monomial = std::pair<Exponent, Exponent>;
  using TermMap = std::map<Monomial, Integer>;

  BivariatePolynomial() = default;

  static BivariatePolynomial constant(const Integer& c);
  static BivariatePolynomial monomial(Exponent i, Exponent j, const Integer& c = 1);

  const TermMap& terms() const { return terms_; }
  Integer coefficient(Exponent i, Exponent j) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(Exponent i, Exponent j, const Integer& c);

  Integer evaluate(const Integer& x, const Integer& y) const;

  // T(x, y) -> T(y, x)
  BivariatePolynomial swapped() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& f, const BivariatePolynomial& g);
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  TermMap terms_;
};

enum class PinnedAxis { X, Y };

// Substitutes 1 for the pinned variable; the survivor becomes the variable of
// the returned univariate polynomial.
IntPolynomial specialize(const BivariatePolynomial& t, PinnedAxis pinned);

// Terms ordered by descending x exponent, then ascending y exponent:
// "x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3".
std::string to_string(const BivariatePolynomial& t);

// {"coeffs": {"<i>,<j>": "<decimal>"}} in the same order as to_string.
nlohmann::ordered_json to_json(const BivariatePolynomial& t);
BivariatePolynomial bivariate_polynomial_from_json(const nlohmann::json& j);

// "x_exponent,y_exponent,coefficient" rows sorted ascending by (i, j).
std::string to_csv(const BivariatePolynomial& t);

}  // namespace parklc

#endif  // PARKLC_POLYNOMIAL_HPP
