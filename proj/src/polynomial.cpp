#include "parklc/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace parklc {

namespace {

void add_into(std::map<Exponent, Integer>& terms, Exponent e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

// Appends "c·var^e" to out with sign handling; the first term carries its own sign.
void append_term(std::string& out, const Integer& c, const std::string& monomial) {
  const bool negative = c < 0;
  Integer magnitude = abs(c);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += magnitude.get_str();
  } else {
    if (magnitude != 1) out += magnitude.get_str();
    out += monomial;
  }
}

std::string power(std::string_view var, Exponent e) {
  if (e == 0) return {};
  std::string s(var);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

Integer parse_integer(const nlohmann::json& value) {
  if (value.is_string()) {
    Integer z;
    if (z.set_str(value.get<std::string>(), 10) != 0) {
      throw std::invalid_argument("malformed decimal coefficient: " + value.get<std::string>());
    }
    return z;
  }
  if (value.is_number_integer()) return Integer(std::to_string(value.get<long long>()));
  throw std::invalid_argument("coefficient must be a decimal string");
}

Exponent parse_exponent(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty exponent key");
  unsigned long long e = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("malformed exponent key: " + std::string(text));
    }
    e = e * 10 + static_cast<unsigned>(ch - '0');
    if (e > 0xffffffffull) throw std::invalid_argument("exponent out of range");
  }
  return static_cast<Exponent>(e);
}

}  // namespace

// --- IntPolynomial --------------------------------------------------------

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  Exponent e = 0;
  for (long c : ascending) add_into(terms_, e++, Integer(c));
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return monomial(0, c); }

IntPolynomial IntPolynomial::monomial(Exponent e, const Integer& c) {
  IntPolynomial p;
  add_into(p.terms_, e, c);
  return p;
}

Integer IntPolynomial::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Exponent IntPolynomial::min_degree() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  return terms_.begin()->first;
}

Exponent IntPolynomial::degree() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  return terms_.rbegin()->first;
}

void IntPolynomial::add_term(Exponent e, const Integer& c) { add_into(terms_, e, c); }

Integer IntPolynomial::evaluate(const Integer& at) const {
  Integer acc = 0;
  for (const auto& [e, c] : terms_) {
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), at.get_mpz_t(), e);
    acc += c * p;
  }
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_into(terms_, e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_into(terms_, e, -c);
  return *this;
}

IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g) {
  IntPolynomial out;
  for (const auto& [ef, cf] : f.terms_) {
    for (const auto& [eg, cg] : g.terms_) add_into(out.terms_, ef + eg, cf * cg);
  }
  return out;
}

IntPolynomial poly_mul(const IntPolynomial& f, const IntPolynomial& g) { return f * g; }

IntPolynomial shift_compose(const IntPolynomial& f) {
  IntPolynomial out;
  for (const auto& [k, a] : f.terms()) {
    Integer binom = 1;
    for (Exponent j = 0; j <= k; ++j) {
      out.add_term(j, a * binom);
      binom = binom * (k - j) / (j + 1);
    }
  }
  return out;
}

IntPolynomial reciprocal_reverse(const IntPolynomial& f, Exponent N) {
  if (!f.is_zero() && N < f.degree()) {
    throw std::invalid_argument("reciprocal_reverse: N = " + std::to_string(N) +
                                " is below degree " + std::to_string(f.degree()));
  }
  IntPolynomial out;
  for (const auto& [e, c] : f.terms()) out.add_term(N - e, c);
  return out;
}

LcReport lc_diagnostics(const IntPolynomial& f) {
  LcReport report;
  if (f.is_zero()) return report;

  const Exponent lo = f.min_degree();
  const Exponent hi = f.degree();
  std::vector<Integer> a;
  a.reserve(hi - lo + 1);
  for (Exponent e = lo; e <= hi; ++e) a.push_back(f.coefficient(e));

  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    if (a[i] == 0) report.has_internal_zeros = true;
    if (a[i] * a[i] < a[i - 1] * a[i + 1]) {
      if (report.is_log_concave) report.first_violation = lo + static_cast<Exponent>(i);
      report.is_log_concave = false;
    }
  }

  std::size_t i = 1;
  while (i < a.size() && a[i - 1] <= a[i]) ++i;
  while (i < a.size() && a[i - 1] >= a[i]) ++i;
  report.is_unimodal = (i == a.size());
  return report;
}

std::string to_string(const IntPolynomial& f, std::string_view var) {
  std::string out;
  for (const auto& [e, c] : f.terms()) append_term(out, c, power(var, e));
  return out.empty() ? "0" : out;
}

nlohmann::ordered_json to_json(const IntPolynomial& f) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (const auto& [e, c] : f.terms()) coeffs[std::to_string(e)] = c.get_str();
  return {{"coeffs", coeffs}};
}

IntPolynomial int_polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_object()) {
    throw std::invalid_argument("polynomial JSON must be an object with a \"coeffs\" object");
  }
  IntPolynomial p;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    p.add_term(parse_exponent(key), parse_integer(value));
  }
  return p;
}

std::string to_csv(const IntPolynomial& f) {
  std::ostringstream out;
  out << "exponent,coefficient\n";
  for (const auto& [e, c] : f.terms()) out << e << ',' << c.get_str() << '\n';
  return out.str();
}

nlohmann::ordered_json to_json(const LcReport& r) {
  nlohmann::ordered_json j;
  j["is_log_concave"] = r.is_log_concave;
  j["is_unimodal"] = r.is_unimodal;
  j["has_internal_zeros"] = r.has_internal_zeros;
  j["first_violation"] = r.first_violation ? nlohmann::ordered_json(*r.first_violation)
                                           : nlohmann::ordered_json(nullptr);
  return j;
}

// --- BivariatePolynomial --------------------------------------------------

namespace {

void add_into(BivariatePolynomial::TermMap& terms, BivariatePolynomial::Monomial m,
                const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

// Display order: x exponent descending, then y exponent ascending.
std::vector<std::pair<BivariatePolynomial::Monomial, Integer>> display_order(
    const BivariatePolynomial& t) {
  std::vector<std::pair<BivariatePolynomial::Monomial, Integer>> v(t.terms().begin(),
                                                                    t.terms().end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  return v;
}

}  // namespace

BivariatePolynomial BivariatePolynomial::constant(const Integer& c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(Exponent i, Exponent j, const Integer& c) {
  BivariatePolynomial p;
  add_into(p.terms_, {i, j}, c);
  return p;
}

Integer BivariatePolynomial::coefficient(Exponent i, Exponent j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BivariatePolynomial::add_term(Exponent i, Exponent j, const Integer& c) {
  add_into(terms_, {i, j}, c);
}

Integer BivariatePolynomial::evaluate(const Integer& x, const Integer& y) const {
  Integer acc = 0;
  for (const auto& [m, c] : terms_) {
    Integer xi, yj;
    mpz_pow_ui(xi.get_mpz_t(), x.get_mpz_t(), m.first);
    mpz_pow_ui(yj.get_mpz_t(), y.get_mpz_t(), m.second);
    acc += c * xi * yj;
  }
  return acc;
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  BivariatePolynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{m.second, m.first}, c);
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_into(terms_, m, c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& f, const BivariatePolynomial& g) {
  BivariatePolynomial out;
  for (const auto& [mf, cf] : f.terms_) {
    for (const auto& [mg, cg] : g.terms_) {
      add_into(out.terms_, {mf.first + mg.first, mf.second + mg.second}, cf * cg);
    }
  }
  return out;
}

IntPolynomial specialize(const BivariatePolynomial& t, PinnedAxis pinned) {
  IntPolynomial out;
  for (const auto& [m, c] : t.terms()) {
    out.add_term(pinned == PinnedAxis::X ? m.second : m.first, c);
  }
  return out;
}

std::string to_string(const BivariatePolynomial& t) {
  std::string out;
  for (const auto& [m, c] : display_order(t)) {
    append_term(out, c, power("x", m.first) + power("y", m.second));
  }
  return out.empty() ? "0" : out;
}

nlohmann::ordered_json to_json(const BivariatePolynomial& t) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (const auto& [m, c] : display_order(t)) {
    coeffs[std::to_string(m.first) + "," + std::to_string(m.second)] = c.get_str();
  }
  return {{"coeffs", coeffs}};
}

BivariatePolynomial bivariate_polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_object()) {
    throw std::invalid_argument("polynomial JSON must be an object with a \"coeffs\" object");
  }
  BivariatePolynomial p;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bivariate key must be \"i,j\"");
    p.add_term(parse_exponent(std::string_view(key).substr(0, comma)),
               parse_exponent(std::string_view(key).substr(comma + 1)), parse_integer(value));
  }
  return p;
}

std::string to_csv(const BivariatePolynomial& t) {
  std::ostringstream out;
  out << "x_exponent,y_exponent,coefficient\n";
  for (const auto& [m, c] : t.terms()) {
    out << m.first << ',' << m.second << ',' << c.get_str() << '\n';
  }
  return out.str();
}

}  // namespace parklc
