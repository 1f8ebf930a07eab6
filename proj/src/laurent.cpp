/**
 * @file laurent.cpp
 * @brief Implementation of exact Laurent polynomial arithmetic and text I/O.
 */
#include "laurent.hpp"

#include <cctype>
#include <sstream>

namespace kauffman {

LaurentPoly LaurentPoly::constant(const Integer& c) {
  LaurentPoly p;
  if (c != 0) p.terms_[0] = c;
  return p;
}

LaurentPoly LaurentPoly::monomial(int exp, Integer coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exp] = std::move(coeff);
  return p;
}

Integer LaurentPoly::coefficient(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      int e = ea + eb;
      auto it = p.terms_.find(e);
      if (it == p.terms_.end()) {
        p.terms_.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) p.terms_.erase(it);
      }
    }
  }
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_[e + k] = c;
  return p;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_[-e] = c;
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = one();
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

std::string LaurentPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending exponent order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int exp = it->first;
    const Integer& c = it->second;
    const bool negative = c < 0;
    Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (exp == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str();
      out << "q";
      if (exp != 1) out << "^" << exp;
    }
  }
  return out.str();
}

namespace {

/// Skips spaces; returns index of next non-space char (or text.size()).
size_t skip_ws(const std::string& s, size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  LaurentPoly result;
  size_t i = skip_ws(text, 0);
  if (i == text.size()) throw std::invalid_argument("empty polynomial text");
  // Special case: literal "0".
  bool any_term = false;
  bool expect_term = true;  // a term must follow (start of input or a sign)
  int sign = +1;
  // Leading sign.
  if (text[i] == '-') {
    sign = -1;
    i = skip_ws(text, i + 1);
  } else if (text[i] == '+') {
    i = skip_ws(text, i + 1);
  }
  while (i < text.size()) {
    if (!expect_term) {
      // Must see a separator.
      if (text[i] == '+') {
        sign = +1;
      } else if (text[i] == '-') {
        sign = -1;
      } else {
        throw std::invalid_argument("expected '+' or '-' in polynomial text");
      }
      i = skip_ws(text, i + 1);
      expect_term = true;
      continue;
    }
    // Parse one term: [digits][q[^[-]digits]]
    Integer coeff = 1;
    bool saw_digits = false;
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) {
      coeff = Integer(text.substr(start, i - start));
      saw_digits = true;
    }
    int exp = 0;
    if (i < text.size() && (text[i] == 'q' || text[i] == 'Q')) {
      ++i;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        int esign = 1;
        if (i < text.size() && text[i] == '-') {
          esign = -1;
          ++i;
        } else if (i < text.size() && text[i] == '+') {
          ++i;
        }
        size_t estart = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == estart) throw std::invalid_argument("missing exponent digits");
        exp = esign * std::stoi(text.substr(estart, i - estart));
      }
    } else if (!saw_digits) {
      throw std::invalid_argument("expected a term in polynomial text");
    }
    result += monomial(exp, sign * coeff);
    any_term = true;
    expect_term = false;
    i = skip_ws(text, i);
  }
  if (expect_term && any_term)
    throw std::invalid_argument("dangling sign in polynomial text");
  if (!any_term) throw std::invalid_argument("no terms in polynomial text");
  return result;
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    arr.push_back({it->first, it->second.str()});
  return arr;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  LaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw std::invalid_argument("polynomial JSON term must be [exp, coeff]");
    int exp = term[0].get<int>();
    Integer coeff(term[1].get<std::string>());
    p += monomial(exp, coeff);
  }
  return p;
}

LaurentPoly quantum_integer(int m) {
  if (m == 0) return LaurentPoly();
  if (m < 0) return -quantum_integer(-m);
  LaurentPoly p;
  for (int e = m - 1; e >= 1 - m; e -= 2) p += LaurentPoly::monomial(e);
  return p;
}

LaurentPoly unknot_value(int n) {
  return quantum_integer(2 * n - 1) + LaurentPoly::one();
}

LaurentPoly q_power_difference(int m) {
  return LaurentPoly::q_power(m) - LaurentPoly::q_power(-m);
}

}  // namespace kauffman
