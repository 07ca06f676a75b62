#include "preproj/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace preproj {

namespace {

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

// Merges two sorted term lists, scaling the second by `sign`.
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  DegLexLess less;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && less(i->first, j->first))) {
      out.push_back(*i++);
    } else if (i == a.end() || less(j->first, i->first)) {
      out.emplace_back(j->first, sign > 0 ? j->second : -j->second);
      ++j;
    } else {
      Rational c = sign > 0 ? i->second + j->second : i->second - j->second;
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool DegLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(Exponents{}, c);
}

Polynomial Polynomial::variable(Indeterminate t) {
  Exponents e{};
  e[static_cast<std::size_t>(t.index - 1)] = 1;
  return monomial(e, Rational(1));
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace_back(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.front().first) == 0);
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial " + to_string() + " is not constant");
  return terms_.empty() ? Rational(0) : terms_.front().second;
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_integer(); });
}

int Polynomial::total_degree() const { return terms_.empty() ? -1 : degree_of(terms_.back().first); }

bool Polynomial::mentions(Indeterminate t) const {
  const auto i = static_cast<std::size_t>(t.index - 1);
  return std::any_of(terms_.begin(), terms_.end(), [i](const Term& term) { return term.first[i] != 0; });
}

Rational Polynomial::coefficient(const Exponents& e) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const Exponents& key) { return DegLexLess{}(t.first, key); });
  if (it != terms_.end() && it->first == e) return it->second;
  return Rational(0);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& term : terms_) term.second *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::map<Exponents, Rational, DegLexLess> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) acc[add_exponents(ea, eb)] += ca * cb;
  }
  Polynomial out;
  out.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) out.terms_.emplace_back(e, std::move(c));
  }
  return out;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result(1);
  Polynomial b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const std::map<Indeterminate, Polynomial>& bindings) {
  // powers[i][k] = bindings[t_{i+1}]^k, filled on demand
  std::array<std::vector<Polynomial>, kIndeterminates> powers;
  auto power_of = [&](std::size_t i, std::uint16_t k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= k) cache.push_back(cache.back() * bindings.at(Indeterminate(static_cast<int>(i) + 1)));
    return cache[k];
  };

  Polynomial out;
  for (const auto& [exps, coef] : p.terms()) {
    Exponents kept{};
    Polynomial factor(1);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (bindings.contains(Indeterminate(static_cast<int>(i) + 1))) {
        factor *= power_of(i, exps[i]);
      } else {
        kept[i] = exps[i];
      }
    }
    out += Polynomial::monomial(kept, coef) * factor;
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, coef] : terms_) {
    const bool negative = coef.sign() < 0;
    const Rational magnitude = negative ? -coef : coef;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    const bool unit = magnitude == Rational(1);
    if (!unit || degree_of(exps) == 0) factors.push_back(magnitude.to_string());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      std::string f = "t" + std::to_string(i + 1);
      if (exps[i] > 1) f += "^" + std::to_string(exps[i]);
      factors.push_back(std::move(f));
    }
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

}  // namespace preproj
