#pragma once

#include <map>
#include <string>

#include "mton/error.hpp"
#include "mton/rational.hpp"

namespace mton {

/// Sparse univariate polynomial with exact rational coefficients. Exponents
/// are signed so Laurent terms can appear mid-computation; callers that need
/// an honest polynomial check min_exponent() >= 0.
class ExactPolynomial {
 public:
  using Terms = std::map<int, BigRational>;

  ExactPolynomial() = default;
  ExactPolynomial(const BigRational& c) { add_term(0, c); }  // NOLINT: constants convert

  static ExactPolynomial monomial(int exponent, const BigRational& c = 1) {
    ExactPolynomial p;
    p.add_term(exponent, c);
    return p;
  }

  /// t^e as a polynomial.
  static ExactPolynomial t(int exponent = 1) { return monomial(exponent, 1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigRational coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigRational(0) : it->second;
  }

  /// Largest stored exponent; -1 for the zero polynomial.
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  int min_exponent() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first; }

  void add_term(int exponent, const BigRational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(exponent, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  ExactPolynomial& operator+=(const ExactPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  ExactPolynomial& operator-=(const ExactPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  ExactPolynomial& operator*=(const BigRational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
  friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
  friend ExactPolynomial operator*(ExactPolynomial a, const BigRational& s) { return a *= s; }
  friend ExactPolynomial operator*(const BigRational& s, ExactPolynomial a) { return a *= s; }

  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
    ExactPolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }

  ExactPolynomial derivative() const {
    ExactPolynomial out;
    for (const auto& [e, c] : terms_) out.add_term(e - 1, c * e);
    return out;
  }

  BigRational evaluate(const BigRational& x) const {
    if (x == 0) {
      if (min_exponent() < 0) throw Error(ErrorCode::NegativeExponent, "evaluation at 0");
      return coeff(0);
    }
    BigRational out = 0;
    for (const auto& [e, c] : terms_) {
      const BigRational xe = e >= 0 ? pow(x, static_cast<unsigned>(e))
                                    : BigRational(1) / pow(x, static_cast<unsigned>(-e));
      out += c * xe;
    }
    return out;
  }

  /// Human-readable form, highest degree first: "6t^3 + 5t + 1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool neg = c < 0;
      const BigRational mag = neg ? BigRational(-c) : c;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      const bool unit = mag == 1 && e != 0;
      if (!unit) s += mag.get_str();
      if (e != 0) s += e == 1 ? "t" : "t^" + std::to_string(e);
    }
    return s;
  }

  friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

 private:
  Terms terms_;
};

}  // namespace mton
