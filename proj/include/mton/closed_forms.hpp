#pragma once

#include <cmath>
#include <mutex>
#include <string>
#include <vector>

#include "mton/error.hpp"
#include "mton/rational.hpp"
#include "mton/statistics.hpp"
#include "mton/tree.hpp"

namespace mton {

/// H_n = 1 + 1/2 + ... + 1/n and H2_n = 1 + 1/4 + ... + 1/n^2, grown on demand.
class HarmonicCache {
 public:
  HarmonicCache() : h_{0}, h2_{0} {}

  BigRational H(int n) {
    extend(n);
    return h_[static_cast<std::size_t>(n)];
  }
  BigRational H2(int n) {
    extend(n);
    return h2_[static_cast<std::size_t>(n)];
  }

  /// Shared instance; safe to call from several threads.
  static HarmonicCache& shared() {
    static HarmonicCache c;
    return c;
  }

 private:
  void extend(int n) {
    if (n < 0) throw Error(ErrorCode::OutOfValidity, "harmonic numbers need n >= 0");
    std::lock_guard lock(mu_);
    while (static_cast<int>(h_.size()) <= n) {
      const long k = static_cast<long>(h_.size());
      h_.push_back(h_.back() + BigRational(1, k));
      h2_.push_back(h2_.back() + BigRational(1, k * k));
    }
  }

  std::mutex mu_;
  std::vector<BigRational> h_;
  std::vector<BigRational> h2_;
};

namespace detail {

inline void require_at_least(const char* what, int n, int lo) {
  if (n < lo) {
    throw Error(ErrorCode::OutOfValidity, std::string(what) + " holds for n >= " + std::to_string(lo) +
                                              ", got n = " + std::to_string(n));
  }
}

inline BigRational frac(long p, long q) { return rational(p, q); }

}  // namespace detail

inline BigRational expected_Y(int n) {
  detail::require_at_least("E[Y_n]", n, 2);
  return BigRational(n) - HarmonicCache::shared().H(n) + detail::frac(3, 2) - detail::frac(1, n + 1);
}

/// Variance from given H_n and H2_n, so long scans need not cache every value.
inline BigRational variance_Y_from(int n, const BigRational& h, const BigRational& h2) {
  const long a = n - 1;
  const long b = n + 1;
  return h - h2 - detail::frac(a * a, 4 * b * b);
}

inline BigRational variance_Y(int n) {
  detail::require_at_least("Var[Y_n]", n, 2);
  auto& c = HarmonicCache::shared();
  return variance_Y_from(n, c.H(n), c.H2(n));
}

/// The same variance written with H_{n+1} and H2_{n+1}.
inline BigRational variance_Y_alt_from(const BigRational& h_next, const BigRational& h2_next) {
  return h_next - h2_next - detail::frac(1, 4);
}

inline BigRational variance_Y_alt(int n) {
  detail::require_at_least("Var[Y_n]", n, 2);
  auto& c = HarmonicCache::shared();
  return variance_Y_alt_from(c.H(n + 1), c.H2(n + 1));
}

/// sum_{k=2}^n k/(k+1)^2, a third expression for Var[Y_n].
inline BigRational variance_Y_sum(int n) {
  detail::require_at_least("Var[Y_n]", n, 2);
  BigRational s = 0;
  for (long k = 2; k <= n; ++k) s += detail::frac(k, (k + 1) * (k + 1));
  return s;
}

inline BigRational expected_Y1(int n) {
  detail::require_at_least("E[Y_n^(1)]", n, 3);
  return BigRational(n) - 2 * HarmonicCache::shared().H(n) + detail::frac(10, 3) - detail::frac(3, n + 1);
}

inline BigRational expected_Y2(int n) {
  detail::require_at_least("E[Y_n^(2)]", n, 4);
  const long m = n;
  return HarmonicCache::shared().H(n) - detail::frac(51, 24) + detail::frac(6 * m - 1, 2 * m * (m + 1));
}

inline BigRational expected_Yge3(int n) {
  detail::require_at_least("E[Y_n^(>=3)]", n, 4);
  const long m = n;
  return detail::frac(7, 24) - detail::frac(2 * m - 1, 2 * m * (m + 1));
}

inline BigRational expected_outer_full(int n) {
  detail::require_at_least("E[Out_n]", n, 1);
  return detail::frac(2L * n + 1, 3);
}

inline BigRational expected_interval_pairs(int n) {
  detail::require_at_least("E[Int_n]", n, 1);
  return detail::frac(2L * n + 1, 3);
}

/// 2^n n! / (2n-1)!! - 1.
inline BigRational expected_outer_pairs(int n) {
  detail::require_at_least("E[Out_n]", n, 1);
  BigInteger two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return rational(two_n * factorial(static_cast<unsigned>(n)), double_factorial_odd(static_cast<unsigned>(n))) - 1;
}

/// (2n+1) * (1/3 + 1/5 + ... + 1/(2n+1)).
inline BigRational expected_area(int n) {
  detail::require_at_least("E[A_n]", n, 1);
  BigRational s = 0;
  for (long k = 1; k <= n; ++k) s += detail::frac(1, 2 * k + 1);
  return (2L * n + 1) * s;
}

/// Sum of the areas over all of NC^(mton)_2(2n).
inline BigRational total_area(int n) {
  return expected_area(n) * BigRational(double_factorial_odd(static_cast<unsigned>(n)));
}

/// One step of the expectation recursion for a second-kind statistic, where
/// c = n+1 children per parent (full tree) or 2n-1 (pair tree).
inline BigRational expectation_recursion_step(const SecondKindInput& in, const BigRational& prev, int n,
                                              TreeKind kind = TreeKind::Full) {
  detail::require_at_least("the expectation recursion", n, 2);
  const long c = kind == TreeKind::Full ? n + 1 : 2L * n - 1;
  return rational(c + in.alpha - in.beta, c) * prev +
         rational(static_cast<long>(in.alpha) * in.q + static_cast<long>(in.beta) * (c - in.q), c);
}

/// E[Z_n] obtained by iterating expectation_recursion_step from E[Z_1].
inline BigRational iterate_expectation(const SecondKindInput& in, const BigRational& e1, int n,
                                       TreeKind kind = TreeKind::Full) {
  BigRational e = e1;
  for (int m = 2; m <= n; ++m) e = expectation_recursion_step(in, e, m, kind);
  e.canonicalize();
  return e;
}

/// Increment E[Y_n^(l)] - E[Y_{n-1}^(l)] for n >= l + 2.
inline BigRational blocks_of_size_increment(int ell, int n) {
  detail::require_at_least("the block-size increment", n, ell + 2);
  const long d = n - ell;
  BigInteger num = factorial(static_cast<unsigned>(d)) * ((d + 1) * (d + 1) - d);
  return rational(num, factorial(static_cast<unsigned>(n + 1)));
}

/// E[Y_n^(l)] by telescoping the increments from a seed E[Y_{l+1}^(l)].
inline BigRational telescoped_blocks_of_size(int ell, const BigRational& seed, int n) {
  detail::require_at_least("the telescoped block-size expectation", n, ell + 1);
  BigRational e = seed;
  for (int m = ell + 2; m <= n; ++m) e += blocks_of_size_increment(ell, m);
  return e;
}

// ---- float-mode diagnostics ----

inline constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

enum class AsymptoticId { ExpectedY, VarianceY, ExpectedY1, ExpectedY2, OuterPairs, Area, Y3Limit };

inline std::string_view to_string(AsymptoticId id) {
  switch (id) {
    case AsymptoticId::ExpectedY: return "E[Y_n] vs (n - ln n) + (3/2 - gamma)";
    case AsymptoticId::VarianceY: return "Var[Y_n] vs ln n - (pi^2/6 + 1/4 - gamma)";
    case AsymptoticId::ExpectedY1: return "E[Y_n^(1)] vs n - 2 ln n + (10/3 - 2 gamma)";
    case AsymptoticId::ExpectedY2: return "E[Y_n^(2)] vs ln n - (51/24 - gamma)";
    case AsymptoticId::OuterPairs: return "E[Out_n] (pairs) vs sqrt(pi n)";
    case AsymptoticId::Area: return "E[A_n] vs n ln n";
    case AsymptoticId::Y3Limit: return "E[Y_n^(3)] vs 23/90";
  }
  return "?";
}

/// Float evaluation of an exact formula next to its limiting expression.
struct AsymptoticReport {
  AsymptoticId id;
  long n = 0;
  double exact = 0;       // the closed form evaluated in floating point
  double asymptotic = 0;  // the limiting expression
  double difference = 0;  // exact - asymptotic
  double ratio = 0;       // exact / asymptotic
};

namespace detail {

inline long double harmonic_float(long n, int power) {
  long double s = 0;
  for (long k = n; k >= 1; --k) s += power == 1 ? 1.0L / k : 1.0L / (static_cast<long double>(k) * k);
  return s;
}

}  // namespace detail

inline AsymptoticReport asymptotic_report(AsymptoticId id, long n) {
  const long double N = static_cast<long double>(n);
  const long double ln = std::log(N);
  long double exact = 0;
  long double asym = 0;
  switch (id) {
    case AsymptoticId::ExpectedY:
      exact = N - detail::harmonic_float(n, 1) + 1.5L - 1.0L / (N + 1);
      asym = (N - ln) + (1.5L - kEulerGamma);
      break;
    case AsymptoticId::VarianceY:
      exact = detail::harmonic_float(n, 1) - detail::harmonic_float(n, 2) -
              (N - 1) * (N - 1) / (4 * (N + 1) * (N + 1));
      asym = ln - (kPi * kPi / 6 + 0.25L - kEulerGamma);
      break;
    case AsymptoticId::ExpectedY1:
      exact = N - 2 * detail::harmonic_float(n, 1) + 10.0L / 3 - 3 / (N + 1);
      asym = N - 2 * ln + (10.0L / 3 - 2 * kEulerGamma);
      break;
    case AsymptoticId::ExpectedY2:
      exact = detail::harmonic_float(n, 1) - 51.0L / 24 + (6 * N - 1) / (2 * N * (N + 1));
      asym = ln - (51.0L / 24 - kEulerGamma);
      break;
    case AsymptoticId::OuterPairs: {
      // log(2^n n! / (2n-1)!!) with (2n-1)!! = (2n)! / (2^n n!).
      const long double lg = 2 * N * std::log(2.0L) + 2 * std::lgamma(N + 1) - std::lgamma(2 * N + 1);
      exact = std::exp(lg) - 1;
      asym = std::sqrt(kPi * N);
      break;
    }
    case AsymptoticId::Area: {
      long double s = 0;
      for (long k = n; k >= 1; --k) s += 1.0L / (2.0L * k + 1);
      exact = (2 * N + 1) * s;
      asym = N * ln;
      break;
    }
    case AsymptoticId::Y3Limit: {
      // Exact telescoped value from the brute-force seed E[Y_4^(3)] = 1/10.
      exact = telescoped_blocks_of_size(3, rational(1, 10), static_cast<int>(n)).get_d();
      asym = 23.0L / 90;
      break;
    }
  }
  return {id, n, static_cast<double>(exact), static_cast<double>(asym), static_cast<double>(exact - asym),
          static_cast<double>(exact / asym)};
}

}  // namespace mton
