#ifndef EKR_STIRLING_HPP
#define EKR_STIRLING_HPP

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ekr {

using BigNat = boost::multiprecision::cpp_int;
using BigInt = boost::multiprecision::cpp_int;

/// Memoized unsigned Stirling numbers of the first kind [n k], filled row by
/// row from the recurrence [n k] = [n-1 k-1] + (n-1)[n-1 k].
///
/// Rows are appended under an exclusive lock and never modified afterwards,
/// so concurrent lookups are safe.
class StirlingTable {
public:
  StirlingTable();

  BigNat value(std::size_t n, std::size_t k) const;

  /// Fills rows up to and including n.
  void reserve_rows(std::size_t n) const;

  std::size_t rows() const;

private:
  mutable std::shared_mutex mutex_;
  // rows_[n] holds [n 0], ..., [n n]
  mutable std::vector<std::vector<BigNat>> rows_;
};

/// Process-wide table shared by the free functions below.
StirlingTable &shared_stirling_table();

/// [n k] from the recurrence with [0 0] = 1, [n 0] = [0 k] = 0.
BigNat stirling_recurrence(std::size_t n, std::size_t k);

/// [n k] as sum_{r=k-1}^{n-1} (n-1)!/r! [r k-1], with each inner column built
/// by the same sum rather than the recurrence. Requires n, k >= 1.
BigNat stirling_series(std::size_t n, std::size_t k);

/// [n 2] = (n-1)! H_{n-1} in exact rational arithmetic. Requires n >= 2.
/// Throws std::logic_error if the rational result is not an integer.
BigNat stirling_harmonic_k2(std::size_t n);

/// s(n,k) = (-1)^{n-k} [n k]
BigInt signed_stirling(std::size_t n, std::size_t k);

/// n!
BigNat factorial(std::size_t n);

/// [n k] / ((n-1)! (ln n)^{k-1}). The quotient [n k]/(n-1)! is formed in
/// 50-digit binary floating point before the final conversion. Requires
/// n >= 2.
double stirling_ratio(std::size_t n, std::size_t k);

struct ConstantsEstimate {
  std::size_t k = 0;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  double alpha_hat = 0.0;
  double beta_hat = 0.0;
  std::size_t alpha_at = 0; // smallest n attaining alpha_hat
  std::size_t beta_at = 0;  // smallest n attaining beta_hat
  std::vector<double> ratios; // ratios[i] = ratio(n_min + i, k)
};

/// Observed min/max of stirling_ratio(n, k) over n in [n_min, n_max].
/// Requires k >= 2 and max(k, 2) <= n_min < n_max. `threads` splits the scan;
/// the result does not depend on it.
ConstantsEstimate estimate_constants(std::size_t k, std::size_t n_min,
                                     std::size_t n_max,
                                     unsigned threads = 1);

/// Outcome of checking one inequality at every n of a scan.
struct InequalityCheck {
  std::string name;
  /// Smallest n from which the inequality holds at every scanned n onward;
  /// empty when it fails at the end of the range.
  std::optional<std::size_t> threshold;
  std::size_t failures = 0;
};

struct InequalityReport {
  std::size_t n_start = 0;
  std::size_t n_max = 0;
  std::vector<InequalityCheck> checks;
};

/// Absolute slack granted to non-strict floating comparisons.
inline constexpr double kFloatTolerance = 1e-9;

/// H_m = 1 + 1/2 + ... + 1/m, compensated summation in long double.
long double harmonic(std::size_t m);

/// The chain
///   ln(n)/2 < ln(n-1) + 1/(n-1) <= H_{n-1} <= ln(n-1) + 1 < 2 ln(n)
/// evaluated link by link for n in [2, n_max]. Requires n_max >= 3.
InequalityReport harmonic_bounds_check(std::size_t n_max);

/// S(m, n) = sum_{r=1}^{n-1} (ln r)^m / r
long double log_power_sum(std::size_t m, std::size_t n);

/// Checks ln^{m+1}(n) / (2(m+1)) < S(m, n) < 2 ln^{m+1}(n) / (m+1) for n in
/// [2, n_max]; reports "lower", "upper" and "both" thresholds. Requires
/// m >= 1 and n_max >= 10.
InequalityReport log_power_sum_check(std::size_t m, std::size_t n_max);

} // namespace ekr

#endif // EKR_STIRLING_HPP
