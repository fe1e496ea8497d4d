#include "ekr/stirling.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace ekr {

namespace mp = boost::multiprecision;

StirlingTable::StirlingTable() { rows_.push_back({BigNat(1)}); }

void StirlingTable::reserve_rows(std::size_t n) const {
  {
    std::shared_lock lock(mutex_);
    if (n < rows_.size())
      return;
  }
  std::unique_lock lock(mutex_);
  while (rows_.size() <= n) {
    const std::size_t m = rows_.size();
    const std::vector<BigNat> &prev = rows_.back();
    std::vector<BigNat> row(m + 1);
    row[0] = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      BigNat v = prev[k - 1];
      if (k < m)
        v += (m - 1) * prev[k];
      row[k] = std::move(v);
    }
    rows_.push_back(std::move(row));
  }
}

BigNat StirlingTable::value(std::size_t n, std::size_t k) const {
  if (k > n)
    return 0;
  reserve_rows(n);
  std::shared_lock lock(mutex_);
  return rows_[n][k];
}

std::size_t StirlingTable::rows() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

StirlingTable &shared_stirling_table() {
  static StirlingTable table;
  return table;
}

BigNat stirling_recurrence(std::size_t n, std::size_t k) {
  return shared_stirling_table().value(n, k);
}

namespace {

// (hi)! / (lo)! = (lo+1)(lo+2)...(hi), for lo <= hi.
BigNat falling_product(std::size_t lo, std::size_t hi) {
  BigNat p = 1;
  for (std::size_t j = lo + 1; j <= hi; ++j)
    p *= j;
  return p;
}

} // namespace

BigNat stirling_series(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("stirling_series requires n, k >= 1");
  if (k > n)
    return 0;
  // column[r] holds [r j] for r in [0, n-1], starting at j = 0.
  std::vector<BigNat> column(n, 0);
  column[0] = 1;
  for (std::size_t j = 1; j < k; ++j) {
    std::vector<BigNat> next(n, 0);
    for (std::size_t m = j; m < n; ++m) {
      BigNat sum = 0;
      for (std::size_t r = j - 1; r <= m - 1; ++r)
        if (column[r] != 0)
          sum += falling_product(r, m - 1) * column[r];
      next[m] = std::move(sum);
    }
    column = std::move(next);
  }
  BigNat sum = 0;
  for (std::size_t r = k - 1; r <= n - 1; ++r)
    if (column[r] != 0)
      sum += falling_product(r, n - 1) * column[r];
  return sum;
}

BigNat factorial(std::size_t n) { return falling_product(0, n); }

BigNat stirling_harmonic_k2(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("stirling_harmonic_k2 requires n >= 2");
  mp::cpp_rational h = 0;
  for (std::size_t r = 1; r <= n - 1; ++r)
    h += mp::cpp_rational(1, r);
  mp::cpp_rational v = h * mp::cpp_rational(factorial(n - 1));
  if (mp::denominator(v) != 1)
    throw std::logic_error("(n-1)! H_{n-1} is not an integer for n = " +
                           std::to_string(n));
  return mp::numerator(v);
}

BigInt signed_stirling(std::size_t n, std::size_t k) {
  BigInt v = stirling_recurrence(n, k);
  if (k <= n && (n - k) % 2 == 1)
    v = -v;
  return v;
}

double stirling_ratio(std::size_t n, std::size_t k) {
  if (n < 2)
    throw std::invalid_argument("stirling_ratio requires n >= 2");
  using Float = mp::cpp_bin_float_50;
  Float q = Float(stirling_recurrence(n, k)) / Float(factorial(n - 1));
  if (k > 1)
    q /= mp::pow(mp::log(Float(n)), static_cast<int>(k - 1));
  return q.convert_to<double>();
}

ConstantsEstimate estimate_constants(std::size_t k, std::size_t n_min,
                                     std::size_t n_max, unsigned threads) {
  if (k < 2)
    throw std::invalid_argument("estimate_constants requires k >= 2");
  if (n_min < std::max<std::size_t>(k, 2) || n_min >= n_max)
    throw std::invalid_argument(
        "estimate_constants requires max(k,2) <= n_min < n_max");

  ConstantsEstimate est;
  est.k = k;
  est.n_min = n_min;
  est.n_max = n_max;
  const std::size_t count = n_max - n_min + 1;
  est.ratios.assign(count, 0.0);
  shared_stirling_table().reserve_rows(n_max);

  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i)
      est.ratios[i] = stirling_ratio(n_min + i, k);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += workers)
          est.ratios[i] = stirling_ratio(n_min + i, k);
      });
  }

  auto lo = std::min_element(est.ratios.begin(), est.ratios.end());
  auto hi = std::max_element(est.ratios.begin(), est.ratios.end());
  est.alpha_hat = *lo;
  est.beta_hat = *hi;
  est.alpha_at = n_min + static_cast<std::size_t>(lo - est.ratios.begin());
  est.beta_at = n_min + static_cast<std::size_t>(hi - est.ratios.begin());
  return est;
}

long double harmonic(std::size_t m) {
  long double sum = 0, carry = 0;
  for (std::size_t r = 1; r <= m; ++r) {
    long double y = 1.0L / static_cast<long double>(r) - carry;
    long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

namespace {

// Tracks the start of the current run of consecutive successes.
class ThresholdTracker {
public:
  explicit ThresholdTracker(std::string name) { check_.name = std::move(name); }

  void record(std::size_t n, bool holds) {
    if (!holds) {
      ++check_.failures;
      run_start_.reset();
    } else if (!run_start_) {
      run_start_ = n;
    }
  }

  InequalityCheck finish() {
    check_.threshold = run_start_;
    return check_;
  }

private:
  InequalityCheck check_;
  std::optional<std::size_t> run_start_;
};

bool strictly_less(long double a, long double b) { return a < b; }
bool at_most(long double a, long double b) { return a <= b + kFloatTolerance; }

} // namespace

InequalityReport harmonic_bounds_check(std::size_t n_max) {
  if (n_max < 3)
    throw std::invalid_argument("harmonic_bounds_check requires n_max >= 3");
  ThresholdTracker lower_log("half_log_lt_log_plus_reciprocal");
  ThresholdTracker lower_h("log_plus_reciprocal_le_harmonic");
  ThresholdTracker upper_h("harmonic_le_log_plus_one");
  ThresholdTracker upper_log("log_plus_one_lt_two_log");

  long double h = 0, carry = 0; // running H_{n-1}
  for (std::size_t n = 2; n <= n_max; ++n) {
    const long double m = static_cast<long double>(n - 1);
    long double y = 1.0L / m - carry;
    long double t = h + y;
    carry = (t - h) - y;
    h = t;

    const long double ln_n = std::log(static_cast<long double>(n));
    const long double ln_m = std::log(m);
    const long double a = ln_n / 2;
    const long double b = ln_m + 1.0L / m;
    const long double d = ln_m + 1.0L;
    const long double e = 2 * ln_n;
    lower_log.record(n, strictly_less(a, b));
    lower_h.record(n, at_most(b, h));
    upper_h.record(n, at_most(h, d));
    upper_log.record(n, strictly_less(d, e));
  }
  return {2,
          n_max,
          {lower_log.finish(), lower_h.finish(), upper_h.finish(),
           upper_log.finish()}};
}

long double log_power_sum(std::size_t m, std::size_t n) {
  long double sum = 0, carry = 0;
  for (std::size_t r = 2; r < n; ++r) {
    const long double x = static_cast<long double>(r);
    long double y = std::pow(std::log(x), static_cast<int>(m)) / x - carry;
    long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

InequalityReport log_power_sum_check(std::size_t m, std::size_t n_max) {
  if (m < 1)
    throw std::invalid_argument("log_power_sum_check requires m >= 1");
  if (n_max < 10)
    throw std::invalid_argument("log_power_sum_check requires n_max >= 10");
  ThresholdTracker lower("lower"), upper("upper"), both("both");
  const int power = static_cast<int>(m);
  const long double mp1 = static_cast<long double>(m + 1);

  long double s = 0, carry = 0; // running S(m, n)
  for (std::size_t n = 2; n <= n_max; ++n) {
    if (n > 2) {
      const long double r = static_cast<long double>(n - 1);
      long double y = std::pow(std::log(r), power) / r - carry;
      long double t = s + y;
      carry = (t - s) - y;
      s = t;
    }
    const long double l =
        std::pow(std::log(static_cast<long double>(n)), power + 1);
    const bool lo = l / (2 * mp1) < s;
    const bool hi = s < 2 * l / mp1;
    lower.record(n, lo);
    upper.record(n, hi);
    both.record(n, lo && hi);
  }
  return {2, n_max, {lower.finish(), upper.finish(), both.finish()}};
}

} // namespace ekr
