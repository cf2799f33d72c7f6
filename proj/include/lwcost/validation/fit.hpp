#pragma once
#include "experiment.hpp"
#include <boost/multiprecision/cpp_int.hpp>
#include <set>

namespace lwcost {

using Exact = boost::multiprecision::cpp_rational;

enum class Predictor
{
  BlocksA,
  BlocksM,
};

// Coefficients of a predictor not in the fit stay zero.
template<typename T>
struct BasicFit
{
  T slope_A{ 0 };
  T slope_M{ 0 };
  T intercept{ 0 };
  T r_squared{ 0 };
  T residual_max{ 0 };
};

using FitResult = BasicFit<double>;
using ExactFit = BasicFit<Exact>;

struct FitError : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

namespace detail {

template<typename T>
T
abs_value(const T& v)
{
  return v < T(0) ? T(-v) : v;
}

// Solves A x = b in place by Gauss-Jordan elimination with pivoting on the
// largest magnitude. Returns false for a singular system.
template<typename T>
bool
solve(std::vector<std::vector<T>>& a, std::vector<T>& b)
{
  const size_t n = b.size();
  for (size_t col = 0; col < n; col++) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; r++)
      if (abs_value(a[r][col]) > abs_value(a[piv][col]))
        piv = r;
    if (a[piv][col] == T(0))
      return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; r++) {
      if (r == col || a[r][col] == T(0))
        continue;
      const T f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; c++)
        a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (size_t i = 0; i < n; i++)
    b[i] /= a[i][i];
  return true;
}

}

// Ordinary least squares of y on the chosen columns of x plus an intercept.
// x rows hold (blocks_A, blocks_M).
template<typename T>
BasicFit<T>
fit_points(const std::vector<std::array<T, 2>>& x,
           const std::vector<T>& y,
           const std::vector<Predictor>& predictors)
{
  if (x.size() != y.size())
    throw FitError("fit needs one response per sample");
  if (x.size() < 3)
    throw FitError("fit needs at least 3 samples; widen the grid");
  std::vector<int> cols;
  for (Predictor p : predictors) {
    const int c = p == Predictor::BlocksA ? 0 : 1;
    if (std::find(cols.begin(), cols.end(), c) != cols.end())
      continue;
    std::set<T> distinct;
    for (const auto& row : x)
      distinct.insert(row[c]);
    if (distinct.size() < 2)
      throw FitError(std::string("degenerate design matrix: ") +
                     (c == 0 ? "blocks_A" : "blocks_M") +
                     " takes a single value; widen the grid");
    cols.push_back(c);
  }
  const size_t k = cols.size() + 1;
  auto feature = [&](size_t i, size_t j) { return j < cols.size() ? x[i][cols[j]] : T(1); };
  std::vector<std::vector<T>> a(k, std::vector<T>(k, T(0)));
  std::vector<T> b(k, T(0));
  for (size_t i = 0; i < x.size(); i++)
    for (size_t r = 0; r < k; r++) {
      for (size_t c = 0; c < k; c++)
        a[r][c] += feature(i, r) * feature(i, c);
      b[r] += feature(i, r) * y[i];
    }
  if (!detail::solve(a, b))
    throw FitError("degenerate design matrix: predictors are collinear; widen the grid");

  BasicFit<T> out;
  for (size_t j = 0; j < cols.size(); j++)
    (cols[j] == 0 ? out.slope_A : out.slope_M) = b[j];
  out.intercept = b[k - 1];
  T mean(0);
  for (const auto& v : y)
    mean += v;
  mean /= T(int64_t(y.size()));
  T ss_res(0), ss_tot(0);
  for (size_t i = 0; i < x.size(); i++) {
    T pred = out.intercept;
    for (size_t j = 0; j < cols.size(); j++)
      pred += b[j] * x[i][cols[j]];
    const T r = y[i] - pred;
    ss_res += r * r;
    ss_tot += (y[i] - mean) * (y[i] - mean);
    out.residual_max = std::max(out.residual_max, detail::abs_value(r));
  }
  if (ss_tot == T(0))
    out.r_squared = ss_res == T(0) ? T(1) : T(0);
  else
    out.r_squared = std::max(T(0), T(1) - ss_res / ss_tot);
  return out;
}

inline const std::vector<Predictor>&
both_predictors()
{
  static const std::vector<Predictor> p{ Predictor::BlocksA, Predictor::BlocksM };
  return p;
}

// Exact fit of measured total primitive calls (unit primitive cost).
inline ExactFit
fit_counts(const std::vector<Sample>& samples,
           const std::vector<Predictor>& predictors = both_predictors())
{
  std::vector<std::array<Exact, 2>> x;
  std::vector<Exact> y;
  for (const auto& s : samples) {
    x.push_back({ Exact(s.blocks_A), Exact(s.blocks_M) });
    y.push_back(Exact(s.measured.total_calls()));
  }
  return fit_points(x, y, predictors);
}

// Fit of median wall time in seconds.
inline FitResult
fit_times(const std::vector<Sample>& samples,
          const std::vector<Predictor>& predictors = { Predictor::BlocksM })
{
  std::vector<std::array<double, 2>> x;
  std::vector<double> y;
  for (const auto& s : samples) {
    x.push_back({ double(s.blocks_A), double(s.blocks_M) });
    y.push_back(s.seconds);
  }
  return fit_points(x, y, predictors);
}

inline double
to_double(const Exact& v)
{
  return v.convert_to<double>();
}

inline FitResult
to_double(const ExactFit& f)
{
  return { to_double(f.slope_A), to_double(f.slope_M), to_double(f.intercept),
           to_double(f.r_squared), to_double(f.residual_max) };
}

inline bool
is_integer(const Exact& v)
{
  return boost::multiprecision::denominator(v) == 1;
}

inline std::string
to_string(const Exact& v)
{
  return v.str();
}

}
