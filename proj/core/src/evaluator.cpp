#include "gpm/evaluator.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gpm/coefficients.hpp"
#include "gpm/support.hpp"

namespace gpm {

MomentPolynomial build_polynomial(const MultiIndex& a) {
  MomentPolynomial poly{a, {}};
  SupportIterator it(a);
  while (it.advance()) {
    std::vector<int> upper(it.entries().begin(), it.entries().end());
    std::vector<int> resid(it.residuals().begin(), it.residuals().end());
    BigInt d = detail::coefficient_from_parts(a.exponents(), it.entries(), it.residuals());
    poly.terms.push_back(MomentTerm{PairExponentMatrix(a.dim(), std::move(upper)),
                                    std::move(d), ResidualDegrees(std::move(resid))});
  }
  return poly;
}

namespace {

void check_dims(int poly_dim, const GaussianSpec& spec) {
  if (poly_dim != spec.dim())
    throw std::invalid_argument("index and spec dimensions do not agree");
}

Rational term_value_exact(const GaussianSpec& spec, std::span<const int> upper,
                          std::span<const int> resid, const BigInt& d) {
  const int n = spec.dim();
  Rational v(d);
  std::size_t p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++p)
      if (upper[p] > 0) v *= pow_rational(spec.cov(i, j), upper[p]);
  for (int k = 0; k < n; ++k)
    if (resid[static_cast<std::size_t>(k)] > 0)
      v *= pow_rational(spec.mu(k), resid[static_cast<std::size_t>(k)]);
  return v;
}

double dpow(double base, int exp) {
  double v = 1.0;
  for (int t = 0; t < exp; ++t) v *= base;
  return v;
}

double term_value_float(const GaussianSpec& spec, std::span<const int> upper,
                        std::span<const int> resid, const BigInt& d) {
  const int n = spec.dim();
  double v = d.convert_to<double>();
  std::size_t p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++p)
      if (upper[p] > 0) v *= dpow(spec.cov_f(i, j), upper[p]);
  for (int k = 0; k < n; ++k)
    if (resid[static_cast<std::size_t>(k)] > 0)
      v *= dpow(spec.mu_f(k), resid[static_cast<std::size_t>(k)]);
  return v;
}

struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

Rational evaluate_exact(const MomentPolynomial& poly, const GaussianSpec& spec) {
  check_dims(poly.a.dim(), spec);
  Rational acc(0);
  for (const MomentTerm& t : poly.terms)
    acc += term_value_exact(spec, t.l.upper(), t.L.degrees(), t.d);
  return acc;
}

Scalar evaluate(const MomentPolynomial& poly, const GaussianSpec& spec, NumericMode mode) {
  if (mode == NumericMode::exact) return Scalar(evaluate_exact(poly, spec));
  check_dims(poly.a.dim(), spec);
  KahanSum acc;
  for (const MomentTerm& t : poly.terms)
    acc.add(term_value_float(spec, t.l.upper(), t.L.degrees(), t.d));
  return Scalar(acc.sum);
}

Rational moment_exact(const MultiIndex& a, const GaussianSpec& spec) {
  check_dims(a.dim(), spec);
  Rational acc(0);
  SupportIterator it(a);
  while (it.advance()) {
    BigInt d = detail::coefficient_from_parts(a.exponents(), it.entries(), it.residuals());
    acc += term_value_exact(spec, it.entries(), it.residuals(), d);
  }
  return acc;
}

Scalar moment(const MultiIndex& a, const GaussianSpec& spec, NumericMode mode) {
  if (mode == NumericMode::exact) return Scalar(moment_exact(a, spec));
  check_dims(a.dim(), spec);
  KahanSum acc;
  SupportIterator it(a);
  while (it.advance()) {
    BigInt d = detail::coefficient_from_parts(a.exponents(), it.entries(), it.residuals());
    acc.add(term_value_float(spec, it.entries(), it.residuals(), d));
  }
  return Scalar(acc.sum);
}

namespace {

void render_power(std::ostream& os, const std::string& symbol, int exp,
                  SymbolicFormat format, bool& first) {
  if (exp == 0) return;
  if (!first && format == SymbolicFormat::text) os << "*";
  first = false;
  os << symbol;
  if (exp != 1) {
    if (format == SymbolicFormat::text)
      os << "^" << exp;
    else
      os << "^{" << exp << "}";
  }
}

void render_term(std::ostream& os, const MomentTerm& t, SymbolicFormat format) {
  const int n = t.l.dim();
  bool has_factor = false;
  for (int e : t.l.upper())
    if (e > 0) has_factor = true;
  for (int k = 0; k < n; ++k)
    if (t.L[k] > 0) has_factor = true;

  if (t.d != 1 || !has_factor) {
    os << t.d.str();
    if (!has_factor) return;
    if (format == SymbolicFormat::text) os << "*";
  }

  bool first = true;
  std::size_t p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++p) {
      const int e = t.l.upper()[p];
      if (e == 0) continue;
      std::ostringstream sym;
      if (format == SymbolicFormat::text)
        sym << "c" << (i + 1) << (j + 1);
      else
        sym << "\\varphi_{" << (i + 1) << (j + 1) << "}";
      render_power(os, sym.str(), e, format, first);
    }
  for (int k = 0; k < n; ++k) {
    const int e = t.L[k];
    if (e == 0) continue;
    std::ostringstream sym;
    if (format == SymbolicFormat::text)
      sym << "m" << (k + 1);
    else
      sym << "\\mu_{" << (k + 1) << "}";
    render_power(os, sym.str(), e, format, first);
  }
}

}  // namespace

std::string to_symbolic(const MomentPolynomial& poly, SymbolicFormat format) {
  if (poly.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const MomentTerm& t : poly.terms) {
    if (!first) os << " + ";
    first = false;
    render_term(os, t, format);
  }
  return os.str();
}

MomentPolynomial differentiate_wrt_cov(const MultiIndex& a, int i, int j) {
  const int n = a.dim();
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("covariance index out of range");
  if (i == j)
    throw std::invalid_argument(
        "derivative with respect to a variance entry is not supported");
  if (i > j) std::swap(i, j);

  // reduced exponents; the derivative vanishes when either factor is absent
  std::vector<int> reduced(a.exponents().begin(), a.exponents().end());
  if (a[i] == 0 || a[j] == 0) {
    reduced[static_cast<std::size_t>(i)] = std::max(a[i] - 1, 0);
    reduced[static_cast<std::size_t>(j)] = std::max(a[j] - 1, 0);
    return MomentPolynomial{MultiIndex(std::move(reduced)), {}};
  }
  reduced[static_cast<std::size_t>(i)] -= 1;
  reduced[static_cast<std::size_t>(j)] -= 1;
  MultiIndex ra(std::move(reduced));

  const std::size_t pos = upper_index(n, i, j);
  std::map<PairExponentMatrix, BigInt> merged;  // canonical order, like terms summed
  for (const MomentTerm& t : build_polynomial(a).terms) {
    const int e = t.l.upper()[pos];
    if (e == 0) continue;
    std::vector<int> upper(t.l.upper().begin(), t.l.upper().end());
    upper[pos] -= 1;
    merged[PairExponentMatrix(n, std::move(upper))] += t.d * e;
  }

  MomentPolynomial out{ra, {}};
  out.terms.reserve(merged.size());
  for (auto& [l, d] : merged) {
    ResidualDegrees L = residual_degrees(ra, l);
    out.terms.push_back(MomentTerm{l, d, std::move(L)});
  }
  return out;
}

MomentPolynomial scale_coefficients(MomentPolynomial poly, const BigInt& factor) {
  for (MomentTerm& t : poly.terms) t.d *= factor;
  return poly;
}

}  // namespace gpm
