// gpm: batch front end for exact product moments of multivariate Gaussian
// random variables. Subcommands: compute, symbolic, verify, terms, bench.
//
// Exit codes: 0 success (or verify PASS), 1 verify FAIL, 2 usage or
// validation error, 3 internal invariant failure.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpm/coefficients.hpp"
#include "gpm/evaluator.hpp"
#include "gpm/oracles.hpp"
#include "gpm/support.hpp"

namespace {

using nlohmann::json;

std::vector<int> parse_exponent_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(token, &used);
      if (used != token.size())
        throw std::invalid_argument("bad exponent '" + token + "'");
      out.push_back(value);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("exponent out of range: '" + token + "'");
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad exponent '" + token + "'");
    }
  }
  return out;
}

gpm::Rational rational_from_json(const json& value) {
  if (value.is_string()) return gpm::parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return gpm::Rational(value.get<std::int64_t>());
  if (value.is_number_float()) return gpm::Rational(value.get<double>());
  throw std::invalid_argument("numeric entries must be numbers or rational strings");
}

gpm::GaussianSpec load_spec(const std::string& path, gpm::NumericMode mode) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  json doc = json::parse(in);

  const json& mu_doc = doc.at("mu");
  const json& cov_doc = doc.at("cov");
  if (!mu_doc.is_array() || !cov_doc.is_array())
    throw std::invalid_argument("'mu' must be an array and 'cov' a matrix");

  std::vector<gpm::Rational> mu;
  for (const json& v : mu_doc) mu.push_back(rational_from_json(v));
  std::vector<std::vector<gpm::Rational>> cov;
  for (const json& row_doc : cov_doc) {
    if (!row_doc.is_array()) throw std::invalid_argument("'cov' must be a matrix");
    std::vector<gpm::Rational>& row = cov.emplace_back();
    for (const json& v : row_doc) row.push_back(rational_from_json(v));
  }

  if (mode == gpm::NumericMode::exact) return gpm::GaussianSpec(std::move(mu), cov);

  std::vector<double> mu_d;
  for (const auto& v : mu) mu_d.push_back(v.convert_to<double>());
  std::vector<std::vector<double>> cov_d;
  for (const auto& row : cov) {
    std::vector<double>& out = cov_d.emplace_back();
    for (const auto& v : row) out.push_back(v.convert_to<double>());
  }
  return gpm::GaussianSpec(mu_d, cov_d);
}

// dense rational spec used by `bench` when no input file is given:
// Hilbert covariance phi_ij = 1/(i+j+1) and means 3/2
gpm::GaussianSpec default_bench_spec(int n) {
  std::vector<gpm::Rational> mu(static_cast<std::size_t>(n), gpm::Rational(3, 2));
  std::vector<std::vector<gpm::Rational>> cov(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    cov[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      cov[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          gpm::Rational(1, i + j + 1);
  }
  return gpm::GaussianSpec(std::move(mu), cov);
}

gpm::NumericMode mode_from_string(const std::string& name) {
  if (name == "exact") return gpm::NumericMode::exact;
  if (name == "float") return gpm::NumericMode::floating;
  throw std::invalid_argument("mode must be 'exact' or 'float'");
}

int report_outcome(bool pass) {
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int run_compute(const gpm::MultiIndex& a, const std::string& input,
                const std::string& mode_name) {
  const gpm::NumericMode mode = mode_from_string(mode_name);
  gpm::GaussianSpec spec = load_spec(input, mode);
  gpm::Scalar value = gpm::moment(a, spec, mode);
  std::cout << "value " << value.str() << "\n";
  std::cout << "terms " << gpm::count_support(a).str() << "\n";
  return 0;
}

int run_symbolic(const gpm::MultiIndex& a, const std::string& format) {
  gpm::SymbolicFormat fmt;
  if (format == "text")
    fmt = gpm::SymbolicFormat::text;
  else if (format == "latex")
    fmt = gpm::SymbolicFormat::latex;
  else
    throw std::invalid_argument("format must be 'text' or 'latex'");
  std::cout << gpm::to_symbolic(gpm::build_polynomial(a), fmt) << "\n";
  return 0;
}

int verify_stein(const gpm::MultiIndex& a, const std::string& input) {
  gpm::GaussianSpec spec = load_spec(input, gpm::NumericMode::exact);
  gpm::Rational formula = gpm::moment_exact(a, spec);
  gpm::Rational oracle = gpm::stein_moment(a, spec);
  std::cout << "formula " << gpm::to_string(formula) << "\n";
  std::cout << "stein " << gpm::to_string(oracle) << "\n";
  return report_outcome(formula == oracle);
}

int verify_isserlis(const gpm::MultiIndex& a, const std::string& input) {
  // applies to the centered spec: only the covariance enters
  gpm::GaussianSpec spec = load_spec(input, gpm::NumericMode::exact).with_zero_mean();
  gpm::Rational formula = gpm::moment_exact(a, spec);
  gpm::Rational oracle = gpm::isserlis_sum(a, spec);
  std::cout << "formula " << gpm::to_string(formula) << "\n";
  std::cout << "isserlis " << gpm::to_string(oracle) << "\n";
  return report_outcome(formula == oracle);
}

int verify_mc(const gpm::MultiIndex& a, const std::string& input,
              std::int64_t samples, std::uint64_t seed) {
  gpm::GaussianSpec spec = load_spec(input, gpm::NumericMode::exact);
  const double exact = gpm::moment_exact(a, spec).convert_to<double>();
  gpm::McReport report = gpm::mc_estimate(a, spec, samples, seed);
  const double diff = std::abs(report.estimate - exact);
  const double bound = 5.0 * report.std_error;
  std::cout << "exact " << gpm::to_string(exact) << "\n";
  std::cout << "estimate " << gpm::to_string(report.estimate) << "\n";
  std::cout << "std_error " << gpm::to_string(report.std_error) << "\n";
  std::cout << "abs_diff " << gpm::to_string(diff) << "\n";
  std::cout << "bound " << gpm::to_string(bound) << "\n";
  return report_outcome(diff <= bound);
}

int verify_price(const gpm::MultiIndex& a, int i1, int j1) {
  if (i1 < 1 || j1 < 1 || i1 > a.dim() || j1 > a.dim())
    throw std::invalid_argument("indices --i/--j out of range");
  const int i = i1 - 1, j = j1 - 1;
  gpm::MomentPolynomial lhs = gpm::differentiate_wrt_cov(a, i, j);

  gpm::MomentPolynomial rhs{lhs.a, {}};
  if (a[i] >= 1 && a[j] >= 1) {
    std::vector<int> reduced(a.exponents().begin(), a.exponents().end());
    reduced[static_cast<std::size_t>(i)] -= 1;
    reduced[static_cast<std::size_t>(j)] -= 1;
    rhs = gpm::scale_coefficients(gpm::build_polynomial(gpm::MultiIndex(reduced)),
                                  gpm::BigInt(a[i]) * a[j]);
  }
  std::cout << "derivative " << gpm::to_symbolic(lhs, gpm::SymbolicFormat::text) << "\n";
  std::cout << "scaled " << gpm::to_symbolic(rhs, gpm::SymbolicFormat::text) << "\n";
  return report_outcome(lhs == rhs);
}

int verify_factor(const gpm::MultiIndex& a, const std::string& input, int split) {
  gpm::GaussianSpec spec = load_spec(input, gpm::NumericMode::exact);
  const int n = spec.dim();
  if (a.dim() != n) throw std::invalid_argument("index and spec dimensions do not agree");
  if (split == 0) {
    // first cut with an all-zero cross block
    for (int s = 1; s < n && split == 0; ++s) {
      bool zero = true;
      for (int i = 0; i < s && zero; ++i)
        for (int j = s; j < n && zero; ++j)
          if (spec.cov(i, j) != 0) zero = false;
      if (zero) split = s;
    }
    if (split == 0)
      throw std::invalid_argument("no block-diagonal split found; pass --split");
  }
  if (split < 1 || split >= n) throw std::invalid_argument("--split out of range");

  std::vector<int> left(a.exponents().begin(), a.exponents().begin() + split);
  std::vector<int> right(a.exponents().begin() + split, a.exponents().end());
  gpm::Rational whole = gpm::moment_exact(a, spec);
  gpm::Rational product =
      gpm::moment_exact(gpm::MultiIndex(left), spec.restricted(0, split)) *
      gpm::moment_exact(gpm::MultiIndex(right), spec.restricted(split, n - split));
  std::cout << "whole " << gpm::to_string(whole) << "\n";
  std::cout << "product " << gpm::to_string(product) << "\n";
  return report_outcome(whole == product);
}

int verify_recursive(const gpm::MultiIndex& a) {
  long checked = 0;
  for (const gpm::PairExponentMatrix& l : gpm::enumerate_support(a)) {
    gpm::BigInt closed = gpm::coefficient_closed_form(a, l);
    gpm::BigInt recursive = gpm::coefficient_recursive(a, l);
    ++checked;
    if (closed != recursive) {
      std::cout << "checked " << checked << "\n";
      std::cout << "closed_form " << closed.str() << "\n";
      std::cout << "recursive " << recursive.str() << "\n";
      return report_outcome(false);
    }
  }
  std::cout << "checked " << checked << "\n";
  return report_outcome(true);
}

int run_bench(const gpm::MultiIndex& a, const std::string& input, int reps,
              const std::string& mode_name) {
  const gpm::NumericMode mode = mode_from_string(mode_name);
  gpm::GaussianSpec spec =
      input.empty() ? default_bench_spec(a.dim()) : load_spec(input, mode);
  if (spec.dim() != a.dim())
    throw std::invalid_argument("index and spec dimensions do not agree");

  using clock = std::chrono::steady_clock;
  const gpm::BigInt terms = gpm::count_support(a);
  std::cout << "terms " << terms.str() << "\n";

  const double term_count = terms.convert_to<double>();
  for (int r = 1; r <= reps; ++r) {
    auto t0 = clock::now();
    gpm::SupportIterator it(a);
    while (it.advance()) {
    }
    auto t1 = clock::now();
    gpm::Scalar value = gpm::moment(a, spec, mode);
    auto t2 = clock::now();
    (void)value;

    const double enum_s = std::chrono::duration<double>(t1 - t0).count();
    const double eval_s = std::chrono::duration<double>(t2 - t1).count();
    std::cout << std::fixed << std::setprecision(6) << "rep " << r << " enum_seconds "
              << enum_s << " eval_seconds " << eval_s << " terms_per_second "
              << std::setprecision(1) << (eval_s > 0 ? term_count / eval_s : 0.0)
              << "\n";
    std::cout.unsetf(std::ios::fixed);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact product moments of multivariate Gaussian random variables"};
  app.require_subcommand(1);

  std::string a_text, input, mode = "exact", format = "text", oracle;
  std::int64_t samples = 1000000;
  std::uint64_t seed = 1;
  int price_i = 0, price_j = 0, split = 0, reps = 1;

  CLI::App* compute = app.add_subcommand("compute", "evaluate a product moment");
  compute->add_option("--a", a_text, "exponents, comma separated")->required();
  compute->add_option("--input", input, "JSON file with mu and cov")->required();
  compute->add_option("--mode", mode, "exact|float");

  CLI::App* symbolic = app.add_subcommand("symbolic", "print the moment polynomial");
  symbolic->add_option("--a", a_text, "exponents, comma separated")->required();
  symbolic->add_option("--format", format, "text|latex");

  CLI::App* verify = app.add_subcommand("verify", "check the formula against an oracle");
  verify->add_option("--a", a_text, "exponents, comma separated")->required();
  verify->add_option("--oracle", oracle, "stein|isserlis|mc|price|factor|recursive")
      ->required();
  verify->add_option("--input", input, "JSON file with mu and cov");
  verify->add_option("--samples", samples, "Monte Carlo sample count");
  verify->add_option("--seed", seed, "Monte Carlo seed");
  verify->add_option("--i", price_i, "first covariance index (1-based)");
  verify->add_option("--j", price_j, "second covariance index (1-based)");
  verify->add_option("--split", split, "size of the first block (factor oracle)");

  CLI::App* terms = app.add_subcommand("terms", "print the number of terms");
  terms->add_option("--a", a_text, "exponents, comma separated")->required();

  CLI::App* bench = app.add_subcommand("bench", "time enumeration and evaluation");
  bench->add_option("--a", a_text, "exponents, comma separated")->required();
  bench->add_option("--reps", reps, "number of repetitions")->check(CLI::PositiveNumber);
  bench->add_option("--input", input, "JSON file with mu and cov");
  bench->add_option("--mode", mode, "exact|float");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    gpm::MultiIndex a(parse_exponent_list(a_text));
    if (compute->parsed()) return run_compute(a, input, mode);
    if (symbolic->parsed()) return run_symbolic(a, format);
    if (terms->parsed()) {
      std::cout << gpm::count_support(a).str() << "\n";
      return 0;
    }
    if (bench->parsed()) return run_bench(a, input, reps, mode);
    if (verify->parsed()) {
      const bool needs_input =
          oracle == "stein" || oracle == "isserlis" || oracle == "mc" || oracle == "factor";
      if (needs_input && input.empty())
        throw std::invalid_argument("--input is required for this oracle");
      if (oracle == "stein") return verify_stein(a, input);
      if (oracle == "isserlis") return verify_isserlis(a, input);
      if (oracle == "mc") return verify_mc(a, input, samples, seed);
      if (oracle == "price") {
        if (price_i == 0 || price_j == 0)
          throw std::invalid_argument("--i and --j are required for the price oracle");
        return verify_price(a, price_i, price_j);
      }
      if (oracle == "factor") return verify_factor(a, input, split);
      if (oracle == "recursive") return verify_recursive(a);
      throw std::invalid_argument("unknown oracle '" + oracle + "'");
    }
    return 2;
  } catch (const gpm::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
