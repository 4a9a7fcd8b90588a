#include "tansec/crosscheck.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

#include "tansec/series_oracle.hpp"
#include "tansec/triangles.hpp"

namespace tansec {

namespace {

const char* counter_label(MethodTag m) {
  switch (m) {
    case MethodTag::Recurrence: return "recurrence";
    case MethodTag::PowerSeriesRecurrence: return "power-recurrence";
    case MethodTag::CauchyProduct: return "cauchy";
    case MethodTag::BellRecurrenceA: return "bell-a";
    case MethodTag::BellRecurrenceB: return "bell-b";
    case MethodTag::ArctanBasis: return "arctan-basis";
    case MethodTag::SchwattDoubleSum: return "schwatt";
    case MethodTag::Stirling: return "stirling";
    case MethodTag::Lah: return "lah";
    case MethodTag::CentralFactorial: return "central-factorial";
    case MethodTag::Oracle: return "oracle";
  }
  return "?";
}

struct Runner {
  CrossCheckReport report;
  // Deque, not vector: handed-out references must survive later insertions.
  std::deque<CheckCounter> counters;

  CheckCounter& counter(std::string name) {
    counters.push_back(CheckCounter{std::move(name), 0, 0});
    return counters.back();
  }

  void record(CheckCounter& c, int n, int k, const ExactInt& expected,
              const ExactInt& got) {
    ++c.checked;
    if (expected == got) return;
    ++c.failed;
    if (!report.first_mismatch)
      report.first_mismatch =
          Mismatch{c.name, n, k, expected.get_str(), got.get_str()};
  }

  void record_failure(CheckCounter& c, int n, int k, std::string expected,
                      std::string got) {
    ++c.checked;
    ++c.failed;
    if (!report.first_mismatch)
      report.first_mismatch =
          Mismatch{c.name, n, k, std::move(expected), std::move(got)};
  }
};

TruncatedSeries tan_series(int order) {
  return series_div(series_sin(order), series_cos(order));
}

}  // namespace

bool CrossCheckReport::pass() const { return total_failed() == 0; }

long CrossCheckReport::total_checked() const {
  long total = 0;
  for (const CheckCounter& c : counters) total += c.checked;
  return total;
}

long CrossCheckReport::total_failed() const {
  long total = 0;
  for (const CheckCounter& c : counters) total += c.failed;
  return total;
}

CrossCheckReport run_crosscheck(int n_max, std::vector<MethodTag> methods) {
  if (n_max < 0)
    throw std::invalid_argument("run_crosscheck: n_max must be nonnegative");
  if (methods.empty())
    methods = {MethodTag::PowerSeriesRecurrence, MethodTag::CauchyProduct,
               MethodTag::BellRecurrenceA,       MethodTag::BellRecurrenceB,
               MethodTag::ArctanBasis,           MethodTag::SchwattDoubleSum,
               MethodTag::Stirling,              MethodTag::Lah,
               MethodTag::CentralFactorial,      MethodTag::Oracle};

  Runner runner;
  runner.report.n_max = n_max;

  // Shared reference data. The identities need row n_max + 1 of the tangent
  // triangle; the arctangent basis reaches T_{n + k - 1} <= T_{2 n_max - 1}.
  const Triangle tangent_tri(TriangleKind::TangentHigher, n_max + 1);
  const Triangle secant_tri(TriangleKind::SecantHigher, n_max);
  const Triangle arctan_tri(TriangleKind::ArctangentHigher, n_max);
  const std::vector<ExactInt> tangent =
      tangent_numbers(std::max(2 * n_max, 1));
  const std::vector<ExactInt> secant = secant_numbers(n_max);

  for (const MethodTag m : methods) {
    if (is_tangent_route(m)) {
      CheckCounter& c = runner.counter(counter_label(m));
      for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= n; ++k) {
          try {
            runner.record(c, n, k, tangent_tri.cell(n, k),
                          tangent_route_value(m, n, k, tangent, arctan_tri));
          } catch (const inconsistency_error& e) {
            runner.record_failure(c, n, k, tangent_tri.cell(n, k).get_str(),
                                  e.what());
          }
        }
      }
    } else if (m == MethodTag::CauchyProduct) {
      CheckCounter& c = runner.counter(counter_label(m));
      for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k)
          runner.record(c, n, k, secant_tri.cell(n, k),
                        secant_via_cauchy(n, k, tangent_tri, secant));
    } else if (m == MethodTag::Oracle) {
      CheckCounter& ct = runner.counter("oracle-T");
      CheckCounter& cs = runner.counter("oracle-S");
      CheckCounter& ca = runner.counter("oracle-Tstar");
      for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
          try {
            runner.record(ct, n, k, tangent_tri.cell(n, k),
                          definitional_T(n, k));
            runner.record(cs, n, k, secant_tri.cell(n, k),
                          definitional_S(n, k));
            runner.record(ca, n, k, arctan_tri.cell(n, k),
                          definitional_Tstar(n, k));
          } catch (const inconsistency_error& e) {
            runner.record_failure(ct, n, k, "integral coefficient", e.what());
          }
        }
      }
    }
  }

  // Row-sum identities, always on.
  {
    CheckCounter& ca = runner.counter("row-identity-a");
    CheckCounter& cb = runner.counter("row-identity-b");
    for (int n = 1; n <= n_max; ++n) {
      ++ca.checked;
      if (!check_row_identity_a(n, tangent_tri, tangent, secant)) {
        ++ca.failed;
        if (!runner.report.first_mismatch)
          runner.report.first_mismatch =
              Mismatch{ca.name, n, 0, "identity holds", "identity violated"};
      }
      ++cb.checked;
      if (!check_row_identity_b(n, tangent_tri, tangent, secant)) {
        ++cb.failed;
        if (!runner.report.first_mismatch)
          runner.report.first_mismatch =
              Mismatch{cb.name, n, 0, "identity holds", "identity violated"};
      }
    }
  }

  // tan^n rebuilt on the derivative basis, compared through order n + 15.
  // The base series carries n - 1 extra orders per differentiation pass.
  {
    CheckCounter& c = runner.counter("tan-power");
    for (int n = 1; n <= n_max; ++n) {
      const TanPowerExpansion expansion = tan_power_expansion(n, arctan_tri);
      const TruncatedSeries lhs =
          series_pow(tan_series(n + 15), static_cast<unsigned long>(n));
      TruncatedSeries rhs =
          TruncatedSeries::constant(expansion.constant, n + 15);
      TruncatedSeries diff = tan_series(2 * n + 14);
      for (int r = 0; r < n; ++r) {
        if (expansion.coeffs[static_cast<size_t>(r)] != 0)
          rhs = series_add(
              rhs, series_scale(expansion.coeffs[static_cast<size_t>(r)], diff));
        diff = series_derivative(diff);
      }
      ++c.checked;
      for (int i = 0; i <= n + 15; ++i) {
        if (lhs.coeff(i) == rhs.coeff(i)) continue;
        ++c.failed;
        if (!runner.report.first_mismatch)
          runner.report.first_mismatch = Mismatch{
              c.name, n, i, lhs.coeff(i).get_str(), rhs.coeff(i).get_str()};
        break;
      }
    }
  }

  runner.report.counters.assign(runner.counters.begin(),
                                runner.counters.end());
  return runner.report;
}

}  // namespace tansec
