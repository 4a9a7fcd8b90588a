// Acceptance runner: executes the nine release criteria end to end and
// prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria, so 0 means the build is acceptable.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "tansec/crosscheck.hpp"
#include "tansec/derivative_engine.hpp"
#include "tansec/exact.hpp"
#include "tansec/formulas.hpp"
#include "tansec/triangles.hpp"

using namespace tansec;

namespace {

// Rows 0..9 of the three triangles, the published reference values.
const std::vector<std::vector<long>> kTangentRows{
    {1},
    {0, 1},
    {0, 0, 1},
    {0, 2, 0, 1},
    {0, 0, 8, 0, 1},
    {0, 16, 0, 20, 0, 1},
    {0, 0, 136, 0, 40, 0, 1},
    {0, 272, 0, 616, 0, 70, 0, 1},
    {0, 0, 3968, 0, 2016, 0, 112, 0, 1},
    {0, 7936, 0, 28160, 0, 5376, 0, 168, 0, 1},
};

const std::vector<std::vector<long>> kSecantRows{
    {1},
    {0, 1},
    {1, 0, 1},
    {0, 5, 0, 1},
    {5, 0, 14, 0, 1},
    {0, 61, 0, 30, 0, 1},
    {61, 0, 331, 0, 55, 0, 1},
    {0, 1385, 0, 1211, 0, 91, 0, 1},
    {1385, 0, 12284, 0, 3486, 0, 140, 0, 1},
    {0, 50521, 0, 68060, 0, 8526, 0, 204, 0, 1},
};

const std::vector<std::vector<long>> kArctangentRows{
    {1},
    {0, 1},
    {0, 0, 1},
    {0, -2, 0, 1},
    {0, 0, -8, 0, 1},
    {0, 24, 0, -20, 0, 1},
    {0, 0, 184, 0, -40, 0, 1},
    {0, -720, 0, 784, 0, -70, 0, 1},
    {0, 0, -8448, 0, 2464, 0, -112, 0, 1},
    {0, 40320, 0, -52352, 0, 6384, 0, -168, 0, 1},
};

std::string g_detail;  // set by a criterion on failure, printed after it

void fail_detail(std::string text) {
  if (g_detail.empty()) g_detail = std::move(text);
}

const CheckCounter* find_counter(const CrossCheckReport& report,
                                 const std::string& name) {
  for (const CheckCounter& c : report.counters)
    if (c.name == name) return &c;
  return nullptr;
}

bool counter_is(const CrossCheckReport& report, const std::string& name,
                long checked) {
  const CheckCounter* c = find_counter(report, name);
  if (c == nullptr) {
    fail_detail("missing counter '" + name + "'");
    return false;
  }
  if (c->checked != checked || c->failed != 0) {
    fail_detail("counter '" + name + "': checked " +
                std::to_string(c->checked) + " failed " +
                std::to_string(c->failed) + ", expected " +
                std::to_string(checked) + "/0");
    return false;
  }
  return true;
}

// 1. The CLI reproduces the three reference triangles up to row 9.
bool criterion_tables() {
  const struct {
    const char* kind;
    const std::vector<std::vector<long>>* rows;
  } cases[] = {{"T", &kTangentRows}, {"S", &kSecantRows},
               {"Tstar", &kArctangentRows}};
  for (const auto& c : cases) {
    const testutil::CliResult res = testutil::run_cli(
        std::string("table ") + c.kind + " --nmax 9 --format csv");
    if (res.exit_code != 0) {
      fail_detail(std::string("table ") + c.kind + " exited with " +
                  std::to_string(res.exit_code));
      return false;
    }
    const auto rows = testutil::parse_csv_rows(res.out);
    if (rows.size() != 10) {
      fail_detail(std::string("table ") + c.kind + ": expected 10 rows, got " +
                  std::to_string(rows.size()));
      return false;
    }
    for (size_t n = 0; n < 10; ++n) {
      if (rows[n].size() != n + 1) {
        fail_detail(std::string("table ") + c.kind + " row " +
                    std::to_string(n) + ": wrong length");
        return false;
      }
      for (size_t k = 0; k <= n; ++k)
        if (rows[n][k] != (*c.rows)[n][k]) {
          fail_detail(std::string("table ") + c.kind + " cell (" +
                      std::to_string(n) + "," + std::to_string(k) +
                      "): got " + rows[n][k].get_str());
          return false;
        }
    }
  }
  return true;
}

// 2. Classical tangent and secant numbers.
bool criterion_classical() {
  const std::vector<long> t_ref{1, 0, 2, 0, 16, 0, 272, 0, 7936};
  const std::vector<long> s_ref{1, 0, 1, 0, 5, 0, 61, 0, 1385};
  const std::vector<ExactInt> t = tangent_numbers(9);
  const std::vector<ExactInt> s = secant_numbers(8);
  if (t.size() != 9 || s.size() != 9) {
    fail_detail("wrong sequence lengths");
    return false;
  }
  for (size_t i = 0; i < 9; ++i) {
    if (t[i] != t_ref[i]) {
      fail_detail("T_" + std::to_string(i + 1) + " = " + t[i].get_str());
      return false;
    }
    if (s[i] != s_ref[i]) {
      fail_detail("S_" + std::to_string(i) + " = " + s[i].get_str());
      return false;
    }
  }
  return true;
}

// 3. All eight tangent routes agree with the triangle recurrence on every
//    cell up to n = 20, and the Cauchy product reproduces the secant
//    triangle on the same range.
bool criterion_eight_way() {
  const std::vector<MethodTag> methods{
      MethodTag::PowerSeriesRecurrence, MethodTag::BellRecurrenceA,
      MethodTag::BellRecurrenceB,       MethodTag::ArctanBasis,
      MethodTag::SchwattDoubleSum,      MethodTag::Stirling,
      MethodTag::Lah,                   MethodTag::CentralFactorial,
      MethodTag::CauchyProduct};
  const CrossCheckReport report = run_crosscheck(20, methods);
  if (!report.pass()) {
    if (report.first_mismatch)
      fail_detail(report.first_mismatch->name + " at (n=" +
                  std::to_string(report.first_mismatch->n) + ", k=" +
                  std::to_string(report.first_mismatch->k) + ")");
    return false;
  }
  bool ok = true;
  for (const char* name : {"power-recurrence", "bell-a", "bell-b",
                           "arctan-basis", "schwatt", "stirling", "lah",
                           "central-factorial"})
    ok = counter_is(report, name, 210) && ok;  // cells 1 <= k <= n <= 20
  ok = counter_is(report, "cauchy", 231) && ok;  // cells 0 <= k <= n <= 20
  return ok;
}

// 4. The definitional power-series oracle matches all three triangles up
//    to n = 30.
bool criterion_oracle() {
  const CrossCheckReport report =
      run_crosscheck(30, {MethodTag::Oracle});
  if (!report.pass()) {
    if (report.first_mismatch)
      fail_detail(report.first_mismatch->name + " at (n=" +
                  std::to_string(report.first_mismatch->n) + ", k=" +
                  std::to_string(report.first_mismatch->k) + ")");
    return false;
  }
  bool ok = true;
  for (const char* name : {"oracle-T", "oracle-S", "oracle-Tstar"})
    ok = counter_is(report, name, 31 * 32 / 2) && ok;
  return ok;
}

// 5. Both row-sum identities hold for n = 1..25 and the tangent-power
//    series identity holds for n = 1..10 at truncation order n + 15.
bool criterion_identities() {
  const Triangle tri = tangent_triangle(26);
  const std::vector<ExactInt> tangent = tangent_numbers(25);
  const std::vector<ExactInt> secant = secant_numbers(25);
  for (int n = 1; n <= 25; ++n) {
    if (!check_row_identity_a(n, tri, tangent, secant)) {
      fail_detail("row identity (a) fails at n = " + std::to_string(n));
      return false;
    }
    if (!check_row_identity_b(n, tri, tangent, secant)) {
      fail_detail("row identity (b) fails at n = " + std::to_string(n));
      return false;
    }
  }
  // With only the reference method requested, the run reduces to the
  // identity and series checks.
  const CrossCheckReport report =
      run_crosscheck(10, {MethodTag::Recurrence});
  if (!report.pass()) {
    fail_detail("tangent-power series identity run failed");
    return false;
  }
  return counter_is(report, "tan-power", 10);
}

// 6. The order-k basis coefficients over the classical tangent numbers.
bool criterion_basis_coefficients() {
  const std::vector<std::vector<const char*>> expected{
      {"1"},
      {"0", "1/2"},
      {"-1/6", "0", "1/12"},
      {"0", "-1/18", "0", "1/144"},
      {"1/120", "0", "-1/144", "0", "1/2880"},
      {"0", "23/10800", "0", "-1/2160", "0", "1/86400"},
      {"-1/5040", "0", "7/32400", "0", "-1/51840", "0", "1/3628800"},
      {"0", "-11/264600", "0", "11/907200", "0", "-1/1814400", "0",
       "1/203212800"},
  };
  const Triangle arctan_tri = arctangent_triangle(8);
  for (int k = 1; k <= 8; ++k) {
    const TBasisCoefficients basis = tangent_coeffs_on_T(k, arctan_tri);
    const auto& row = expected[static_cast<size_t>(k - 1)];
    if (basis.coeffs.size() != row.size()) {
      fail_detail("k = " + std::to_string(k) + ": wrong coefficient count");
      return false;
    }
    for (size_t r = 0; r < row.size(); ++r)
      if (basis.coeffs[r] != testutil::rat(row[r])) {
        fail_detail("k = " + std::to_string(k) + ", r = " +
                    std::to_string(r) + ": got " +
                    basis.coeffs[r].get_str());
        return false;
      }
  }
  return true;
}

// 7. Closed-form derivatives agree with the termwise-differentiated series
//    oracle for every function, n <= 10, at several points.
bool criterion_derivatives() {
  const FunctionTag all[] = {FunctionTag::Tan,  FunctionTag::Sec,
                             FunctionTag::Cot,  FunctionTag::Csc,
                             FunctionTag::Tanh, FunctionTag::Sech,
                             FunctionTag::Coth, FunctionTag::Csch};
  const FunctionTag hyper[] = {FunctionTag::Tanh, FunctionTag::Sech,
                               FunctionTag::Coth, FunctionTag::Csch};
  const char* names[] = {"tan", "sec", "cot", "csc",
                         "tanh", "sech", "coth", "csch"};
  const double tol = 1e-9;
  for (size_t f = 0; f < 8; ++f)
    for (int n = 0; n <= 10; ++n)
      for (double x : {0.1, 0.2, 0.3}) {
        const ValidationReport rep = validate_derivative(all[f], n, x, tol);
        if (rep.status != ValidationStatus::Pass) {
          fail_detail(std::string(names[f]) + " n=" + std::to_string(n) +
                      " x=" + std::to_string(x) + ": rel error " +
                      std::to_string(rep.rel_error));
          return false;
        }
      }
  for (FunctionTag f : hyper)
    for (int n = 0; n <= 10; ++n) {
      const ValidationReport rep = validate_derivative(f, n, 1.0, tol);
      if (rep.status != ValidationStatus::Pass) {
        fail_detail("hyperbolic n=" + std::to_string(n) + " at x=1.0");
        return false;
      }
    }
  return true;
}

// 8. Every route reduces to an exact integer on every cell of the n <= 20
//    sweep (a non-integral intermediate would throw).
bool criterion_integrality() {
  const std::vector<ExactInt> tangent = tangent_numbers(39);
  const Triangle arctan_tri = arctangent_triangle(20);
  const MethodTag routes[] = {
      MethodTag::PowerSeriesRecurrence, MethodTag::BellRecurrenceA,
      MethodTag::BellRecurrenceB,       MethodTag::ArctanBasis,
      MethodTag::SchwattDoubleSum,      MethodTag::Stirling,
      MethodTag::Lah,                   MethodTag::CentralFactorial};
  long evaluated = 0;
  for (MethodTag m : routes)
    for (int n = 0; n <= 20; ++n)
      for (int k = 0; k <= n; ++k) {
        try {
          (void)tangent_route_value(m, n, k, tangent, arctan_tri);
          ++evaluated;
        } catch (const inconsistency_error& e) {
          fail_detail(std::string("(n=") + std::to_string(n) + ", k=" +
                      std::to_string(k) + "): " + e.what());
          return false;
        }
      }
  if (evaluated != 8 * 231) {
    fail_detail("expected 1848 evaluations, made " +
                std::to_string(evaluated));
    return false;
  }
  return true;
}

// 9. The triangle recurrence scales to n = 300 (values hundreds of digits
//    long) and the CLI cross-check suite exits cleanly.
bool criterion_scale() {
  const Triangle tri = tangent_triangle(300);
  if (tri.generated_up_to() != 300) {
    fail_detail("triangle not generated to 300");
    return false;
  }
  const std::string t299 = tri.cell(299, 1).get_str();
  if (t299.size() < 100) {
    fail_detail("T_299 has only " + std::to_string(t299.size()) + " digits");
    return false;
  }
  if (tri.cell(300, 300) != 1 || tri.cell(300, 1) != 0) {
    fail_detail("row 300 boundary cells are wrong");
    return false;
  }
  const testutil::CliResult res = testutil::run_cli("crosscheck --nmax 20");
  if (res.exit_code != 0) {
    fail_detail("CLI crosscheck exited with " +
                std::to_string(res.exit_code));
    return false;
  }
  return true;
}

struct Criterion {
  const char* label;
  std::function<bool()> check;
  std::optional<double> budget_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"CLI reproduces the three reference triangles up to row 9",
       criterion_tables, 1.0},
      {"classical tangent and secant numbers", criterion_classical, {}},
      {"eight tangent routes and Cauchy secant agree up to n = 20",
       criterion_eight_way, 30.0},
      {"definitional series oracle matches all triangles up to n = 30",
       criterion_oracle, 30.0},
      {"row-sum identities (n <= 25) and tangent-power series (n <= 10)",
       criterion_identities, {}},
      {"order-k basis coefficients over classical tangent numbers, k <= 8",
       criterion_basis_coefficients, {}},
      {"closed-form derivatives match the series oracle at 1e-9",
       criterion_derivatives, 10.0},
      {"every route is exactly integral over the full n <= 20 sweep",
       criterion_integrality, {}},
      {"triangle scales to n = 300 and the CLI cross-check is clean",
       criterion_scale, 10.0},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    g_detail.clear();
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check();
    } catch (const std::exception& e) {
      fail_detail(std::string("unexpected exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    if (ok && c.budget_seconds && seconds > *c.budget_seconds) {
      ok = false;
      fail_detail("over time budget of " +
                  std::to_string(*c.budget_seconds) + " s");
    }
    std::printf("%s  %zu. %s (%.2f s)\n", ok ? "PASS" : "FAIL", i + 1,
                c.label, seconds);
    if (!ok) {
      ++failures;
      if (!g_detail.empty()) std::printf("      %s\n", g_detail.c_str());
    }
  }
  if (failures == 0)
    std::printf("all %zu acceptance criteria satisfied\n", criteria.size());
  else
    std::printf("%d of %zu acceptance criteria failed\n", failures,
                criteria.size());
  return failures;
}
