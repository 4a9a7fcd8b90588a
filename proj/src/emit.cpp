#include "tansec/emit.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

namespace tansec {

namespace {

// Keys of the JSON "terms" object must be strings; everything numeric is
// emitted as a bare decimal token so arbitrary-precision values survive.
void json_string(std::ostream& os, std::string_view s) {
  os << '"' << s << '"';  // no escaping needed: all emitted names are ASCII
}

}  // namespace

const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::PrettyTable: return "pretty";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
    case OutputFormat::BFile: return "bfile";
  }
  return "?";
}

std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "pretty") return OutputFormat::PrettyTable;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  if (s == "bfile") return OutputFormat::BFile;
  return std::nullopt;
}

const char* kind_name(TriangleKind k) {
  switch (k) {
    case TriangleKind::TangentHigher: return "T";
    case TriangleKind::SecantHigher: return "S";
    case TriangleKind::ArctangentHigher: return "Tstar";
  }
  return "?";
}

std::optional<TriangleKind> parse_kind(std::string_view s) {
  if (s == "T") return TriangleKind::TangentHigher;
  if (s == "S") return TriangleKind::SecantHigher;
  if (s == "Tstar") return TriangleKind::ArctangentHigher;
  return std::nullopt;
}

const char* method_name(MethodTag m) {
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

std::optional<MethodTag> parse_method(std::string_view s) {
  if (s == "recurrence") return MethodTag::Recurrence;
  if (s == "power-recurrence") return MethodTag::PowerSeriesRecurrence;
  if (s == "cauchy") return MethodTag::CauchyProduct;
  if (s == "bell-a") return MethodTag::BellRecurrenceA;
  if (s == "bell-b") return MethodTag::BellRecurrenceB;
  if (s == "arctan-basis") return MethodTag::ArctanBasis;
  if (s == "schwatt") return MethodTag::SchwattDoubleSum;
  if (s == "stirling") return MethodTag::Stirling;
  if (s == "lah") return MethodTag::Lah;
  if (s == "central-factorial") return MethodTag::CentralFactorial;
  if (s == "oracle") return MethodTag::Oracle;
  return std::nullopt;
}

const char* function_name(FunctionTag f) {
  switch (f) {
    case FunctionTag::Tan: return "tan";
    case FunctionTag::Sec: return "sec";
    case FunctionTag::Cot: return "cot";
    case FunctionTag::Csc: return "csc";
    case FunctionTag::Tanh: return "tanh";
    case FunctionTag::Sech: return "sech";
    case FunctionTag::Coth: return "coth";
    case FunctionTag::Csch: return "csch";
  }
  return "?";
}

std::optional<FunctionTag> parse_function(std::string_view s) {
  if (s == "tan") return FunctionTag::Tan;
  if (s == "sec") return FunctionTag::Sec;
  if (s == "cot") return FunctionTag::Cot;
  if (s == "csc") return FunctionTag::Csc;
  if (s == "tanh") return FunctionTag::Tanh;
  if (s == "sech") return FunctionTag::Sech;
  if (s == "coth") return FunctionTag::Coth;
  if (s == "csch") return FunctionTag::Csch;
  return std::nullopt;
}

void emit_table(std::ostream& os, const Triangle& tri, OutputFormat format,
                long bfile_offset) {
  const int n_max = tri.generated_up_to();
  switch (format) {
    case OutputFormat::PrettyTable: {
      // Right-aligned columns; first token of each data row is n itself so
      // the output re-parses into exactly the triangle cells.
      std::vector<size_t> width(static_cast<size_t>(n_max) + 1);
      for (int k = 0; k <= n_max; ++k)
        width[static_cast<size_t>(k)] = std::to_string(k).size();
      std::vector<std::vector<std::string>> cells(static_cast<size_t>(n_max) +
                                                  1);
      for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
          std::string s = tri.cell(n, k).get_str();
          width[static_cast<size_t>(k)] =
              std::max(width[static_cast<size_t>(k)], s.size());
          cells[static_cast<size_t>(n)].push_back(std::move(s));
        }
      }
      const size_t label_width =
          std::max<size_t>(3, std::to_string(n_max).size());  // "n\k"
      os << std::string(label_width - 3, ' ') << "n\\k";
      for (int k = 0; k <= n_max; ++k) {
        const std::string h = std::to_string(k);
        os << "  " << std::string(width[static_cast<size_t>(k)] - h.size(), ' ')
           << h;
      }
      os << '\n';
      for (int n = 0; n <= n_max; ++n) {
        const std::string label = std::to_string(n);
        os << std::string(label_width - label.size(), ' ') << label;
        for (int k = 0; k <= n; ++k) {
          const std::string& s =
              cells[static_cast<size_t>(n)][static_cast<size_t>(k)];
          os << "  "
             << std::string(width[static_cast<size_t>(k)] - s.size(), ' ')
             << s;
        }
        os << '\n';
      }
      break;
    }
    case OutputFormat::Csv: {
      for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
          if (k > 0) os << ',';
          os << tri.cell(n, k).get_str();
        }
        os << '\n';
      }
      break;
    }
    case OutputFormat::Json: {
      os << "{\"kind\":";
      json_string(os, kind_name(tri.kind()));
      os << ",\"n_max\":" << n_max << ",\"rows\":[";
      for (int n = 0; n <= n_max; ++n) {
        if (n > 0) os << ',';
        os << '[';
        for (int k = 0; k <= n; ++k) {
          if (k > 0) os << ',';
          os << tri.cell(n, k).get_str();
        }
        os << ']';
      }
      os << "]}\n";
      break;
    }
    case OutputFormat::BFile: {
      long index = bfile_offset;
      for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k)
          os << index++ << ' ' << tri.cell(n, k).get_str() << '\n';
      break;
    }
  }
}

namespace {

const char* base_name(BaseVariable b) {
  switch (b) {
    case BaseVariable::TanX: return "tan";
    case BaseVariable::CotX: return "cot";
    case BaseVariable::TanhX: return "tanh";
    case BaseVariable::CothX: return "coth";
  }
  return "?";
}

const char* prefactor_base_name(Prefactor p) {
  switch (p) {
    case Prefactor::None: return nullptr;
    case Prefactor::SecX: return "sec";
    case Prefactor::CscX: return "csc";
    case Prefactor::SechX: return "sech";
    case Prefactor::CschX: return "csch";
  }
  return nullptr;
}

// One monomial c * base^k x, written as the continuation of a sum: the sign
// becomes the separator (" + " / " - "), magnitude 1 is dropped before a
// variable part.
void append_term(std::ostream& os, bool& first, const ExactInt& c,
                 const char* var, int power) {
  const bool negative = c < 0;
  const ExactInt magnitude = negative ? ExactInt(-c) : c;
  if (first) {
    if (negative) os << '-';
    first = false;
  } else {
    os << (negative ? " - " : " + ");
  }
  if (power == 0) {
    os << magnitude.get_str();
    return;
  }
  if (magnitude != 1) os << magnitude.get_str() << ' ';
  os << var;
  if (power > 1) os << '^' << power;
  os << " x";
}

}  // namespace

std::string polynomial_pretty(const DerivativePolynomial& poly) {
  std::ostringstream os;
  os << "D^" << poly.n << ' ' << function_name(poly.func) << " x = ";
  const char* pf = prefactor_base_name(poly.prefactor);
  if (poly.constant == 0 && poly.terms.empty()) {
    os << '0';
    return os.str();
  }
  if (pf != nullptr) os << pf << " x * (";
  bool first = true;
  if (poly.constant != 0)
    append_term(os, first, poly.constant, base_name(poly.base), 0);
  for (const auto& [power, coeff] : poly.terms)
    append_term(os, first, coeff, base_name(poly.base), power);
  if (pf != nullptr) os << ')';
  return os.str();
}

std::string polynomial_json(const DerivativePolynomial& poly) {
  std::ostringstream os;
  os << "{\"func\":\"" << function_name(poly.func) << "\",\"n\":" << poly.n
     << ",\"prefactor\":";
  const char* pf = prefactor_base_name(poly.prefactor);
  if (pf == nullptr)
    os << "null";
  else
    os << '"' << pf << '"';
  os << ",\"base\":\"" << base_name(poly.base)
     << "\",\"constant\":" << poly.constant.get_str() << ",\"terms\":{";
  bool first = true;
  for (const auto& [power, coeff] : poly.terms) {
    if (!first) os << ',';
    first = false;
    os << '"' << power << "\":" << coeff.get_str();
  }
  os << "}}";
  return os.str();
}

void emit_crosscheck(std::ostream& os, const CrossCheckReport& report,
                     OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: {
      os << "check,checked,failed\n";
      for (const CheckCounter& c : report.counters)
        os << c.name << ',' << c.checked << ',' << c.failed << '\n';
      break;
    }
    case OutputFormat::Json: {
      os << "{\"n_max\":" << report.n_max
         << ",\"pass\":" << (report.pass() ? "true" : "false")
         << ",\"checked\":" << report.total_checked()
         << ",\"failed\":" << report.total_failed() << ",\"counters\":[";
      bool first = true;
      for (const CheckCounter& c : report.counters) {
        if (!first) os << ',';
        first = false;
        os << "{\"name\":";
        json_string(os, c.name);
        os << ",\"checked\":" << c.checked << ",\"failed\":" << c.failed
           << '}';
      }
      os << "],\"first_mismatch\":";
      if (!report.first_mismatch) {
        os << "null";
      } else {
        const Mismatch& m = *report.first_mismatch;
        os << "{\"check\":";
        json_string(os, m.name);
        os << ",\"n\":" << m.n << ",\"k\":" << m.k << ",\"expected\":";
        json_string(os, m.expected);
        os << ",\"got\":";
        json_string(os, m.got);
        os << '}';
      }
      os << "}\n";
      break;
    }
    case OutputFormat::PrettyTable:
    case OutputFormat::BFile: {  // no sensible b-file form; use the report
      os << "cross-check up to n = " << report.n_max << '\n';
      size_t name_width = 0;
      for (const CheckCounter& c : report.counters)
        name_width = std::max(name_width, c.name.size());
      for (const CheckCounter& c : report.counters) {
        os << "  " << c.name << std::string(name_width - c.name.size(), ' ')
           << "  " << c.checked << " checked, " << c.failed << " failed\n";
      }
      os << "total: " << report.total_checked() << " checked, "
         << report.total_failed() << " failed\n";
      if (report.first_mismatch) {
        const Mismatch& m = *report.first_mismatch;
        os << "first mismatch: " << m.name << " at (n=" << m.n
           << ", k=" << m.k << "): expected " << m.expected << ", got "
           << m.got << '\n';
      }
      os << (report.pass() ? "PASS" : "FAIL") << '\n';
      break;
    }
  }
}

}  // namespace tansec
