#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "tansec/crosscheck.hpp"
#include "tansec/derivative_engine.hpp"
#include "tansec/formulas.hpp"
#include "tansec/triangles.hpp"

namespace tansec {

enum class OutputFormat { PrettyTable, Csv, Json, BFile };

// Name/parse pairs for every enum the CLI speaks. Parse functions return
// nullopt on unknown input; the CLI turns that into a usage error.
const char* format_name(OutputFormat f);
std::optional<OutputFormat> parse_format(std::string_view s);

const char* kind_name(TriangleKind k);  // "T", "S", "Tstar"
std::optional<TriangleKind> parse_kind(std::string_view s);

const char* method_name(MethodTag m);
std::optional<MethodTag> parse_method(std::string_view s);

const char* function_name(FunctionTag f);
std::optional<FunctionTag> parse_function(std::string_view s);

// Writes rows 0..generated_up_to. Csv: one comma-joined line per row.
// Json: single line {"kind":...,"n_max":...,"rows":[[...],...]}, entries as
// plain (arbitrary-precision) integer tokens. BFile: "index value" lines,
// rows flattened n ascending then k ascending, index starting at
// bfile_offset.
void emit_table(std::ostream& os, const Triangle& tri, OutputFormat format,
                long bfile_offset = 0);

std::string polynomial_pretty(const DerivativePolynomial& poly);
std::string polynomial_json(const DerivativePolynomial& poly);

void emit_crosscheck(std::ostream& os, const CrossCheckReport& report,
                     OutputFormat format);

}  // namespace tansec
