#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "tansec/exact.hpp"

namespace testutil {

// "41" or "-41/152"; canonicalized so equality against computed values is
// well-defined.
inline tansec::ExactRational rat(const char* s) {
  tansec::ExactRational q(s);
  q.canonicalize();
  return q;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed CLI with the given argument string, capturing stdout;
// stderr is discarded (tests assert on codes and stdout only).
inline CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TANSEC_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {};
  CliResult result;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Parses CSV triangle output: one row per line, comma-separated integers.
inline std::vector<std::vector<tansec::ExactInt>> parse_csv_rows(
    const std::string& text) {
  std::vector<std::vector<tansec::ExactInt>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    rows.emplace_back();
    std::string cell;
    std::istringstream fields(line);
    while (std::getline(fields, cell, ','))
      rows.back().emplace_back(cell.c_str());
  }
  return rows;
}

// Parses the aligned table format: a header line, then "n v0 v1 ... vn".
inline std::vector<std::vector<tansec::ExactInt>> parse_pretty_rows(
    const std::string& text) {
  std::vector<std::vector<tansec::ExactInt>> rows;
  std::istringstream lines(text);
  std::string line;
  bool header = true;
  while (std::getline(lines, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string token;
    fields >> token;  // row label n
    rows.emplace_back();
    while (fields >> token) rows.back().emplace_back(token.c_str());
  }
  return rows;
}

// Parses {"kind":...,"n_max":...,"rows":[[...],...]}: only the integer
// tokens inside the rows array matter.
inline std::vector<std::vector<tansec::ExactInt>> parse_json_rows(
    const std::string& text) {
  std::vector<std::vector<tansec::ExactInt>> rows;
  const size_t start = text.find("\"rows\":[");
  if (start == std::string::npos) return rows;
  std::string token;
  bool in_row = false;
  for (size_t i = start + 8; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '[') {
      rows.emplace_back();
      in_row = true;
    } else if (c == '-' || (c >= '0' && c <= '9')) {
      if (in_row) token += c;
    } else {
      if (!token.empty() && in_row) {
        rows.back().emplace_back(token.c_str());
        token.clear();
      }
      if (c == ']') {
        if (!in_row) break;  // closed the outer array
        in_row = false;
      }
    }
  }
  return rows;
}

// Parses "index value" lines; checks indices are consecutive from offset and
// returns the flattened values.
inline std::vector<tansec::ExactInt> parse_bfile(const std::string& text,
                                                 long offset, bool* ok) {
  std::vector<tansec::ExactInt> values;
  *ok = true;
  std::istringstream lines(text);
  std::string line;
  long expected = offset;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    long index = 0;
    std::string value;
    fields >> index >> value;
    if (index != expected++) *ok = false;
    values.emplace_back(value.c_str());
  }
  return values;
}

}  // namespace testutil
