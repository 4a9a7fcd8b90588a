#include "tansec/triangles.hpp"

#include <stdexcept>
#include <string>

namespace tansec {

namespace {
const ExactInt kZero = 0;
}

Triangle::Triangle(TriangleKind kind) : kind_(kind) {
  rows_.push_back({ExactInt(1)});
}

Triangle::Triangle(TriangleKind kind, int n_max) : Triangle(kind) {
  extend(n_max);
}

const ExactInt& Triangle::cell(int n, int k) const {
  if (n < 0 || k < 0) throw std::out_of_range("Triangle::cell: negative index");
  if (n > generated_up_to()) {
    throw std::out_of_range("Triangle::cell: row " + std::to_string(n) +
                            " not generated (have " +
                            std::to_string(generated_up_to()) + ")");
  }
  if (k > n) return kZero;
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

const std::vector<ExactInt>& Triangle::row(int n) const {
  if (n < 0 || n > generated_up_to())
    throw std::out_of_range("Triangle::row: row not generated");
  return rows_[static_cast<size_t>(n)];
}

void Triangle::extend(int n_max) {
  while (generated_up_to() < n_max) append_row();
}

void Triangle::append_row() {
  const int n = generated_up_to();  // new row is n + 1
  const auto& prev = rows_.back();
  auto at = [&](const std::vector<ExactInt>& r, int k) -> const ExactInt& {
    return (k >= 0 && k < static_cast<int>(r.size())) ? r[static_cast<size_t>(k)]
                                                      : kZero;
  };

  std::vector<ExactInt> next(static_cast<size_t>(n) + 2);
  switch (kind_) {
    case TriangleKind::TangentHigher:
      for (int k = 1; k <= n + 1; ++k) {
        next[static_cast<size_t>(k)] =
            at(prev, k - 1) +
            static_cast<unsigned long>(k) * (k + 1UL) * at(prev, k + 1);
      }
      break;
    case TriangleKind::SecantHigher:
      // k = 0 runs the same recurrence with the (n,-1) entry taken as 0,
      // which makes column 0 reproduce the classical secant numbers.
      for (int k = 0; k <= n + 1; ++k) {
        next[static_cast<size_t>(k)] =
            at(prev, k - 1) + (k + 1UL) * (k + 1UL) * at(prev, k + 1);
      }
      break;
    case TriangleKind::ArctangentHigher: {
      // Needs two previous rows; row -1 is all zeros (moot: the n(n-1)
      // factor vanishes whenever it would be consulted).
      const unsigned long damp = static_cast<unsigned long>(n) *
                                 static_cast<unsigned long>(n > 0 ? n - 1 : 0);
      for (int k = 1; k <= n + 1; ++k) {
        ExactInt value = at(prev, k - 1);
        if (n >= 1 && damp != 0)
          value -= damp * at(rows_[static_cast<size_t>(n - 1)], k);
        next[static_cast<size_t>(k)] = std::move(value);
      }
      break;
    }
  }
  rows_.push_back(std::move(next));
}

Triangle tangent_triangle(int n_max) {
  return Triangle(TriangleKind::TangentHigher, n_max);
}

Triangle secant_triangle(int n_max) {
  return Triangle(TriangleKind::SecantHigher, n_max);
}

Triangle arctangent_triangle(int n_max) {
  return Triangle(TriangleKind::ArctangentHigher, n_max);
}

std::vector<ExactInt> tangent_numbers(int n_max) {
  Triangle tri(TriangleKind::TangentHigher, n_max);
  std::vector<ExactInt> t;
  t.reserve(static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) t.push_back(tri.cell(n, 1));
  return t;
}

std::vector<ExactInt> secant_numbers(int n_max) {
  Triangle tri(TriangleKind::SecantHigher, n_max);
  std::vector<ExactInt> s;
  s.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) s.push_back(tri.cell(n, 0));
  return s;
}

}  // namespace tansec
