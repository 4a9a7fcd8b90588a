#pragma once

#include <vector>

#include "tansec/exact.hpp"

namespace tansec {

enum class TriangleKind { TangentHigher, SecantHigher, ArctangentHigher };

// Lower-triangular table of exact integers grown row by row from the
// defining recurrence of its kind:
//
//   TangentHigher     T(n+1,k) = T(n,k-1) + k(k+1) T(n,k+1)
//   SecantHigher      S(n+1,k) = S(n,k-1) + (k+1)^2 S(n,k+1)
//   ArctangentHigher  A(n+1,k) = A(n,k-1) - n(n-1) A(n-1,k)
//
// all seeded with entry (0,0) = 1 and column 0 zero for n >= 1, except the
// secant triangle whose column 0 is self-generated by running its
// recurrence at k = 0 with the entry (n,-1) taken as 0 (so that column 0
// reproduces the classical secant numbers without an external seed).
//
// Rows are append-only: extending the triangle never rewrites an existing
// entry, so a snapshot taken by reference stays valid across extensions.
class Triangle {
 public:
  explicit Triangle(TriangleKind kind);
  Triangle(TriangleKind kind, int n_max);

  TriangleKind kind() const { return kind_; }
  int generated_up_to() const { return static_cast<int>(rows_.size()) - 1; }

  // Entry (n, k). Returns 0 for k > n (such entries are never stored);
  // throws std::out_of_range when n exceeds generated_up_to().
  const ExactInt& cell(int n, int k) const;

  const std::vector<ExactInt>& row(int n) const;

  // Appends rows until generated_up_to() >= n_max.
  void extend(int n_max);

 private:
  void append_row();

  TriangleKind kind_;
  std::vector<std::vector<ExactInt>> rows_;
};

Triangle tangent_triangle(int n_max);
Triangle secant_triangle(int n_max);
Triangle arctangent_triangle(int n_max);

// Classical tangent numbers [T_1 .. T_n_max] (column k = 1 of the tangent
// triangle); index i holds T_{i+1}.
std::vector<ExactInt> tangent_numbers(int n_max);

// Classical secant numbers [S_0 .. S_n_max] (column k = 0 of the secant
// triangle); index i holds S_i.
std::vector<ExactInt> secant_numbers(int n_max);

}  // namespace tansec
