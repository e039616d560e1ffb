#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ringforge/gf.hpp"

namespace ringforge {

/// Square matrix over a finite field, row-major element codes.
struct Mat {
  std::size_t n = 0;
  std::vector<Elem> e;

  Mat() = default;
  explicit Mat(std::size_t dim) : n(dim), e(dim * dim, 0) {}
  Mat(std::size_t dim, std::vector<Elem> entries);

  static Mat identity(std::size_t dim);

  Elem& operator()(std::size_t i, std::size_t j) { return e[i * n + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return e[i * n + j]; }

  bool is_zero() const;
  bool is_symmetric() const;

  auto operator<=>(const Mat&) const = default;
};

/// Ordered t-tuple of s x s matrices (structural matrices of a ring).
using MatTuple = std::vector<Mat>;

namespace linalg {

void check_entries(const FiniteField& f, const Mat& a);
Mat multiply(const FiniteField& f, const Mat& a, const Mat& b);
Mat add(const FiniteField& f, const Mat& a, const Mat& b);
Mat scale(const FiniteField& f, Elem c, const Mat& a);
Mat transpose(const Mat& a);
/// Entrywise application of an automorphism (M^sigma).
Mat frobenius(const FiniteField& f, Automorphism e, const Mat& a);
Elem det(const FiniteField& f, const Mat& a);
std::size_t rank(const FiniteField& f, const Mat& a);
std::optional<Mat> inverse(const FiniteField& f, const Mat& a);

/// Row-reduces `rows` (nrows x ncols, row-major) in place to reduced row
/// echelon form with zero rows last. Returns the rank.
std::size_t rref(const FiniteField& f, std::span<Elem> rows, std::size_t nrows, std::size_t ncols);

/// Solves x^T * basis = target where basis is k x n with independent rows.
/// Returns the k coefficients, or nullopt when target is outside the row space.
std::optional<std::vector<Elem>> solve_in_span(const FiniteField& f, std::span<const Elem> basis,
                                               std::size_t k, std::size_t n,
                                               std::span<const Elem> target);

/// Base-q code with entry (0,0) most significant.
std::uint64_t encode(const FiniteField& f, const Mat& a);
Mat decode(const FiniteField& f, std::size_t n, std::uint64_t code);

/// |GL(n, q)|.
std::uint64_t gl_order(std::uint64_t q, std::size_t n);
/// Visits every invertible n x n matrix in ascending code order until fn returns false.
void for_each_invertible(const FiniteField& f, std::size_t n, const std::function<bool(const Mat&)>& fn);

}  // namespace linalg
}  // namespace ringforge
