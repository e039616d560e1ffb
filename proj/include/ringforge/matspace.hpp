/**
 * @file matspace.hpp
 * @brief Spaces of s x s matrices under twisted congruence.
 *
 * The acting group is GL(s, F) x Aut(F) with (C, e) sending A to
 * C^T A^e C. Subspaces are identified by the reduced row echelon form of their
 * coordinate matrix (each member flattened row-major), so two spanning tuples of
 * the same subspace always produce the same SubspaceKey.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "ringforge/matrix.hpp"

namespace ringforge {

/// Canonical encoding of a subspace of M_s(F).
struct SubspaceKey {
  std::size_t s = 0;
  std::size_t rank = 0;
  /// rank x s^2 RREF rows, row-major.
  std::vector<Elem> rref;

  MatTuple basis() const;
  auto operator<=>(const SubspaceKey&) const = default;
};

struct CompatReport {
  bool independent = false;
  /// Zero-based indices i whose row and column vanish in every member.
  std::vector<std::size_t> dead_indices;
  bool verdict = false;
};

/// C^T A^e C. Throws SingularC or ShapeMismatch.
Mat congruence_twist(const FiniteField& f, const Mat& c, Automorphism e, const Mat& a);

SubspaceKey subspace_key(const FiniteField& f, const MatTuple& tuple);

/// Packs a key base q, first entry most significant. Order-preserving among keys
/// of equal rank and shape. Throws RangeError if q^(rank*s^2) exceeds 2^64.
std::uint64_t pack_key(const FiniteField& f, const SubspaceKey& key);
SubspaceKey unpack_key(const FiniteField& f, std::size_t s, std::size_t rank, std::uint64_t code);
bool key_fits_u64(unsigned q, std::size_t s, std::size_t t);

/// Visits every t-dimensional subspace of M_s(F) exactly once, in ascending key
/// order, until fn returns false. The span handed to fn holds the t x s^2 RREF.
void for_each_subspace(const FiniteField& f, std::size_t s, std::size_t t,
                       const std::function<bool(std::span<const Elem>)>& fn);
std::vector<SubspaceKey> enumerate_subspaces(const FiniteField& f, std::size_t s, std::size_t t);
std::uint64_t count_subspaces(const FiniteField& f, std::size_t s, std::size_t t);

CompatReport tuple_compatible(const FiniteField& f, const MatTuple& tuple);
/// Dead indices of a row block (k x s^2, row-major).
std::vector<std::size_t> dead_indices(std::span<const Elem> rows, std::size_t k, std::size_t s);

/// Least-code representatives of the cosets of {1, -1} in F*.
std::vector<Elem> sign_coset_reps(const FiniteField& f);

/// Symmetric congruence class representatives of positive rank <= s.
std::vector<Mat> newman_symmetric_reps(const FiniteField& f, std::size_t s);

/// Full congruence class representative list for s in {2, 3}, zero matrix included.
std::vector<Mat> case_rep_list(const FiniteField& f, std::size_t s);

}  // namespace ringforge
