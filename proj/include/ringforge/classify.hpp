/**
 * @file classify.hpp
 * @brief Orbit enumeration of matrices and matrix subspaces.
 *
 * Objects are visited in ascending key order. The first object not yet reached
 * by an earlier orbit is the minimum of its own orbit and becomes the canonical
 * representative. Orbits are closed either by sweeping the whole acting group
 * or by a breadth-first search over a generating set:
 *
 *   - transvections I + x^k E_ij (i != j, 0 <= k < r),
 *   - diag(w, 1, ..., 1) with w primitive,
 *   - the Frobenius automorphism with C = I (subspace action only).
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringforge/matspace.hpp"

namespace ringforge {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000'000ULL;
/// Above this many estimated sweep actions the BFS strategy is used.
inline constexpr std::uint64_t kSweepLimit = 1'000'000'000ULL;

enum class Strategy { automatic, sweep, bfs };

struct ClassifyOptions {
  bool use_frobenius = true;
  bool filter_compatible = false;
  bool symmetric_only = false;  // congruence only
  unsigned workers = 1;
  std::uint64_t budget = kDefaultBudget;
  Strategy strategy = Strategy::automatic;
};

struct ClassInfo {
  /// Canonical representative: the subspace RREF basis, or the single matrix.
  MatTuple rep;
  std::vector<Elem> rep_rows;
  std::uint64_t orbit_size = 0;
  bool contains_compatible = false;
  bool commutative_capable = false;
};

struct ClassReport {
  std::string kind;  // "subspaces" or "congruence"
  unsigned p = 0, r = 0, q = 0;
  std::size_t s = 0, t = 0;
  ClassifyOptions options;
  Strategy strategy_used = Strategy::sweep;
  std::uint64_t class_count = 0;
  std::vector<ClassInfo> classes;
  /// Sum of reported orbit sizes.
  std::uint64_t total_objects = 0;
  /// Size of the ground set before filtering.
  std::uint64_t ground_objects = 0;
  std::uint64_t group_order = 0;

  std::uint64_t commutative_count() const;
};

/// Orbits of t-dimensional subspaces of M_s(F) under S -> span{C^T A^sigma C}.
/// Throws RangeError or BudgetExceeded.
ClassReport classify_subspaces(const FiniteField& f, std::size_t s, std::size_t t, const ClassifyOptions& opts = {});

/// Orbits of s x s matrices under A -> C^T A C.
ClassReport classify_congruence(const FiniteField& f, std::size_t s, const ClassifyOptions& opts = {});

struct OrbitResult {
  std::vector<Elem> canonical_rows;
  std::uint64_t orbit_size = 0;
  std::vector<std::vector<Elem>> members;  // filled on request, ascending
};

/// Generator-BFS closure of one subspace (subspace action) or matrix
/// (congruence action).
OrbitResult orbit_of(const FiniteField& f, const SubspaceKey& start, const ClassifyOptions& opts = {},
                     bool keep_members = false);
OrbitResult orbit_of(const FiniteField& f, const Mat& start, const ClassifyOptions& opts = {},
                     bool keep_members = false);

/// Acting group order: |GL(s,q)| times r when the Frobenius is included.
std::uint64_t acting_group_order(const FiniteField& f, std::size_t s, bool with_frobenius);

std::string to_string(Strategy s);

}  // namespace ringforge
