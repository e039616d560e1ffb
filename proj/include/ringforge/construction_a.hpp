/**
 * @file construction_a.hpp
 * @brief Rings R = F + U + V + W built from structural matrices.
 *
 * V is stored merged into the W block: w has t + lambda coordinates and the
 * structural coefficients of the last lambda coordinates are zero. The product
 * of (a0, u, w) and (b0, u', w') is
 *
 *   F: a0 b0
 *   U: a0 u'_i + u_i b0^sigma_i
 *   W: a0 w'_k + w_k b0^theta_k + sum_ij a_ij^k u_i (u'_j)^sigma_i   (k <= t)
 */
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ringforge/matspace.hpp"

namespace ringforge {

struct RingSpec {
  FiniteField field;
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t lambda = 0;
  MatTuple matrices;
  std::vector<Automorphism> sigma;  // length s
  std::vector<Automorphism> theta;  // length t + lambda

  /// Spec with every automorphism the identity.
  static RingSpec central(const FiniteField& f, MatTuple matrices, std::size_t lambda = 0);

  std::size_t n() const { return 1 + s + t + lambda; }
  bool all_identity() const;
};

struct RingElement {
  Elem alpha0 = 0;
  std::vector<Elem> u;
  std::vector<Elem> w;

  bool operator==(const RingElement&) const = default;
};

struct ExhaustiveMode {};
struct SampledMode {
  std::uint64_t seed = 42;
  std::uint64_t count = 100000;
};
using AxiomMode = std::variant<ExhaustiveMode, SampledMode>;

inline constexpr std::uint64_t kExhaustiveBudget = std::uint64_t{1} << 26;

struct AxiomReport {
  bool passed = true;
  bool exhaustive = false;
  std::uint64_t triples_checked = 0;
  std::optional<std::string> counterexample;
};

struct StructureReport {
  std::uint64_t order_exponent = 0;  // |R| = p^order_exponent
  unsigned p = 0, r = 0;
  std::size_t n = 0, s = 0, t = 0, lambda = 0;
  std::size_t dim_radical = 0;
  std::size_t dim_radical_sq = 0;
  std::size_t dim_annihilator = 0;
  bool radical_cubed_zero = false;
  bool commutative = false;
  bool f_central = false;
};

class Ring {
 public:
  /// Validates the spec. Throws ShapeMismatch, AutomorphismConstraint or DependentMatrices.
  static Ring create(RingSpec spec);

  const RingSpec& spec() const { return spec_; }
  const FiniteField& field() const { return spec_.field; }
  std::size_t n() const { return spec_.n(); }
  /// F_p-dimension n * r.
  std::size_t dim_p() const { return n() * spec_.field.r(); }
  /// |R| if it fits in 64 bits.
  std::optional<std::uint64_t> order() const;

  RingElement zero() const;
  RingElement one() const;
  RingElement add(const RingElement& x, const RingElement& y) const;
  RingElement neg(const RingElement& x) const;
  RingElement mul(const RingElement& x, const RingElement& y) const;

  /// Mixed-radix code over the component sequence (alpha0, u..., w...).
  std::uint64_t encode(const RingElement& x) const;
  RingElement decode(std::uint64_t code) const;
  RingElement random_element(std::mt19937_64& rng) const;
  /// Element with coordinate vector over F_p (length dim_p()).
  RingElement from_prime_coords(const std::vector<Elem>& v) const;
  std::vector<Elem> prime_coords(const RingElement& x) const;

  void check_element(const RingElement& x) const;

 private:
  explicit Ring(RingSpec spec) : spec_(std::move(spec)) {}
  RingSpec spec_;
};

/// Associativity, both distributive laws and characteristic p.
/// Throws TooLargeForExhaustive when |R|^3 exceeds kExhaustiveBudget.
AxiomReport check_axioms(const Ring& ring, const AxiomMode& mode);

StructureReport ring_structure(const Ring& ring);

std::string to_string(const FiniteField& f, const RingElement& x);

}  // namespace ringforge
