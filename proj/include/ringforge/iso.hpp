/**
 * @file iso.hpp
 * @brief Isomorphism testing between Construction-A rings with a common field.
 *
 * A witness (sigma, C, B, perm) certifies R(A) ~ R(D) through
 *
 *   D_rho = sum_k B(k, rho) * C^T A_k^sigma C^tau     (tau = common sigma_i)
 *
 * and induces the explicit map psi(a0, x, g) = (a0^sigma, C^{-1} x^sigma, g')
 * with g'_rho = sum_k B(k, rho) g_k^sigma on W and g' permuted by `v_perm` on V.
 *
 * Modes:
 *  - central: every associated automorphism is the identity.
 *  - global_twist: all sigma_i of a ring equal one automorphism tau; the V
 *    automorphisms must agree as multisets.
 *  - s1t1: s = t = 1, where any two nonzero structure constants are related.
 *  - row_twisted: experimental; per-row twist C^{sigma_i}, C restricted to
 *    matrices compatible with the sigma pattern. Not certified.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringforge/construction_a.hpp"

namespace ringforge {

enum class IsoMode { central, global_twist, s1t1, row_twisted };

IsoMode parse_iso_mode(const std::string& name);
std::string to_string(IsoMode mode);

struct IsoWitness {
  Automorphism sigma;
  Mat c;  // s x s, invertible
  Mat b;  // t x t, invertible, B(k, rho)
  /// V index j of the source maps to V index v_perm[j] of the target.
  std::vector<std::size_t> v_perm;
};

/// First witness in (sigma ascending, C ascending code) order, or nullopt.
/// Throws InvariantMismatch or ModeMismatch.
std::optional<IsoWitness> iso_test(const RingSpec& a, const RingSpec& d, IsoMode mode, unsigned workers = 1);

/// Image of x under the map induced by the witness.
RingElement apply_witness(const RingSpec& a, const IsoWitness& w, const RingElement& x);

struct WitnessCheck {
  bool ok = false;
  bool exhaustive = false;
  std::string failure;
};

/// Verifies that the induced map is a bijective ring homomorphism. Exhaustive
/// for |R| <= 729, otherwise seeded sampling plus invertibility of C and B.
WitnessCheck verify_witness(const Ring& a, const Ring& d, const IsoWitness& w, std::uint64_t seed = 42,
                            std::uint64_t samples = 20000);

}  // namespace ringforge
