/**
 * @file counting.hpp
 * @brief Closed-form ring and class counts.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ringforge {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k), zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);
/// Number of k-dimensional subspaces of F_q^n.
BigInt gaussian_binomial(std::uint64_t q, std::uint64_t n, std::uint64_t k);

/// r * C(r + lambda - 1, lambda). Throws RangeError unless r >= 1, lambda >= 0.
BigInt count_case_s1(long long r, long long lambda);
/// C(r + s - 1, s) * C(r + lambda - 1, lambda).
BigInt count_case_t_s2(long long r, long long s, long long lambda);

/// Number of congruence classes of s x s matrices over F_q (zero included):
/// coefficient of x^s in prod_k (1+x^k)^e / ((1 - q x^{2k}) (1 - x^k)),
/// e = 1 for even q and 2 for odd q. Throws RangeError unless q is a prime power.
BigInt waterhouse_count(std::uint64_t q, long long s);

/// Equivalence classes of one-dimensional symmetric forms: (3s-1)/2 or 3s/2.
std::uint64_t nc_symmetric(long long s);

enum class PredictionStatus { verified, conjectured, contradicted };
std::string to_string(PredictionStatus status);

struct Prediction {
  BigInt value;
  PredictionStatus status = PredictionStatus::conjectured;
  std::string source;
  /// Predicted number of commutative rings among them, when stated.
  std::optional<BigInt> commutative;
  /// Measured value when it is known to differ from the prediction.
  std::optional<BigInt> measured;
};

/// Predicted ring count for the invariants. Throws NotCovered when no closed
/// form or table applies, RangeError on invalid parameters.
Prediction paper_predictions(std::uint64_t p, long long r, long long s, long long t, long long lambda);

}  // namespace ringforge
