#include "ringforge/counting.hpp"

#include <vector>

#include "ringforge/error.hpp"
#include "ringforge/gf.hpp"

namespace ringforge {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt gaussian_binomial(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - i)) - 1;
    den *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

BigInt count_case_s1(long long r, long long lambda) {
  if (r < 1 || lambda < 0) throw Error(ErrorCode::RangeError, "need r >= 1 and lambda >= 0");
  return BigInt(r) * binomial(static_cast<std::uint64_t>(r + lambda - 1), static_cast<std::uint64_t>(lambda));
}

BigInt count_case_t_s2(long long r, long long s, long long lambda) {
  if (r < 1 || s < 1 || lambda < 0) throw Error(ErrorCode::RangeError, "need r >= 1, s >= 1 and lambda >= 0");
  return binomial(static_cast<std::uint64_t>(r + s - 1), static_cast<std::uint64_t>(s)) *
         binomial(static_cast<std::uint64_t>(r + lambda - 1), static_cast<std::uint64_t>(lambda));
}

namespace {

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  }
  return true;
}

}  // namespace

BigInt waterhouse_count(std::uint64_t q, long long s) {
  if (s < 0) throw Error(ErrorCode::RangeError, "s must be non-negative");
  if (!is_prime_power(q)) throw Error(ErrorCode::RangeError, "q must be a prime power");
  const auto deg = static_cast<std::size_t>(s);
  const int e = q % 2 == 0 ? 1 : 2;
  std::vector<BigInt> c(deg + 1, 0);
  c[0] = 1;
  for (std::size_t k = 1; k <= deg; ++k) {
    for (int rep = 0; rep < e; ++rep) {
      for (std::size_t d = deg; d >= k; --d) c[d] += c[d - k];
    }
    for (std::size_t d = 2 * k; d <= deg; ++d) c[d] += BigInt(q) * c[d - 2 * k];
    for (std::size_t d = k; d <= deg; ++d) c[d] += c[d - k];
  }
  return c[deg];
}

std::uint64_t nc_symmetric(long long s) {
  if (s < 1) throw Error(ErrorCode::RangeError, "s must be positive");
  const auto n = static_cast<std::uint64_t>(s);
  return n % 2 == 1 ? (3 * n - 1) / 2 : 3 * n / 2;
}

std::string to_string(PredictionStatus status) {
  switch (status) {
    case PredictionStatus::verified: return "verified";
    case PredictionStatus::conjectured: return "conjectured";
    case PredictionStatus::contradicted: return "contradicted";
  }
  return "?";
}

Prediction paper_predictions(std::uint64_t p, long long r, long long s, long long t, long long lambda) {
  if (!is_prime(p)) throw Error(ErrorCode::RangeError, "p must be prime");
  if (r < 1 || s < 1 || t < 1 || lambda < 0 || t > s * s) {
    throw Error(ErrorCode::RangeError, "need r, s >= 1, 1 <= t <= s^2, lambda >= 0");
  }
  using S = PredictionStatus;
  const BigInt pb = p;
  // Primes for which the class counts were computed and agree with the formula.
  const bool small = p == 2 || p == 3 || p == 5 || p == 7;

  if (s == 1 && t == 1) {
    return {count_case_s1(r, lambda), S::verified, "s = t = 1 closed form r*C(r+lambda-1, lambda)", BigInt(1), {}};
  }
  if (t == s * s) {
    return {count_case_t_s2(r, s, lambda), S::verified, "t = s^2 closed form C(r+s-1, s)*C(r+lambda-1, lambda)",
            BigInt(0), {}};
  }
  if (r != 1) throw Error(ErrorCode::NotCovered, "no count is known for r > 1 with 1 < t < s^2");

  if (s == 2 && t == 1) {
    const BigInt v = p == 2 ? BigInt(5) : pb + 4;
    return {v, small ? S::verified : S::conjectured, "N(2,1) = 5 (p = 2) or p + 4", BigInt(nc_symmetric(2)), {}};
  }
  if (s == 3 && t == 1) {
    if (p == 2) return {11, S::verified, "N(3,1) = 11 (p = 2) or 3p + 10", BigInt(nc_symmetric(3)), {}};
    Prediction out{3 * pb + 10, S::conjectured, "N(3,1) = 11 (p = 2) or 3p + 10", BigInt(nc_symmetric(3)), {}};
    if (p == 3 || p == 5) {
      out.status = S::contradicted;
      out.measured = p == 3 ? 15 : 19;
    }
    return out;
  }
  if (s == 2 && t == 2) {
    const BigInt v = p == 2 ? BigInt(10) : 3 * pb + 5;
    return {v, small ? S::verified : S::conjectured, "N(2,2) table and formula 10 (p = 2) or 3p + 5", BigInt(3), {}};
  }
  if (s == 2 && t == 3) {
    if (p == 2) return {5, S::verified, "N(2,3) computed table, p = 2", BigInt(1), {}};
    return {pb + 4, S::conjectured, "conjectured N(2,3) = p + 4 for odd p", BigInt(1), {}};
  }
  if (s == 3 && t == 2 && p == 2) {
    return {322, S::verified, "N(3,2) computed over F_2", BigInt(14), {}};
  }
  throw Error(ErrorCode::NotCovered, "no count is known for these invariants");
}

}  // namespace ringforge
