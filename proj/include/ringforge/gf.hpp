/**
 * @file gf.hpp
 * @brief Arithmetic in GF(p^r) with table-driven multiplication.
 *
 * Elements are integer codes in [0, q): the coefficient vector
 * (c_0, ..., c_{r-1}) of the polynomial representative packed base p with
 * c_0 least significant. Code 0 is zero and code 1 is one. The modulus is the
 * lexicographically least monic irreducible polynomial of degree r unless one
 * is supplied explicitly.
 *
 * A FiniteField is immutable after construction. Copies share the lookup
 * tables, so passing fields by value is cheap and thread-safe.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "ringforge/error.hpp"

namespace ringforge {

using Elem = std::uint32_t;

/// Field automorphism x -> x^(p^exponent).
struct Automorphism {
  unsigned exponent = 0;

  bool is_identity() const { return exponent == 0; }
  auto operator<=>(const Automorphism&) const = default;
};

bool is_prime(std::uint64_t n);

namespace detail {
struct FieldTables;
}

class FiniteField {
 public:
  /// Field with the least-lex monic irreducible modulus.
  static FiniteField create(unsigned p, unsigned r);
  /// Field with an explicit modulus, coefficients low to high, monic, length r+1.
  static FiniteField with_modulus(unsigned p, unsigned r, std::vector<Elem> modulus);

  unsigned p() const { return p_; }
  unsigned r() const { return r_; }
  unsigned q() const { return q_; }
  const std::vector<Elem>& modulus() const { return modulus_; }

  bool contains(Elem a) const { return a < q_; }
  /// Throws MixedFields when a is not a valid code.
  void check(Elem a) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t n) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// a^(p^e.exponent).
  Elem frobenius(Automorphism e, Elem a) const { return frob_[(e.exponent % r_) * q_ + a]; }
  Automorphism compose(Automorphism a, Automorphism b) const { return {(a.exponent + b.exponent) % r_}; }

  /// Embeds an integer of the prime subfield.
  Elem from_int(long long v) const;
  /// x^k as a field element; these form the standard F_p-basis.
  Elem basis_element(unsigned k) const;
  std::vector<Elem> digits(Elem a) const;
  Elem from_digits(const std::vector<Elem>& d) const;

  Elem primitive_element() const { return primitive_; }
  bool is_square(Elem a) const;
  /// Least-coded non-square of F*. Throws NoNonsquare in characteristic 2.
  Elem nonsquare() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.r_ == b.r_ && a.modulus_ == b.modulus_;
  }

 private:
  FiniteField() = default;
  void build_tables();

  unsigned p_ = 0;
  unsigned r_ = 0;
  unsigned q_ = 0;
  std::vector<Elem> modulus_;
  Elem primitive_ = 0;

  std::shared_ptr<const detail::FieldTables> tables_;
  // Raw views into tables_ for the hot paths.
  const std::uint16_t* log_ = nullptr;
  const Elem* exp_ = nullptr;
  const Elem* neg_ = nullptr;
  const Elem* inv_ = nullptr;
  const Elem* frob_ = nullptr;
  const Elem* add_ = nullptr;  // q*q table, present only for small q
};

/// Least-lex monic irreducible polynomial of degree r over Z_p, low to high.
std::vector<Elem> least_irreducible(unsigned p, unsigned r);
bool is_irreducible(unsigned p, const std::vector<Elem>& poly);

}  // namespace ringforge
