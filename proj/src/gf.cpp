#include "ringforge/gf.hpp"

#include <algorithm>
#include <string>

namespace ringforge {

namespace detail {

struct FieldTables {
  std::vector<std::uint16_t> log;
  std::vector<Elem> exp;
  std::vector<Elem> neg;
  std::vector<Elem> inv;
  std::vector<Elem> frob;
  std::vector<Elem> add;
};

}  // namespace detail

namespace {

constexpr unsigned kMaxOrder = 1u << 16;
constexpr unsigned kAddTableLimit = 512;

using Poly = std::vector<Elem>;  // low to high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic g over Z_p.
Poly poly_mod(Poly a, const Poly& g, unsigned p) {
  trim(a);
  const std::size_t dg = g.size() - 1;
  while (a.size() > dg) {
    const Elem lead = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      a[shift + i] = static_cast<Elem>((a[shift + i] + (p - lead) * g[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits_of(std::uint64_t code, unsigned p, unsigned len) {
  Poly d(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    d[i] = static_cast<Elem>(code % p);
    code /= p;
  }
  return d;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(unsigned p, const std::vector<Elem>& poly) {
  const std::size_t r = poly.size() - 1;
  if (r == 0) return false;
  for (std::size_t d = 1; d <= r / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = digits_of(c, p, static_cast<unsigned>(d));
      g.push_back(1);
      if (poly_mod(poly, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<Elem> least_irreducible(unsigned p, unsigned r) {
  const std::uint64_t count = ipow(p, r);
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly f = digits_of(c, p, r);
    f.push_back(1);
    if (is_irreducible(p, f)) return f;
  }
  throw Error(ErrorCode::RangeError, "no irreducible polynomial found");
}

FiniteField FiniteField::create(unsigned p, unsigned r) {
  if (r < 1) throw Error(ErrorCode::DegreeZero, "extension degree must be >= 1");
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeP, std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(ErrorCode::RangeError, "field order exceeds 2^16");
  }
  return with_modulus(p, r, least_irreducible(p, r));
}

FiniteField FiniteField::with_modulus(unsigned p, unsigned r, std::vector<Elem> modulus) {
  if (r < 1) throw Error(ErrorCode::DegreeZero, "extension degree must be >= 1");
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeP, std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(ErrorCode::RangeError, "field order exceeds 2^16");
  }
  if (modulus.size() != r + 1 || modulus.back() != 1) {
    throw Error(ErrorCode::RangeError, "modulus must be monic of degree r");
  }
  for (Elem c : modulus) {
    if (c >= p) throw Error(ErrorCode::RangeError, "modulus coefficient out of range");
  }
  if (!is_irreducible(p, modulus)) throw Error(ErrorCode::RangeError, "modulus is reducible");

  FiniteField f;
  f.p_ = p;
  f.r_ = r;
  f.q_ = static_cast<unsigned>(q);
  f.modulus_ = std::move(modulus);
  f.build_tables();
  return f;
}

void FiniteField::build_tables() {
  auto t = std::make_shared<detail::FieldTables>();
  const unsigned q = q_;

  auto slow_add = [&](Elem a, Elem b) {
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < r_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  };
  auto slow_mul = [&](Elem a, Elem b) {
    const Poly da = digits_of(a, p_, r_), db = digits_of(b, p_, r_);
    Poly prod(2 * r_, 0);
    for (unsigned i = 0; i < r_; ++i) {
      for (unsigned j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    Poly red = poly_mod(prod, modulus_, p_);
    red.resize(r_, 0);
    return from_digits(red);
  };

  t->neg.resize(q);
  for (Elem a = 0; a < q; ++a) {
    Poly d = digits_of(a, p_, r_);
    for (auto& c : d) c = (p_ - c) % p_;
    t->neg[a] = from_digits(d);
  }

  // Primitive element by search in ascending code order.
  primitive_ = 1;
  if (q > 2) {
    for (Elem g = 2; g < q; ++g) {
      Elem x = g;
      unsigned order = 1;
      while (x != 1) {
        x = slow_mul(x, g);
        ++order;
      }
      if (order == q - 1) {
        primitive_ = g;
        break;
      }
    }
  }
  t->exp.resize(2 * (q - 1) + 1);
  t->log.assign(q, 0);
  Elem x = 1;
  for (unsigned i = 0; i < q - 1; ++i) {
    t->exp[i] = x;
    t->log[x] = static_cast<std::uint16_t>(i);
    x = slow_mul(x, primitive_);
  }
  for (unsigned i = q - 1; i < t->exp.size(); ++i) t->exp[i] = t->exp[i - (q - 1)];

  t->inv.assign(q, 0);
  for (Elem a = 1; a < q; ++a) t->inv[a] = t->exp[(q - 1 - t->log[a]) % (q - 1)];

  if (q <= kAddTableLimit) {
    t->add.resize(static_cast<std::size_t>(q) * q);
    for (Elem a = 0; a < q; ++a) {
      for (Elem b = 0; b < q; ++b) t->add[a * q + b] = slow_add(a, b);
    }
  }

  log_ = t->log.data();
  exp_ = t->exp.data();
  neg_ = t->neg.data();
  inv_ = t->inv.data();
  add_ = t->add.empty() ? nullptr : t->add.data();

  t->frob.resize(static_cast<std::size_t>(r_) * q);
  for (unsigned e = 0; e < r_; ++e) {
    const std::uint64_t power = ipow(p_, e);
    for (Elem a = 0; a < q; ++a) t->frob[e * q + a] = pow(a, power);
  }
  frob_ = t->frob.data();
  tables_ = std::move(t);
}

void FiniteField::check(Elem a) const {
  if (a >= q_) {
    throw Error(ErrorCode::MixedFields,
                "element code " + std::to_string(a) + " outside GF(" + std::to_string(q_) + ")");
  }
}

Elem FiniteField::add(Elem a, Elem b) const {
  if (add_) return add_[a * q_ + b];
  if (p_ == 2) return a ^ b;
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < r_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
  return inv_[a];
}

Elem FiniteField::pow(Elem a, std::uint64_t n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t e = (static_cast<std::uint64_t>(log_[a]) * (n % (q_ - 1))) % (q_ - 1);
  return exp_[e];
}

Elem FiniteField::from_int(long long v) const {
  const long long m = ((v % static_cast<long long>(p_)) + p_) % p_;
  return static_cast<Elem>(m);
}

Elem FiniteField::basis_element(unsigned k) const {
  Elem b = 1;
  for (unsigned i = 0; i < k; ++i) b *= p_;
  return b;
}

std::vector<Elem> FiniteField::digits(Elem a) const { return digits_of(a, p_, r_); }

Elem FiniteField::from_digits(const std::vector<Elem>& d) const {
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < r_ && i < d.size(); ++i) {
    out += (d[i] % p_) * scale;
    scale *= p_;
  }
  return out;
}

bool FiniteField::is_square(Elem a) const {
  if (a == 0 || p_ == 2) return true;
  return log_[a] % 2 == 0;
}

Elem FiniteField::nonsquare() const {
  if (p_ == 2) throw Error(ErrorCode::NoNonsquare, "every element is a square in characteristic 2");
  for (Elem a = 1; a < q_; ++a) {
    if (!is_square(a)) return a;
  }
  throw Error(ErrorCode::NoNonsquare, "no non-square found");
}

}  // namespace ringforge
