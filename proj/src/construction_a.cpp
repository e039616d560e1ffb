#include "ringforge/construction_a.hpp"

#include <sstream>

namespace ringforge {

RingSpec RingSpec::central(const FiniteField& f, MatTuple matrices, std::size_t lambda) {
  RingSpec spec{f, 0, matrices.size(), lambda, std::move(matrices), {}, {}};
  spec.s = spec.matrices.empty() ? 0 : spec.matrices.front().n;
  spec.sigma.assign(spec.s, Automorphism{});
  spec.theta.assign(spec.t + lambda, Automorphism{});
  return spec;
}

bool RingSpec::all_identity() const {
  for (auto a : sigma) {
    if (!a.is_identity()) return false;
  }
  for (auto a : theta) {
    if (!a.is_identity()) return false;
  }
  return true;
}

Ring Ring::create(RingSpec spec) {
  const FiniteField& f = spec.field;
  if (spec.s < 1 || spec.t < 1 || spec.t > spec.s * spec.s) {
    throw Error(ErrorCode::ShapeMismatch, "need s >= 1 and 1 <= t <= s^2");
  }
  if (spec.matrices.size() != spec.t) throw Error(ErrorCode::ShapeMismatch, "expected t structural matrices");
  for (const auto& m : spec.matrices) {
    if (m.n != spec.s) throw Error(ErrorCode::ShapeMismatch, "structural matrix is not s x s");
    linalg::check_entries(f, m);
  }
  if (spec.sigma.size() != spec.s) throw Error(ErrorCode::ShapeMismatch, "expected s sigma automorphisms");
  if (spec.theta.size() != spec.t + spec.lambda) {
    throw Error(ErrorCode::ShapeMismatch, "expected t + lambda theta automorphisms");
  }
  for (auto a : spec.sigma) {
    if (a.exponent >= f.r()) throw Error(ErrorCode::RangeError, "automorphism exponent must be < r");
  }
  for (auto a : spec.theta) {
    if (a.exponent >= f.r()) throw Error(ErrorCode::RangeError, "automorphism exponent must be < r");
  }

  for (std::size_t k = 0; k < spec.t; ++k) {
    for (std::size_t i = 0; i < spec.s; ++i) {
      for (std::size_t j = 0; j < spec.s; ++j) {
        if (spec.matrices[k](i, j) == 0) continue;
        if (spec.theta[k] != f.compose(spec.sigma[i], spec.sigma[j])) {
          std::ostringstream msg;
          msg << "theta_" << k + 1 << " != sigma_" << i + 1 << " sigma_" << j + 1 << " at (i,j,k) = (" << i + 1 << ","
              << j + 1 << "," << k + 1 << ")";
          throw Error(ErrorCode::AutomorphismConstraint, msg.str());
        }
      }
    }
  }

  if (!tuple_compatible(f, spec.matrices).independent) {
    throw Error(ErrorCode::DependentMatrices, "structural matrices are linearly dependent");
  }
  return Ring(std::move(spec));
}

std::optional<std::uint64_t> Ring::order() const {
  std::uint64_t o = 1;
  for (std::size_t i = 0; i < n(); ++i) {
    if (o > UINT64_MAX / field().q()) return std::nullopt;
    o *= field().q();
  }
  return o;
}

RingElement Ring::zero() const {
  return RingElement{0, std::vector<Elem>(spec_.s, 0), std::vector<Elem>(spec_.t + spec_.lambda, 0)};
}

RingElement Ring::one() const {
  RingElement x = zero();
  x.alpha0 = 1;
  return x;
}

void Ring::check_element(const RingElement& x) const {
  if (x.u.size() != spec_.s || x.w.size() != spec_.t + spec_.lambda) {
    throw Error(ErrorCode::ShapeMismatch, "ring element has wrong component counts");
  }
  field().check(x.alpha0);
  for (Elem a : x.u) field().check(a);
  for (Elem a : x.w) field().check(a);
}

RingElement Ring::add(const RingElement& x, const RingElement& y) const {
  const FiniteField& f = field();
  RingElement z = x;
  z.alpha0 = f.add(x.alpha0, y.alpha0);
  for (std::size_t i = 0; i < z.u.size(); ++i) z.u[i] = f.add(x.u[i], y.u[i]);
  for (std::size_t k = 0; k < z.w.size(); ++k) z.w[k] = f.add(x.w[k], y.w[k]);
  return z;
}

RingElement Ring::neg(const RingElement& x) const {
  const FiniteField& f = field();
  RingElement z = x;
  z.alpha0 = f.neg(x.alpha0);
  for (auto& a : z.u) a = f.neg(a);
  for (auto& a : z.w) a = f.neg(a);
  return z;
}

RingElement Ring::mul(const RingElement& x, const RingElement& y) const {
  const FiniteField& f = field();
  const std::size_t s = spec_.s;
  RingElement z = zero();
  z.alpha0 = f.mul(x.alpha0, y.alpha0);
  for (std::size_t i = 0; i < s; ++i) {
    z.u[i] = f.add(f.mul(x.alpha0, y.u[i]), f.mul(x.u[i], f.frobenius(spec_.sigma[i], y.alpha0)));
  }
  for (std::size_t k = 0; k < z.w.size(); ++k) {
    Elem acc = f.add(f.mul(x.alpha0, y.w[k]), f.mul(x.w[k], f.frobenius(spec_.theta[k], y.alpha0)));
    if (k < spec_.t) {
      const Mat& a = spec_.matrices[k];
      for (std::size_t i = 0; i < s; ++i) {
        if (x.u[i] == 0) continue;
        for (std::size_t j = 0; j < s; ++j) {
          const Elem aij = a(i, j);
          if (aij == 0 || y.u[j] == 0) continue;
          acc = f.add(acc, f.mul(aij, f.mul(x.u[i], f.frobenius(spec_.sigma[i], y.u[j]))));
        }
      }
    }
    z.w[k] = acc;
  }
  return z;
}

std::uint64_t Ring::encode(const RingElement& x) const {
  const std::uint64_t q = field().q();
  std::uint64_t code = x.alpha0;
  for (Elem a : x.u) code = code * q + a;
  for (Elem a : x.w) code = code * q + a;
  return code;
}

RingElement Ring::decode(std::uint64_t code) const {
  const std::uint64_t q = field().q();
  RingElement x = zero();
  for (std::size_t k = x.w.size(); k-- > 0;) {
    x.w[k] = static_cast<Elem>(code % q);
    code /= q;
  }
  for (std::size_t i = x.u.size(); i-- > 0;) {
    x.u[i] = static_cast<Elem>(code % q);
    code /= q;
  }
  x.alpha0 = static_cast<Elem>(code % q);
  return x;
}

RingElement Ring::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<Elem> dist(0, field().q() - 1);
  RingElement x = zero();
  x.alpha0 = dist(rng);
  for (auto& a : x.u) a = dist(rng);
  for (auto& a : x.w) a = dist(rng);
  return x;
}

std::vector<Elem> Ring::prime_coords(const RingElement& x) const {
  std::vector<Elem> v;
  v.reserve(dim_p());
  auto push = [&](Elem a) {
    const auto d = field().digits(a);
    v.insert(v.end(), d.begin(), d.end());
  };
  push(x.alpha0);
  for (Elem a : x.u) push(a);
  for (Elem a : x.w) push(a);
  return v;
}

RingElement Ring::from_prime_coords(const std::vector<Elem>& v) const {
  const unsigned r = field().r();
  RingElement x = zero();
  auto take = [&](std::size_t comp) {
    return field().from_digits(std::vector<Elem>(v.begin() + comp * r, v.begin() + (comp + 1) * r));
  };
  x.alpha0 = take(0);
  for (std::size_t i = 0; i < x.u.size(); ++i) x.u[i] = take(1 + i);
  for (std::size_t k = 0; k < x.w.size(); ++k) x.w[k] = take(1 + x.u.size() + k);
  return x;
}

std::string to_string(const FiniteField& f, const RingElement& x) {
  (void)f;
  std::ostringstream os;
  os << "(" << x.alpha0 << "; [";
  for (std::size_t i = 0; i < x.u.size(); ++i) os << (i ? "," : "") << x.u[i];
  os << "]; [";
  for (std::size_t k = 0; k < x.w.size(); ++k) os << (k ? "," : "") << x.w[k];
  os << "])";
  return os.str();
}

namespace {

RingElement times_p(const Ring& ring, const RingElement& x) {
  RingElement acc = ring.zero();
  for (unsigned i = 0; i < ring.field().p(); ++i) acc = ring.add(acc, x);
  return acc;
}

std::string triple_text(const Ring& ring, const char* law, const RingElement& x, const RingElement& y,
                        const RingElement& z) {
  const auto& f = ring.field();
  return std::string(law) + " fails at x=" + to_string(f, x) + " y=" + to_string(f, y) + " z=" + to_string(f, z);
}

// Checks one triple; returns the violated law or nullptr.
const char* check_triple(const Ring& ring, const RingElement& x, const RingElement& y, const RingElement& z) {
  if (ring.mul(ring.mul(x, y), z) != ring.mul(x, ring.mul(y, z))) return "associativity";
  if (ring.mul(x, ring.add(y, z)) != ring.add(ring.mul(x, y), ring.mul(x, z))) return "left distributivity";
  if (ring.mul(ring.add(x, y), z) != ring.add(ring.mul(x, z), ring.mul(y, z))) return "right distributivity";
  return nullptr;
}

}  // namespace

AxiomReport check_axioms(const Ring& ring, const AxiomMode& mode) {
  AxiomReport report;
  if (std::holds_alternative<ExhaustiveMode>(mode)) {
    const auto order = ring.order();
    if (!order || *order > 406 || (*order) * (*order) * (*order) > kExhaustiveBudget) {
      throw Error(ErrorCode::TooLargeForExhaustive, "|R|^3 exceeds the exhaustive budget");
    }
    report.exhaustive = true;
    const std::uint64_t m = *order;
    std::vector<RingElement> elems;
    elems.reserve(m);
    for (std::uint64_t c = 0; c < m; ++c) elems.push_back(ring.decode(c));
    std::vector<std::uint32_t> mt(m * m), at(m * m);
    for (std::uint64_t a = 0; a < m; ++a) {
      for (std::uint64_t b = 0; b < m; ++b) {
        mt[a * m + b] = static_cast<std::uint32_t>(ring.encode(ring.mul(elems[a], elems[b])));
        at[a * m + b] = static_cast<std::uint32_t>(ring.encode(ring.add(elems[a], elems[b])));
      }
    }
    for (std::uint64_t x = 0; x < m; ++x) {
      if (times_p(ring, elems[x]) != ring.zero()) {
        report.passed = false;
        report.counterexample = "characteristic fails at x=" + to_string(ring.field(), elems[x]);
        return report;
      }
      for (std::uint64_t y = 0; y < m; ++y) {
        const std::uint32_t xy = mt[x * m + y];
        for (std::uint64_t z = 0; z < m; ++z) {
          ++report.triples_checked;
          const char* law = nullptr;
          const std::uint32_t yz = mt[y * m + z], xz = mt[x * m + z];
          if (mt[xy * m + z] != mt[x * m + yz]) {
            law = "associativity";
          } else if (mt[x * m + at[y * m + z]] != at[xy * m + xz]) {
            law = "left distributivity";
          } else if (mt[at[x * m + y] * m + z] != at[xz * m + mt[y * m + z]]) {
            law = "right distributivity";
          }
          if (law) {
            report.passed = false;
            report.counterexample = triple_text(ring, law, elems[x], elems[y], elems[z]);
            return report;
          }
        }
      }
    }
    return report;
  }

  const auto& sampled = std::get<SampledMode>(mode);
  std::mt19937_64 rng(sampled.seed);
  for (std::uint64_t i = 0; i < sampled.count; ++i) {
    const RingElement x = ring.random_element(rng);
    const RingElement y = ring.random_element(rng);
    const RingElement z = ring.random_element(rng);
    ++report.triples_checked;
    if (times_p(ring, x) != ring.zero()) {
      report.passed = false;
      report.counterexample = "characteristic fails at x=" + to_string(ring.field(), x);
      return report;
    }
    if (const char* law = check_triple(ring, x, y, z)) {
      report.passed = false;
      report.counterexample = triple_text(ring, law, x, y, z);
      return report;
    }
  }
  return report;
}

StructureReport ring_structure(const Ring& ring) {
  const RingSpec& spec = ring.spec();
  const FiniteField& f = ring.field();
  const FiniteField fp = FiniteField::create(f.p(), 1);
  const unsigned r = f.r();
  const std::size_t dim = ring.dim_p();

  StructureReport rep;
  rep.p = f.p();
  rep.r = r;
  rep.n = ring.n();
  rep.s = spec.s;
  rep.t = spec.t;
  rep.lambda = spec.lambda;
  rep.order_exponent = static_cast<std::uint64_t>(ring.n()) * r;
  rep.dim_radical = spec.s + spec.t + spec.lambda;

  auto basis_elem = [&](std::size_t idx) {
    std::vector<Elem> v(dim, 0);
    v[idx] = 1;
    return ring.from_prime_coords(v);
  };
  std::vector<RingElement> all;
  for (std::size_t i = 0; i < dim; ++i) all.push_back(basis_elem(i));
  const std::vector<RingElement> field_part(all.begin(), all.begin() + r);
  const std::vector<RingElement> radical(all.begin() + r, all.end());
  const std::size_t dr = radical.size();

  // M^2: F_p-span of products of radical basis elements.
  std::vector<Elem> rows;
  for (const auto& a : radical) {
    for (const auto& b : radical) {
      const auto c = ring.prime_coords(ring.mul(a, b));
      rows.insert(rows.end(), c.begin(), c.end());
    }
  }
  const std::size_t sq_rank = linalg::rref(fp, rows, dr * dr, dim);
  rep.dim_radical_sq = sq_rank / r;

  // ann(M): kernel of x -> (x b, b x)_b over the radical.
  std::vector<Elem> image_rows;
  for (const auto& x : radical) {
    for (const auto& b : radical) {
      const auto xb = ring.prime_coords(ring.mul(x, b));
      const auto bx = ring.prime_coords(ring.mul(b, x));
      image_rows.insert(image_rows.end(), xb.begin(), xb.end());
      image_rows.insert(image_rows.end(), bx.begin(), bx.end());
    }
  }
  const std::size_t img_rank = linalg::rref(fp, image_rows, dr, 2 * dr * dim);
  rep.dim_annihilator = (dr - img_rank) / r;

  rep.radical_cubed_zero = true;
  for (const auto& a : radical) {
    for (const auto& b : radical) {
      const RingElement ab = ring.mul(a, b);
      for (const auto& c : radical) {
        if (ring.mul(ab, c) != ring.zero()) rep.radical_cubed_zero = false;
      }
    }
  }

  rep.commutative = true;
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (ring.mul(a, b) != ring.mul(b, a)) rep.commutative = false;
    }
  }
  rep.f_central = true;
  for (const auto& a : field_part) {
    for (const auto& b : all) {
      if (ring.mul(a, b) != ring.mul(b, a)) rep.f_central = false;
    }
  }
  return rep;
}

}  // namespace ringforge
