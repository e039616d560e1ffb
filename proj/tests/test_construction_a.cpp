#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "ringforge/construction_a.hpp"

using namespace ringforge;

namespace {

oracle::PolyField poly_of(const FiniteField& f) {
  return oracle::PolyField(f.p(), f.r(), std::vector<unsigned>(f.modulus().begin(), f.modulus().end()));
}

// Product written out directly from the defining formula over the oracle field.
RingElement oracle_mul(const RingSpec& spec, const RingElement& x, const RingElement& y) {
  const auto f = poly_of(spec.field);
  RingElement z{f.mul(x.alpha0, y.alpha0), std::vector<Elem>(spec.s), std::vector<Elem>(spec.t + spec.lambda)};
  for (std::size_t i = 0; i < spec.s; ++i) {
    z.u[i] = f.add(f.mul(x.alpha0, y.u[i]), f.mul(x.u[i], f.frob(spec.sigma[i].exponent, y.alpha0)));
  }
  for (std::size_t k = 0; k < spec.t + spec.lambda; ++k) {
    unsigned g = f.add(f.mul(x.alpha0, y.w[k]), f.mul(x.w[k], f.frob(spec.theta[k].exponent, y.alpha0)));
    if (k < spec.t) {
      for (std::size_t i = 0; i < spec.s; ++i) {
        for (std::size_t j = 0; j < spec.s; ++j) {
          g = f.add(g, f.mul(spec.matrices[k](i, j), f.mul(x.u[i], f.frob(spec.sigma[i].exponent, y.u[j]))));
        }
      }
    }
    z.w[k] = g;
  }
  return z;
}

RingSpec twisted_f4() {
  // sigma = (0, 1): entries (0,0) and (1,1) need theta = 0, entries (0,1), (1,0) need theta = 1.
  const FiniteField f = FiniteField::create(2, 2);
  RingSpec spec{f, 2, 2, 1, {Mat(2, {1, 0, 0, 2}), Mat(2, {0, 3, 1, 0})}, {{0}, {1}}, {{0}, {1}, {1}}};
  return spec;
}

bool brute_commutative(const Ring& ring) {
  const auto order = *ring.order();
  std::vector<RingElement> all;
  for (std::uint64_t c = 0; c < order; ++c) all.push_back(ring.decode(c));
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (ring.mul(x, y) != ring.mul(y, x)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("multiplication agrees with the defining formula") {
  std::mt19937_64 rng(5);
  std::vector<RingSpec> specs;
  specs.push_back(RingSpec::central(FiniteField::create(3, 1), {Mat(2, {1, 2, 0, 1})}, 1));
  specs.push_back(RingSpec::central(FiniteField::create(5, 1), {Mat(3, {1, 0, 0, 0, 2, 0, 3, 0, 0}), Mat::identity(3)}));
  specs.push_back(twisted_f4());
  {
    const FiniteField f = FiniteField::create(3, 2);
    specs.push_back(RingSpec{f, 2, 1, 2, {Mat(2, {4, 7, 1, 0})}, {{1}, {1}}, {{0}, {1}, {0}}});
  }
  for (const auto& spec : specs) {
    const Ring ring = Ring::create(spec);
    for (int i = 0; i < 2000; ++i) {
      const auto x = ring.random_element(rng), y = ring.random_element(rng);
      REQUIRE(ring.mul(x, y) == oracle_mul(spec, x, y));
    }
  }
}

TEST_CASE("exhaustive ring axioms on small rings") {
  std::vector<RingSpec> specs;
  specs.push_back(RingSpec::central(FiniteField::create(2, 1), {Mat(2, {1, 1, 0, 1})}, 1));
  specs.push_back(RingSpec::central(FiniteField::create(3, 1), {Mat(2, {0, 1, 2, 0})}));
  specs.push_back(RingSpec::central(FiniteField::create(2, 1), {Mat(2, {1, 0, 0, 0}), Mat(2, {0, 1, 0, 0})}, 1));
  {
    const FiniteField f = FiniteField::create(2, 2);
    specs.push_back(RingSpec{f, 1, 1, 1, {Mat(1, {1})}, {{1}}, {{0}, {1}}});
  }
  for (const auto& spec : specs) {
    const Ring ring = Ring::create(spec);
    const AxiomReport rep = check_axioms(ring, ExhaustiveMode{});
    CHECK(rep.passed);
    CHECK(rep.exhaustive);
    CHECK(rep.triples_checked == *ring.order() * *ring.order() * *ring.order());
  }
  const Ring big = Ring::create(twisted_f4());
  CHECK_THROWS_AS(check_axioms(big, ExhaustiveMode{}), Error);
  const AxiomReport sampled = check_axioms(big, SampledMode{42, 20000});
  CHECK(sampled.passed);
  CHECK_FALSE(sampled.exhaustive);
}

TEST_CASE("create validates the spec") {
  const FiniteField f3 = FiniteField::create(3, 1);
  const FiniteField f4 = FiniteField::create(2, 2);
  auto code_of = [](const RingSpec& spec) {
    try {
      Ring::create(spec);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code_of(RingSpec::central(f3, {Mat(2, {1, 0, 0, 1}), Mat(2, {2, 0, 0, 2})})) == ErrorCode::DependentMatrices);
  CHECK(code_of(RingSpec::central(f3, {Mat(2, {0, 0, 0, 0})})) == ErrorCode::DependentMatrices);
  RingSpec bad = RingSpec::central(f3, {Mat(2, {1, 0, 0, 1})});
  bad.t = 2;
  CHECK(code_of(bad) == ErrorCode::ShapeMismatch);
  CHECK(code_of(RingSpec::central(f3, {Mat(2, {1, 0, 0, 1}), Mat(3)})) == ErrorCode::ShapeMismatch);
  CHECK(code_of(RingSpec::central(f3, {Mat(2, {1, 0, 0, 3})})) == ErrorCode::MixedFields);
  RingSpec twist{f4, 2, 1, 0, {Mat(2, {0, 1, 0, 0})}, {{0}, {1}}, {{0}}};
  try {
    Ring::create(twist);
    FAIL("expected AutomorphismConstraint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AutomorphismConstraint);
    CHECK(std::string(e.what()).find("(1,2,1)") != std::string::npos);
  }
  twist.theta = {{1}};
  CHECK_NOTHROW(Ring::create(twist));
}

TEST_CASE("element coding round trips") {
  const Ring ring = Ring::create(twisted_f4());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto x = ring.random_element(rng);
    REQUIRE(ring.decode(ring.encode(x)) == x);
    REQUIRE(ring.from_prime_coords(ring.prime_coords(x)) == x);
  }
  CHECK(ring.encode(ring.one()) == 1ULL << (2 * 5));
  CHECK(ring.order() == std::uint64_t{1} << 12);
}

TEST_CASE("identity, characteristic and radical cube") {
  const Ring ring = Ring::create(RingSpec::central(FiniteField::create(3, 1), {Mat(2, {1, 2, 1, 0})}));
  const auto order = *ring.order();
  std::vector<RingElement> radical;
  for (std::uint64_t c = 0; c < order; ++c) {
    const auto x = ring.decode(c);
    REQUIRE(ring.mul(ring.one(), x) == x);
    REQUIRE(ring.mul(x, ring.one()) == x);
    REQUIRE(ring.add(ring.add(x, x), x) == ring.zero());
    if (x.alpha0 == 0) radical.push_back(x);
  }
  REQUIRE(radical.size() == 27);
  for (const auto& a : radical) {
    for (const auto& b : radical) {
      const auto ab = ring.mul(a, b);
      for (const auto& c : radical) REQUIRE(ring.mul(ab, c) == ring.zero());
    }
  }
}

TEST_CASE("structure report") {
  const FiniteField f3 = FiniteField::create(3, 1);
  const StructureReport st = ring_structure(Ring::create(RingSpec::central(f3, {Mat::identity(2)}, 1)));
  CHECK(st.order_exponent == 5);
  CHECK(st.n == 5);
  CHECK(st.dim_radical == 4);
  CHECK(st.dim_radical_sq == 1);
  CHECK(st.dim_annihilator == 2);
  CHECK(st.radical_cubed_zero);
  CHECK(st.commutative);
  CHECK(st.f_central);

  const StructureReport tw = ring_structure(Ring::create(twisted_f4()));
  CHECK(tw.order_exponent == 12);
  CHECK(tw.dim_radical == 5);
  CHECK(tw.dim_radical_sq == 2);
  CHECK_FALSE(tw.f_central);
  CHECK_FALSE(tw.commutative);
  CHECK(tw.radical_cubed_zero);
}

TEST_CASE("commutative iff all structural matrices symmetric (identity automorphisms)") {
  for (unsigned p : {2u, 3u}) {
    const FiniteField f = FiniteField::create(p, 1);
    for (std::size_t t : {1u, 2u}) {
      for (const auto& key : enumerate_subspaces(f, 2, t)) {
        const MatTuple basis = key.basis();
        const Ring ring = Ring::create(RingSpec::central(f, basis));
        const bool symmetric = std::all_of(basis.begin(), basis.end(), [](const Mat& m) { return m.is_symmetric(); });
        REQUIRE(brute_commutative(ring) == symmetric);
        REQUIRE(ring_structure(ring).commutative == symmetric);
      }
    }
  }
}

TEST_CASE("F is central iff every automorphism is the identity") {
  const FiniteField f4 = FiniteField::create(2, 2);
  const std::vector<RingSpec> specs = {
      RingSpec{f4, 1, 1, 0, {Mat(1, {1})}, {{0}}, {{0}}},
      RingSpec{f4, 1, 1, 0, {Mat(1, {1})}, {{1}}, {{0}}},
      RingSpec{f4, 1, 1, 1, {Mat(1, {1})}, {{0}}, {{0}, {1}}},
      RingSpec{f4, 2, 1, 0, {Mat(2, {1, 0, 0, 1})}, {{1}, {1}}, {{0}}},
      twisted_f4(),
  };
  for (const auto& spec : specs) {
    const Ring ring = Ring::create(spec);
    bool central = true;
    const auto order = *ring.order();
    for (std::uint64_t c = 0; c < order && central; ++c) {
      const auto x = ring.decode(c);
      for (Elem a = 0; a < 4; ++a) {
        RingElement alpha = ring.zero();
        alpha.alpha0 = a;
        if (ring.mul(alpha, x) != ring.mul(x, alpha)) central = false;
      }
    }
    CHECK(central == spec.all_identity());
    CHECK(ring_structure(ring).f_central == spec.all_identity());
  }
}
