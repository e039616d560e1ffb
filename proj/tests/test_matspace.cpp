#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "ringforge/counting.hpp"
#include "ringforge/matspace.hpp"

using namespace ringforge;

namespace {

oracle::PolyField poly_of(const FiniteField& f) {
  return oracle::PolyField(f.p(), f.r(), std::vector<unsigned>(f.modulus().begin(), f.modulus().end()));
}

Mat random_mat(const FiniteField& f, std::size_t s, std::mt19937_64& rng) {
  Mat m(s);
  for (auto& x : m.e) x = static_cast<Elem>(rng() % f.q());
  return m;
}

Mat random_invertible(const FiniteField& f, std::size_t s, std::mt19937_64& rng) {
  while (true) {
    Mat m = random_mat(f, s, rng);
    if (linalg::det(f, m) != 0) return m;
  }
}

}  // namespace

TEST_CASE("determinant and inverse agree with cofactor oracle") {
  std::mt19937_64 rng(7);
  for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    const FiniteField f = FiniteField::create(p, r);
    const auto poly = poly_of(f);
    for (std::size_t s = 1; s <= 4; ++s) {
      for (int i = 0; i < 50; ++i) {
        const Mat m = random_mat(f, s, rng);
        REQUIRE(linalg::det(f, m) == oracle::det(poly, oracle::Matrix(m.e.begin(), m.e.end()), s));
        const auto inv = linalg::inverse(f, m);
        REQUIRE(inv.has_value() == (linalg::det(f, m) != 0));
        if (inv) REQUIRE(linalg::multiply(f, m, *inv) == Mat::identity(s));
      }
    }
  }
}

TEST_CASE("GL order and invertible enumeration") {
  const FiniteField f = FiniteField::create(3, 1);
  std::uint64_t n = 0, last = 0;
  bool ascending = true;
  linalg::for_each_invertible(f, 2, [&](const Mat& m) {
    const auto code = linalg::encode(f, m);
    if (n > 0 && code <= last) ascending = false;
    last = code;
    ++n;
    return true;
  });
  CHECK(ascending);
  CHECK(n == 48);
  CHECK(linalg::gl_order(2, 3) == 168);
  CHECK(linalg::gl_order(7, 2) == 2016);
}

TEST_CASE("congruence_twist") {
  const FiniteField f = FiniteField::create(2, 2);
  const Mat a(2, {1, 0, 2, 1});
  const Mat c(2, {1, 1, 0, 1});
  const Mat expected = linalg::multiply(f, linalg::multiply(f, linalg::transpose(c), linalg::frobenius(f, {1}, a)), c);
  CHECK(congruence_twist(f, c, {1}, a) == expected);
  CHECK(congruence_twist(f, Mat::identity(2), {0}, a) == a);
  CHECK_THROWS_AS(congruence_twist(f, Mat(2, {1, 1, 1, 1}), {0}, a), Error);
  CHECK_THROWS_AS(congruence_twist(f, Mat::identity(3), {0}, a), Error);
}

TEST_CASE("subspace key does not depend on the spanning tuple") {
  std::mt19937_64 rng(11);
  const FiniteField f = FiniteField::create(3, 1);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t t = 1 + rng() % 3;
    MatTuple tuple;
    for (std::size_t k = 0; k < t; ++k) tuple.push_back(random_mat(f, 2, rng));
    const SubspaceKey key = subspace_key(f, tuple);
    const Mat b = random_invertible(f, t, rng);
    MatTuple mixed;
    for (std::size_t rho = 0; rho < t; ++rho) {
      Mat m(2);
      for (std::size_t k = 0; k < t; ++k) m = linalg::add(f, m, linalg::scale(f, b(k, rho), tuple[k]));
      mixed.push_back(m);
    }
    REQUIRE(subspace_key(f, mixed) == key);
    REQUIRE(subspace_key(f, key.basis()) == key);
    if (key.rank > 0) REQUIRE(unpack_key(f, 2, key.rank, pack_key(f, key)) == key);
  }
}

TEST_CASE("subspace enumeration matches brute-force subspaces and Gaussian binomials") {
  struct Case {
    unsigned p, r;
    std::size_t s, t;
  };
  for (const Case c : {Case{2, 1, 2, 1}, Case{2, 1, 2, 2}, Case{2, 1, 2, 3}, Case{2, 1, 2, 4}, Case{3, 1, 2, 1},
                       Case{3, 1, 2, 2}, Case{2, 2, 2, 1}, Case{2, 1, 3, 1}}) {
    const FiniteField f = FiniteField::create(c.p, c.r);
    CAPTURE(f.q());
    CAPTURE(c.s);
    CAPTURE(c.t);
    const auto brute = oracle::subspaces(poly_of(f), c.s * c.s, c.t);
    const auto keys = enumerate_subspaces(f, c.s, c.t);
    CHECK(keys.size() == brute.size());
    CHECK(BigInt(keys.size()) == gaussian_binomial(f.q(), c.s * c.s, c.t));
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
    for (const auto& k : keys) {
      std::vector<Elem> copy = k.rref;
      REQUIRE(linalg::rref(f, copy, c.t, c.s * c.s) == c.t);
      REQUIRE(copy == k.rref);
    }
  }
  CHECK(count_subspaces(FiniteField::create(2, 1), 3, 2) == 43435);
  CHECK_THROWS_AS(count_subspaces(FiniteField::create(2, 1), 2, 5), Error);
}

TEST_CASE("tuple compatibility") {
  const FiniteField f = FiniteField::create(3, 1);
  auto rep = tuple_compatible(f, {Mat(2, {1, 0, 0, 0})});
  CHECK(rep.independent);
  CHECK(rep.dead_indices == std::vector<std::size_t>{1});
  CHECK_FALSE(rep.verdict);
  rep = tuple_compatible(f, {Mat(2, {1, 0, 0, 0}), Mat(2, {0, 1, 0, 0})});
  CHECK(rep.verdict);
  rep = tuple_compatible(f, {Mat(2, {1, 0, 0, 1}), Mat(2, {2, 0, 0, 2})});
  CHECK_FALSE(rep.independent);
  CHECK_FALSE(rep.verdict);
}

TEST_CASE("sign coset representatives") {
  CHECK(sign_coset_reps(FiniteField::create(5, 1)) == std::vector<Elem>{1, 2});
  CHECK(sign_coset_reps(FiniteField::create(2, 2)) == std::vector<Elem>{1, 2, 3});
}

namespace {

// Checks pairwise non-congruence and exhaustiveness of `reps` against the
// union-find congruence partition, optionally restricted to symmetric matrices.
void check_rep_list(const FiniteField& f, std::size_t s, const std::vector<Mat>& reps, bool symmetric) {
  const auto poly = poly_of(f);
  const auto cls = oracle::congruence_partition(poly, s, [&](const oracle::Matrix& m) {
    return !symmetric || m == oracle::transpose(m, s);
  });
  std::set<std::uint64_t> hit;
  for (const auto& m : reps) {
    REQUIRE(hit.insert(cls[linalg::encode(f, m)]).second);
  }
  const std::size_t classes = oracle::count_classes(cls, [&](std::uint64_t code) {
    return !symmetric || linalg::decode(f, s, code).is_symmetric();
  });
  CHECK(hit.size() == classes);
}

}  // namespace

TEST_CASE("case representative lists are exhaustive and pairwise non-congruent") {
  check_rep_list(FiniteField::create(2, 1), 2, case_rep_list(FiniteField::create(2, 1), 2), false);
  check_rep_list(FiniteField::create(3, 1), 2, case_rep_list(FiniteField::create(3, 1), 2), false);
  check_rep_list(FiniteField::create(5, 1), 2, case_rep_list(FiniteField::create(5, 1), 2), false);
  check_rep_list(FiniteField::create(2, 2), 2, case_rep_list(FiniteField::create(2, 2), 2), false);
  check_rep_list(FiniteField::create(2, 1), 3, case_rep_list(FiniteField::create(2, 1), 3), false);
  CHECK(case_rep_list(FiniteField::create(3, 1), 2).size() == 10);
  CHECK(case_rep_list(FiniteField::create(2, 1), 3).size() == 12);
  CHECK(case_rep_list(FiniteField::create(3, 1), 3).size() == 25);
  CHECK(case_rep_list(FiniteField::create(2, 2), 3).size() == 16);
  CHECK_THROWS_AS(case_rep_list(FiniteField::create(3, 1), 4), Error);
}

TEST_CASE("symmetric representative lists") {
  for (unsigned p : {2u, 3u}) {
    const FiniteField f = FiniteField::create(p, 1);
    for (std::size_t s = 1; s <= 3; ++s) {
      auto reps = newman_symmetric_reps(f, s);
      for (const auto& m : reps) CHECK(m.is_symmetric());
      if (p == 3) CHECK(reps.size() == 2 * s);
      reps.insert(reps.begin(), Mat(s));
      check_rep_list(f, s, reps, true);
    }
  }
}
