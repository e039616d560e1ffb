#include "ringforge/matspace.hpp"

#include <cmath>
#include <string>

namespace ringforge {

MatTuple SubspaceKey::basis() const {
  MatTuple out;
  const std::size_t w = s * s;
  for (std::size_t i = 0; i < rank; ++i) {
    out.emplace_back(s, std::vector<Elem>(rref.begin() + i * w, rref.begin() + (i + 1) * w));
  }
  return out;
}

Mat congruence_twist(const FiniteField& f, const Mat& c, Automorphism e, const Mat& a) {
  if (c.n != a.n) throw Error(ErrorCode::ShapeMismatch, "C and A differ in size");
  if (linalg::det(f, c) == 0) throw Error(ErrorCode::SingularC, "C is singular");
  return linalg::multiply(f, linalg::transpose(c), linalg::multiply(f, linalg::frobenius(f, e, a), c));
}

namespace {

std::size_t common_size(const MatTuple& tuple) {
  if (tuple.empty()) throw Error(ErrorCode::ShapeMismatch, "empty matrix tuple");
  const std::size_t s = tuple.front().n;
  for (const auto& m : tuple) {
    if (m.n != s || m.e.size() != s * s) throw Error(ErrorCode::ShapeMismatch, "tuple members differ in shape");
  }
  return s;
}

std::vector<Elem> coordinate_rows(const MatTuple& tuple) {
  std::vector<Elem> rows;
  for (const auto& m : tuple) rows.insert(rows.end(), m.e.begin(), m.e.end());
  return rows;
}

}  // namespace

SubspaceKey subspace_key(const FiniteField& f, const MatTuple& tuple) {
  const std::size_t s = common_size(tuple);
  for (const auto& m : tuple) linalg::check_entries(f, m);
  std::vector<Elem> rows = coordinate_rows(tuple);
  const std::size_t w = s * s;
  const std::size_t rk = linalg::rref(f, rows, tuple.size(), w);
  rows.resize(rk * w);
  return SubspaceKey{s, rk, std::move(rows)};
}

bool key_fits_u64(unsigned q, std::size_t s, std::size_t t) {
  const double bits = static_cast<double>(t * s * s) * std::log2(static_cast<double>(q));
  return bits <= 63.0;
}

std::uint64_t pack_key(const FiniteField& f, const SubspaceKey& key) {
  if (!key_fits_u64(f.q(), key.s, key.rank)) throw Error(ErrorCode::RangeError, "key does not fit in 64 bits");
  std::uint64_t code = 0;
  for (Elem x : key.rref) code = code * f.q() + x;
  return code;
}

SubspaceKey unpack_key(const FiniteField& f, std::size_t s, std::size_t rank, std::uint64_t code) {
  SubspaceKey key{s, rank, std::vector<Elem>(rank * s * s)};
  for (std::size_t i = key.rref.size(); i-- > 0;) {
    key.rref[i] = static_cast<Elem>(code % f.q());
    code /= f.q();
  }
  return key;
}

namespace {

// Depth-first walk over RREF matrices in lexicographic order of the flattened
// entries. Values at each position are tried in ascending order; pruning keeps
// only prefixes that can still be completed to rank t.
class RrefWalker {
 public:
  RrefWalker(unsigned q, std::size_t t, std::size_t n, const std::function<bool(std::span<const Elem>)>& fn)
      : q_(q), t_(t), n_(n), fn_(fn), cur_(t * n, 0), free_(t + 1, std::vector<char>(n, 1)),
        suffix_(t + 1, std::vector<std::size_t>(n + 1, 0)), pivot_(t, 0) {}

  void run() {
    prepare_row(0);
    row(0, 0, false, 0);
  }

 private:
  // free_[i][c]: rows 0..i-1 are zero in column c. suffix_[i][c]: number of
  // such columns at index >= c.
  void prepare_row(std::size_t i) {
    if (i > 0) {
      for (std::size_t c = 0; c < n_; ++c) free_[i][c] = free_[i - 1][c] && cur_[(i - 1) * n_ + c] == 0;
    }
    suffix_[i][n_] = 0;
    for (std::size_t c = n_; c-- > 0;) suffix_[i][c] = suffix_[i][c + 1] + (free_[i][c] ? 1 : 0);
  }

  // Returns false when the walk was aborted by the callback.
  bool row(std::size_t i, std::size_t c, bool have_pivot, std::size_t eligible) {
    if (c == n_) {
      if (i + 1 == t_) return fn_(std::span<const Elem>(cur_));
      prepare_row(i + 1);
      return row(i + 1, 0, false, 0);
    }
    Elem& slot = cur_[i * n_ + c];
    const std::size_t need_after = t_ - i - 1;
    if (!have_pivot) {
      const std::size_t min_col = i == 0 ? 0 : pivot_[i - 1] + 1;
      // Leave this entry zero: the pivot and all later pivots must fit after c.
      const std::size_t lo = std::max(c + 1, min_col);
      if (lo <= n_ && suffix_[i][lo] >= need_after + 1) {
        slot = 0;
        if (!row(i, c + 1, false, 0)) return false;
      }
      if (c >= min_col && free_[i][c] && suffix_[i][c + 1] >= need_after) {
        slot = 1;
        pivot_[i] = c;
        if (!row(i, c + 1, true, 0)) return false;
        slot = 0;
      }
      return true;
    }
    const std::size_t rest = suffix_[i][c + 1];
    for (Elem v = 0; v < q_; ++v) {
      const std::size_t here = (v == 0 && free_[i][c]) ? 1 : 0;
      if (eligible + here + rest < need_after) continue;
      slot = v;
      if (!row(i, c + 1, true, eligible + here)) return false;
    }
    slot = 0;
    return true;
  }

  unsigned q_;
  std::size_t t_, n_;
  const std::function<bool(std::span<const Elem>)>& fn_;
  std::vector<Elem> cur_;
  std::vector<std::vector<char>> free_;
  std::vector<std::vector<std::size_t>> suffix_;
  std::vector<std::size_t> pivot_;
};

}  // namespace

void for_each_subspace(const FiniteField& f, std::size_t s, std::size_t t,
                       const std::function<bool(std::span<const Elem>)>& fn) {
  if (s < 1 || t < 1 || t > s * s) {
    throw Error(ErrorCode::RangeError, "subspace dimension must lie in [1, s^2]");
  }
  RrefWalker walker(f.q(), t, s * s, fn);
  walker.run();
}

std::vector<SubspaceKey> enumerate_subspaces(const FiniteField& f, std::size_t s, std::size_t t) {
  std::vector<SubspaceKey> out;
  for_each_subspace(f, s, t, [&](std::span<const Elem> rows) {
    out.push_back(SubspaceKey{s, t, std::vector<Elem>(rows.begin(), rows.end())});
    return true;
  });
  return out;
}

std::uint64_t count_subspaces(const FiniteField& f, std::size_t s, std::size_t t) {
  std::uint64_t n = 0;
  for_each_subspace(f, s, t, [&](std::span<const Elem>) {
    ++n;
    return true;
  });
  return n;
}

std::vector<std::size_t> dead_indices(std::span<const Elem> rows, std::size_t k, std::size_t s) {
  std::vector<std::size_t> dead;
  const std::size_t w = s * s;
  for (std::size_t i = 0; i < s; ++i) {
    bool vanishes = true;
    for (std::size_t m = 0; m < k && vanishes; ++m) {
      const Elem* a = rows.data() + m * w;
      for (std::size_t j = 0; j < s; ++j) {
        if (a[i * s + j] != 0 || a[j * s + i] != 0) {
          vanishes = false;
          break;
        }
      }
    }
    if (vanishes) dead.push_back(i);
  }
  return dead;
}

CompatReport tuple_compatible(const FiniteField& f, const MatTuple& tuple) {
  const std::size_t s = common_size(tuple);
  std::vector<Elem> rows = coordinate_rows(tuple);
  CompatReport rep;
  rep.dead_indices = dead_indices(rows, tuple.size(), s);
  rep.independent = linalg::rref(f, rows, tuple.size(), s * s) == tuple.size();
  rep.verdict = rep.independent && rep.dead_indices.empty();
  return rep;
}

std::vector<Elem> sign_coset_reps(const FiniteField& f) {
  std::vector<Elem> reps;
  for (Elem a = 1; a < f.q(); ++a) {
    if (a <= f.neg(a)) reps.push_back(a);
  }
  return reps;
}

std::vector<Mat> newman_symmetric_reps(const FiniteField& f, std::size_t s) {
  if (s < 1) throw Error(ErrorCode::RangeError, "s must be >= 1");
  std::vector<Mat> reps;
  for (std::size_t rho = 1; rho <= s; ++rho) {
    Mat id(s);
    for (std::size_t i = 0; i < rho; ++i) id(i, i) = 1;
    reps.push_back(id);
    if (f.p() != 2) {
      Mat m = id;
      m(0, 0) = f.nonsquare();
      reps.push_back(m);
    } else if (rho % 2 == 0) {
      Mat m(s);
      for (std::size_t b = 0; b < rho; b += 2) {
        m(b, b + 1) = 1;
        m(b + 1, b) = 1;
      }
      reps.push_back(m);
    }
  }
  return reps;
}

namespace {

Mat mat2(Elem a, Elem b, Elem c, Elem d) { return Mat(2, {a, b, c, d}); }

Mat mat3(std::initializer_list<Elem> v) { return Mat(3, std::vector<Elem>(v)); }

// Least alpha with X^2 + alpha X + 1 irreducible over F (no root in F).
Elem irreducible_quadratic_coefficient(const FiniteField& f) {
  for (Elem a = 0; a < f.q(); ++a) {
    bool has_root = false;
    for (Elem x = 0; x < f.q() && !has_root; ++x) {
      has_root = f.add(f.add(f.mul(x, x), f.mul(a, x)), 1) == 0;
    }
    if (!has_root) return a;
  }
  throw Error(ErrorCode::RangeError, "no irreducible quadratic X^2 + aX + 1");
}

}  // namespace

std::vector<Mat> case_rep_list(const FiniteField& f, std::size_t s) {
  if (s != 2 && s != 3) throw Error(ErrorCode::UnsupportedS, "representative lists exist for s = 2, 3 only");
  std::vector<Mat> out;
  const Elem one = 1;
  const Elem minus_one = f.neg(1);
  const auto gammas = sign_coset_reps(f);

  if (s == 2) {
    if (f.p() != 2) {
      const Elem g = f.nonsquare();
      const Elem two_g = f.add(g, g);
      out = {mat2(0, 0, 0, 0), mat2(0, one, minus_one, 0), mat2(1, 0, 0, 0), mat2(1, 0, 1, 0),
             mat2(g, 0, 0, 0), mat2(g, 0, two_g, g),       mat2(1, 0, 0, 1), mat2(1, 0, 0, g)};
      for (Elem c : gammas) out.push_back(mat2(1, 0, c, 1));
      for (Elem c : gammas) out.push_back(mat2(1, 0, c, g));
    } else {
      out = {mat2(0, 0, 0, 0), mat2(1, 0, 0, 0), mat2(1, 0, 0, 1), mat2(0, 1, 1, 0), mat2(1, 0, 1, 0)};
      for (Elem a = 1; a < f.q(); ++a) out.push_back(mat2(1, 0, a, 1));
    }
    return out;
  }

  if (f.p() != 2) {
    const Elem e = f.nonsquare();
    const Elem two_e = f.add(e, e);
    out = {mat3({0, 0, 0, 0, 0, 0, 0, 0, 0}), mat3({1, 0, 0, 0, 0, 0, 0, 0, 0}), mat3({e, 0, 0, 0, 0, 0, 0, 0, 0}),
           mat3({1, 0, 0, 0, 1, 0, 0, 0, 0}), mat3({1, 0, 0, 0, e, 0, 0, 0, 0}), mat3({1, 0, 0, 0, 1, 0, 0, 0, 1}),
           mat3({1, 0, 0, 0, 1, 0, 0, 0, e})};
    for (Elem mu : {Elem{0}, Elem{1}, e}) {
      out.push_back(mat3({mu, 0, 0, 0, 0, 1, 0, minus_one, 0}));
      out.push_back(mat3({mu, 0, 0, 0, 0, 0, 0, 1, 0}));
      out.push_back(mat3({mu, 0, 0, 0, e, 0, 0, two_e, e}));
      for (Elem c : gammas) out.push_back(mat3({mu, 0, 0, 0, 1, 0, 0, c, 1}));
      for (Elem c : gammas) out.push_back(mat3({mu, 0, 0, 0, 1, 0, 0, c, e}));
      out.push_back(mat3({mu, 0, 0, 0, 0, 1, 1, 1, 0}));
    }
    return out;
  }

  const Elem alpha = irreducible_quadratic_coefficient(f);
  out = {mat3({0, 0, 0, 0, 0, 0, 0, 0, 0}), mat3({1, 0, 0, 0, 0, 0, 0, 0, 0}), mat3({1, 0, 0, 0, 1, 0, 0, 0, 0}),
         mat3({1, 0, 0, 0, 1, 0, 0, 0, 1}), mat3({0, 0, 0, 0, 0, 1, 0, 1, 0})};
  for (Elem mu : {Elem{0}, Elem{1}}) out.push_back(mat3({mu, 0, 0, 0, 0, 0, 0, 1, 0}));
  for (Elem mu : {Elem{0}, Elem{1}}) {
    for (Elem c = 1; c < f.q(); ++c) out.push_back(mat3({mu, 0, 0, 0, 1, 0, 0, c, 1}));
  }
  // The published list repeats the class of [[1,0,0],[0,0,0],[0,1,0]] here;
  // this member covers the class of [[0,0,0],[0,0,1],[1,0,0]] instead.
  out.push_back(mat3({1, 0, 0, 0, 1, 0, 1, 1, 0}));
  out.push_back(mat3({1, 0, 0, 0, 0, 1, 1, 1, 0}));
  out.push_back(mat3({1, 0, 0, 0, 0, 1, alpha, 1, 1}));
  return out;
}

}  // namespace ringforge
