#include "ringforge/iso.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <thread>

namespace ringforge {

IsoMode parse_iso_mode(const std::string& name) {
  if (name == "central") return IsoMode::central;
  if (name == "global_twist") return IsoMode::global_twist;
  if (name == "s1t1") return IsoMode::s1t1;
  if (name == "row_twisted") return IsoMode::row_twisted;
  throw Error(ErrorCode::ModeMismatch, "unknown iso mode '" + name + "'");
}

std::string to_string(IsoMode mode) {
  switch (mode) {
    case IsoMode::central: return "central";
    case IsoMode::global_twist: return "global_twist";
    case IsoMode::s1t1: return "s1t1";
    case IsoMode::row_twisted: return "row_twisted";
  }
  return "?";
}

namespace {

bool uniform_sigma(const RingSpec& spec) {
  return std::all_of(spec.sigma.begin(), spec.sigma.end(), [&](Automorphism a) { return a == spec.sigma.front(); });
}

template <class It>
std::vector<unsigned> sorted_exponents(It first, It last) {
  std::vector<unsigned> v;
  for (auto it = first; it != last; ++it) v.push_back(it->exponent);
  std::sort(v.begin(), v.end());
  return v;
}

// Greedy matching of V automorphisms: source V index j -> first unused target
// index with the same automorphism.
std::optional<std::vector<std::size_t>> match_v(const RingSpec& a, const RingSpec& d) {
  std::vector<std::size_t> perm(a.lambda);
  std::vector<char> used(d.lambda, 0);
  for (std::size_t j = 0; j < a.lambda; ++j) {
    bool found = false;
    for (std::size_t m = 0; m < d.lambda && !found; ++m) {
      if (!used[m] && d.theta[d.t + m] == a.theta[a.t + j]) {
        used[m] = 1;
        perm[j] = m;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return perm;
}

// T(E, D)_{ij} = sum_{nu,mu} E(nu,i) D(nu,mu) E(mu,j)^{sigma_i}.
Mat twisted_pullback(const FiniteField& f, const Mat& e, const Mat& dm, const std::vector<Automorphism>& sigma) {
  const std::size_t s = e.n;
  Mat out(s);
  for (std::size_t i = 0; i < s; ++i) {
    // row_i = sum_nu E(nu,i) D(nu,:)
    std::vector<Elem> row(s, 0);
    for (std::size_t nu = 0; nu < s; ++nu) {
      const Elem c = e(nu, i);
      if (c == 0) continue;
      for (std::size_t mu = 0; mu < s; ++mu) row[mu] = f.add(row[mu], f.mul(c, dm(nu, mu)));
    }
    for (std::size_t j = 0; j < s; ++j) {
      Elem acc = 0;
      for (std::size_t mu = 0; mu < s; ++mu) {
        if (row[mu] == 0) continue;
        acc = f.add(acc, f.mul(row[mu], f.frobenius(sigma[i], e(mu, j))));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

struct Candidate {
  std::uint64_t code = std::numeric_limits<std::uint64_t>::max();
  std::optional<IsoWitness> witness;
};

class Searcher {
 public:
  Searcher(const RingSpec& a, const RingSpec& d) : a_(a), d_(d), f_(a.field) {}

  // Tries a single (sigma, C). Returns a witness if it works.
  std::optional<IsoWitness> attempt(Automorphism sigma, const std::vector<Elem>& a_sigma_rows,
                                    const std::vector<Elem>& a_key, const Mat& c) const {
    const std::size_t s = a_.s, t = a_.t, w = s * s;
    const auto e = linalg::inverse(f_, c);
    if (!e) return std::nullopt;
    for (std::size_t nu = 0; nu < s; ++nu) {
      for (std::size_t i = 0; i < s; ++i) {
        if ((*e)(nu, i) != 0 && d_.sigma[nu] != a_.sigma[i]) return std::nullopt;
      }
    }
    std::vector<Elem> pulled;
    pulled.reserve(t * w);
    for (const auto& dm : d_.matrices) {
      const Mat tm = twisted_pullback(f_, *e, dm, a_.sigma);
      pulled.insert(pulled.end(), tm.e.begin(), tm.e.end());
    }
    std::vector<Elem> key = pulled;
    if (linalg::rref(f_, key, t, w) != t || key != a_key) return std::nullopt;

    Mat b(t);
    for (std::size_t rho = 0; rho < t; ++rho) {
      const auto coeffs = linalg::solve_in_span(f_, a_sigma_rows, t, w,
                                                std::span<const Elem>(pulled.data() + rho * w, w));
      if (!coeffs) return std::nullopt;
      for (std::size_t k = 0; k < t; ++k) {
        b(k, rho) = (*coeffs)[k];
        if (b(k, rho) != 0 && a_.theta[k] != d_.theta[rho]) return std::nullopt;
      }
    }
    auto perm = match_v(a_, d_);
    if (!perm) return std::nullopt;
    return IsoWitness{sigma, c, b, *perm};
  }

  std::optional<IsoWitness> run(unsigned workers) const {
    const std::size_t s = a_.s, t = a_.t, w = s * s;
    std::uint64_t codes = 1;
    for (std::size_t i = 0; i < w; ++i) codes *= f_.q();
    workers = std::max(1u, workers);

    for (unsigned ex = 0; ex < f_.r(); ++ex) {
      const Automorphism sigma{ex};
      std::vector<Elem> a_sigma_rows;
      for (const auto& m : a_.matrices) {
        const Mat ms = linalg::frobenius(f_, sigma, m);
        a_sigma_rows.insert(a_sigma_rows.end(), ms.e.begin(), ms.e.end());
      }
      std::vector<Elem> a_key = a_sigma_rows;
      linalg::rref(f_, a_key, t, w);

      std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
      std::vector<Candidate> found(workers);
      auto scan = [&](unsigned id) {
        const std::uint64_t lo = codes * id / workers, hi = codes * (id + 1) / workers;
        for (std::uint64_t code = lo; code < hi; ++code) {
          if (code > best.load(std::memory_order_relaxed)) return;
          const Mat c = linalg::decode(f_, s, code);
          if (linalg::det(f_, c) == 0) continue;
          if (auto wit = attempt(sigma, a_sigma_rows, a_key, c)) {
            found[id] = Candidate{code, std::move(wit)};
            std::uint64_t cur = best.load();
            while (code < cur && !best.compare_exchange_weak(cur, code)) {
            }
            return;
          }
        }
      };
      if (workers == 1) {
        scan(0);
      } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < workers; ++id) pool.emplace_back(scan, id);
      }
      const auto it = std::min_element(found.begin(), found.end(),
                                       [](const Candidate& x, const Candidate& y) { return x.code < y.code; });
      if (it->witness) return it->witness;
    }
    return std::nullopt;
  }

 private:
  const RingSpec& a_;
  const RingSpec& d_;
  const FiniteField& f_;
};

}  // namespace

std::optional<IsoWitness> iso_test(const RingSpec& a, const RingSpec& d, IsoMode mode, unsigned workers) {
  const Ring ra = Ring::create(a);
  const Ring rd = Ring::create(d);
  if (!(a.field == d.field) || a.s != d.s || a.t != d.t || a.lambda != d.lambda) {
    throw Error(ErrorCode::InvariantMismatch, "rings differ in (p, n, r, s, t, lambda) or field modulus");
  }
  const FiniteField& f = a.field;

  switch (mode) {
    case IsoMode::central:
      if (!a.all_identity() || !d.all_identity()) {
        throw Error(ErrorCode::ModeMismatch, "central mode requires identity automorphisms");
      }
      break;
    case IsoMode::global_twist:
      if (!uniform_sigma(a) || !uniform_sigma(d)) {
        throw Error(ErrorCode::ModeMismatch, "global_twist mode requires all sigma_i equal");
      }
      break;
    case IsoMode::s1t1:
      if (a.s != 1 || a.t != 1) throw Error(ErrorCode::ModeMismatch, "s1t1 mode requires s = t = 1");
      break;
    case IsoMode::row_twisted:
      break;
  }

  if (sorted_exponents(a.sigma.begin(), a.sigma.end()) != sorted_exponents(d.sigma.begin(), d.sigma.end())) {
    return std::nullopt;
  }
  if (sorted_exponents(a.theta.begin() + a.t, a.theta.end()) !=
      sorted_exponents(d.theta.begin() + d.t, d.theta.end())) {
    return std::nullopt;
  }

  if (mode == IsoMode::s1t1) {
    if (a.sigma[0] != d.sigma[0]) return std::nullopt;
    auto perm = match_v(a, d);
    if (!perm) return std::nullopt;
    Mat b(1);
    b(0, 0) = f.div(d.matrices[0](0, 0), a.matrices[0](0, 0));
    return IsoWitness{Automorphism{0}, Mat::identity(1), b, *perm};
  }

  return Searcher(a, d).run(workers);
}

RingElement apply_witness(const RingSpec& a, const IsoWitness& w, const RingElement& x) {
  const FiniteField& f = a.field;
  const auto e = linalg::inverse(f, w.c);
  if (!e) throw Error(ErrorCode::SingularC, "witness C is singular");
  RingElement y{f.frobenius(w.sigma, x.alpha0), std::vector<Elem>(a.s, 0),
                std::vector<Elem>(a.t + a.lambda, 0)};
  for (std::size_t nu = 0; nu < a.s; ++nu) {
    Elem acc = 0;
    for (std::size_t i = 0; i < a.s; ++i) acc = f.add(acc, f.mul((*e)(nu, i), f.frobenius(w.sigma, x.u[i])));
    y.u[nu] = acc;
  }
  for (std::size_t rho = 0; rho < a.t; ++rho) {
    Elem acc = 0;
    for (std::size_t k = 0; k < a.t; ++k) acc = f.add(acc, f.mul(w.b(k, rho), f.frobenius(w.sigma, x.w[k])));
    y.w[rho] = acc;
  }
  for (std::size_t j = 0; j < a.lambda; ++j) y.w[a.t + w.v_perm[j]] = f.frobenius(w.sigma, x.w[a.t + j]);
  return y;
}

WitnessCheck verify_witness(const Ring& a, const Ring& d, const IsoWitness& w, std::uint64_t seed,
                            std::uint64_t samples) {
  WitnessCheck out;
  const FiniteField& f = a.field();
  if (linalg::det(f, w.c) == 0 || linalg::det(f, w.b) == 0) {
    out.failure = "witness matrices are singular";
    return out;
  }
  auto psi = [&](const RingElement& x) { return apply_witness(a.spec(), w, x); };
  auto check_pair = [&](const RingElement& x, const RingElement& y) -> bool {
    if (psi(a.mul(x, y)) != d.mul(psi(x), psi(y))) {
      out.failure = "psi(xy) != psi(x)psi(y) at x=" + to_string(f, x) + " y=" + to_string(f, y);
      return false;
    }
    if (psi(a.add(x, y)) != d.add(psi(x), psi(y))) {
      out.failure = "psi(x+y) != psi(x)+psi(y) at x=" + to_string(f, x) + " y=" + to_string(f, y);
      return false;
    }
    return true;
  };
  if (psi(a.one()) != d.one()) {
    out.failure = "psi(1) != 1";
    return out;
  }

  const auto order = a.order();
  if (order && *order <= 729) {
    out.exhaustive = true;
    std::vector<RingElement> elems, images;
    std::vector<char> hit(*order, 0);
    for (std::uint64_t c = 0; c < *order; ++c) {
      elems.push_back(a.decode(c));
      images.push_back(psi(elems.back()));
      const std::uint64_t ic = d.encode(images.back());
      if (hit[ic]) {
        out.failure = "psi is not injective";
        return out;
      }
      hit[ic] = 1;
    }
    for (std::uint64_t x = 0; x < *order; ++x) {
      for (std::uint64_t y = 0; y < *order; ++y) {
        if (d.mul(images[x], images[y]) != psi(a.mul(elems[x], elems[y]))) {
          out.failure = "psi(xy) != psi(x)psi(y) at x=" + to_string(f, elems[x]) + " y=" + to_string(f, elems[y]);
          return out;
        }
        if (d.add(images[x], images[y]) != psi(a.add(elems[x], elems[y]))) {
          out.failure = "psi is not additive";
          return out;
        }
      }
    }
    out.ok = true;
    return out;
  }

  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    if (!check_pair(a.random_element(rng), a.random_element(rng))) return out;
  }
  out.ok = true;
  return out;
}

}  // namespace ringforge
