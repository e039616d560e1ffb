#include "ringforge/classify.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>
#include <thread>
#include <unordered_set>

#include "ringforge/counting.hpp"

namespace ringforge {

std::uint64_t ClassReport::commutative_count() const {
  return static_cast<std::uint64_t>(
      std::count_if(classes.begin(), classes.end(), [](const ClassInfo& c) { return c.commutative_capable; }));
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::automatic: return "automatic";
    case Strategy::sweep: return "sweep";
    case Strategy::bfs: return "bfs";
  }
  return "?";
}

std::uint64_t acting_group_order(const FiniteField& f, std::size_t s, bool with_frobenius) {
  return linalg::gl_order(f.q(), s) * (with_frobenius ? f.r() : 1);
}

namespace {

struct GroupElem {
  Mat c;
  Automorphism e;
};

// Object layout: `rows` stacked s x s matrices, row-major. Subspace objects are
// kept in RREF after every action.
struct Space {
  FiniteField f;
  std::size_t s = 0;
  std::size_t rows = 0;
  bool subspace = false;
  bool frobenius = false;

  std::size_t block() const { return s * s; }
  std::size_t width() const { return rows * s * s; }
};

class Actor {
 public:
  explicit Actor(const Space& sp) : sp_(sp), tmp_(sp.block()) {}

  void apply(const GroupElem& g, std::span<const Elem> in, std::span<Elem> out) {
    const FiniteField& f = sp_.f;
    const std::size_t s = sp_.s, w = sp_.block();
    for (std::size_t k = 0; k < sp_.rows; ++k) {
      const Elem* a = in.data() + k * w;
      // tmp = A^e C
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
          Elem acc = 0;
          for (std::size_t m = 0; m < s; ++m) {
            const Elem x = a[i * s + m];
            if (x != 0) acc = f.add(acc, f.mul(f.frobenius(g.e, x), g.c(m, j)));
          }
          tmp_[i * s + j] = acc;
        }
      }
      Elem* o = out.data() + k * w;
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
          Elem acc = 0;
          for (std::size_t m = 0; m < s; ++m) {
            const Elem x = g.c(m, i);
            if (x != 0) acc = f.add(acc, f.mul(x, tmp_[m * s + j]));
          }
          o[i * s + j] = acc;
        }
      }
    }
    if (sp_.subspace) linalg::rref(f, out, sp_.rows, w);
  }

 private:
  const Space& sp_;
  std::vector<Elem> tmp_;
};

std::optional<std::uint64_t> keyspace_size(unsigned q, std::size_t width) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < width; ++i) {
    if (n > (std::uint64_t{1} << 63) / q) return std::nullopt;
    n *= q;
  }
  return n;
}

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 28;

class Visited {
 public:
  Visited(unsigned q, std::size_t width) : q_(q) {
    const auto space = keyspace_size(q, width);
    if (space && *space <= kDenseLimit) {
      mode_ = Mode::dense;
      bits_.assign((*space + 63) / 64, 0);
    } else if (space) {
      mode_ = Mode::packed;
    } else {
      mode_ = Mode::bytes;
    }
  }

  /// True when the key was not present before.
  bool insert(std::span<const Elem> key) {
    switch (mode_) {
      case Mode::dense: {
        const std::uint64_t c = pack(key);
        std::uint64_t& word = bits_[c >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        if (word & bit) return false;
        word |= bit;
        return true;
      }
      case Mode::packed: return packed_.insert(pack(key)).second;
      case Mode::bytes: return bytes_.emplace(reinterpret_cast<const char*>(key.data()), key.size_bytes()).second;
    }
    return false;
  }

  bool contains(std::span<const Elem> key) const {
    switch (mode_) {
      case Mode::dense: {
        const std::uint64_t c = pack(key);
        return (bits_[c >> 6] >> (c & 63)) & 1;
      }
      case Mode::packed: return packed_.count(pack(key)) != 0;
      case Mode::bytes:
        return bytes_.count(std::string(reinterpret_cast<const char*>(key.data()), key.size_bytes())) != 0;
    }
    return false;
  }

 private:
  enum class Mode { dense, packed, bytes };

  std::uint64_t pack(std::span<const Elem> key) const {
    std::uint64_t c = 0;
    for (Elem x : key) c = c * q_ + x;
    return c;
  }

  unsigned q_;
  Mode mode_ = Mode::bytes;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::uint64_t> packed_;
  std::unordered_set<std::string> bytes_;
};

bool rows_commutative(const Space& sp, std::span<const Elem> rows) {
  const std::size_t s = sp.s, w = sp.block();
  for (std::size_t k = 0; k < sp.rows; ++k) {
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i + 1; j < s; ++j) {
        if (rows[k * w + i * s + j] != rows[k * w + j * s + i]) return false;
      }
    }
  }
  return true;
}

bool rows_compatible(const Space& sp, std::span<const Elem> rows) {
  if (std::all_of(rows.begin(), rows.end(), [](Elem x) { return x == 0; })) return false;
  return dead_indices(rows, sp.rows, sp.s).empty();
}

std::vector<GroupElem> all_group_elements(const Space& sp) {
  std::vector<GroupElem> out;
  const unsigned autos = sp.frobenius ? sp.f.r() : 1;
  for (unsigned e = 0; e < autos; ++e) {
    linalg::for_each_invertible(sp.f, sp.s, [&](const Mat& c) {
      out.push_back(GroupElem{c, Automorphism{e}});
      return true;
    });
  }
  return out;
}

std::vector<GroupElem> generators(const Space& sp) {
  const FiniteField& f = sp.f;
  const std::size_t s = sp.s;
  std::vector<GroupElem> out;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) continue;
      for (unsigned k = 0; k < f.r(); ++k) {
        Mat c = Mat::identity(s);
        c(i, j) = f.basis_element(k);
        out.push_back(GroupElem{c, Automorphism{0}});
      }
    }
  }
  if (f.q() > 2) {
    Mat d = Mat::identity(s);
    d(0, 0) = f.primitive_element();
    out.push_back(GroupElem{d, Automorphism{0}});
  }
  if (sp.frobenius && f.r() > 1) out.push_back(GroupElem{Mat::identity(s), Automorphism{1}});
  return out;
}

// Applies every element of `group` to every object in `sources`, in parallel
// slices over the group. Output holds sources.size() * group.size() images,
// ordered by (source, group element).
std::vector<Elem> images(const Space& sp, const std::vector<GroupElem>& group, std::span<const Elem> sources,
                         unsigned workers) {
  const std::size_t w = sp.width();
  const std::size_t nsrc = sources.size() / w;
  const std::size_t total = nsrc * group.size();
  std::vector<Elem> out(total * w);
  auto work = [&](std::size_t lo, std::size_t hi) {
    Actor actor(sp);
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const std::size_t src = idx / group.size(), g = idx % group.size();
      actor.apply(group[g], sources.subspan(src * w, w), std::span<Elem>(out.data() + idx * w, w));
    }
  };
  if (workers <= 1 || total < 4096) {
    work(0, total);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id) {
      pool.emplace_back(work, total * id / workers, total * (id + 1) / workers);
    }
  }
  return out;
}

struct OrbitStats {
  std::uint64_t size = 0;
  bool compatible = false;
  bool commutative = false;
};

class Engine {
 public:
  Engine(Space sp, const ClassifyOptions& opts, Strategy strategy)
      : sp_(std::move(sp)), opts_(opts), strategy_(strategy) {
    if (strategy_ == Strategy::sweep) {
      group_ = all_group_elements(sp_);
    } else {
      group_ = generators(sp_);
    }
  }

  // Closes the orbit of `rep`, marking members in `visited`. When `members`
  // is non-null every member is appended to it.
  OrbitStats close(std::span<const Elem> rep, Visited& visited, std::vector<Elem>* members) const {
    const std::size_t w = sp_.width();
    OrbitStats st;
    st.commutative = rows_commutative(sp_, rep);
    auto admit = [&](std::span<const Elem> obj) {
      if (!visited.insert(obj)) return false;
      ++st.size;
      if (!st.compatible && rows_compatible(sp_, obj)) st.compatible = true;
      if (rows_commutative(sp_, obj) != st.commutative) {
        throw Error(ErrorCode::InvariantMismatch, "symmetry is not constant on an orbit");
      }
      if (members) members->insert(members->end(), obj.begin(), obj.end());
      return true;
    };
    admit(rep);

    if (strategy_ == Strategy::sweep) {
      const auto imgs = images(sp_, group_, rep, opts_.workers);
      for (std::size_t i = 0; i < imgs.size() / w; ++i) admit(std::span<const Elem>(imgs.data() + i * w, w));
      return st;
    }

    std::vector<Elem> frontier(rep.begin(), rep.end());
    while (!frontier.empty()) {
      const auto imgs = images(sp_, group_, frontier, opts_.workers);
      std::vector<Elem> next;
      for (std::size_t i = 0; i < imgs.size() / w; ++i) {
        const std::span<const Elem> obj(imgs.data() + i * w, w);
        if (admit(obj)) next.insert(next.end(), obj.begin(), obj.end());
      }
      frontier = std::move(next);
    }
    return st;
  }

  const Space& space() const { return sp_; }

 private:
  Space sp_;
  ClassifyOptions opts_;
  Strategy strategy_;
  std::vector<GroupElem> group_;
};

double log2_count(const BigInt& n) {
  if (n == 0) return -1;
  return static_cast<double>(msb(n)) + 1.0;
}

Strategy pick_strategy(const ClassifyOptions& opts, std::uint64_t group_order, std::size_t ngens,
                       const BigInt& ground) {
  const BigInt sweep_cost = BigInt(group_order) * ground;
  const BigInt bfs_cost = BigInt(ngens) * ground;
  Strategy st = opts.strategy;
  if (st == Strategy::automatic) st = sweep_cost <= kSweepLimit ? Strategy::sweep : Strategy::bfs;
  const BigInt& cost = st == Strategy::sweep ? sweep_cost : bfs_cost;
  if (cost > opts.budget) {
    throw Error(ErrorCode::BudgetExceeded, "estimated " + cost.str() + " group actions (about 2^" +
                                               std::to_string(static_cast<int>(log2_count(cost))) +
                                               ") exceed the budget of " + std::to_string(opts.budget));
  }
  return st;
}

ClassReport run(const Space& sp, const ClassifyOptions& opts, const BigInt& ground, const std::string& kind,
                const std::function<void(const std::function<bool(std::span<const Elem>)>&)>& for_each_object) {
  const std::uint64_t gorder = acting_group_order(sp.f, sp.s, sp.frobenius);
  const Strategy st = pick_strategy(opts, gorder, generators(sp).size(), ground);
  Engine engine(sp, opts, st);
  Visited visited(sp.f.q(), sp.width());

  ClassReport rep;
  rep.kind = kind;
  rep.p = sp.f.p();
  rep.r = sp.f.r();
  rep.q = sp.f.q();
  rep.s = sp.s;
  rep.t = sp.subspace ? sp.rows : 1;
  rep.options = opts;
  rep.strategy_used = st;
  rep.group_order = gorder;

  for_each_object([&](std::span<const Elem> obj) {
    ++rep.ground_objects;
    if (visited.contains(obj)) return true;
    const OrbitStats stats = engine.close(obj, visited, nullptr);
    if (opts.filter_compatible && !stats.compatible) return true;
    ClassInfo info;
    info.rep_rows.assign(obj.begin(), obj.end());
    for (std::size_t k = 0; k < sp.rows; ++k) {
      info.rep.emplace_back(sp.s, std::vector<Elem>(obj.begin() + k * sp.block(), obj.begin() + (k + 1) * sp.block()));
    }
    info.orbit_size = stats.size;
    info.contains_compatible = stats.compatible;
    info.commutative_capable = stats.commutative;
    rep.total_objects += stats.size;
    rep.classes.push_back(std::move(info));
    return true;
  });
  rep.class_count = rep.classes.size();
  return rep;
}

void require_valid(std::size_t s) {
  if (s < 1) throw Error(ErrorCode::RangeError, "s must be positive");
}

}  // namespace

ClassReport classify_subspaces(const FiniteField& f, std::size_t s, std::size_t t, const ClassifyOptions& opts) {
  require_valid(s);
  if (t < 1 || t > s * s) throw Error(ErrorCode::RangeError, "t must lie in [1, s^2]");
  const Space sp{f, s, t, true, opts.use_frobenius};
  const BigInt ground = gaussian_binomial(f.q(), s * s, t);
  return run(sp, opts, ground, "subspaces", [&](const std::function<bool(std::span<const Elem>)>& fn) {
    for_each_subspace(f, s, t, fn);
  });
}

ClassReport classify_congruence(const FiniteField& f, std::size_t s, const ClassifyOptions& opts) {
  require_valid(s);
  const auto space = keyspace_size(f.q(), s * s);
  if (!space) throw Error(ErrorCode::RangeError, "matrix space too large to enumerate");
  const Space sp{f, s, 1, false, false};
  const std::size_t free_entries = opts.symmetric_only ? s * (s + 1) / 2 : s * s;
  const BigInt ground = boost::multiprecision::pow(BigInt(f.q()), static_cast<unsigned>(free_entries));
  ClassReport out = run(sp, opts, ground, "congruence", [&](const std::function<bool(std::span<const Elem>)>& fn) {
    for (std::uint64_t code = 0; code < *space; ++code) {
      const Mat m = linalg::decode(f, s, code);
      if (opts.symmetric_only && !m.is_symmetric()) continue;
      if (!fn(m.e)) return;
    }
  });
  out.options.use_frobenius = false;
  return out;
}

namespace {

OrbitResult bfs_orbit(const Space& sp, const ClassifyOptions& opts, std::vector<Elem> start, bool keep_members) {
  ClassifyOptions o = opts;
  o.strategy = Strategy::bfs;
  Engine engine(sp, o, Strategy::bfs);
  Visited visited(sp.f.q(), sp.width());
  std::vector<Elem> members;
  const OrbitStats st = engine.close(start, visited, &members);
  const std::size_t w = sp.width();
  std::vector<std::vector<Elem>> list;
  for (std::size_t i = 0; i < members.size() / w; ++i) {
    list.emplace_back(members.begin() + i * w, members.begin() + (i + 1) * w);
  }
  std::sort(list.begin(), list.end());
  OrbitResult out;
  out.canonical_rows = list.front();
  out.orbit_size = st.size;
  if (keep_members) out.members = std::move(list);
  return out;
}

}  // namespace

OrbitResult orbit_of(const FiniteField& f, const SubspaceKey& start, const ClassifyOptions& opts, bool keep_members) {
  if (start.rank == 0 || start.rref.size() != start.rank * start.s * start.s) {
    throw Error(ErrorCode::ShapeMismatch, "start subspace key is malformed");
  }
  for (Elem x : start.rref) f.check(x);
  const Space sp{f, start.s, start.rank, true, opts.use_frobenius};
  return bfs_orbit(sp, opts, start.rref, keep_members);
}

OrbitResult orbit_of(const FiniteField& f, const Mat& start, const ClassifyOptions& opts, bool keep_members) {
  linalg::check_entries(f, start);
  const Space sp{f, start.n, 1, false, false};
  return bfs_orbit(sp, opts, start.e, keep_members);
}

}  // namespace ringforge
