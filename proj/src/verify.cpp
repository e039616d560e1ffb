#include "ringforge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "ringforge/classify.hpp"
#include "ringforge/construction_a.hpp"
#include "ringforge/counting.hpp"

namespace ringforge {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

std::size_t VerifySuiteResult::count(CheckStatus status) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == status ? 1 : 0;
  return n;
}

namespace {

FiniteField field_of_order(unsigned q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned r = 0, m = q;
    while (m % p == 0) {
      m /= p;
      ++r;
    }
    return FiniteField::create(p, r);
  }
  throw Error(ErrorCode::RangeError, "bad field order");
}

std::string subspace_count(unsigned q, std::size_t s, std::size_t t) {
  return std::to_string(classify_subspaces(field_of_order(q), s, t).class_count);
}

std::string commutative_count(unsigned q, std::size_t s, std::size_t t) {
  return std::to_string(classify_subspaces(field_of_order(q), s, t).commutative_count());
}

std::string congruence_count(unsigned q, std::size_t s) {
  return std::to_string(classify_congruence(field_of_order(q), s).class_count);
}

const std::string kRepsOk = "exhaustive, pairwise non-congruent";

std::string rep_list_status(const FiniteField& f, std::size_t s, bool symmetric) {
  std::vector<Mat> reps;
  if (symmetric) {
    reps = newman_symmetric_reps(f, s);
    reps.insert(reps.begin(), Mat(s));
  } else {
    reps = case_rep_list(f, s);
  }
  ClassifyOptions opts;
  opts.symmetric_only = symmetric;
  const ClassReport report = classify_congruence(f, s, opts);
  std::set<std::vector<Elem>> classes;
  for (const auto& c : report.classes) classes.insert(c.rep_rows);
  std::set<std::vector<Elem>> hit;
  for (const auto& m : reps) {
    const auto canon = orbit_of(f, m).canonical_rows;
    if (!hit.insert(canon).second) return "two list entries are congruent";
  }
  if (hit != classes) {
    return std::to_string(hit.size()) + " list classes vs " + std::to_string(classes.size()) + " classes";
  }
  return kRepsOk;
}

std::string prediction_string(std::uint64_t p, long long s, long long t) {
  const Prediction pr = paper_predictions(p, 1, s, t, 0);
  return pr.value.str() + " " + to_string(pr.status);
}

std::string ring_suite(unsigned q, std::size_t s, std::size_t t) {
  const FiniteField f = field_of_order(q);
  const ClassReport report = classify_subspaces(f, s, t);
  std::size_t good = 0;
  for (const auto& c : report.classes) {
    const Ring ring = Ring::create(RingSpec::central(f, c.rep));
    const auto order = ring.order();
    const bool exhaustive = order && *order <= 81;
    const AxiomMode mode = exhaustive ? AxiomMode{ExhaustiveMode{}} : AxiomMode{SampledMode{42, 20000}};
    const AxiomReport ax = check_axioms(ring, mode);
    const StructureReport st = ring_structure(ring);
    const bool symmetric = std::all_of(c.rep.begin(), c.rep.end(), [](const Mat& m) { return m.is_symmetric(); });
    if (ax.passed && st.radical_cubed_zero && st.commutative == symmetric && st.f_central) ++good;
  }
  return std::to_string(good) + "/" + std::to_string(report.classes.size());
}

std::string n(long long v) { return std::to_string(v); }

}  // namespace

std::vector<Check> default_checks() {
  std::vector<Check> out;
  const std::string tab22 = "N(2,2) computed table";
  out.push_back({"N(2,2) over F_2", "10", tab22, false, [] { return subspace_count(2, 2, 2); }});
  out.push_back({"N(2,2) over F_3", "14", tab22, false, [] { return subspace_count(3, 2, 2); }});
  out.push_back({"N(2,2) over F_5", "20", tab22, false, [] { return subspace_count(5, 2, 2); }});
  out.push_back({"N(2,2) over F_7", "26", tab22, true, [] { return subspace_count(7, 2, 2); }});
  for (unsigned p : {2u, 3u, 5u}) {
    out.push_back({"N(2,2) commutative over F_" + n(p), "3", "N(2,2): three commutative rings for every p", false,
                   [p] { return commutative_count(p, 2, 2); }});
  }

  const std::string tab23 = "N(2,3) computed table";
  out.push_back({"N(2,3) over F_2", "5", tab23, false, [] { return subspace_count(2, 2, 3); }});
  out.push_back({"N(2,3) over F_3", "7", tab23, false, [] { return subspace_count(3, 2, 3); }});
  out.push_back({"N(2,3) over F_5", "9", tab23, false, [] { return subspace_count(5, 2, 3); }});

  out.push_back({"N(3,2) over F_2", "322", "N(3,2) computation over F_2", true, [] { return subspace_count(2, 3, 2); }});
  out.push_back({"N(3,2) commutative over F_2", "14", "N(3,2) computation over F_2", true,
                 [] { return commutative_count(2, 3, 2); }});

  const std::string n21 = "N(2,1) = 5 (p = 2) or p + 4";
  const std::string n31 = "N(3,1) = 11 (p = 2) or 3p + 10";
  out.push_back({"N(2,1) over F_2", "5", n21, false, [] { return subspace_count(2, 2, 1); }});
  out.push_back({"N(2,1) over F_3", "7", n21, false, [] { return subspace_count(3, 2, 1); }});
  out.push_back({"N(2,1) over F_5", "9", n21, false, [] { return subspace_count(5, 2, 1); }});
  out.push_back({"N(3,1) over F_2", "11", n31, false, [] { return subspace_count(2, 3, 1); }});
  out.push_back({"N(3,1) over F_3", "19", n31, false, [] { return subspace_count(3, 3, 1); }});
  out.push_back({"N(3,1) over F_5", "25", n31, true, [] { return subspace_count(5, 3, 1); }});
  for (unsigned p : {2u, 3u}) {
    for (std::size_t s : {2u, 3u}) {
      out.push_back({"N_c(" + n(s) + ",1) over F_" + n(p), n(nc_symmetric(s)), "N_c(s,1) = (3s-1)/2 or 3s/2", false,
                     [p, s] { return commutative_count(p, s, 1); }});
    }
  }

  const std::string cong = "congruence class counts q+7 / q+4 / 3q+16 / 2q+8";
  for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
    const std::string expected = n(q % 2 == 1 ? q + 7 : q + 4);
    out.push_back({"N(2) over F_" + n(q), expected, cong, q == 7, [q] { return congruence_count(q, 2); }});
    out.push_back({"Waterhouse N(2) at q=" + n(q), expected, "Waterhouse generating function", false,
                   [q] { return waterhouse_count(q, 2).str(); }});
  }
  out.push_back({"N(3) over F_2", "12", cong, false, [] { return congruence_count(2, 3); }});
  out.push_back({"N(3) over F_3", "25", cong, false, [] { return congruence_count(3, 3); }});
  out.push_back({"Waterhouse N(3) at q=2", "12", "Waterhouse generating function", false,
                 [] { return waterhouse_count(2, 3).str(); }});
  out.push_back({"Waterhouse N(3) at q=3", "25", "Waterhouse generating function", false,
                 [] { return waterhouse_count(3, 3).str(); }});

  const std::string lists = "congruence representative lists";
  for (unsigned q : {2u, 3u, 5u}) {
    out.push_back({"case list s=2 over F_" + n(q), kRepsOk, lists, false,
                   [q] { return rep_list_status(field_of_order(q), 2, false); }});
  }
  out.push_back({"case list s=3 over F_2", kRepsOk, lists, false,
                 [] { return rep_list_status(field_of_order(2), 3, false); }});
  out.push_back({"case list s=3 over F_3", kRepsOk, lists, false,
                 [] { return rep_list_status(field_of_order(3), 3, false); }});
  for (unsigned q : {2u, 3u}) {
    for (std::size_t s : {1u, 2u, 3u}) {
      out.push_back({"symmetric list s=" + n(s) + " over F_" + n(q), kRepsOk, "symmetric congruence classes", false,
                     [q, s] { return rep_list_status(field_of_order(q), s, true); }});
    }
  }

  const std::string closed = "closed forms for s = t = 1 and t = s^2";
  out.push_back({"count s=t=1 r=1 lambda=0", "1", closed, false, [] { return count_case_s1(1, 0).str(); }});
  out.push_back({"count s=t=1 r=3 lambda=0", "3", closed, false, [] { return count_case_s1(3, 0).str(); }});
  out.push_back({"count s=t=1 r=2 lambda=3", "8", closed, false, [] { return count_case_s1(2, 3).str(); }});
  out.push_back({"count t=s^2 r=2 s=2 lambda=1", "6", closed, false, [] { return count_case_t_s2(2, 2, 1).str(); }});

  const std::string conj = "conjectured N(2,3) = 5 (p = 2) or p + 4";
  out.push_back({"N(2,3) prediction p=2", "5 verified", conj, false, [] { return prediction_string(2, 2, 3); }});
  out.push_back({"N(2,3) prediction p=3", "7 conjectured", conj, false, [] { return prediction_string(3, 2, 3); }});
  out.push_back({"N(2,3) prediction p=5", "9 conjectured", conj, false, [] { return prediction_string(5, 2, 3); }});
  out.push_back({"N(2,3) prediction p=7", "11 conjectured", conj, false, [] { return prediction_string(7, 2, 3); }});

  const std::string ring = "ring axioms and commutativity criterion";
  out.push_back({"ring suite N(2,2) over F_2", "10/10", ring, false, [] { return ring_suite(2, 2, 2); }});
  out.push_back({"ring suite N(2,2) over F_3", "14/14", ring, false, [] { return ring_suite(3, 2, 2); }});
  out.push_back({"ring suite N(2,3) over F_3", "7/7", ring, false, [] { return ring_suite(3, 2, 3); }});
  out.push_back({"ring suite N(3,2) over F_2", "322/322", ring, true, [] { return ring_suite(2, 3, 2); }});
  return out;
}

VerifySuiteResult run_verify_suite(Scope scope, const std::vector<Check>& checks) {
  VerifySuiteResult out;
  for (const auto& c : checks) {
    CheckResult res{c.name, c.expected, "", c.source, CheckStatus::skipped, 0};
    if (c.full_only && scope == Scope::fast) {
      out.checks.push_back(std::move(res));
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    try {
      res.measured = c.measure();
      res.status = res.measured == c.expected ? CheckStatus::pass : CheckStatus::fail;
    } catch (const std::exception& e) {
      res.measured = std::string("error: ") + e.what();
      res.status = CheckStatus::fail;
    }
    res.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.checks.push_back(std::move(res));
  }
  out.exit_code = out.count(CheckStatus::fail) == 0 ? 0 : 1;
  return out;
}

}  // namespace ringforge
