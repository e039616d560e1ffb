#include "ringforge/json_io.hpp"

#include <sstream>

namespace ringforge {

namespace {

template <class T>
T get_field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

std::vector<Automorphism> automorphisms(const json& doc, const char* key, std::size_t len) {
  if (!doc.contains(key)) return std::vector<Automorphism>(len);
  std::vector<Automorphism> out;
  for (unsigned e : get_field<std::vector<unsigned>>(doc, key)) out.push_back(Automorphism{e});
  return out;
}

std::string rows_string(const std::vector<Elem>& rows, std::size_t block) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) os << (i % block == 0 ? "/" : " ");
    os << rows[i];
  }
  return os.str();
}

}  // namespace

RingSpec ring_spec_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "ring spec must be a JSON object");
  const auto p = get_field<unsigned>(doc, "p");
  const auto r = get_field<unsigned>(doc, "r");
  const FiniteField f = doc.contains("modulus")
                            ? FiniteField::with_modulus(p, r, get_field<std::vector<Elem>>(doc, "modulus"))
                            : FiniteField::create(p, r);
  const auto s = get_field<std::size_t>(doc, "s");
  const auto t = get_field<std::size_t>(doc, "t");
  const auto lambda = doc.contains("lambda") ? get_field<std::size_t>(doc, "lambda") : 0;
  const auto raw = get_field<std::vector<std::vector<std::vector<Elem>>>>(doc, "matrices");
  MatTuple matrices;
  for (const auto& m : raw) {
    std::vector<Elem> entries;
    for (const auto& row : m) {
      if (row.size() != m.size()) throw Error(ErrorCode::ShapeMismatch, "structural matrix is not square");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    matrices.emplace_back(m.size(), std::move(entries));
  }
  RingSpec spec{f, s, t, lambda, std::move(matrices), automorphisms(doc, "sigma", s),
                automorphisms(doc, "theta", t + lambda)};
  return spec;
}

json to_json(const Mat& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.n; ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

json to_json(const RingSpec& spec) {
  json mats = json::array();
  for (const auto& m : spec.matrices) mats.push_back(to_json(m));
  json sigma = json::array(), theta = json::array();
  for (auto a : spec.sigma) sigma.push_back(a.exponent);
  for (auto a : spec.theta) theta.push_back(a.exponent);
  return {{"p", spec.field.p()},     {"r", spec.field.r()}, {"modulus", spec.field.modulus()},
          {"s", spec.s},             {"t", spec.t},         {"lambda", spec.lambda},
          {"matrices", mats},        {"sigma", sigma},      {"theta", theta}};
}

json to_json(const ClassReport& report) {
  json classes = json::array();
  for (const auto& c : report.classes) {
    json reps = json::array();
    for (const auto& m : c.rep) reps.push_back(to_json(m));
    classes.push_back({{"canonical_rep", reps},
                       {"orbit_size", c.orbit_size},
                       {"contains_compatible", c.contains_compatible},
                       {"commutative_capable", c.commutative_capable}});
  }
  json params = {{"p", report.p}, {"r", report.r}, {"q", report.q}, {"s", report.s}};
  if (report.kind == "subspaces") {
    params["t"] = report.t;
    params["use_frobenius"] = report.options.use_frobenius;
    params["filter_compatible"] = report.options.filter_compatible;
  } else {
    params["symmetric_only"] = report.options.symmetric_only;
    params["filter_compatible"] = report.options.filter_compatible;
  }
  return {{"kind", report.kind},
          {"params", params},
          {"strategy", to_string(report.strategy_used)},
          {"group_order", report.group_order},
          {"class_count", report.class_count},
          {"commutative_capable_count", report.commutative_count()},
          {"total_objects", report.total_objects},
          {"ground_objects", report.ground_objects},
          {"classes", classes}};
}

std::string to_csv(const ClassReport& report) {
  std::ostringstream os;
  os << "index,rep,orbit_size,contains_compatible,commutative_capable\n";
  const std::size_t block = report.s * report.s;
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const auto& c = report.classes[i];
    os << i << ',' << rows_string(c.rep_rows, block) << ',' << c.orbit_size << ','
       << (c.contains_compatible ? "true" : "false") << ',' << (c.commutative_capable ? "true" : "false") << '\n';
  }
  return os.str();
}

json to_json(const IsoWitness& w) {
  return {{"sigma", w.sigma.exponent}, {"C", to_json(w.c)}, {"B", to_json(w.b)}, {"v_perm", w.v_perm}};
}

json to_json(const StructureReport& r) {
  return {{"p", r.p},
          {"r", r.r},
          {"n", r.n},
          {"s", r.s},
          {"t", r.t},
          {"lambda", r.lambda},
          {"order", "p^" + std::to_string(r.order_exponent)},
          {"order_exponent", r.order_exponent},
          {"dim_radical", r.dim_radical},
          {"dim_radical_squared", r.dim_radical_sq},
          {"dim_annihilator", r.dim_annihilator},
          {"radical_cubed_zero", r.radical_cubed_zero},
          {"commutative", r.commutative},
          {"f_central", r.f_central}};
}

json to_json(const AxiomReport& r) {
  json out = {{"passed", r.passed}, {"exhaustive", r.exhaustive}, {"triples_checked", r.triples_checked}};
  out["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
  return out;
}

json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return json(static_cast<std::uint64_t>(v));
  return json(v.str());
}

json to_json(const Prediction& p) {
  json out = {{"value", big_to_json(p.value)}, {"status", to_string(p.status)}, {"source", p.source}};
  if (p.commutative) out["commutative"] = big_to_json(*p.commutative);
  if (p.measured) out["measured"] = big_to_json(*p.measured);
  return out;
}

namespace {

std::uint64_t table_order(const Ring& ring) {
  const auto order = ring.order();
  if (!order || *order > 4096) throw Error(ErrorCode::RangeError, "multiplication tables require |R| <= 4096");
  return *order;
}

}  // namespace

json multiplication_table_json(const Ring& ring) {
  const std::uint64_t m = table_order(ring);
  std::vector<RingElement> elems;
  for (std::uint64_t c = 0; c < m; ++c) elems.push_back(ring.decode(c));
  json rows = json::array();
  for (std::uint64_t x = 0; x < m; ++x) {
    std::vector<std::uint64_t> row(m);
    for (std::uint64_t y = 0; y < m; ++y) row[y] = ring.encode(ring.mul(elems[x], elems[y]));
    rows.push_back(row);
  }
  return {{"order", m}, {"encoding", "mixed radix over (alpha0, u, w), alpha0 most significant"}, {"mul", rows}};
}

std::string multiplication_table_csv(const Ring& ring) {
  const std::uint64_t m = table_order(ring);
  std::vector<RingElement> elems;
  for (std::uint64_t c = 0; c < m; ++c) elems.push_back(ring.decode(c));
  std::ostringstream os;
  os << "x,y,xy\n";
  for (std::uint64_t x = 0; x < m; ++x) {
    for (std::uint64_t y = 0; y < m; ++y) os << x << ',' << y << ',' << ring.encode(ring.mul(elems[x], elems[y])) << '\n';
  }
  return os.str();
}

}  // namespace ringforge
