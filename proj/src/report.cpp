#include "cyclealg/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

#include "cyclealg/matrix_model.hpp"

namespace cyclealg {

namespace {

using nlohmann::json;

json envelope(const std::string& command, const json& input) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["input"] = input;
  return j;
}

std::string header(const std::string& command) {
  return std::string("cyclealg ") + kToolVersion + " " + command + "\n";
}

std::string join(const std::vector<std::int64_t>& v, const char* open = "{", const char* close = "}") {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << close;
  return os.str();
}

std::string join_primes(const std::set<std::uint64_t>& primes) {
  std::vector<std::int64_t> v(primes.begin(), primes.end());
  return join(v);
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& tok) {
  const auto t = trim(tok);
  if (t.empty()) throw InvalidInputError("empty entry in integer list");
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw InvalidInputError("'" + t + "' is not an integer");
  }
  if (used != t.size()) throw InvalidInputError("'" + t + "' is not an integer");
  return v;
}

json group_json(const LocalizedGroup& g) {
  return {{"kind", g.kind_name()},
          {"primes", std::vector<std::uint64_t>(g.primes().begin(), g.primes().end())},
          {"display", g.to_string()}};
}

json tower_invariants_json(const StationaryMatroidTower& t) {
  const auto k0 = k0_limit(t);
  json out;
  out["linking_signature"] = t.linking_signature().entries();
  out["level_multiplier"] = t.level_multiplier();
  out["S"] = enumerate_S(t.m(), t.d());
  json exps = json::object();
  for (const auto& [p, e] : k0.supernatural.exponents()) exps[std::to_string(p)] = e.infinite ? json("inf") : json(e.value);
  out["k0"] = {{"supernatural", k0.supernatural.to_string()},
               {"exponents", exps},
               {"copies", k0.copies},
               {"order_unit", k0.order_unit},
               {"description", k0.description}};
  out["h1"] = group_json(h1_limit(t));
  out["extreme"] = is_extreme(t);
  out["homologically_limited"] = is_homologically_limited(t);
  return out;
}

json membership_json(std::int64_t k, std::int64_t level, const ScaleMembership& r) {
  json j{{"k", k}, {"t", level}, {"contains", r.contains}, {"reason", r.reason},
         {"preperiod", r.preperiod}, {"period", r.period}};
  if (r.certificate_level) {
    j["certificate"] = {{"level", *r.certificate_level}, {"numerator", *r.certificate_numerator}};
  }
  return j;
}

json level_json(const LevelReport& r) {
  json j;
  j["level"] = r.level;
  j["shape"] = r.shape.vertex_mults();
  j["composite"] = r.composite ? json(r.composite->entries()) : json(nullptr);
  j["k0"] = r.k0 ? json(r.k0->rows()) : json(nullptr);
  j["h"] = r.h ? json(*r.h) : json(nullptr);
  j["homology_range"] = r.homology_range;
  json u{{"exists", r.unital_joint_scale.exists}, {"enumerated", r.unital_joint_scale.enumerated}};
  if (r.unital_joint_scale.enumerated) {
    u["elements"] = r.unital_joint_scale.elements;
    u["h_parts"] = r.unital_joint_scale.h_parts;
  }
  j["unital_joint_scale"] = u;
  return j;
}

std::string level_text(const LevelReport& r) {
  std::ostringstream os;
  os << "level " << r.level << ": shape " << join(r.shape.vertex_mults(), "(", ")") << "\n";
  if (r.composite) {
    os << "  composite signature " << r.composite->to_string() << ", h = " << *r.h << "\n";
    os << "  homology range " << join(r.homology_range) << "\n";
    os << "  K0 matrix:\n";
    std::istringstream rows(r.k0->to_string());
    for (std::string line; std::getline(rows, line);) os << "    " << line << "\n";
  } else {
    os << "  composite signature: none (first level)\n";
  }
  const auto& u = r.unital_joint_scale;
  if (!u.exists) {
    os << "  unital joint scale: empty (multiplicities not uniform)\n";
  } else if (!u.enumerated) {
    os << "  unital joint scale: not enumerated (beyond enumeration limits)\n";
  } else {
    os << "  unital joint scale: " << u.elements << " elements, h parts " << join(u.h_parts) << "\n";
  }
  return os.str();
}

std::vector<std::int64_t> sample_numerators(std::int64_t md, int two_m) {
  std::set<std::int64_t> ks{-md - 1, -md, -md + 1, -1, 0, 1, md - 1, md, md + 1, md + two_m};
  return {ks.begin(), ks.end()};
}

}  // namespace

// ---------------------------------------------------------- argument parsing

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  const auto t = trim(text);
  if (!t.empty() && t.front() == '[') {
    json j;
    try {
      j = json::parse(t);
    } catch (const json::parse_error&) {
      throw InvalidInputError("malformed JSON integer list: " + t);
    }
    if (!j.is_array()) throw InvalidInputError("expected a JSON array: " + t);
    std::vector<std::int64_t> out;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw InvalidInputError("non-integer entry " + x.dump() + " in " + t);
      out.push_back(x.get<std::int64_t>());
    }
    return out;
  }
  std::string body = t;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw InvalidInputError("unbalanced parenthesis in " + t);
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::int64_t> out;
  std::istringstream is(body);
  for (std::string tok; std::getline(is, tok, ',');) out.push_back(parse_int(tok));
  if (out.empty()) throw InvalidInputError("empty integer list");
  return out;
}

std::vector<std::vector<std::int64_t>> parse_int_matrix(const std::string& text) {
  const auto t = trim(text);
  std::vector<std::vector<std::int64_t>> out;
  if (!t.empty() && t.front() == '[') {
    json j;
    try {
      j = json::parse(t);
    } catch (const json::parse_error&) {
      throw InvalidInputError("malformed JSON matrix: " + t);
    }
    if (!j.is_array()) throw InvalidInputError("expected a JSON array of rows: " + t);
    for (const auto& row : j) out.push_back(parse_int_list(row.dump()));
    return out;
  }
  std::istringstream is(t);
  for (std::string row; std::getline(is, row, ';');) out.push_back(parse_int_list(row));
  if (out.empty()) throw InvalidInputError("empty matrix");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream is(trim(text));
  for (std::string tok; std::getline(is, tok, ',');) {
    const auto v = trim(tok);
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(v, &used);
    } catch (const std::exception&) {
      throw InvalidInputError("'" + v + "' is not a number");
    }
    if (used != v.size() || !std::isfinite(x)) throw InvalidInputError("'" + v + "' is not a number");
    out.push_back(x);
  }
  if (out.empty()) throw InvalidInputError("empty number list");
  return out;
}

// ---------------------------------------------------------- invariants / compare

CommandReport invariants_report(const TowerSpec& spec, const std::string& path, int levels) {
  if (levels < 0 || levels > 12) throw InvalidInputError("--levels must lie in 0..12");
  json input{{"path", path}, {"spec", spec.to_json()}, {"levels", levels}};
  CommandReport rep;
  rep.record = envelope("invariants", input);
  std::ostringstream os;
  os << header("invariants");

  if (spec.stationary) {
    const auto& t = *spec.stationary;
    json inv = tower_invariants_json(t);
    json samples = json::array();
    os << "tower: stationary_matroid, m = " << t.m() << ", d = " << t.d() << ", s = " << t.s() << "\n";
    os << "linking signature: " << t.linking_signature().to_string() << "\n";
    os << "S for (m, d): " << join(enumerate_S(t.m(), t.d())) << "\n";
    os << "K0: " << inv["k0"]["supernatural"].get<std::string>() << ", two copies (one per parity class), order unit "
       << inv["k0"]["order_unit"].get<std::string>() << "\n";
    const auto g = h1_limit(t);
    os << "H1: " << g.to_string() << " (" << g.kind_name();
    if (g.kind() == LocalizedGroup::Kind::kLocalization) os << " at primes " << join_primes(g.primes());
    os << ")\n";
    os << "extreme: " << (is_extreme(t) ? "true" : "false") << "\n";
    os << "homologically limited: " << (is_homologically_limited(t) ? "true" : "false");
    if (is_homologically_limited(t)) os << " (classification by C*(A) and H1; stated without proof)";
    os << "\n";
    os << "unital joint scale at level 1 (element k / s at K0 value 1/m per class):\n";
    for (auto k : sample_numerators(t.level_multiplier(), 2 * t.m())) {
      const auto r = unital_joint_scale_contains(t, {k, 1});
      samples.push_back(membership_json(k, 1, r));
      os << "  k = " << k << ": " << (r.contains ? "in" : "out") << " (" << r.reason << ")\n";
    }
    inv["joint_scale_samples"] = samples;
    if (levels > 0) {
      json lv = json::array();
      for (const auto& r : finite_level_invariants(truncate(t, levels))) {
        lv.push_back(level_json(r));
        os << level_text(r);
      }
      inv["levels"] = lv;
    }
    rep.record["invariants"] = inv;
  } else {
    const auto& tower = *spec.explicit_tower;
    os << "tower: explicit, m = " << tower.m.m() << ", " << tower.shapes.size() << " levels\n";
    json lv = json::array();
    for (const auto& r : finite_level_invariants(tower)) {
      lv.push_back(level_json(r));
      os << level_text(r);
    }
    os << "no limit verdict for explicit towers\n";
    rep.record["invariants"] = {{"levels", lv}};
  }
  rep.text = os.str();
  return rep;
}

CommandReport compare_report(const TowerSpec& a, const TowerSpec& b, const std::string& path_a,
                             const std::string& path_b) {
  json input{{"paths", {path_a, path_b}}, {"specs", {a.to_json(), b.to_json()}}};
  if (!a.stationary || !b.stationary) {
    return error_report("compare", input, "refusal", "limit verdicts require stationary mode");
  }
  IsomorphismVerdict v;
  try {
    v = decide_isomorphism(*a.stationary, *b.stationary);
  } catch (const IncompatibleError& e) {
    return error_report("compare", input, "refusal", e.what());
  }
  CommandReport rep;
  rep.record = envelope("compare", input);
  rep.record["towers"] = {tower_invariants_json(*a.stationary), tower_invariants_json(*b.stationary)};
  rep.record["verdict"] = {{"isomorphic", v.isomorphic},
                           {"witness", v.isomorphic ? json(nullptr) : json(IsomorphismVerdict::witness_name(v.witness))},
                           {"detail", v.detail},
                           {"stated_without_proof", v.stated_without_proof},
                           {"derived_from_theorem", v.derived_from_theorem}};
  std::ostringstream os;
  os << header("compare");
  for (const auto* t : {&*a.stationary, &*b.stationary}) {
    os << "tower: m = " << t->m() << ", d = " << t->d() << ", s = " << t->s() << "\n";
  }
  if (v.isomorphic) {
    os << "verdict: isomorphic\n";
  } else {
    os << "verdict: not isomorphic\nwitness: " << IsomorphismVerdict::witness_name(v.witness) << "\n";
  }
  os << "detail: " << v.detail << "\n";
  if (v.stated_without_proof) os << "note: relies on the homologically limited criterion, stated without proof\n";
  if (v.derived_from_theorem) os << "note: towers differ in d; verdict follows from completeness of the invariants\n";
  rep.text = os.str();
  rep.exit_code = v.isomorphic ? kExitOk : kExitNegative;
  return rep;
}

// ---------------------------------------------------------- signature

CommandReport signature_compose_report(const Signature& inner, const Signature& outer) {
  json input{{"inner", inner.entries()}, {"outer", outer.entries()}};
  const auto c = signature_compose(inner, outer);
  CommandReport rep;
  rep.record = envelope("signature compose", input);
  rep.record["result"] = {{"signature", c.entries()}, {"h", h1(c)}, {"k0", k0_matrix(c).rows()}};
  std::ostringstream os;
  os << header("signature compose");
  os << "outer o inner = " << outer.to_string() << " o " << inner.to_string() << " = " << c.to_string() << "\n";
  os << "h = " << h1(c) << " = " << h1(outer) << " * " << h1(inner) << "\n";
  rep.text = os.str();
  return rep;
}

CommandReport homrange_report(const Signature& s) {
  json input{{"signature", s.entries()}};
  const auto r = homology_range(s);
  CommandReport rep;
  rep.record = envelope("signature homrange", input);
  rep.record["result"] = {{"h", h1(s)}, {"homology_range", r}, {"size", r.size()}};
  std::ostringstream os;
  os << header("signature homrange");
  os << "signature " << s.to_string() << ", h = " << h1(s) << "\n";
  os << "homology range " << join(r) << " (" << r.size() << " values)\n";
  rep.text = os.str();
  return rep;
}

CommandReport fromk0h1_report(const K0Matrix& k0, std::int64_t h) {
  json input{{"k0", k0.rows()}, {"h", h}};
  try {
    const auto s = signature_from_k0h1({k0, h});
    CommandReport rep;
    rep.record = envelope("signature fromk0h1", input);
    rep.record["result"] = {{"signature", s.entries()}};
    rep.text = header("signature fromk0h1") + "signature " + s.to_string() + "\n";
    return rep;
  } catch (const NotRealizableError& e) {
    const bool rigid = e.reason() == NotRealizableError::Reason::kOutsideHomologyRange;
    return error_report("signature fromk0h1", input,
                        rigid ? "outside_homology_range" : "k0_not_rigid_type", e.what());
  }
}

// ---------------------------------------------------------- verify

namespace {

MatrixAlgebraModel verify_model(const VerifyOptions& o, std::int64_t default_mult) {
  const CycleIndex m(o.m);
  if (o.dims) {
    for (auto x : *o.dims) {
      if (x < 0 || x > 64) throw InvalidInputError("--dims entries must lie in 0..64");
    }
    if (o.dims->size() == 1) return MatrixAlgebraModel(CycleAlgebraShape::uniform(m, (*o.dims)[0]));
    return MatrixAlgebraModel(CycleAlgebraShape(m, *o.dims));
  }
  return MatrixAlgebraModel(CycleAlgebraShape::uniform(m, default_mult));
}

void require_lemma_range(const VerifyOptions& o) {
  if (o.m < 3) {
    throw InvalidIndexError("the entrywise partial isometry property needs m >= 3; it does not hold for 4-cycle "
                            "algebras (m = 2)");
  }
}

CommandReport verify_lemma22(const VerifyOptions& o, json input) {
  require_lemma_range(o);
  const auto model = verify_model(o, 4);
  input["dims"] = model.shape().vertex_mults();
  const auto r = check_lemma_2_2(model, o.trials, o.tol, o.seed);
  CommandReport rep;
  rep.record = envelope("verify lemma22", input);
  rep.record["result"] = {{"trials", r.trials},
                          {"seed", r.seed},
                          {"tol", r.tol},
                          {"max_block_deviation", r.max_deviation},
                          {"max_element_deviation", r.max_whole_deviation},
                          {"failures", r.failures},
                          {"construction_failures", r.construction_failures},
                          {"first_failing_trial", r.first_failing_trial ? json(*r.first_failing_trial) : json(nullptr)}};
  rep.record["assertions"] = {{"block_entries_are_partial_isometries", r.passed}};
  std::ostringstream os;
  os << header("verify lemma22");
  os << "model: m = " << o.m << ", dims " << join(model.shape().vertex_mults(), "(", ")") << ", N = "
     << model.dimension() << "\n";
  os << "trials " << r.trials << ", seed " << r.seed << ", tol " << fmt(r.tol) << "\n";
  os << "max block deviation " << fmt(r.max_deviation) << ", max element deviation " << fmt(r.max_whole_deviation)
     << "\n";
  os << "failures " << r.failures << ", construction failures " << r.construction_failures << "\n";
  os << "block entries are partial isometries: " << (r.passed ? "PASS" : "FAIL") << "\n";
  rep.text = os.str();
  rep.exit_code = r.passed ? kExitOk : kExitNegative;
  return rep;
}

CommandReport verify_lemma31(const VerifyOptions& o, json input) {
  require_lemma_range(o);
  const auto model = verify_model(o, 2);
  input["dims"] = model.shape().vertex_mults();
  const auto r = check_lemma_3_1_sweep(model, o.deltas, o.trials, o.epsilon, o.seed);
  CommandReport rep;
  rep.record = envelope("verify lemma31", input);
  json table = json::array();
  bool exact_ok = true;
  std::ostringstream os;
  os << header("verify lemma31");
  os << "model: m = " << o.m << ", dims " << join(model.shape().vertex_mults(), "(", ")") << "\n";
  os << "trials " << r.trials << ", seed " << r.seed << ", epsilon " << fmt(r.epsilon) << "\n";
  os << "delta        max entry deviation  max element deviation  within epsilon\n";
  for (const auto& row : r.table) {
    table.push_back({{"delta", row.delta},
                     {"max_entry_deviation", row.max_entry_deviation},
                     {"max_element_deviation", row.max_whole_deviation},
                     {"within_epsilon", row.within_epsilon}});
    os << std::left << std::setw(13) << fmt(row.delta) << std::setw(21) << fmt(row.max_entry_deviation)
       << std::setw(23) << fmt(row.max_whole_deviation) << yes_no(row.within_epsilon) << "\n";
    if (row.delta == 0 && row.max_entry_deviation > o.tol) exact_ok = false;
  }
  os << "(only the delta = 0 row is asserted; other rows are measurements)\n";
  os << "unperturbed entries are partial isometries: " << (exact_ok ? "PASS" : "FAIL") << "\n";
  rep.record["result"] = {{"table", table}, {"seed", r.seed}, {"trials", r.trials}, {"epsilon", r.epsilon}};
  rep.record["assertions"] = {{"unperturbed_entries_within_tol", exact_ok}};
  rep.text = os.str();
  rep.exit_code = exact_ok ? kExitOk : kExitNegative;
  return rep;
}

json regularity_json(const RegularityResult& r) {
  return {{"regular", r.regular},
          {"worst_distance", r.worst_distance},
          {"worst_p", r.worst_p},
          {"worst_q", r.worst_q},
          {"pairs_checked", r.pairs_checked}};
}

CommandReport verify_example23(const VerifyOptions& o, json input) {
  const auto ex = example_2_3(o.tol);
  CommandReport rep;
  rep.record = envelope("verify example23", input);
  json vs = json::array();
  std::ostringstream os;
  os << header("verify example23");
  os << "model: A(D_4) (x) M_4 in M_16, block order (1, 3, 2, 4)\n";
  for (std::size_t i = 0; i < ex.v.size(); ++i) {
    vs.push_back({{"name", "v" + std::to_string(i + 1)},
                  {"distance_to_partial_isometry", ex.pi_distance[i]},
                  {"regularity", regularity_json(ex.v_regular[i])}});
    os << "v" << i + 1 << ": distance to partial isometries " << fmt(ex.pi_distance[i]) << ", worst central compression "
       << fmt(ex.v_regular[i].worst_distance) << "\n";
  }
  os << "v2 v1*: worst central compression " << fmt(ex.product_regular.worst_distance) << " at p = "
     << join(std::vector<std::int64_t>(ex.product_regular.worst_p.begin(), ex.product_regular.worst_p.end()))
     << ", q = "
     << join(std::vector<std::int64_t>(ex.product_regular.worst_q.begin(), ex.product_regular.worst_q.end())) << "\n";
  os << "each v_i is a partial isometry: " << (ex.partial_isometries_ok ? "PASS" : "FAIL") << "\n";
  os << "each v_i is regular: " << (ex.regular_ok ? "PASS" : "FAIL") << "\n";
  os << "v2 v1* is not locally regular: " << (ex.product_fails_ok ? "PASS" : "FAIL") << "\n";
  rep.record["result"] = {{"v", vs}, {"product", regularity_json(ex.product_regular)}};
  rep.record["assertions"] = {{"partial_isometries", ex.partial_isometries_ok},
                              {"regular", ex.regular_ok},
                              {"product_not_locally_regular", ex.product_fails_ok}};
  rep.text = os.str();
  rep.exit_code = ex.passed() ? kExitOk : kExitNegative;
  return rep;
}

CommandReport verify_composition(const VerifyOptions& o, json input) {
  if (o.m < 2 || o.m > 12) throw InvalidInputError("--m must lie in 2..12 for the composition oracle");
  const auto results = composition_oracle(o.m, o.tol);
  int agree = 0;
  json bad = json::array();
  for (const auto& r : results) {
    if (r.agrees) {
      ++agree;
    } else {
      bad.push_back({{"a", r.a},
                     {"b", r.b},
                     {"expected", r.expected.entries()},
                     {"decomposed", r.decomposed ? json(r.decomposed->entries()) : json(nullptr)},
                     {"error", r.error}});
    }
  }
  const bool ok = agree == static_cast<int>(results.size());
  CommandReport rep;
  rep.record = envelope("verify composition-oracle", input);
  rep.record["result"] = {{"pairs", results.size()}, {"agree", agree}, {"disagreements", bad}};
  rep.record["assertions"] = {{"all_pairs_agree", ok}};
  std::ostringstream os;
  os << header("verify composition-oracle");
  os << "m = " << o.m << ": " << agree << "/" << results.size()
     << " ordered pairs decompose to the predicted dihedral product\n";
  for (const auto& b : bad) os << "  mismatch theta_" << b["a"] << " then theta_" << b["b"] << "\n";
  os << "composition oracle: " << (ok ? "PASS" : "FAIL") << "\n";
  rep.text = os.str();
  rep.exit_code = ok ? kExitOk : kExitNegative;
  return rep;
}

CommandReport verify_roundtrip(const VerifyOptions& o, json input) {
  const CycleIndex m(o.m);
  m.require_rigid();
  if (o.bound < 0) throw InvalidInputError("--bound must be nonnegative");
  const int n = m.vertex_count();
  long double count = std::pow(static_cast<long double>(o.bound + 1), n);
  if (count > 2e7L) throw InvalidInputError("round trip over (bound + 1)^(2m) signatures exceeds 2e7");
  std::vector<std::int64_t> r(static_cast<std::size_t>(n), 0);
  std::size_t total = 0;
  std::size_t failures = 0;
  json first = nullptr;
  while (true) {
    const Signature s(m, r);
    ++total;
    bool ok = false;
    try {
      const auto back = signature_from_k0h1({k0_matrix(s), h1(s)});
      const auto range = homology_range(s);
      ok = back == s && std::binary_search(range.begin(), range.end(), h1(s));
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) {
      ++failures;
      if (first.is_null()) first = s.entries();
    }
    int i = 0;
    while (i < n && r[static_cast<std::size_t>(i)] == o.bound) r[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++r[static_cast<std::size_t>(i)];
  }
  CommandReport rep;
  rep.record = envelope("verify lemma42-roundtrip", input);
  rep.record["result"] = {{"signatures", total}, {"failures", failures}, {"first_failure", first}};
  rep.record["assertions"] = {{"roundtrip", failures == 0}};
  std::ostringstream os;
  os << header("verify lemma42-roundtrip");
  os << "m = " << o.m << ", entries 0.." << o.bound << ": " << total << " signatures, " << failures << " failures\n";
  os << "signature recovered from (K0, h): " << (failures == 0 ? "PASS" : "FAIL") << "\n";
  rep.text = os.str();
  rep.exit_code = failures == 0 ? kExitOk : kExitNegative;
  return rep;
}

}  // namespace

CommandReport verify_report(const VerifyOptions& o) {
  json input{{"target", o.target}, {"m", o.m},         {"trials", o.trials}, {"tol", o.tol},
             {"seed", o.seed},     {"epsilon", o.epsilon}, {"deltas", o.deltas}, {"bound", o.bound}};
  input["dims"] = o.dims ? json(*o.dims) : json(nullptr);
  if (!(o.tol > 0)) throw InvalidInputError("--tol must be positive");
  if (o.trials < 0 || o.trials > 1000000) throw InvalidInputError("--trials must lie in 0..1000000");
  if (o.target == "lemma22") return verify_lemma22(o, input);
  if (o.target == "lemma31") return verify_lemma31(o, input);
  if (o.target == "example23") return verify_example23(o, input);
  if (o.target == "composition-oracle") return verify_composition(o, input);
  if (o.target == "lemma42-roundtrip") return verify_roundtrip(o, input);
  throw InvalidInputError("unknown verify target '" + o.target + "'");
}

CommandReport error_report(const std::string& command, const nlohmann::json& input, const std::string& kind,
                           const std::string& message) {
  CommandReport rep;
  rep.record = envelope(command, input);
  rep.record["error"] = {{"kind", kind}, {"message", message}};
  rep.text = header(command) + "error (" + kind + "): " + message + "\n";
  rep.exit_code = kExitError;
  return rep;
}

}  // namespace cyclealg
