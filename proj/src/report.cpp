#include "fmcalc/report.hpp"

#include <algorithm>
#include <sstream>

namespace fmcalc {

namespace {

Json q(const Rational& x) { return to_string(x); }

Json z(const ComplexRational& x) { return Json{{"re", to_string(x.re)}, {"im", to_string(x.im)}}; }

Json vec(const RationalVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(q(v[i]));
  return a;
}

Json cvec(const ComplexVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(z(v[i]));
  return a;
}

Json mat(const RationalMatrix& m) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(vec(m.row(i).transpose()));
  return a;
}

Json cls(const Class& c) {
  Json o = Json::object();
  for (std::size_t i = 0; i < c.ring()->size(); ++i) o[c.ring()->element(i).name] = q(c[i]);
  return o;
}

Json chern(const ChernData3& e) {
  return Json{{"n", q(e.n)}, {"x", q(e.x)}, {"S", vec(e.S)}, {"eta", vec(e.eta)}, {"a", q(e.a)}, {"s", q(e.s)}};
}

Json chern(const ChernData2& e) {
  return Json{{"n", q(e.n)}, {"c1", cls(e.c1)}, {"s", q(e.s)}, {"d", q(e.d())}, {"c", q(e.c())}};
}

Json chern(const ChernInput& e) {
  return std::visit([](const auto& x) { return chern(x); }, e);
}

Json charge(const ChargeVector& n) {
  return Json{{"n6", q(n.n6)}, {"n4", vec(n.n4)}, {"n2", vec(n.n2)}, {"n0", q(n.n0)}};
}

Json poly(const Polynomial& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs) c.push_back(q(x));
  return Json{{"coefficients", c}, {"text", to_string(p)}};
}

Json relinv(const RelativeInvariants& r) { return Json{{"rank", q(r.rank)}, {"degree", q(r.degree)}}; }

std::string indexed(const std::string& name, std::size_t i) { return name + "[" + std::to_string(i) + "]"; }

SurfaceParams surface_params(const FibrationModel& X) {
  return {Rational(X.curve->e), Rational(2 - 2 * X.curve->genus)};
}

struct Context {
  const FibrationModel& X;
  const RunOptions& opt;
  bool full() const { return opt.check_level == CheckLevel::Full; }
};

ChernData3 apply_fm(const ChernData3& E, const FibrationModel& X, Direction d) { return fm_cy3(E, X, d); }
ChernData2 apply_fm(const ChernData2& E, const FibrationModel& X, Direction d) { return fm_surface(E, X, d); }

Json run(const Context& ctx, const TransformTask& t, Json& checks) {
  const FibrationModel& X = ctx.X;
  Json items = Json::array();
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    Json item;
    item["input"] = chern(t.classes[i]);
    std::visit(
        [&](const auto& E) {
          const auto out = apply_fm(E, X, t.direction);
          item["output"] = chern(out);
          const RelativeInvariants ri = relative_invariants(E, X), ro = relative_invariants(out, X);
          item["relative_invariants"] = Json{{"input", relinv(ri)}, {"output", relinv(ro)}};
          try {
            item["wit_advice"] = to_string(wit_sign_check(ri.rank, ri.degree));
          } catch (const Error&) {
            item["wit_advice"] = "undefined for negative rank";
          }
          checks[indexed("roundtrip", i)] = fm_roundtrip_check(E, X);
          checks[indexed("relative_invariants", i)] = ro.rank == ri.degree && ro.degree == -ri.rank;
          if (ctx.full()) {
            const auto oracle = t.direction == Direction::Forward ? grr_transform(E, X) : grr_inverse(E, X);
            checks[indexed("grr_oracle", i)] = oracle == out;
          }
        },
        t.classes[i]);
    items.push_back(std::move(item));
  }
  return Json{{"direction", t.direction == Direction::Forward ? "forward" : "inverse"}, {"items", items}};
}

Json bundle_json(const SpectralBundle& V) {
  return Json{{"eta_E", vec(V.eta_E)},   {"ch", chern(V.ch)},       {"su_n", V.su_n},       {"gamma_S", q(V.gamma_S)},
              {"varpi", q(V.varpi)},     {"a_E", q(V.a_E)},         {"s_E", q(V.s_E)},      {"c2_V", cls(V.c2_V)},
              {"c3_V", q(V.c3_V)}};
}

Json anomaly_json(const AnomalyReport& a, bool su_n) {
  Json o{{"c1_even", a.c1_even}, {"W_B_effective", a.W_B_effective}, {"a_f_nonneg", a.a_f_nonneg}, {"pass", a.pass}};
  if (su_n) {
    o["W_B"] = vec(a.five_brane.W_B);
    o["a_f"] = q(a.five_brane.a_f);
  } else {
    o["W_B"] = nullptr;
    o["a_f"] = nullptr;
  }
  return o;
}

Json generations_json(const Generations& g) {
  return Json{{"signed", q(g.signed_value)}, {"magnitude", q(g.magnitude)}, {"integral", g.integral}};
}

Json run(const Context& ctx, const SpectralTask& t, Json& checks) {
  const FibrationModel& X = ctx.X;
  const SpectralBundle V = build_bundle(t.input, X);
  const AnomalyReport an = anomaly_check(V, X);
  Json out = bundle_json(V);
  out["anomaly"] = anomaly_json(an, V.su_n);
  out["generations"] = generations_json(n_generations(V));
  if (V.su_n) checks["anomaly_identity"] = an.five_brane.identity_holds;
  if (ctx.full()) {
    const ChernClasses cc = chern_classes(X, V.ch);
    checks["c2_two_paths"] = cc.c2 == V.c2_V;
    checks["c3_two_paths"] = cc.c3 == V.c3_V;
    if (V.su_n) {
      checks["index_hrr"] = index_by_hrr(V, X) == V.c3_V / 2;
      SpectralInput flipped = t.input;
      flipped.lambda = -flipped.lambda;
      checks["lambda_flip"] = build_bundle(flipped, X).c3_V == -V.c3_V;
    }
  }
  Json in{{"n", q(t.input.n)}, {"eta", vec(t.input.eta)}, {"lambda", q(t.input.lambda)}};
  if (t.input.eta_E) in["eta_E"] = vec(*t.input.eta_E);
  return Json{{"input", in}, {"output", out}};
}

Json run(const Context& ctx, const ScanTask& t, Json& checks) {
  const FibrationModel& X = ctx.X;
  const std::vector<ScanRow> rows = scan_models(X, t.ranges, t.targets, ctx.opt.parallel);
  Json arr = Json::array();
  bool identity = true, hrr = true;
  for (const auto& r : rows) {
    const SpectralBundle& V = r.bundle;
    Json flags = Json::array();
    for (const auto& f : r.flags) flags.push_back(f);
    arr.push_back(Json{{"n", q(V.input.n)},
                       {"eta", vec(V.input.eta)},
                       {"lambda", q(V.input.lambda)},
                       {"gamma_S", q(V.gamma_S)},
                       {"varpi", q(V.varpi)},
                       {"c3_V", q(V.c3_V)},
                       {"generations", generations_json(r.generations)},
                       {"anomaly", anomaly_json(r.anomaly, V.su_n)},
                       {"flags", flags}});
    if (V.su_n) identity = identity && r.anomaly.five_brane.identity_holds;
    if (ctx.full() && V.su_n) hrr = hrr && index_by_hrr(V, X) == V.c3_V / 2;
  }
  checks["anomaly_identity_all_rows"] = identity;
  if (ctx.full()) checks["index_hrr_all_rows"] = hrr;
  Json eta = Json::array();
  for (const auto& [lo, hi] : t.ranges.eta) eta.push_back(Json::array({q(lo), q(hi)}));
  Json lambdas = Json::array();
  for (const auto& l : t.ranges.lambdas) lambdas.push_back(q(l));
  Json in{{"n", Json::array({q(t.ranges.n_min), q(t.ranges.n_max)})}, {"eta", eta}, {"lambda", lambdas},
          {"require_anomaly", t.targets.require_anomaly_pass}};
  in["target_ngen"] = t.targets.n_gen ? q(*t.targets.n_gen) : Json(nullptr);
  return Json{{"input", in}, {"rows", arr}};
}

KahlerModel kahler_for(const FibrationModel& X, const std::optional<PrepotentialData>& p) {
  PrepotentialData d = p ? *p : prepotential_from_fibration(X);
  d.validate();
  return kahler_model(d);
}

Json prepotential_json(const PrepotentialData& d, bool derived) {
  Json names = Json::array();
  for (const auto& n : d.names) names.push_back(n);
  Json k = Json::array();
  const Eigen::Index h = d.h11();
  for (Eigen::Index a = 0; a < h; ++a)
    for (Eigen::Index b = a; b < h; ++b)
      for (Eigen::Index c = b; c < h; ++c)
        if (d.k_abc(a, b, c) != 0) k.push_back(Json::array({a, b, c, q(d.k_abc(a, b, c))}));
  return Json{{"source", derived ? "fibration" : "explicit"}, {"names", names}, {"k", k}, {"c2J", vec(d.c2J)},
              {"chi", q(d.chi)}, {"c_ab", mat(d.c_ab)}, {"kappa", q(d.kappa)}};
}

Json run(const Context& ctx, const ChargesTask& t, Json& checks) {
  const FibrationModel& X = ctx.X;
  const KahlerModel K = kahler_for(X, t.prepotential);
  const Eigen::Index h = K.data.h11();
  Json charges = Json::array();
  for (std::size_t i = 0; i < t.charges.size(); ++i) {
    const Class ch = charge_to_chern(t.charges[i], K);
    charges.push_back(Json{{"charge", charge(t.charges[i])}, {"chern", cls(ch)}});
    checks[indexed("charge_roundtrip", i)] = chern_to_charge(ch, K) == t.charges[i];
  }
  Json points = Json::array();
  for (std::size_t j = 0; j < t.points.size(); ++j) {
    const KahlerPoint& p = t.points[j];
    const PeriodData P = period_vector(p, K);
    const PrepotentialValue F = prepotential(p, K);
    Json Z = Json::array();
    for (std::size_t i = 0; i < t.charges.size(); ++i) {
      const ComplexRational za = central_charge_A(t.charges[i], p, K);
      Z.push_back(z(za));
      if (!ctx.full()) continue;
      const Class ch = charge_to_chern(t.charges[i], K);
      checks[indexed(indexed("ZA_equals_ZB", i), j)] = za == central_charge_B(ch, p, K);
      bool twist = true;
      for (Eigen::Index a = 0; a < h; ++a) {
        KahlerPoint shifted = p;
        shifted[a] -= ComplexRational(1);
        twist = twist && central_charge_B(charge_to_chern(lcsl_charge(t.charges[i], K, a), K), p, K) ==
                             central_charge_B(ch, shifted, K);
      }
      checks[indexed(indexed("twist_shift", i), j)] = twist;
    }
    points.push_back(Json{{"t", cvec(p)},
                          {"periods", Json{{"pi6", z(P.pi6)}, {"pi4", cvec(P.pi4)}, {"pi2", cvec(P.pi2)}, {"pi0", z(P.pi0)}}},
                          {"prepotential", Json{{"polynomial", z(F.polynomial)}, {"zeta3_coefficient", q(F.kappa)}}},
                          {"central_charges", Z}});
  }
  Json out{{"charges", charges}, {"points", points}};
  if (t.tduality) {
    const TDualityReport T = tduality_matrix(X);
    Json names = Json::array(), mism = Json::array();
    for (const auto& n : T.coordinate_names) names.push_back(n);
    for (const auto& n : T.mismatched_columns) mism.push_back(n);
    out["tduality"] = Json{{"coordinates", names},
                           {"matrix", mat(T.matrix)},
                           {"graded", mat(T.graded)},
                           {"M", mat(T.M)},
                           {"restricted_equals_M", T.restricted_equals_M},
                           {"mismatched_columns", mism},
                           {"matrix_squared_minus_identity", T.matrix_squared_minus_identity}};
    checks["tduality_graded_equals_M"] = T.graded_equals_M;
    checks["tduality_M_squared_minus_identity"] = T.M_squared_minus_identity;
  }
  return Json{{"prepotential", prepotential_json(K.data, !t.prepotential)}, {"output", out}};
}

Json run(const Context& ctx, const MonodromyTask& t, Json& checks) {
  const KahlerModel K = kahler_for(ctx.X, t.prepotential);
  const Orbit orbit = monodromy_orbit(t.seed, t.generators, t.max_steps, K);
  Json elements = Json::array(), log = Json::array(), gens = Json::array();
  for (const auto& g : t.generators) gens.push_back(g.name());
  for (const auto& e : orbit.elements) elements.push_back(charge(e));
  bool shift = true, ring = true;
  for (const auto& s : orbit.log) {
    const MonodromyGenerator& g = t.generators[s.generator];
    log.push_back(Json{{"from", s.from}, {"generator", g.name()}, {"to", s.to}, {"new", s.is_new}});
    const ChargeVector& from = orbit.elements[s.from];
    const ChargeVector& to = orbit.elements[s.to];
    const Class ch = charge_to_chern(from, K);
    switch (g.kind) {
      case MonodromyGenerator::Kind::Conifold: {
        ChargeVector expect = from;
        expect.n6 += from.n0;
        shift = shift && to == expect;
        if (ctx.full()) ring = ring && to == chern_to_charge(-conifold_raw(ch, K.todd()), K);
        break;
      }
      case MonodromyGenerator::Kind::ConifoldRaw:
        if (ctx.full()) ring = ring && to == chern_to_charge(conifold_raw(ch, K.todd()), K);
        break;
      case MonodromyGenerator::Kind::Lcsl:
        if (ctx.full()) {
          const Class J = Class::basis(K.ring, K.J(g.divisor), Rational(g.power));
          ring = ring && to == chern_to_charge(ch * exp_nilpotent(J), K);
        }
        break;
    }
  }
  checks["conifold_shift"] = shift;
  if (ctx.full()) checks["ring_action"] = ring;
  return Json{{"input", Json{{"seed", charge(t.seed)}, {"generators", gens}, {"max_steps", q(t.max_steps)}}},
              {"prepotential", prepotential_json(K.data, !t.prepotential)},
              {"output", Json{{"elements", elements}, {"log", log}}}};
}

Json hilbert_json(const HilbertData& h) {
  Json o{{"P", poly(h.P)}, {"s", q(h.s)}, {"r", q(h.r)}, {"d", q(h.d)}};
  try {
    const ReducedSlope rs = reduced_and_slope(h);
    o["reduced"] = poly(rs.reduced);
    o["slope"] = q(rs.slope);
  } catch (const Error&) {
    o["reduced"] = nullptr;
    o["slope"] = nullptr;
  }
  return o;
}

Json run(const Context& ctx, const StabilityTask& t, Json& checks) {
  const FibrationModel& X = ctx.X;
  const Class td = todd_total(X);
  Json items = Json::array();
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    const Class ch = std::visit([&](const auto& E) { return to_class(X, E); }, t.classes[i]);
    Json item{{"input", chern(t.classes[i])}, {"hilbert", hilbert_json(hilbert_polynomial(ch, td, t.polarization))}};
    try {
      const Rational pr = polarized_rank(ch, td, t.polarization, t.support);
      item["polarized_rank"] = q(pr);
      if (ctx.full() && !is_zero(ch.unit_coefficient()) && !t.support) {
        checks[indexed("polarized_rank_full_support", i)] = pr == ch.unit_coefficient();
      }
    } catch (const Error&) {
      item["polarized_rank"] = nullptr;
    }
    items.push_back(std::move(item));
  }
  Json in{{"polarization", cls(t.polarization)}};
  in["support"] = t.support ? cls(*t.support) : Json(nullptr);
  Json out{{"items", items}};
  if (t.transformed) {
    const auto& tr = *t.transformed;
    const TransformedLine L = transformed_hilbert_line(tr.n, tr.c, tr.s, surface_params(X), tr.a, tr.b);
    out["transformed"] = Json{{"input", Json{{"n", q(tr.n)}, {"c", q(tr.c)}, {"s", q(tr.s)}, {"a", q(tr.a)}, {"b", q(tr.b)}}},
                              {"line", poly(L.line)},
                              {"slope", L.slope ? q(*L.slope) : Json(nullptr)}};
    if (ctx.full()) {
      const ChernData2 F{tr.n, tr.c * X.fiber_class(), tr.s};
      const Class H = tr.a * X.theta_class() + tr.b * X.fiber_class();
      checks["transformed_hrr_oracle"] = hilbert_polynomial(-fm_surface(F, X, Direction::Forward), X, H).P == L.line;
    }
  }
  if (t.spectral) {
    const auto& sp = *t.spectral;
    const SpectralSurfaceInvariants v = spectral_surface_invariants(sp.n, sp.ell, sp.r, surface_params(X));
    out["spectral"] = Json{{"input", Json{{"n", q(sp.n)}, {"ell", q(sp.ell)}, {"r", q(sp.r)}}},
                           {"rank", q(v.rank)}, {"d", q(v.d)}, {"c", q(v.c)}, {"s", q(v.s)}};
    if (ctx.full()) {
      const ChernData2 F{v.rank, v.c * X.fiber_class(), v.s};
      const ChernData2 L = -fm_surface(F, X, Direction::Forward);
      checks["spectral_inverse_support"] =
          L.n == 0 && L.d() == sp.n && L.c() == sp.ell && integrate(to_class(X, L) * todd_total(X)) == sp.r;
    }
  }
  return Json{{"input", in}, {"output", out}};
}

Json run(const Context& ctx, const FactorizationTask& t, Json& checks) {
  Json items = Json::array();
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    const FactorizationReport r = factorization_check(t.classes[i], ctx.X);
    items.push_back(Json{{"input", chern(t.classes[i])},
                         {"status", to_string(r.status)},
                         {"composed", chern(r.composed)},
                         {"transformed", chern(r.transformed)},
                         {"transformed_with_convention", chern(r.transformed_with_convention)},
                         {"convention", r.convention}});
    checks[indexed("factorization", i)] = r.status != FactorizationStatus::Mismatch;
  }
  return Json{{"convention", kFactorizationConvention}, {"items", items}};
}

bool collect_checks(const Json& j, bool inside) {
  if (j.is_boolean()) return !inside || j.get<bool>();
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (!collect_checks(v, inside || k == "checks")) return false;
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!collect_checks(v, inside)) return false;
    }
  }
  return true;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "null";
  return v.dump();
}

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    if (j.empty()) out.emplace_back(path, "[]");
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, scalar_text(j));
  }
}

void text(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [k, v] : j.items()) {
    const bool leaf_list = v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
    if (v.is_primitive()) {
      os << pad << k << ": " << scalar_text(v) << "\n";
    } else if (leaf_list) {
      os << pad << k << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
      os << "]\n";
    } else {
      os << pad << k << ":\n";
      text(v, indent + 1, os);
    }
  }
}

}  // namespace

Json run_scenario(const Scenario& sc, const RunOptions& opt) {
  Json report;
  report["schema_version"] = kReportSchemaVersion;
  if (opt.header) {
    report["header"] = Json{{"tool", "fmcalc"}, {"version", kToolVersion}, {"check_level", to_string(opt.check_level)},
                            {"source", opt.source}};
  }
  report["scenario"] = Json{{"name", sc.name}, {"base", sc.base_label},
                            {"kind", sc.model.is_cy3() ? "cy3" : "elliptic-surface"}};
  const Context ctx{sc.model, opt};
  Json tasks = Json::array();
  for (std::size_t i = 0; i < sc.tasks.size(); ++i) {
    const Task& task = sc.tasks[i];
    Json checks = Json::object();
    Json body;
    try {
      body = std::visit([&](const auto& spec) { return run(ctx, spec, checks); }, task.spec);
    } catch (const Error& e) {
      throw Error(e.kind(), "task " + std::to_string(i) + " (" + task.type + ", line " + std::to_string(task.line) +
                                "): " + e.detail());
    }
    Json entry{{"index", i}, {"type", task.type}};
    for (const auto& [k, v] : body.items()) entry[k] = v;
    entry["checks"] = checks;
    tasks.push_back(std::move(entry));
  }
  report["tasks"] = tasks;
  report["all_checks_pass"] = all_checks_pass(report);
  return report;
}

bool all_checks_pass(const Json& report) {
  if (!report.contains("tasks")) return true;
  return collect_checks(report["tasks"], false);
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Json& report) {
  std::ostringstream os;
  os << "task,type,path,value\r\n";
  const auto row = [&](const std::string& task, const std::string& type, const std::string& path, const std::string& v) {
    os << csv_field(task) << ',' << csv_field(type) << ',' << csv_field(path) << ',' << csv_field(v) << "\r\n";
  };
  std::vector<std::pair<std::string, std::string>> kv;
  for (const auto& [k, v] : report.items()) {
    if (k == "tasks") continue;
    flatten(v, k, kv);
  }
  for (const auto& [p, v] : kv) row("", "", p, v);
  for (const auto& t : report["tasks"]) {
    kv.clear();
    for (const auto& [k, v] : t.items()) {
      if (k != "index" && k != "type") flatten(v, k, kv);
    }
    for (const auto& [p, v] : kv) row(std::to_string(t["index"].get<std::size_t>()), t["type"].get<std::string>(), p, v);
  }
  return os.str();
}

std::string render_scan_csv(const Json& report) {
  std::ostringstream os;
  bool header = false;
  for (const auto& t : report["tasks"]) {
    if (t["type"] != "scan") continue;
    const std::size_t r = t["input"]["eta"].size();
    if (!header) {
      os << "task,n";
      for (std::size_t i = 0; i < r; ++i) os << ",eta_" << i;
      os << ",lambda,gamma_S,varpi,c3_V,n_gen";
      for (std::size_t i = 0; i < r; ++i) os << ",W_B_" << i;
      os << ",a_f,c1_even,W_B_effective,a_f_nonneg,anomaly_pass,flags\r\n";
      header = true;
    }
    for (const auto& row : t["rows"]) {
      std::vector<std::string> f{std::to_string(t["index"].get<std::size_t>()), row["n"].get<std::string>()};
      for (const auto& e : row["eta"]) f.push_back(e.get<std::string>());
      for (const char* k : {"lambda", "gamma_S", "varpi", "c3_V"}) f.push_back(row[k].get<std::string>());
      f.push_back(row["generations"]["signed"].get<std::string>());
      const Json& an = row["anomaly"];
      for (std::size_t i = 0; i < r; ++i) f.push_back(an["W_B"].is_null() ? "" : an["W_B"][i].get<std::string>());
      f.push_back(an["a_f"].is_null() ? "" : an["a_f"].get<std::string>());
      for (const char* k : {"c1_even", "W_B_effective", "a_f_nonneg", "pass"}) f.push_back(an[k].get<bool>() ? "true" : "false");
      std::string flags;
      for (const auto& x : row["flags"]) flags += (flags.empty() ? "" : ";") + x.get<std::string>();
      f.push_back(flags);
      for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << csv_field(f[i]);
      os << "\r\n";
    }
  }
  return os.str();
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  text(report, 0, os);
  return os.str();
}

std::string render(const Json& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return render_json(report);
    case OutputFormat::Csv: return render_csv(report);
    case OutputFormat::Text: return render_text(report);
  }
  return render_json(report);
}

}  // namespace fmcalc
