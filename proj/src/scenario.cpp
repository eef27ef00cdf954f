#include "fmcalc/scenario.hpp"

#include "fmcalc/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <set>

namespace fmcalc {

OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw Error(ErrorKind::InvalidArgument, "unknown output format '" + s + "' (json, csv, text)");
}

CheckLevel parse_check_level(const std::string& s) {
  if (s == "fast") return CheckLevel::Fast;
  if (s == "full") return CheckLevel::Full;
  throw Error(ErrorKind::InvalidArgument, "unknown check level '" + s + "' (fast, full)");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "json";
}

std::string to_string(CheckLevel c) { return c == CheckLevel::Full ? "full" : "fast"; }

const std::vector<std::string>& task_types() {
  static const std::vector<std::string> types{"transform", "spectral", "scan", "charges", "monodromy", "stability",
                                              "factorization-check"};
  return types;
}

namespace {

class Parser {
 public:
  explicit Parser(const FibrationModel* model = nullptr) : model_(model) {}
  void set_model(const FibrationModel* m) { model_ = m; }

  [[noreturn]] static void fail(ErrorKind kind, const YAML::Node& at, const std::string& key, const std::string& msg) {
    std::string where;
    if (at.IsDefined() && at.Mark().line >= 0) where = "line " + std::to_string(at.Mark().line + 1) + ", ";
    throw Error(kind, where + "key '" + key + "': " + msg);
  }

  static void check_keys(const YAML::Node& map, const std::string& key, std::initializer_list<const char*> allowed) {
    if (!map.IsMap()) fail(ErrorKind::SyntaxError, map, key, "expected a mapping");
    for (const auto& kv : map) {
      const std::string k = kv.first.as<std::string>();
      if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }) == allowed.end()) {
        fail(ErrorKind::UnknownKey, kv.first, key.empty() ? k : key + "." + k, "unknown key");
      }
    }
  }

  static YAML::Node required(const YAML::Node& map, const char* name, const std::string& ctx) {
    const YAML::Node n = map[name];
    if (!n) fail(ErrorKind::SyntaxError, map, ctx.empty() ? name : ctx + "." + name, "missing required key");
    return n;
  }

  static std::string join(const std::string& ctx, const std::string& k) { return ctx.empty() ? k : ctx + "." + k; }

  static Rational rational(const YAML::Node& n, const std::string& key) {
    if (!n.IsScalar()) fail(ErrorKind::SyntaxError, n, key, "expected an exact number");
    try {
      return parse_rational(n.Scalar());
    } catch (const Error& e) {
      fail(ErrorKind::BadFraction, n, key, "'" + n.Scalar() + "' is not an exact fraction");
    }
  }

  static Rational rational_or(const YAML::Node& map, const char* name, const std::string& ctx, Rational fallback) {
    const YAML::Node n = map[name];
    return n ? rational(n, join(ctx, name)) : fallback;
  }

  static int integer(const YAML::Node& n, const std::string& key) {
    const Rational q = rational(n, key);
    if (!is_integral(q) || abs(q) > 1000000) fail(ErrorKind::InvalidArgument, n, key, "expected a small integer");
    return static_cast<int>(numerator_of(q).convert_to<long>());
  }

  static bool boolean(const YAML::Node& n, const std::string& key) {
    try {
      return n.as<bool>();
    } catch (const YAML::Exception&) {
      fail(ErrorKind::SyntaxError, n, key, "expected true or false");
    }
  }

  static std::string string(const YAML::Node& n, const std::string& key) {
    if (!n.IsScalar()) fail(ErrorKind::SyntaxError, n, key, "expected a string");
    return n.Scalar();
  }

  static RationalVector vector(const YAML::Node& n, const std::string& key, std::optional<Eigen::Index> size) {
    if (!n.IsSequence()) fail(ErrorKind::SyntaxError, n, key, "expected a list");
    if (size && static_cast<Eigen::Index>(n.size()) != *size) {
      fail(ErrorKind::DimensionMismatch, n, key, "expected " + std::to_string(*size) + " entries, got " + std::to_string(n.size()));
    }
    RationalVector v(static_cast<Eigen::Index>(n.size()));
    for (std::size_t i = 0; i < n.size(); ++i) v[static_cast<Eigen::Index>(i)] = rational(n[i], key + "[" + std::to_string(i) + "]");
    return v;
  }

  static RationalMatrix matrix(const YAML::Node& n, const std::string& key, Eigen::Index rows, Eigen::Index cols) {
    if (!n.IsSequence() || static_cast<Eigen::Index>(n.size()) != rows) {
      fail(ErrorKind::DimensionMismatch, n, key, "expected " + std::to_string(rows) + " rows");
    }
    RationalMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) m.row(i) = vector(n[static_cast<std::size_t>(i)], key, cols).transpose();
    return m;
  }

  static ComplexRational complex(const YAML::Node& n, const std::string& key) {
    if (n.IsMap()) {
      check_keys(n, key, {"re", "im"});
      return {rational_or(n, "re", key, 0), rational_or(n, "im", key, 0)};
    }
    return ComplexRational(rational(n, key));
  }

  const FibrationModel& model() const { return *model_; }

  /// Class from basis names ("theta" aliases Θ; on CY3 "base" gives p*D).
  Class named_class(const YAML::Node& n, const std::string& key) const {
    if (!n.IsMap()) fail(ErrorKind::SyntaxError, n, key, "expected a mapping of basis names to coefficients");
    const FibrationModel& X = model();
    Class c(X.ring);
    for (const auto& kv : n) {
      std::string name = kv.first.as<std::string>();
      const std::string k = join(key, name);
      if (name == "base" && X.is_cy3()) {
        c += X.pull_divisor(vector(kv.second, k, X.base_rank()));
        continue;
      }
      if (name == "theta") name = "Θ";
      const auto idx = X.ring->find(name);
      if (!idx) fail(ErrorKind::UnknownKey, kv.first, k, "not a basis element of the fibration ring");
      c[*idx] += rational(kv.second, k);
    }
    return c;
  }

  ChernData3 chern3(const YAML::Node& n, const std::string& key) const {
    const FibrationModel& X = model();
    if (n.IsScalar()) {
      const std::string p = n.Scalar();
      if (p == "point") return ChernData3::point(X.base_rank());
      if (p == "section") return ChernData3::section(X);
      if (p == "structure") {
        ChernData3 e = ChernData3::zero(X.base_rank());
        e.n = 1;
        return e;
      }
      if (p == "zero") return ChernData3::zero(X.base_rank());
      fail(ErrorKind::InvalidArgument, n, key, "unknown preset '" + p + "' (point, section, structure, zero)");
    }
    check_keys(n, key, {"n", "x", "S", "eta", "a", "s"});
    ChernData3 e = ChernData3::zero(X.base_rank());
    e.n = rational_or(n, "n", key, 0);
    e.x = rational_or(n, "x", key, 0);
    if (n["S"]) e.S = vector(n["S"], join(key, "S"), X.base_rank());
    if (n["eta"]) e.eta = vector(n["eta"], join(key, "eta"), X.base_rank());
    e.a = rational_or(n, "a", key, 0);
    e.s = rational_or(n, "s", key, 0);
    return e;
  }

  ChernData2 chern2(const YAML::Node& n, const std::string& key) const {
    const FibrationModel& X = model();
    check_keys(n, key, {"n", "c1", "s"});
    ChernData2 e{rational_or(n, "n", key, 0), Class::zero(X.ring), rational_or(n, "s", key, 0)};
    if (n["c1"]) {
      e.c1 = named_class(n["c1"], join(key, "c1"));
      if (e.c1 != e.c1.degree_part(1)) fail(ErrorKind::InvalidArgument, n["c1"], join(key, "c1"), "c1 must be a divisor class");
    }
    return e;
  }

  std::vector<ChernInput> chern_list(const YAML::Node& n, const std::string& key) const {
    std::vector<ChernInput> out;
    const auto one = [&](const YAML::Node& item, const std::string& k) -> ChernInput {
      if (model().is_cy3()) return chern3(item, k);
      return chern2(item, k);
    };
    if (n.IsSequence()) {
      for (std::size_t i = 0; i < n.size(); ++i) out.push_back(one(n[i], key + "[" + std::to_string(i) + "]"));
    } else {
      out.push_back(one(n, key));
    }
    return out;
  }

  static PrepotentialData prepotential(const YAML::Node& n, const std::string& key) {
    check_keys(n, key, {"names", "k", "c2J", "chi", "c_ab", "kappa"});
    PrepotentialData p;
    p.c2J = vector(required(n, "c2J", key), join(key, "c2J"), std::nullopt);
    const Eigen::Index h = p.c2J.size();
    if (h == 0) fail(ErrorKind::DimensionMismatch, n, join(key, "c2J"), "h11 must be positive");
    if (n["names"]) {
      const YAML::Node names = n["names"];
      if (!names.IsSequence() || static_cast<Eigen::Index>(names.size()) != h) {
        fail(ErrorKind::DimensionMismatch, names, join(key, "names"), "expected " + std::to_string(h) + " names");
      }
      for (const auto& x : names) p.names.push_back(string(x, join(key, "names")));
    } else {
      for (Eigen::Index a = 0; a < h; ++a) p.names.push_back("J" + std::to_string(a + 1));
    }
    p.k.assign(static_cast<std::size_t>(h * h * h), Rational(0));
    const YAML::Node k = required(n, "k", key);
    if (!k.IsSequence()) fail(ErrorKind::SyntaxError, k, join(key, "k"), "expected a list of [a, b, c, value] entries");
    for (std::size_t i = 0; i < k.size(); ++i) {
      const std::string kk = join(key, "k") + "[" + std::to_string(i) + "]";
      const RationalVector e = vector(k[i], kk, 4);
      int idx[3];
      for (int j = 0; j < 3; ++j) {
        if (!is_integral(e[j]) || e[j] < 0 || e[j] >= h) fail(ErrorKind::DimensionMismatch, k[i], kk, "index out of range");
        idx[j] = static_cast<int>(numerator_of(e[j]).convert_to<long>());
      }
      std::sort(idx, idx + 3);
      do {
        p.k[static_cast<std::size_t>((idx[0] * h + idx[1]) * h + idx[2])] = e[3];
      } while (std::next_permutation(idx, idx + 3));
    }
    p.chi = rational_or(n, "chi", key, 0);
    p.c_ab = n["c_ab"] ? matrix(n["c_ab"], join(key, "c_ab"), h, h) : RationalMatrix(RationalMatrix::Zero(h, h));
    if (p.c_ab != p.c_ab.transpose()) fail(ErrorKind::InvalidArgument, n["c_ab"], join(key, "c_ab"), "c_ab must be symmetric");
    p.kappa = rational_or(n, "kappa", key, p.chi);
    return p;
  }

  static ChargeVector charge(const YAML::Node& n, const std::string& key, Eigen::Index h) {
    return unflatten(vector(n, key, 2 * h + 2), h);
  }

 private:
  const FibrationModel* model_;
};

FibrationModel parse_base(const YAML::Node& node, std::string& label) {
  using P = Parser;
  if (node.IsScalar()) {
    label = node.Scalar();
    try {
      return build_fibration(build_base(label));
    } catch (const Error& e) {
      P::fail(e.kind(), node, "base", "unknown base '" + label + "'");
    }
  }
  P::check_keys(node, "base", {"custom", "curve"});
  if (node["custom"]) {
    const YAML::Node c = node["custom"];
    P::check_keys(c, "base.custom", {"name", "divisors", "pairing", "c1", "c2", "effective"});
    const YAML::Node divs = P::required(c, "divisors", "base.custom");
    if (!divs.IsSequence() || divs.size() == 0) P::fail(ErrorKind::SyntaxError, divs, "base.custom.divisors", "expected a nonempty list");
    std::vector<std::string> names;
    for (const auto& d : divs) names.push_back(P::string(d, "base.custom.divisors"));
    const auto r = static_cast<Eigen::Index>(names.size());
    const RationalMatrix pairing = P::matrix(P::required(c, "pairing", "base.custom"), "base.custom.pairing", r, r);
    const RationalVector c1 = P::vector(P::required(c, "c1", "base.custom"), "base.custom.c1", r);
    const Rational c2 = P::rational(P::required(c, "c2", "base.custom"), "base.custom.c2");
    std::vector<RationalVector> gens;
    if (c["effective"]) {
      const YAML::Node e = c["effective"];
      if (!e.IsSequence()) P::fail(ErrorKind::SyntaxError, e, "base.custom.effective", "expected a list of vectors");
      for (const auto& g : e) gens.push_back(P::vector(g, "base.custom.effective", r));
    }
    label = c["name"] ? P::string(c["name"], "base.custom.name") : "custom";
    try {
      return build_fibration(custom_base(label, names, pairing, c1, c2, gens));
    } catch (const Error& e) {
      P::fail(e.kind(), c, "base.custom", e.detail());
    }
  }
  if (node["curve"]) {
    const YAML::Node c = node["curve"];
    P::check_keys(c, "base.curve", {"genus", "e", "extras"});
    BaseCurve curve{P::integer(P::required(c, "genus", "base.curve"), "base.curve.genus"),
                    P::integer(P::required(c, "e", "base.curve"), "base.curve.e")};
    std::vector<ExtraDivisor> extras;
    if (c["extras"]) {
      const YAML::Node ex = c["extras"];
      if (!ex.IsSequence()) P::fail(ErrorKind::SyntaxError, ex, "base.curve.extras", "expected a list");
      for (std::size_t i = 0; i < ex.size(); ++i) {
        const std::string k = "base.curve.extras[" + std::to_string(i) + "]";
        P::check_keys(ex[i], k, {"name", "theta", "fiber", "pairings"});
        ExtraDivisor d;
        d.name = P::string(P::required(ex[i], "name", k), k + ".name");
        d.with_theta = P::rational_or(ex[i], "theta", k, 0);
        d.with_fiber = P::rational_or(ex[i], "fiber", k, 0);
        const RationalVector pv = ex[i]["pairings"] ? P::vector(ex[i]["pairings"], k + ".pairings", static_cast<Eigen::Index>(i + 1))
                                                    : RationalVector(RationalVector::Zero(static_cast<Eigen::Index>(i + 1)));
        d.with_extras.assign(pv.begin(), pv.end());
        extras.push_back(std::move(d));
      }
    }
    label = "curve(genus=" + std::to_string(curve.genus) + ", e=" + std::to_string(curve.e) + ")";
    try {
      return build_fibration(curve, std::move(extras));
    } catch (const Error& e) {
      P::fail(e.kind(), c, "base.curve", e.detail());
    }
  }
  P::fail(ErrorKind::SyntaxError, node, "base", "expected a catalog name, 'custom' or 'curve'");
}

MonodromyGenerator parse_generator(const YAML::Node& n, const std::string& key) {
  const std::string s = Parser::string(n, key);
  if (s == "conifold") return {MonodromyGenerator::Kind::Conifold, 0, 1};
  if (s == "conifold-raw") return {MonodromyGenerator::Kind::ConifoldRaw, 0, 1};
  if (s.rfind("lcsl:", 0) == 0) {
    MonodromyGenerator g{MonodromyGenerator::Kind::Lcsl, 0, 1};
    const std::string rest = s.substr(5);
    const auto colon = rest.find(':');
    try {
      g.divisor = std::stoi(rest.substr(0, colon));
      if (colon != std::string::npos) g.power = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      Parser::fail(ErrorKind::SyntaxError, n, key, "expected lcsl:<index>[:<power>]");
    }
    return g;
  }
  Parser::fail(ErrorKind::InvalidArgument, n, key, "unknown generator '" + s + "' (conifold, conifold-raw, lcsl:<a>[:<p>])");
}

Eigen::Index charge_rank(const Parser& p, const std::optional<PrepotentialData>& pre, const YAML::Node& at, const std::string& key) {
  if (pre) return pre->h11();
  if (!p.model().is_cy3()) Parser::fail(ErrorKind::WrongKind, at, key, "charges on a surface model need an explicit prepotential");
  return p.model().base_rank() + 1;
}

TaskSpec parse_task(const std::string& type, const YAML::Node& n, const std::string& key, const Parser& p) {
  using P = Parser;
  const FibrationModel& X = p.model();
  const auto need_cy3 = [&] {
    if (!X.is_cy3()) P::fail(ErrorKind::WrongKind, n, key, "task needs a CY3 fibration over a surface");
  };
  if (type == "transform") {
    P::check_keys(n, key, {"E", "direction"});
    TransformTask t;
    t.classes = p.chern_list(P::required(n, "E", key), key + ".E");
    if (n["direction"]) {
      const std::string d = P::string(n["direction"], key + ".direction");
      if (d == "forward") t.direction = Direction::Forward;
      else if (d == "inverse") t.direction = Direction::Inverse;
      else P::fail(ErrorKind::InvalidArgument, n["direction"], key + ".direction", "expected forward or inverse");
    }
    return t;
  }
  if (type == "spectral") {
    need_cy3();
    P::check_keys(n, key, {"n", "eta", "lambda", "eta_E"});
    SpectralTask t;
    t.input.n = P::integer(P::required(n, "n", key), key + ".n");
    t.input.eta = P::vector(P::required(n, "eta", key), key + ".eta", X.base_rank());
    t.input.lambda = P::rational(P::required(n, "lambda", key), key + ".lambda");
    if (n["eta_E"]) t.input.eta_E = P::vector(n["eta_E"], key + ".eta_E", X.base_rank());
    return t;
  }
  if (type == "scan") {
    need_cy3();
    P::check_keys(n, key, {"n", "eta", "lambda", "target_ngen", "require_anomaly"});
    ScanTask t;
    P::vector(P::required(n, "n", key), key + ".n", 2);
    t.ranges.n_min = P::integer(n["n"][0], key + ".n");
    t.ranges.n_max = P::integer(n["n"][1], key + ".n");
    const YAML::Node eta = P::required(n, "eta", key);
    if (!eta.IsSequence() || static_cast<Eigen::Index>(eta.size()) != X.base_rank()) {
      P::fail(ErrorKind::DimensionMismatch, eta, key + ".eta", "expected one [lo, hi] range per base divisor");
    }
    for (std::size_t i = 0; i < eta.size(); ++i) {
      const std::string k = key + ".eta[" + std::to_string(i) + "]";
      P::vector(eta[i], k, 2);
      t.ranges.eta.push_back({P::integer(eta[i][0], k), P::integer(eta[i][1], k)});
    }
    const RationalVector lam = P::vector(P::required(n, "lambda", key), key + ".lambda", std::nullopt);
    t.ranges.lambdas.assign(lam.begin(), lam.end());
    if (n["target_ngen"]) t.targets.n_gen = P::rational(n["target_ngen"], key + ".target_ngen");
    if (n["require_anomaly"]) t.targets.require_anomaly_pass = P::boolean(n["require_anomaly"], key + ".require_anomaly");
    if (t.ranges.n_min > t.ranges.n_max || t.ranges.lambdas.empty()) P::fail(ErrorKind::EmptyRange, n, key, "empty scan range");
    return t;
  }
  if (type == "charges") {
    P::check_keys(n, key, {"prepotential", "charges", "t", "tduality"});
    ChargesTask t;
    if (n["prepotential"]) t.prepotential = P::prepotential(n["prepotential"], key + ".prepotential");
    const Eigen::Index h = charge_rank(p, t.prepotential, n, key);
    if (n["charges"]) {
      const YAML::Node c = n["charges"];
      if (!c.IsSequence()) P::fail(ErrorKind::SyntaxError, c, key + ".charges", "expected a list of charge vectors");
      for (std::size_t i = 0; i < c.size(); ++i) t.charges.push_back(P::charge(c[i], key + ".charges[" + std::to_string(i) + "]", h));
    }
    if (n["t"]) {
      const YAML::Node pts = n["t"];
      if (!pts.IsSequence()) P::fail(ErrorKind::SyntaxError, pts, key + ".t", "expected a list of Kähler points");
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string k = key + ".t[" + std::to_string(i) + "]";
        if (!pts[i].IsSequence() || static_cast<Eigen::Index>(pts[i].size()) != h) {
          P::fail(ErrorKind::DimensionMismatch, pts[i], k, "expected " + std::to_string(h) + " coordinates");
        }
        KahlerPoint pt(h);
        for (Eigen::Index a = 0; a < h; ++a) pt[a] = P::complex(pts[i][static_cast<std::size_t>(a)], k);
        t.points.push_back(pt);
      }
    }
    if (n["tduality"]) {
      t.tduality = P::boolean(n["tduality"], key + ".tduality");
      if (t.tduality) need_cy3();
    }
    return t;
  }
  if (type == "monodromy") {
    P::check_keys(n, key, {"prepotential", "seed", "generators", "max_steps"});
    MonodromyTask t;
    if (n["prepotential"]) t.prepotential = P::prepotential(n["prepotential"], key + ".prepotential");
    const Eigen::Index h = charge_rank(p, t.prepotential, n, key);
    t.seed = P::charge(P::required(n, "seed", key), key + ".seed", h);
    if (n["generators"]) {
      const YAML::Node g = n["generators"];
      if (!g.IsSequence()) P::fail(ErrorKind::SyntaxError, g, key + ".generators", "expected a list");
      for (std::size_t i = 0; i < g.size(); ++i) {
        const std::string k = key + ".generators[" + std::to_string(i) + "]";
        t.generators.push_back(parse_generator(g[i], k));
        const auto& gen = t.generators.back();
        if (gen.kind == MonodromyGenerator::Kind::Lcsl && (gen.divisor < 0 || gen.divisor >= h)) {
          P::fail(ErrorKind::DimensionMismatch, g[i], k, "divisor index out of range");
        }
      }
    }
    t.max_steps = n["max_steps"] ? P::integer(n["max_steps"], key + ".max_steps") : 1;
    if (t.max_steps < 0) P::fail(ErrorKind::EmptyRange, n["max_steps"], key + ".max_steps", "must be nonnegative");
    return t;
  }
  if (type == "stability") {
    P::check_keys(n, key, {"E", "polarization", "support", "transformed", "spectral"});
    StabilityTask t;
    if (n["E"]) t.classes = p.chern_list(n["E"], key + ".E");
    t.polarization = p.named_class(P::required(n, "polarization", key), key + ".polarization");
    if (t.polarization != t.polarization.degree_part(1)) {
      P::fail(ErrorKind::InvalidArgument, n["polarization"], key + ".polarization", "polarization must be a divisor class");
    }
    if (n["support"]) t.support = p.named_class(n["support"], key + ".support");
    if (n["transformed"]) {
      if (X.is_cy3()) P::fail(ErrorKind::WrongKind, n["transformed"], key + ".transformed", "needs an elliptic surface");
      const YAML::Node tr = n["transformed"];
      const std::string k = key + ".transformed";
      P::check_keys(tr, k, {"n", "c", "s", "a", "b"});
      t.transformed = TransformedLineInput{P::rational(P::required(tr, "n", k), k + ".n"), P::rational_or(tr, "c", k, 0),
                                           P::rational_or(tr, "s", k, 0), P::rational(P::required(tr, "a", k), k + ".a"),
                                           P::rational(P::required(tr, "b", k), k + ".b")};
    }
    if (n["spectral"]) {
      if (X.is_cy3()) P::fail(ErrorKind::WrongKind, n["spectral"], key + ".spectral", "needs an elliptic surface");
      const YAML::Node sp = n["spectral"];
      const std::string k = key + ".spectral";
      P::check_keys(sp, k, {"n", "ell", "r"});
      t.spectral = SpectralSurfaceInput{P::rational(P::required(sp, "n", k), k + ".n"), P::rational_or(sp, "ell", k, 0),
                                        P::rational_or(sp, "r", k, 0)};
    }
    return t;
  }
  if (type == "factorization-check") {
    need_cy3();
    P::check_keys(n, key, {"E"});
    FactorizationTask t;
    for (auto& c : p.chern_list(P::required(n, "E", key), key + ".E")) t.classes.push_back(std::get<ChernData3>(c));
    return t;
  }
  P::fail(ErrorKind::UnknownKey, n, key, "unknown task type '" + type + "'");
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(e.mark.line + 1) + ", column " +
                                            std::to_string(e.mark.column + 1) + ": " + e.msg);
  }
  Parser::check_keys(root, "", {"schema_version", "name", "kind", "base", "format", "check_level", "tasks"});
  if (root["schema_version"] && Parser::integer(root["schema_version"], "schema_version") != 1) {
    Parser::fail(ErrorKind::InvalidArgument, root["schema_version"], "schema_version", "only version 1 is supported");
  }
  Scenario sc;
  sc.name = root["name"] ? Parser::string(root["name"], "name") : "";
  sc.model = parse_base(Parser::required(root, "base", ""), sc.base_label);
  if (root["kind"]) {
    const std::string k = Parser::string(root["kind"], "kind");
    const bool cy3 = k == "cy3";
    if (!cy3 && k != "elliptic-surface") Parser::fail(ErrorKind::InvalidArgument, root["kind"], "kind", "expected cy3 or elliptic-surface");
    if (cy3 != sc.model.is_cy3()) Parser::fail(ErrorKind::WrongKind, root["kind"], "kind", "does not match the base definition");
  }
  const auto option = [&](const char* key, auto parse) {
    try {
      return parse(Parser::string(root[key], key));
    } catch (const Error& e) {
      Parser::fail(e.kind(), root[key], key, e.detail());
    }
  };
  if (root["format"]) sc.format = option("format", parse_output_format);
  if (root["check_level"]) sc.check_level = option("check_level", parse_check_level);
  const YAML::Node tasks = Parser::required(root, "tasks", "");
  if (!tasks.IsSequence()) Parser::fail(ErrorKind::SyntaxError, tasks, "tasks", "expected a list");
  Parser p(&sc.model);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const YAML::Node item = tasks[i];
    const std::string key = "tasks[" + std::to_string(i) + "]";
    if (!item.IsMap() || item.size() != 1) Parser::fail(ErrorKind::SyntaxError, item, key, "each task is a single-key mapping {type: params}");
    const auto kv = *item.begin();
    const std::string type = kv.first.as<std::string>();
    const YAML::Node params = kv.second.IsNull() ? YAML::Node(YAML::NodeType::Map) : kv.second;
    Task t;
    t.type = type;
    t.line = item.Mark().line + 1;
    t.spec = parse_task(type, params, key + "." + type, p);
    sc.tasks.push_back(std::move(t));
  }
  return sc;
}

}  // namespace fmcalc
