#include "fmcalc/report.hpp"

#include "test_support.hpp"

using namespace fmcalc;

namespace {

ErrorKind parse_error(const std::string& text, std::string* message = nullptr) {
  try {
    parse_scenario(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  FAIL("scenario parsed");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("minimal scenario") {
  const Scenario sc = parse_scenario("base: P2\ntasks:\n  - transform: {E: {n: 1}}\n");
  REQUIRE(sc.tasks.size() == 1);
  CHECK(sc.tasks[0].type == "transform");
  CHECK(sc.tasks[0].line == 3);
  const auto& t = std::get<TransformTask>(sc.tasks[0].spec);
  const auto& E = std::get<ChernData3>(t.classes.at(0));
  CHECK(E.n == 1);
  CHECK(E.S.size() == 1);
  CHECK(sc.format == OutputFormat::Json);
  CHECK_FALSE(sc.check_level);
}

TEST_CASE("exact fractions") {
  const Scenario sc = parse_scenario("base: F1\ntasks:\n  - transform: {E: {a: \"1/3\", S: [-2/6, 4]}}\n");
  const auto& E = std::get<ChernData3>(std::get<TransformTask>(sc.tasks[0].spec).classes[0]);
  CHECK(E.a == Rational(1, 3));
  CHECK(E.S[0] == Rational(-1, 3));
  std::string msg;
  CHECK(parse_error("base: P2\ntasks:\n  - transform: {E: {a: 0.25}}\n", &msg) == ErrorKind::BadFraction);
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(parse_error("base: P2\ntasks:\n  - transform: {E: {a: 1/0}}\n") == ErrorKind::BadFraction);
}

TEST_CASE("located errors") {
  std::string msg;
  CHECK(parse_error("name: x\nbase: P5\ntasks: []\n", &msg) == ErrorKind::UnknownCatalogEntry);
  CHECK(msg.find("line 2, key 'base'") != std::string::npos);
  CHECK(parse_error("base: P2\ncolour: red\ntasks: []\n", &msg) == ErrorKind::UnknownKey);
  CHECK(msg.find("colour") != std::string::npos);
  CHECK(parse_error("base: P2\ntasks:\n  - transform: {E: {S: [1, 2]}}\n") == ErrorKind::DimensionMismatch);
  CHECK(parse_error("base: P2\ntasks:\n  - transform: {E: {n: 1}, extra: 2}\n") == ErrorKind::UnknownKey);
  CHECK(parse_error("base: P2\ntasks:\n  - rotate: {}\n") == ErrorKind::UnknownKey);
  CHECK(parse_error("base: P2\ntasks: [\n") == ErrorKind::SyntaxError);
  CHECK(parse_error("tasks: []\n") == ErrorKind::SyntaxError);
  CHECK(parse_error("base: {curve: {genus: 0, e: 1}}\ntasks:\n  - spectral: {n: 2, eta: [], lambda: 1}\n") ==
        ErrorKind::WrongKind);
  CHECK(parse_error("base: P2\nkind: elliptic-surface\ntasks: []\n") == ErrorKind::WrongKind);
  CHECK(parse_error("base: P2\ntasks:\n  - monodromy: {seed: [1, 0, 0, 0, 0, 0], generators: [\"lcsl:7\"]}\n") ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("custom and curve bases") {
  const Scenario custom = parse_scenario(
      "base:\n  custom:\n    divisors: [A, B]\n    pairing: [[0, 1], [1, 0]]\n    c1: [2, 2]\n    c2: 4\n"
      "tasks:\n  - transform: {E: point}\n");
  CHECK(custom.model.base_rank() == 2);
  CHECK(parse_error("base:\n  custom:\n    divisors: [A, B]\n    pairing: [[0, 1], [2, 0]]\n    c1: [2, 2]\n    c2: 4\n"
                    "tasks: []\n") ==
        ErrorKind::InconsistentCustomLattice);

  const Scenario surface = parse_scenario(
      "base: {curve: {genus: 1, e: 2, extras: [{name: E1, pairings: [-2]}]}}\n"
      "tasks:\n  - transform: {E: {n: 1, c1: {theta: 1, E1: 1/2}}}\n"
      "  - stability: {polarization: {theta: 1, f: 3}, E: {n: 1}}\n");
  CHECK_FALSE(surface.model.is_cy3());
  const auto& E = std::get<ChernData2>(std::get<TransformTask>(surface.tasks[0].spec).classes[0]);
  CHECK(E.c1.coeff("E1") == Rational(1, 2));
  CHECK(E.c() == -2);
}

TEST_CASE("prepotential block") {
  const Scenario sc = parse_scenario(
      "base: P2\ntasks:\n  - charges:\n      prepotential: {k: [[0, 0, 1, 2]], c2J: [1, 2]}\n"
      "      charges: [[1, 0, 0, 0, 0, 0]]\n      t: [[{re: 1, im: 1/2}, 3]]\n");
  const auto& t = std::get<ChargesTask>(sc.tasks[0].spec);
  REQUIRE(t.prepotential);
  CHECK(t.prepotential->k_abc(0, 1, 0) == 2);
  CHECK(t.prepotential->k_abc(1, 0, 0) == 2);
  CHECK(t.prepotential->names == std::vector<std::string>{"J1", "J2"});
  CHECK(t.points[0][0] == ComplexRational(1, Rational(1, 2)));
  CHECK(t.points[0][1] == ComplexRational(3));
}

TEST_CASE("run: point class goes to the fiber") {
  const Scenario sc = parse_scenario("base: P2\ntasks:\n  - transform: {E: point}\n");
  const Json r = run_scenario(sc, {});
  const Json& out = r["tasks"][0]["items"][0]["output"];
  CHECK(out["a"] == "1");
  CHECK(out["n"] == "0");
  CHECK(out["s"] == "0");
  CHECK(r["all_checks_pass"] == true);
  CHECK(r["schema_version"] == kReportSchemaVersion);
}

TEST_CASE("run: empty scan") {
  const Scenario sc =
      parse_scenario("base: P2\ntasks:\n  - scan: {n: [3, 3], eta: [[9, 9]], lambda: [1/2], target_ngen: 1000}\n");
  const Json r = run_scenario(sc, {});
  CHECK(r["tasks"][0]["rows"].empty());
  CHECK(all_checks_pass(r));
}

TEST_CASE("run: errors carry the task index") {
  const Scenario sc = parse_scenario("base: P2\ntasks:\n  - transform: {E: point}\n  - spectral: {n: 0, eta: [9], lambda: 1}\n");
  try {
    run_scenario(sc, {});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPositiveRank);
    CHECK(std::string(e.what()).find("task 1 (spectral") != std::string::npos);
  }
}

TEST_CASE("reports are deterministic and exact") {
  const std::string text =
      "base: dP2\ncheck_level: full\ntasks:\n"
      "  - transform: {E: [point, section, {n: 2, S: [1, 0, -1], a: 1/7}]}\n"
      "  - spectral: {n: 3, eta: [6, 1, 1], lambda: 3/2}\n"
      "  - scan: {n: [2, 3], eta: [[3, 4], [0, 1], [0, 1]], lambda: [1/2, 1]}\n"
      "  - charges: {charges: [[1, 0, 0, 0, 0, 0, 0, 0, 0, 0]], t: [[1, {im: 1}, 0, 2]]}\n"
      "  - monodromy: {seed: [0, 0, 0, 0, 0, 0, 0, 0, 0, 1], generators: [conifold, \"lcsl:2\"], max_steps: 2}\n"
      "  - factorization-check: {E: section}\n";
  RunOptions seq{CheckLevel::Full, false, false, ""};
  RunOptions par = seq;
  par.parallel = true;
  const Json a = run_scenario(parse_scenario(text), seq);
  const Json b = run_scenario(parse_scenario(text), par);
  CHECK(all_checks_pass(a));
  for (auto f : {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Text}) CHECK(render(a, f) == render(b, f));
  CHECK(render_json(a).find('.') == std::string::npos);
}

TEST_CASE("header is optional") {
  const Scenario sc = parse_scenario("base: P2\ntasks:\n  - transform: {E: point}\n");
  CHECK(run_scenario(sc, {CheckLevel::Fast, false, true, "x"}).contains("header"));
  CHECK_FALSE(run_scenario(sc, {CheckLevel::Fast, false, false, "x"}).contains("header"));
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  const Scenario sc = parse_scenario("base: P2\ntasks:\n  - factorization-check: {E: point}\n");
  const std::string csv = render_csv(run_scenario(sc, {}));
  CHECK(csv.rfind("task,type,path,value\r\n", 0) == 0);
}
