#include "wittcob/cobordism.hpp"
#include "wittcob/genus.hpp"
#include "wittcob/hodge.hpp"
#include "wittcob/json_io.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

using namespace wittcob;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(WITTCOB_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  CliRun r;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("wittcob_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

template <class T, class To, class From>
T round_trip(const T& x, To to, From from) {
  return from(Json::parse(to(x).dump()), "");
}

}  // namespace

TEST(JsonRoundTrip, FormsAndClasses) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 50; ++t) {
    const BilinearForm f = random_nondegenerate_form(rng, 1 + t % 5, 20).scaled(Rational(1, 1 + t % 7));
    EXPECT_EQ(round_trip(f, form_to_json, form_from_json), f);
    const WittClassQ c = witt_class_of(f);
    EXPECT_EQ(round_trip(c, witt_class_to_json, witt_class_from_json), c);
  }
  const BilinearForm skew = hyperbolic_plane(Symmetry::skew);
  EXPECT_EQ(round_trip(skew, form_to_json, form_from_json), skew);
  for (long p : {2L, 3L, 5L, 7L, 13L}) {
    const WittClassFp u = unit_class(Integer(p));
    EXPECT_EQ(round_trip(u, fp_class_to_json, fp_class_from_json), u);
    EXPECT_TRUE(fp_class_to_json(u)["p"].is_number_integer());
  }
}

TEST(JsonRoundTrip, FieldKeyAndPrimeShorthand) {
  const auto q = form_from_json(Json::parse(R"({"gram": [[1, "1/2"], ["1/2", 3]], "symmetry": "symmetric", "field": "Q"})"));
  EXPECT_TRUE(q.over_rationals());
  EXPECT_EQ(q.gram()(0, 1), Rational(1, 2));
  const auto f7 = form_from_json(Json::parse(R"({"gram": [[1, 0], [0, 3]], "symmetry": "symmetric", "field": {"Fp": 7}})"));
  EXPECT_FALSE(f7.over_rationals());
  const auto short7 = form_from_json(Json::parse(R"({"gram": [[1, 0], [0, 3]], "symmetry": "symmetric", "prime": 7})"));
  EXPECT_EQ(short7, f7);
  EXPECT_EQ(form_to_json(f7)["field"]["Fp"], 7);
  EXPECT_THROW(form_from_json(Json::parse(R"({"gram": [[1]], "symmetry": "symmetric", "field": "R"})")), SchemaError);
}

TEST(JsonRoundTrip, ComplexesAndWitnesses) {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 10; ++t) {
    const WitnessChain chain = random_witness_chain(rng);
    for (const auto& obj : chain.objects) EXPECT_EQ(round_trip(obj, self_dual_to_json, self_dual_from_json), obj);
    for (const auto& w : chain.links) {
      const CobordismWitness back = round_trip(w, witness_to_json, witness_from_json);
      EXPECT_EQ(back.F, w.F);
      EXPECT_EQ(back.F_prime, w.F_prime);
      EXPECT_EQ(back.G, w.G);
      EXPECT_EQ(back.G_prime, w.G_prime);
      EXPECT_EQ(verify_witness(back).ok, verify_witness(w).ok);
    }
  }
}

TEST(JsonRoundTrip, HodgeAndDiamonds) {
  std::mt19937_64 rng(73);
  for (int w = 0; w < 4; ++w) {
    const HodgeFixture fx = random_hodge_fixture(rng, w);
    const HodgeStructure back = round_trip(fx.h, hodge_to_json, hodge_from_json);
    EXPECT_EQ(back.weight, fx.h.weight);
    EXPECT_EQ(weil_operator(back), weil_operator(fx.h));
  }
  for (const auto& d : {point_diamond(), projective_plane_diamond(), k3_diamond()}) {
    const HodgeDiamond back = round_trip(d, diamond_to_json, diamond_from_json);
    EXPECT_EQ(back.n, d.n);
    EXPECT_EQ(back.h, d.h);
  }
}

TEST(JsonErrors, SchemaErrorsCarryPointers) {
  try {
    form_from_json(Json::parse(R"({"gram": [[1, 2], [2, "x"]], "symmetry": "symmetric"})"));
    FAIL() << "expected a schema error";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), "/gram/1/1");
  }
  EXPECT_THROW(form_from_json(Json::parse(R"({"gram": [[1, 2]], "symmetry": "symmetric"})")), std::invalid_argument);
}

TEST(Cli, WittClassOfMinusTwo) {
  TempDir dir;
  const auto f = dir.write("m2.json", R"({"gram": [[-2]], "symmetry": "symmetric"})");
  const CliRun r = run_cli("witt-class " + f);
  ASSERT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["signature"], -1);
  ASSERT_EQ(j["residues"].size(), 1u);
  EXPECT_EQ(j["residues"][0]["p"], 2);
  EXPECT_FALSE(j["zero"].get<bool>());
}

TEST(Cli, EquivalentVerdictsAndExitCodes) {
  TempDir dir;
  const auto h = dir.write("h.json", R"({"gram": [[0, 1], [1, 0]], "symmetry": "symmetric"})");
  const auto d = dir.write("d.json", R"({"gram": [[1, 0], [0, -1]], "symmetry": "symmetric"})");
  const auto one = dir.write("one.json", R"({"gram": [[1]], "symmetry": "symmetric"})");
  const auto three = dir.write("three.json", R"({"gram": [[3]], "symmetry": "symmetric"})");
  const CliRun yes = run_cli("equivalent " + h + " " + d);
  EXPECT_EQ(yes.code, 0) << yes.out;
  EXPECT_TRUE(Json::parse(yes.out)["equivalent"].get<bool>());
  const CliRun no = run_cli("equivalent " + one + " " + three);
  EXPECT_EQ(no.code, 2) << no.out;
  const Json j = Json::parse(no.out);
  EXPECT_FALSE(j["equivalent"].get<bool>());
  EXPECT_FALSE(j["by_hasse"].get<bool>());
}

TEST(Cli, MalformedInputExitsWithOne) {
  TempDir dir;
  const auto bad = dir.write("bad.json", R"({"gram": [[1, 2], [2, "x"]], "symmetry": "symmetric"})");
  const CliRun r = run_cli("invariants " + bad);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("schema error"), std::string::npos) << r.out;
  const CliRun missing = run_cli("invariants " + dir.write("empty.json", "{"));
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(run_cli("no-such-command").code, 1);
}

TEST(Cli, PaperExamplesAndEpsilon) {
  const CliRun pe = run_cli("paper-examples");
  ASSERT_EQ(pe.code, 0) << pe.out;
  const Json j = Json::parse(pe.out);
  EXPECT_TRUE(j["all_verdicts"].get<bool>());
  EXPECT_EQ(j["isolated_point"].size(), 3u);
  const CliRun eps = run_cli("epsilon 3");
  ASSERT_EQ(eps.code, 0);
  EXPECT_EQ(Json::parse(eps.out)["epsilon"], 1);
  const CliRun text = run_cli("--format text epsilon 2");
  EXPECT_NE(text.out.find("epsilon: -1"), std::string::npos) << text.out;
}

TEST(Cli, PropertiesSuiteSelection) {
  const CliRun r = run_cli("properties --suite skew_vanishing --cases 20");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["suites"].size(), 1u);
  EXPECT_EQ(j["suites"][0]["cases"], 20);
  EXPECT_EQ(run_cli("properties --suite nonexistent").code, 1);
}
