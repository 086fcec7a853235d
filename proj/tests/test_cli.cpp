#include <doctest.h>

#include <json.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "thinbase/cli.hpp"
#include "thinbase/io.hpp"

using namespace thinbase;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_real") {
  CHECK(cli::parse_real("1.5") == 1.5);
  CHECK(cli::parse_real("2/sqrt3") == doctest::Approx(2 / std::sqrt(3.0)));
  CHECK(cli::parse_real("2*sqrt2") == doctest::Approx(2 * std::sqrt(2.0)));
  CHECK(cli::parse_real("sqrt(2)") == doctest::Approx(std::sqrt(2.0)));
  CHECK(cli::parse_real("7/(2 sqrt3)") == doctest::Approx(7 / (2 * std::sqrt(3.0))));
  CHECK(cli::parse_real("-pi/2") == doctest::Approx(-std::numbers::pi / 2));
  CHECK(cli::parse_real("1e-3") == doctest::Approx(0.001));
  CHECK_THROWS_AS(cli::parse_real("2/"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_real("abc"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_real("1/0"), std::invalid_argument);
}

TEST_CASE("build-mrose emits a valid labelling") {
  const auto r = run({"magic", "build-mrose", "--t", "2"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["n"] == 18);
  CHECK(j["edges"].size() == 57);
  CHECK(j["mode"] == "bijective");
}

TEST_CASE("verify round-trips and names a duplicated label") {
  const auto built = run({"magic", "build-mrose", "--t", "1"});
  const auto ok = run({"magic", "verify", "--file", "-"}, built.out);
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["valid"] == true);

  auto j = json::parse(built.out);
  j["edge_labels"][0] = j["vertex_labels"][2];
  const auto bad = run({"magic", "verify", "--file", "-"}, j.dump());
  CHECK(bad.code == 1);
  CHECK(bad.err.find("duplicated label") != std::string::npos);
  CHECK(json::parse(bad.out)["valid"] == false);

  const auto padded = run({"magic", "pad", "--file", "-"}, built.out);
  CHECK(padded.code == 0);
  CHECK(json::parse(padded.out)["n"] == 12);
  CHECK(run({"magic", "verify", "--file", "-"}, padded.out).code == 0);
}

TEST_CASE("usage errors exit 2 without payload") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"construct"},
           {"construct", "mrose"},
           {"construct", "mrose", "--t", "0"},
           {"construct", "mrose", "--t", "x"},
           {"construct", "bose-chowla", "--p", "9"},
           {"construct", "quasi-sidon-reflect", "--n", "100", "--c", "3"},
           {"construct", "diff-aps", "--n", "100", "--c", "2/"},
           {"magic", "search", "--n", "9"},
           {"magic", "verify", "--file", "-"},
           {"magic", "verify", "--file", "/nonexistent/file.json"},
           {"extremal", "s", "--k", "5", "--n", "3"},
           {"bounds", "curve", "--which", "x", "--min", "1", "--max", "2", "--step", "0.1"},
           {"bounds", "curve", "--which", "s-lower", "--min", "2", "--max", "1", "--step", "0.1"},
           {"bounds", "fourier", "--x", "1", "--terms", "1"},
           {"nonsense"}}) {
    const auto r = run(args, "{\"mode\": \"bijective\"}");
    INFO(args.size());
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("infeasible exits 3") {
  const auto r = run({"construct", "quasi-sidon-aps", "--n", "100", "--c", "0.2"});
  CHECK(r.code == 3);
  CHECK(r.out.empty());
}

TEST_CASE("help on every subcommand exits 0") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--help"},
           {"construct", "--help"},
           {"construct", "diff-aps", "--help"},
           {"magic", "search", "--help"},
           {"extremal", "table", "--help"},
           {"bounds", "curve", "--help"}}) {
    const auto r = run(args);
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
  }
}

TEST_CASE("construct outputs") {
  const auto plain = run({"construct", "mrose", "--t", "1"});
  CHECK(plain.code == 0);
  CHECK(plain.out == "0 1 2 3 4 5 10 11 17 18\n");
  const auto j = json::parse(run({"construct", "rohrbach", "--r", "2", "--json"}).out);
  CHECK(j["set"] == json({0, 1, 2, 4, 6, 7, 8}));
  CHECK(j["cardinality"] == 7);
  CHECK(j["sumset_size"] == 17);
  CHECK(j["checks"].is_array());
  const auto q = json::parse(
      run({"construct", "quasi-sidon-aps", "--n", "10000", "--c", "2*sqrt2", "--json"}).out);
  CHECK(q["params"]["n"] == 10000);
}

TEST_CASE("randomized and parallel commands are deterministic") {
  const std::vector<std::string> rnd = {"construct", "quasi-sidon-reflect", "--n", "5000",
                                        "--c", "1.3", "--trials", "7", "--seed", "99", "--json"};
  CHECK(run(rnd).out == run(rnd).out);
  const auto a = run({"extremal", "table", "--max-n", "9", "--threads", "1"});
  const auto b = run({"extremal", "table", "--max-n", "9", "--threads", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto m1 = run({"magic", "search", "--n", "5", "--threads", "1"});
  const auto m3 = run({"magic", "search", "--n", "5", "--threads", "3"});
  CHECK(m1.out == m3.out);
}

TEST_CASE("extremal and bounds payloads") {
  const auto s = run({"extremal", "s", "--k", "3", "--n", "5"});
  CHECK(s.out == "k,n,value,witness,nodes_explored\n3,5,6,1;2;4,3\n");
  const auto table = run({"extremal", "table", "--max-n", "3", "--which", "d"});
  CHECK(table.out.rfind("function,k,n,value,witness,nodes_explored\nd,1,1,1,1,1\n", 0) == 0);

  const auto curve = run({"bounds", "curve", "--which", "s-lower", "--min", "0.5", "--max", "3",
                          "--step", "0.01"});
  CHECK(curve.code == 0);
  std::istringstream lines(curve.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "c,y,formula_id");
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 251);

  const auto c = json::parse(run({"bounds", "constants"}).out);
  CHECK(c["constants"]["wood_coeff"].get<std::string>().rfind("2.380", 0) == 0);
  const auto fx = json::parse(run({"bounds", "fourier", "--x", "pi/2", "--terms", "100"}).out);
  CHECK(fx["error"].get<double>() < 0.05);

  const auto disc = json::parse(run({"extremal", "discrepancy", "--p", "31", "--m", "2"}).out);
  CHECK(disc["n"] == 960);
  CHECK(disc["normalized_error"].get<double>() < 0.5);
}

TEST_CASE("labelling JSON round trip") {
  magic::MagicLabelling l;
  l.mode = magic::Mode::Injection;
  l.n = 3;
  l.magic_sum = 20;
  l.vertex_labels = {1, 2, 4};
  l.edges = {{0, 1}, {1, 2}};
  l.edge_labels = {17, 14};
  CHECK(io::labelling_from_json(io::to_json(l)) == l);
  CHECK_THROWS_AS(io::labelling_from_json(json{{"mode", "bijective"}}), std::invalid_argument);
  CHECK_THROWS_AS(io::labelling_from_json(json{{"mode", "odd"}}), std::invalid_argument);
  CHECK(io::intset_from_json(json({3, 1, 2})) == IntSet{1, 2, 3});
  CHECK_THROWS_AS(io::intset_from_json(json("x")), std::invalid_argument);
}
