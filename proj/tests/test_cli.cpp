#include <catch2/catch_amalgamated.hpp>

#include "agalg/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "agalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = agalg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kIdeal21 =
    "u=3,0,0,0|u=1,1,0,0|u=0,2,0,0|u=0,1,1,0|u=1,0,0,1|u=2,0,2,0|u=1,0,4,0|u=0,1,0,3|u=0,0,0,4";

}  // namespace

TEST_CASE("help and usage errors", "[cli]") {
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"graver"}).code == 2);
  CHECK(invoke({"graver", "--grading", "1,x,3"}).code == 2);
  CHECK(invoke({"fiber", "--grading", "1,2", "--degree", "1,2"}).code == 2);
  CHECK(invoke({"example", "no-such-example"}).code == 2);
  CHECK(invoke({"graver", "--grading", "1,2", "--format", "xml"}).code == 2);
}

TEST_CASE("graver table", "[cli]") {
  const auto r = invoke({"graver", "--grading", "1,3,4,7"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("0 0 7 0 | 0 0 0 4 | 28\n") != std::string::npos);
  CHECK(r.out.find("# 27 primitive binomials") != std::string::npos);
  const auto j = nlohmann::json::parse(invoke({"graver", "--grading", "1 3 4 7", "--format", "json"}).out);
  CHECK(j["binomials"].size() == 27);
  CHECK(j["certified"] == true);
}

TEST_CASE("coherence certificate output", "[cli]") {
  const auto r = invoke({"coherence", "--grading", "1,3,4,7", "--ideal", kIdeal21});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("incoherent") == 0);
  CHECK(r.out.find("2 x [degree 17] x2*x4^2 < x1*x3^4") != std::string::npos);
  CHECK(r.out.find("both sides: 2*w1 + 2*w2 + 8*w3 + 4*w4") != std::string::npos);

  const auto counts = invoke({"coherence", "--grading", "1,3,4,7"});
  CHECK(counts.out == "[1347]\t27\t53\t2\n");

  const auto json = nlohmann::json::parse(
      invoke({"coherence", "--grading", "1,3,4,7", "--ideal", kIdeal21, "--format", "json"}).out);
  CHECK(json["coherent"] == false);
  CHECK(json["certificate"].size() == 3);

  const auto coherent = invoke({"coherence", "--grading", "2,3", "--ideal", "u=3,0", "--format", "json"});
  REQUIRE(coherent.code == 0);
  const auto cj = nlohmann::json::parse(coherent.out);
  CHECK(cj["coherent"] == true);
  CHECK(cj["omega"].size() == 2);
}

TEST_CASE("domain rejections exit with 1", "[cli]") {
  const std::vector<std::string> cubic{"--grading", "3,2,1,0;0,1,2,3", "--ideal", "u=1,0,0,1|u=0,2,0,0|u=0,0,2,0"};
  for (const std::string cmd : {"radical", "subdivision", "coherence"}) {
    std::vector<std::string> args{cmd};
    args.insert(args.end(), cubic.begin(), cubic.end());
    INFO(cmd);
    CHECK(invoke(args).code == 1);
  }
  const auto h = invoke({"hilbert", "--grading", "3,2,1,0;0,1,2,3", "--ideal", "u=1,0,0,1|u=0,2,0,0|u=0,0,2,0"});
  CHECK(h.code == 0);
  CHECK(h.out.find("A-graded: false") != std::string::npos);
  CHECK(h.out.find("witness: degree 4 5, 0 standard monomials") != std::string::npos);
  CHECK(invoke({"scheme", "--grading", "2,3", "--radius", "1", "--ideal", "u=0,2|u=3,0"}).code == 1);
  CHECK(invoke({"invariants", "--grading", "2,3", "--ideal", "u=1,0 v=0,1"}).code == 2);
}

TEST_CASE("ideal files in both formats", "[cli]") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto text = dir / "agalg_test_ideal.txt";
  const auto json = dir / "agalg_test_ideal.json";
  std::ofstream(text) << "# family member\nu=2,0,1,0 v=0,2,0,0 c=2\nu=1,0,4,0 v=0,1,0,2 c=3\n"
                         "u=0,0,7,0 v=0,0,0,4 c=5\n";
  std::ofstream(json) << R"([{"u":[2,0,1,0],"v":[0,2,0,0],"c":"2"},{"u":[1,0,4,0],"v":[0,1,0,2],"c":3},)"
                         R"({"u":[0,0,7,0],"v":[0,0,0,4],"c":"5"}])";
  const auto a = invoke({"invariants", "--grading", "1,3,4,7", "--ideal", text.string()});
  const auto b = invoke({"invariants", "--grading", "1,3,4,7", "--ideal", json.string()});
  CHECK(a.code == 0);
  CHECK(a.out == "(1,-2,1)\t10/9\n");
  CHECK(a.out == b.out);
  std::filesystem::remove(text);
  std::filesystem::remove(json);
}

TEST_CASE("hilbert numerator lines", "[cli]") {
  const auto r = invoke({"hilbert", "--grading", "2,3", "--ideal", "u=3,0"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "1 @ 0\n-1 @ 6\nA-graded: true\n");
}

TEST_CASE("named examples", "[cli]") {
  const auto r = invoke({"example", "ex3.5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("unique primitive binomial of degree 138; edge test: false; Gröbner degree: false") !=
        std::string::npos);
  const auto t = invoke({"example", "thm3.3"});
  CHECK(t.code == 0);
  CHECK(t.out.find("(2,1,1,0,0) standard, vertex: false") != std::string::npos);
  const auto alias = invoke({"example", "thm2.1"});
  CHECK(alias.code == 0);
  CHECK(alias.out.find("== thm2.1a") == 0);
  const auto list = invoke({"example", "list"});
  CHECK(list.out.find("remark5.5-equivariance") != std::string::npos);
}

TEST_CASE("conjecture scans", "[cli]") {
  const auto empty = invoke({"conjecture-scan", "--kind", "coherence-nd2", "--max-entry", "1", "--format", "json"});
  CHECK(empty.code == 0);
  const auto j = nlohmann::json::parse(empty.out);
  CHECK(j["sets"] == 0);
  CHECK(j["findings"].empty());
  const auto small = invoke({"conjecture-scan", "--kind", "coherence-nd2", "--max-entry", "6"});
  CHECK(small.code == 0);
  CHECK(small.out.find("0 sets with incoherent members") != std::string::npos);
  const auto real = invoke({"conjecture-scan", "--kind", "subdivision-realization", "--grading", "2,3"});
  CHECK(real.out == "{1}\trealized by 1 radicals\n{2}\trealized by 1 radicals\n{1,2}\tnot realized\n");
  CHECK(invoke({"conjecture-scan", "--kind", "bogus"}).code == 2);
}

TEST_CASE("outputs do not depend on the thread count", "[cli]") {
  const auto a = invoke({"table1", "--max-entry", "6", "--all", "--threads", "1"});
  const auto b = invoke({"table1", "--max-entry", "6", "--all", "--threads", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 15);
}

TEST_CASE("scheme and fiber output", "[cli]") {
  const auto s = invoke({"scheme", "--grading", "2,3", "--bound", "2"});
  CHECK(s.out == "radius 2: 4 equations\n");
  CHECK(invoke({"scheme", "--grading", "2,3", "--radius", "1"}).out ==
        "radius 1: 0 equations (below the primitive-degree radius 2)\n");
  const auto f = invoke({"fiber", "--grading", "3,4,5,13,14", "--degree", "15"});
  CHECK(f.out == "0 0 3 0 0\tvertex\n1 3 0 0 0\tvertex\n2 1 1 0 0\n5 0 0 0 0\tvertex\n");
  const auto gb = invoke({"gb", "--grading", "2,3"});
  CHECK(gb.out == "x1^3 - x2^2\n");
  const auto init = invoke({"initial", "--grading", "2,3", "--weight", "0,1"});
  CHECK(init.out == "x2^2\n");
}
