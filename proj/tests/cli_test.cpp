#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jlint/cli.hpp"
#include "jlint/series.hpp"
#include "test_support.hpp"

using namespace jlint;
using jlint::testing::Q;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("jlint_cli_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("jones") {
  CHECK(first_line(run({"jones", "--corpus", "trefoil_left"}).out) == "-t^4+t^3+t");
  CHECK(first_line(run({"jones", "--corpus", "unknot"}).out) == "1");
  CHECK(first_line(run({"jones", "--corpus", "trefoil_left", "--convention", "invert"}).out) == "-t^4+t^3+t");
  CHECK(first_line(run({"jones", "--corpus", "trefoil_left", "--convention", "plain"}).out) ==
        "t^{-1}+t^{-3}-t^{-4}");

  const auto bad = write_temp("bad.pd", "X 1 2 3\n");
  const auto r = run({"jones", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("MALFORMED_LINE") != std::string::npos);

  const auto missing = run({"jones", "/nonexistent/dir/none.pd"});
  CHECK(missing.code == 1);
}

TEST_CASE("file input") {
  const auto path = write_temp("trefoil.pd", "# left trefoil\nX 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n");
  const auto r = run({"phi", path.string()});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "-t^4+t^3+t-1");
}

TEST_CASE("phi") {
  CHECK(first_line(run({"phi", "--corpus", "whitehead", "--class", "brunnian"}).out) ==
        "-t^3+3t^2-4t+5+t^{-1}-8(t+1)^{-1}");
  CHECK(first_line(run({"phi", "--corpus", "whitehead"}).out) == "-t^3+3t^2-4t+5+t^{-1}-8(t+1)^{-1}");
  CHECK(first_line(run({"phi", "--corpus", "trefoil_left"}).out) == "-t^4+t^3+t-1");
  CHECK(first_line(run({"phi", "--corpus", "unknot"}).out) == "1");

  const auto hopf = run({"phi", "--corpus", "hopf_pos"});
  CHECK(hopf.code == 1);
  CHECK(hopf.err.find("CLASS_UNSUPPORTED") != std::string::npos);
  CHECK(run({"phi", "--corpus", "whitehead", "--class", "knot"}).code == 1);

  const auto j = nlohmann::json::parse(run({"phi", "--corpus", "borromean", "--format", "json"}).out);
  CHECK(j.at("mu") == 3);
  CHECK(j.at("phi") == "-t^2+5t-12+5t^{-1}-t^{-2}+16(t+1)^{-1}-16(t+1)^{-2}");
}

TEST_CASE("expand") {
  CHECK(first_line(run({"expand", "--corpus", "trefoil_left", "--order", "5"}).out) == "0,0,-3,-3,-1,0");
  CHECK(first_line(run({"expand", "--corpus", "whitehead", "--order", "5"}).out) == "0,0,0,-3/2,3/4,-7/8");

  const auto csv = run({"expand", "--corpus", "whitehead", "--order", "4", "--format", "csv"}).out;
  CHECK(csv == "index,value,v2,v3\n0,0,inf,inf\n1,0,inf,inf\n2,0,inf,inf\n3,-3/2,-1,1\n4,3/4,-2,1\n");

  const auto default_order = run({"expand", "--corpus", "whitehead", "--format", "json"});
  const auto s = SeriesAtOne::from_json(nlohmann::json::parse(default_order.out));
  CHECK(s.order() == 40);
  for (unsigned long n = 0; n <= 40; ++n) REQUIRE(s[n] == whitehead_closed_form(n));

  CHECK(run({"expand", "--corpus", "hopf_pos"}).code == 1);
  CHECK(run({"expand", "--corpus", "trefoil_left", "--format", "xml"}).code == 1);
}

TEST_CASE("check") {
  const auto conj = run({"check", "conj41", "--corpus", "whitehead", "-n", "3", "--format", "json"});
  CHECK(conj.code == 2);
  const auto cj = nlohmann::json::parse(conj.out);
  CHECK(Q(cj.at("value").get<std::string>()) == -21);
  CHECK(cj.at("in_6Z") == false);

  const auto seven = nlohmann::json::parse(run({"check", "conj41", "--corpus", "whitehead", "-n", "7", "--format",
                                                "json"}).out);
  CHECK(Q(seven.at("value").get<std::string>()) == Q("-40005/2"));

  CHECK(run({"check", "conj41", "--corpus", "trefoil_left", "-n", "1"}).code == 0);

  const auto prop2 = run({"check", "prop2", "--corpus", "borromean", "--order", "30", "--format", "json"});
  CHECK(prop2.code == 0);
  const auto pj = nlohmann::json::parse(prop2.out);
  CHECK(pj.at("verdict") == "pass");
  CHECK(pj.at("entries").size() == 31);

  const auto prop1 = run({"check", "prop1", "--corpus", "trefoil_left", "--gsl-power", "2", "--format", "json"});
  CHECK(prop1.code == 2);
  const auto p1 = nlohmann::json::parse(prop1.out);
  CHECK(p1.at("verdict") == "flagged");
  CHECK(p1.at("entries").at(6).at("a") == "15");
  CHECK(p1.at("entries").at(6).at("flag") == "boundary-probe");

  CHECK(run({"check", "prop1", "--corpus", "trefoil_left", "--gsl-power", "3"}).code == 0);
  CHECK(run({"check", "prop1", "--corpus", "whitehead"}).code == 1);
  CHECK(run({"check", "eq1", "--corpus", "borromean"}).code == 0);
  CHECK(run({"check", "eq1", "--corpus", "whitehead"}).code == 0);
  CHECK(run({"check", "nosuch", "--corpus", "whitehead"}).code == 1);
}

TEST_CASE("csv report rows carry index, value, v2, v3") {
  const auto r = run({"check", "prop1", "--corpus", "trefoil_left", "--gsl-power", "2", "--format", "csv"});
  CHECK(r.code == 2);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "index,value,v2,v3");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() > 6);
  CHECK(rows[6] == "6,15,0,1");
}

TEST_CASE("corpus") {
  const auto list = run({"corpus", "list"});
  CHECK(list.code == 0);
  CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 7);

  const auto show = run({"corpus", "show", "whitehead"});
  CHECK(show.code == 0);
  CHECK(show.out.find("mu=2") != std::string::npos);
  CHECK(show.out.find("ASL") != std::string::npos);
  CHECK(show.out.find("X 6 1 7 2") != std::string::npos);

  const auto missing = run({"corpus", "show", "nosuch"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("UNKNOWN_NAME") != std::string::npos);
}

TEST_CASE("usage errors and determinism") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"jones"}).code == 1);
  CHECK(run({"jones", "--corpus", "nosuch"}).code == 1);
  const std::vector<std::string> args{"check", "prop2", "--corpus", "whitehead", "--order", "30", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("JSON rationals round-trip") {
  const auto j = nlohmann::json::parse(run({"check", "prop2", "--corpus", "whitehead", "--order", "30",
                                            "--format", "json"}).out);
  for (const auto& e : j.at("entries")) {
    const auto n = e.at("i").get<unsigned long>();
    const auto a = Q(e.at("a").get<std::string>());
    REQUIRE(a == whitehead_closed_form(n));
    REQUIRE(a.to_string() == e.at("a").get<std::string>());
  }
}
