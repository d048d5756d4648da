#include <doctest.h>

#include "jlint/corpus.hpp"
#include "jlint/error.hpp"
#include "jlint/integrality.hpp"
#include "jlint/jones.hpp"
#include "jlint/phi.hpp"
#include "test_support.hpp"

using namespace jlint;
using jlint::testing::P;
using jlint::testing::Q;
using jlint::testing::S;

namespace {

constexpr ConventionBundle kInvert{true};

PhiResult knot(std::string_view name) { return phi_knot(builtin_corpus(name), kInvert); }
PhiResult brunnian(std::string_view name) { return phi_brunnian(builtin_corpus(name), kInvert); }

PhiResult gsl(std::initializer_list<std::string_view> names) {
  std::vector<LinkDiagram> pieces;
  for (auto n : names) pieces.push_back(builtin_corpus(n));
  return phi_gsl(pieces, kInvert);
}

PhiResult whitehead_closed() {
  // -t^3+3t^2-4t+5+t^{-1} - 8/(t+1) over the common denominator t+1.
  const auto t1 = QuarterLaurent::t_plus_one();
  return PhiResult{P("-t^3+3t^2-4t+5+t^{-1}") * t1 - 8, t1, 2, LinkClass::BrunnianDeclared};
}

}  // namespace

TEST_CASE("phi_trivial") {
  for (std::size_t mu : {0UL, 1UL, 5UL}) {
    const auto p = phi_trivial(mu);
    CHECK(p.as_laurent() == QuarterLaurent(1));
    CHECK(p.mu == mu);
    CHECK(p.to_string() == "1");
  }
}

TEST_CASE("phi_knot") {
  CHECK(knot("trefoil_left").as_laurent() == P("-t^4+t^3+t-1"));
  CHECK(knot("trefoil_left").to_string() == "-t^4+t^3+t-1");
  CHECK(knot("figure8").as_laurent() == P("t^2-t-t^{-1}+t^{-2}"));
  CHECK(knot("unknot").as_laurent() == QuarterLaurent(1));
  CHECK(knot("trefoil_left").link_class == LinkClass::Knot);
  CHECK_THROWS_AS(static_cast<void>(knot("whitehead")), Error);
}

TEST_CASE("phi_brunnian") {
  const auto w = brunnian("whitehead");
  CHECK(w.same_function(whitehead_closed()));
  CHECK(w.to_string() == "-t^3+3t^2-4t+5+t^{-1}-8(t+1)^{-1}");
  CHECK(w.mu == 2);
  CHECK(phi_series(w, 3)[3] == Q("-3/2"));

  const auto b = brunnian("borromean");
  CHECK(b.to_string() == "-t^2+5t-12+5t^{-1}-t^{-2}+16(t+1)^{-1}-16(t+1)^{-2}");
  const auto t1 = QuarterLaurent::t_plus_one();
  const auto tm1 = P("t-1");
  CHECK(b.same_function(PhiResult{-pow(tm1, 4) * P("t^2+t+1"), P("t^2") * pow(t1, 2), 3, LinkClass::Gsl}));
  CHECK(phi_series(b, 12) == S({"0", "0", "0", "0", "-3/4", "3/2", "-37/16", "51/16", "-263/64", "81/16",
                                "-1545/256", "1797/256", "-8203/1024"}));

  CHECK(phi_brunnian(LinkDiagram::parse("U\nU"), kInvert).as_laurent() == QuarterLaurent(1));
  try {
    static_cast<void>(brunnian("trefoil_left"));
    FAIL("expected NotMultiComponent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMultiComponent);
  }
}

TEST_CASE("phi_brunnian at mu = 1 reduces to phi_knot's formula") {
  // (-1)^0 V / delta^0 - 1 = V - 1.
  CHECK(knot("figure8").as_laurent() == jones_reduced(builtin_corpus("figure8"), kInvert) - 1);
}

TEST_CASE("phi_gsl") {
  CHECK(gsl({"trefoil_left", "trefoil_left"}).as_laurent() == pow(P("-t^4+t^3+t-1"), 2));
  CHECK(gsl({"trefoil_left", "unknot"}).as_laurent() == P("-t^4+t^3+t-1"));
  CHECK(gsl({}).as_laurent() == QuarterLaurent(1));
  const auto s = phi_series(gsl({"trefoil_left", "trefoil_left"}), 8);
  CHECK(s == S({"0", "0", "0", "0", "9", "18", "15", "6", "1"}));
  CHECK(gsl({"whitehead", "trefoil_left"}).same_function(
      PhiResult{whitehead_closed().num * P("-t^4+t^3+t-1"), QuarterLaurent::t_plus_one(), 3, LinkClass::Gsl}));
}

TEST_CASE("phi_series examples") {
  CHECK(phi_series(knot("trefoil_left"), 5) == S({"0", "0", "-3", "-3", "-1", "0"}));
  CHECK(phi_series(brunnian("whitehead"), 5) == S({"0", "0", "0", "-3/2", "3/4", "-7/8"}));
  CHECK(phi_series(phi_trivial(3), 3) == S({"1", "0", "0", "0"}));
  CHECK(phi_series(knot("figure8"), 8) == S({"0", "0", "3", "-3", "4", "-5", "6", "-7", "8"}));
}

TEST_CASE("phi_n") {
  const auto w = phi_series(brunnian("whitehead"), 12);
  CHECK(phi_n(w, 2, 3) == Q("-7/2"));
  CHECK(6 * phi_n(w, 2, 3) == -21);
  CHECK(phi_n(w, 2, 7) == Q("-127/32"));
  CHECK(phi_n(phi_series(knot("trefoil_left"), 5), 1, 1) == 6);
  CHECK_THROWS_AS(static_cast<void>(phi_n(w, 2, 11)), Error);
}

TEST_CASE("classify") {
  CHECK(classify(builtin_corpus("trefoil_left")) == LinkClass::Knot);
  CHECK(classify(builtin_corpus("hopf_pos")) == LinkClass::General);
  CHECK(classify(builtin_corpus("whitehead")) == LinkClass::Asl);
  CHECK(classify(builtin_corpus("borromean")) == LinkClass::Asl);
  CHECK(classify(disjoint_union(builtin_corpus("figure8"), builtin_corpus("trefoil_left"))) == LinkClass::Gsl);
  CHECK(to_string(LinkClass::BrunnianDeclared) == "BRUNNIAN_DECLARED");
}

TEST_CASE("invariant: series of a product is the product of series") {
  const std::vector<std::string_view> names{"unknot", "trefoil_left", "trefoil_right", "figure8", "whitehead",
                                            "borromean"};
  for (auto a : names)
    for (auto b : names) {
      CAPTURE(a);
      CAPTURE(b);
      REQUIRE(phi_series(gsl({a, b}), 20) == phi_series(gsl({a}), 20) * phi_series(gsl({b}), 20));
    }
}

TEST_CASE("invariant: a_i = 0 for i <= mu on the corpus") {
  CHECK(check_eq1_vanishing(phi_series(brunnian("whitehead"), 10), 2));
  CHECK(check_eq1_vanishing(phi_series(brunnian("borromean"), 10), 3));
  for (auto k : {"trefoil_left", "trefoil_right", "figure8"}) {
    CAPTURE(k);
    const auto phi = knot(k);
    CHECK(phi.as_laurent()->evaluate_at_one() == 0);
    CHECK(check_eq1_vanishing(phi_series(phi, 10), 1));
  }
}

TEST_CASE("invariant: knots have integer Laurent Phi with a_2, a_3 in 3Z") {
  for (auto k : {"trefoil_left", "trefoil_right", "figure8"}) {
    CAPTURE(k);
    const auto phi = knot(k);
    REQUIRE(phi.as_laurent().has_value());
    CHECK(phi.as_laurent()->has_integer_coefficients());
    CHECK(phi.as_laurent()->is_integer_grid());
    const auto s = phi_series(phi, 30);
    CHECK(s.all_integer());
    CHECK(in_p_power_lattice(s[2], 3, 1));
    CHECK(in_p_power_lattice(s[3], 3, 1));
  }
}

TEST_CASE("invariant: products of k nontrivial knots vanish below degree 2k") {
  const std::vector<std::string_view> knots{"trefoil_left", "trefoil_right", "figure8"};
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t start = 0; start < knots.size(); ++start) {
      std::vector<LinkDiagram> pieces;
      for (std::size_t j = 0; j < k; ++j) pieces.push_back(builtin_corpus(knots[(start + j) % knots.size()]));
      const auto s = phi_series(phi_gsl(pieces, kInvert), 4 * k);
      for (std::size_t i = 0; i < 2 * k; ++i) REQUIRE(s[i] == 0);
      REQUIRE(s[2 * k] != 0);
    }
  }
}
