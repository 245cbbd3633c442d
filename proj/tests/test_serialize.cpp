#include "vfilt/serialize.hpp"

#include <doctest.h>

using namespace vfilt;

namespace {

State st(std::vector<int> parts, int lpoint = 0, Scalar c = 1) { return State(Monomial{std::move(parts), lpoint}, c); }

}  // namespace

TEST_CASE("coefficients") {
  CHECK(coefficient_to_string(Scalar(3)) == "3/1");
  CHECK(coefficient_to_string(Scalar(-6) / 4) == "-3/2");
  CHECK(coefficient_from_string("-3/2") == Scalar(-3) / 2);
  CHECK(coefficient_from_string("4/6") == Scalar(2) / 3);
  CHECK(coefficient_from_string("7") == 7);
  const Scalar huge = Scalar(mpz_class("123456789012345678901234567890")) / mpz_class("98765432109876543210987");
  CHECK(coefficient_from_string(coefficient_to_string(huge)) == huge);
  for (const char* bad : {"", "1/0", "a/2", "1/-2", "1.5", "/3", "2/", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(coefficient_from_string(bad), std::invalid_argument);
  }
}

TEST_CASE("state round trip") {
  const AlgebraPreset l = AlgebraPreset::lattice(2);
  const State s = st({3, 1}, 1, Scalar(-2) / 7) + st({}, -1, Scalar(5)) + st({1, 1, 1}, 0, Scalar(1) / 3);
  const Json j = state_to_json(l, s);
  CHECK(j.at("preset") == Json{{"kind", "lattice"}, {"gram", 2}});
  const std::string text = j.dump();
  const TaggedState back = state_from_json(Json::parse(text));
  CHECK(back.preset == l);
  CHECK(back.state == s);
  CHECK(state_to_json(back.preset, back.state).dump() == text);

  // terms come out in the global monomial order
  const Json& terms = j.at("terms");
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].at("lpoint") == 0);
  CHECK(terms[0].at("coef") == "1/3");

  const State zero;
  CHECK(state_from_json(state_to_json(AlgebraPreset::heisenberg(), zero)).state.is_zero());
}

TEST_CASE("state parsing") {
  auto parse = [](const char* text) { return state_from_json(Json::parse(text)); };
  auto dup = parse(R"({"preset":{"kind":"heisenberg"},"terms":[{"hpart":[2,1],"lpoint":0,"coef":"1/2"},
                      {"hpart":[2,1],"lpoint":0,"coef":"1/2"},{"hpart":[1],"coef":"3"},{"hpart":[1],"coef":"-3/1"}]})");
  CHECK(dup.state == st({2, 1}));
  CHECK(parse(R"({"preset":"lattice:4","terms":[]})").preset == AlgebraPreset::lattice(4));
  for (const char* bad : {
           R"({"preset":{"kind":"heisenberg"},"terms":[{"hpart":[1,2],"lpoint":0,"coef":"1/1"}]})",
           R"({"preset":{"kind":"heisenberg"},"terms":[{"hpart":[0],"lpoint":0,"coef":"1/1"}]})",
           R"({"preset":{"kind":"heisenberg"},"terms":[{"hpart":[],"lpoint":1,"coef":"1/1"}]})",
           R"({"preset":{"kind":"heisenberg"},"terms":[{"hpart":[1],"lpoint":0,"coef":1}]})",
           R"({"preset":{"kind":"lattice","gram":3},"terms":[]})",
           R"({"preset":{"kind":"torus"},"terms":[]})",
           R"({"preset":{"kind":"heisenberg"}})",
           R"([1,2])",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse(bad), std::invalid_argument);
  }
}

TEST_CASE("generator sets") {
  const AlgebraPreset h = AlgebraPreset::heisenberg();
  Json list = Json::array({state_to_json(h, st({1})), state_to_json(h, st({2}) + st({1, 1}, 0, 3))});
  auto g = generators_from_json(list, h);
  REQUIRE(g.vectors.size() == 2);
  CHECK(g.vectors[1] == st({2}) + st({1, 1}, 0, 3));
  CHECK_FALSE(g.order);
  auto ordered = generators_from_json(Json{{"vectors", list}, {"order", {1, 0}}}, h);
  CHECK(ordered.order == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(generators_from_json(Json{{"vectors", list}, {"order", {0}}}, h), std::invalid_argument);
  CHECK_THROWS_AS(generators_from_json(list, AlgebraPreset::lattice(2)), std::invalid_argument);
}

TEST_CASE("filtration table formats") {
  FiltrationEngine h(AlgebraPreset::heisenberg(), 4);
  const FiltrationTable t = filtration_table(h, Family::C, 3);
  CHECK(table_to_csv(t) ==
        "quantity,n,0,1,2,3,4\n"
        "ambient,,1,1,2,3,5\n"
        "dim,2,0,0,1,2,4\n"
        "quotient,2,1,1,1,1,1\n"
        "dim,3,0,0,0,1,3\n"
        "quotient,3,1,1,2,2,2\n");
  const Json j = table_to_json(t);
  CHECK(j.at("preset") == Json{{"kind", "heisenberg"}});
  CHECK(j.at("family") == "C");
  CHECK(j.at("cutoff") == 4);
  CHECK(j.at("window").is_null());
  CHECK(j.at("rows")[0].at("quotients") == Json{1, 1, 1, 1, 1});
  CHECK(table_to_markdown(t).find("| 2 | 0 / 1 | 0 / 1 | 1 / 1 |") != std::string::npos);
}

TEST_CASE("report json") {
  VerificationReport r;
  r.pass("a", Json{{"w", 1}});
  r.fail("b", Json{{"w", 2}}, st({1, 1}, 0, Scalar(1) / 2), "why");
  r.skip("c", Json::object(), "vacuous");
  const Json j = report_to_json(r, AlgebraPreset::heisenberg(), Json{{"seed", 7}});
  CHECK(j.begin().key() == "schema_version");
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("summary") == Json{{"pass", 1}, {"fail", 1}, {"skipped", 1}});
  const Json& checks = j.at("checks");
  REQUIRE(checks.size() == 3);
  CHECK(checks[0].at("status") == "pass");
  CHECK_FALSE(checks[0].contains("witness"));
  CHECK(state_from_json(checks[1].at("witness")).state == st({1, 1}, 0, Scalar(1) / 2));
  CHECK(checks[2].at("note") == "vacuous");
  const std::string md = report_to_markdown(j);
  CHECK(md.find("1 pass, 1 fail, 1 skipped") != std::string::npos);
  CHECK(md.find("| fail | b |") != std::string::npos);
}
