#include <doctest.h>

#include "ctx/error.hpp"
#include "support.hpp"

using namespace ctx;

namespace {

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_system(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("document parsed unexpectedly");
  return ErrorKind::Domain;
}

std::string parse_error_message(const std::string& text) {
  try {
    parse_system(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

const char* kHeader = R"({"contents": ["q1", "q2"], "contexts": [)";

}  // namespace

TEST_CASE("R4 fixture parses with eight membership pairs") {
  const auto sys = test::load_fixture("r4_contextual.json");
  CHECK(sys.contents.size() == 4);
  CHECK(sys.contexts.size() == 4);
  CHECK(sys.membership_count() == 8);
  CHECK(validate(sys).empty());
  CHECK(sys == test::r4({1, 1, 1, -1}));
}

TEST_CASE("smallest system: one context, one content") {
  const auto sys = test::load_fixture("single.json");
  CHECK(sys.contexts.size() == 1);
  CHECK(sys.contexts[0].joint == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK(validate(sys).empty());
}

TEST_CASE("a 9/8 total parses and is left to validate") {
  const auto sys = test::load_fixture("nine_eighths.json");
  CHECK(validate(sys).size() == 1);
}

TEST_CASE("unlisted assignments have probability zero") {
  const auto sys = test::load_fixture("r4_boundary.json");
  CHECK(sys.contexts[0].joint[1].is_zero());
  CHECK(sys.contexts[0].joint[2].is_zero());
}

TEST_CASE("parse errors") {
  SUBCASE("syntax error reports a position") {
    const auto msg = parse_error_message(test::read_file(test::fixture_path("malformed.json")));
    CHECK(msg.find("syntax error at byte") != std::string::npos);
  }
  SUBCASE("unknown content") {
    const std::string doc = std::string(kHeader) +
                            R"({"id": "c1", "variables": ["q1", "q9"], "joint": []}]})";
    CHECK(parse_error_kind(doc) == ErrorKind::Parse);
    CHECK(parse_error_message(doc).find("q9") != std::string::npos);
  }
  SUBCASE("duplicate context id") {
    const std::string doc = std::string(kHeader) +
                            R"({"id": "c1", "variables": ["q1"], "joint": [{"values": {"q1": 1}, "prob": "1"}]},
                               {"id": "c1", "variables": ["q2"], "joint": [{"values": {"q2": 1}, "prob": "1"}]}]})";
    CHECK(parse_error_message(doc).find("duplicate context id") != std::string::npos);
  }
  SUBCASE("malformed rational literal") {
    const std::string doc = std::string(kHeader) +
                            R"({"id": "c1", "variables": ["q1"], "joint": [{"values": {"q1": 1}, "prob": "0.5"}]}]})";
    CHECK(parse_error_message(doc).find("malformed rational") != std::string::npos);
  }
  SUBCASE("numeric probability is not a literal") {
    const std::string doc = std::string(kHeader) +
                            R"({"id": "c1", "variables": ["q1"], "joint": [{"values": {"q1": 1}, "prob": 1}]}]})";
    CHECK(parse_error_kind(doc) == ErrorKind::Parse);
  }
  SUBCASE("values must be +1 or -1") {
    const std::string doc = std::string(kHeader) +
                            R"({"id": "c1", "variables": ["q1"], "joint": [{"values": {"q1": 0}, "prob": "1"}]}]})";
    CHECK(parse_error_kind(doc) == ErrorKind::Parse);
  }
  SUBCASE("assignment listed twice") {
    const std::string doc = std::string(kHeader) +
                            R"({"id": "c1", "variables": ["q1"], "joint": [{"values": {"q1": 1}, "prob": "1/2"},
                                                                           {"values": {"q1": 1}, "prob": "1/2"}]}]})";
    CHECK(parse_error_message(doc).find("listed twice") != std::string::npos);
  }
  SUBCASE("assignment over the wrong variables") {
    const std::string doc = std::string(kHeader) +
                            R"({"id": "c1", "variables": ["q1"], "joint": [{"values": {"q2": 1}, "prob": "1"}]}]})";
    CHECK(parse_error_kind(doc) == ErrorKind::Parse);
  }
  SUBCASE("content repeated within a context") {
    const std::string doc = std::string(kHeader) + R"({"id": "c1", "variables": ["q1", "q1"], "joint": []}]})";
    CHECK(parse_error_kind(doc) == ErrorKind::Parse);
  }
  SUBCASE("unexpected key") {
    CHECK(parse_error_kind(R"({"contents": [], "contexts": [], "extra": 1})") == ErrorKind::Parse);
  }
  SUBCASE("not an object") { CHECK(parse_error_kind("[1, 2]") == ErrorKind::Parse); }
}

TEST_CASE("canonical serialization orders -1 before +1 and omits zeros") {
  const auto text = serialize_system(test::r4({0, 0, 0, 1}));
  const auto first_minus = text.find(R"("q1": -1)");
  const auto first_plus = text.find(R"("q1": 1)");
  REQUIRE(first_minus != std::string::npos);
  REQUIRE(first_plus != std::string::npos);
  CHECK(first_minus < first_plus);
  CHECK(text.find(R"("prob": "1/4")") != std::string::npos);
  CHECK(text.find(R"("prob": "0")") == std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("parse(serialize(sys)) == sys and serialization is a fixed point") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto sys = random_system(seed, CyclicShape{static_cast<int>(2 + seed % 5)}, seed % 3 != 0);
    const auto text = serialize_system(sys);
    const auto back = parse_system(text);
    CHECK(back == sys);
    CHECK(serialize_system(back) == text);
  }
  const auto fixture = test::load_fixture("r4_quantum.json");
  CHECK(parse_system(serialize_system(fixture)) == fixture);
}
