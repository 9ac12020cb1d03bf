#include <doctest.h>

#include <json.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cohere/cli.hpp"
#include "cohere/kb.hpp"
#include "support.hpp"

using namespace cohere;

namespace {

std::string data(const char* name) { return std::string(COHERE_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::pair<std::size_t, std::size_t> error_position(const std::string& text) {
  try {
    kb::parse_kb(text);
  } catch (const kb::KbError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("knowledge base lines") {
  const auto kb = kb::parse_kb(
      "# comment\n"
      "prop bird penguin\n"
      "assess \"bird | penguin\" = 1   # trailing\n"
      "prop e3\n"
      "assess \"e3 | true\" = 1/3\n"
      "default \"bird => ~penguin\"\n"
      "query \"penguin | bird\"\n");
  REQUIRE(kb.entries.size() == 3);
  const auto& v = kb.universe->vocabulary();
  CHECK(logic::to_string(kb.entries[0].entry.event, v) == "bird | penguin");
  CHECK(kb.entries[0].entry.value == 1);
  CHECK(kb.entries[1].entry.event.conditioning.op() == logic::Op::True);
  CHECK(kb.entries[1].entry.value == Rational(1, 3));
  CHECK(kb.entries[2].from_default);
  CHECK(kb.queries.size() == 1);
  const auto d = kb.default_kb();
  CHECK(d.rules().size() == 2);
  CHECK(d.extra().size() == 1);
}

TEST_CASE("knowledge base diagnostics carry line and column") {
  CHECK(error_position("prop x\nassess \"x | false\" = 1\n") == std::pair<std::size_t, std::size_t>{2, 9});
  CHECK(error_position("prop x\nassess \"x & | x\" = 1\n") == std::pair<std::size_t, std::size_t>{2, 13});
  CHECK(error_position("prop x\nassess \"x | x\" = 2\n") == std::pair<std::size_t, std::size_t>{2, 18});
  CHECK(error_position("prop x\nassess \"x | x\" 1\n") == std::pair<std::size_t, std::size_t>{2, 16});
  CHECK(error_position("prop x\nfrobnicate\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(error_position("prop x y\nassess \"x | y\" = 1/2\nassess \"x & y | y\" = 1/3\n") ==
        std::pair<std::size_t, std::size_t>{3, 9});
  CHECK(error_position("prop x\nassess \"x | x\" = alpha\n") == std::pair<std::size_t, std::size_t>{2, 18});
  CHECK(error_position("prop x\ndefault \"x\"\n") == std::pair<std::size_t, std::size_t>{2, 11});
  CHECK(error_position("prop v\n") == std::pair<std::size_t, std::size_t>{1, 6});
}

TEST_CASE("duplicate assessments with equal values collapse") {
  const auto kb = kb::parse_kb("prop x y\nassess \"x | y\" = 1/2\nassess \"x & y | y\" = 0.5\n");
  CHECK(kb.entries.size() == 1);
}

TEST_CASE("alpha binding: file default, command-line override") {
  const std::string text = "prop x\nparam alpha = 1/3\nassess \"x | true\" = alpha\n";
  CHECK(kb::parse_kb(text).entries[0].entry.value == Rational(1, 3));
  kb::Options o;
  o.alpha = Rational(1, 4);
  CHECK(kb::parse_kb(text, o).entries[0].entry.value == Rational(1, 4));
}

TEST_CASE("cli: corpus commands and exit codes") {
  auto t = run({"extend", data("tweety.kb"), "fly | tweety"});
  CHECK(t.code == 0);
  CHECK(t.out == "[0/1, 1/1]\n");

  auto e = run({"entails", data("two_defaults.kb"), "true => ~h1 & h2", "--alpha", "1/3"});
  CHECK(e.code == 1);
  CHECK(e.out == "NO; interval [2/3, 2/3]\n");

  auto y = run({"entails", data("tweety.kb"), "tweety => bird"});
  CHECK(y.code == 0);
  CHECK(y.out.rfind("YES", 0) == 0);

  auto c = run({"check", data("contraposition.kb")});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("COHERENT; layers: 2", 0) == 0);

  CHECK(run({"defaults", data("monotonicity.kb")}).code == 0);
  CHECK(run({"atoms", data("single_default.kb")}).code == 0);
  CHECK(run({"rules", data("tweety.kb"), "--schema", "cut", "--a", "tweety", "--b", "penguin", "--c", "bird"}).code == 0);
  CHECK(run({"rules", data("single_default.kb"), "--schema", "and", "--random", "30", "--seed", "4"}).code == 0);

  CHECK(run({"check", data("missing.kb")}).code == 2);
  CHECK(run({"rules", data("tweety.kb"), "--schema", "bogus", "--random", "3"}).code == 2);
  CHECK(run({"entails", data("tweety.kb"), "tweety => & fly"}).code == 2);
  CHECK(run({"check", data("tweety.kb"), "--max-props", "3"}).code == 2);
  CHECK(run({"check", data("tweety.kb"), "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("cli: incoherent knowledge base") {
  const std::string path = "cohere_test_incoherent.kb";
  {
    std::ofstream f(path);
    f << "prop a\nassess \"a | true\" = 1\nassess \"~a | true\" = 1\n";
  }
  CHECK(run({"check", path}).code == 1);
  CHECK(run({"extend", path, "a | a"}).code == 1);
  CHECK(run({"entails", path, "a => a"}).code == 2);
  CHECK(run({"defaults", path}).code == 1);
  std::remove(path.c_str());
}

TEST_CASE("cli: reports are deterministic and the JSON class re-substitutes exactly") {
  for (const char* name : {"tweety.kb", "two_defaults.kb", "contraposition.kb", "monotonicity.kb", "single_default.kb"}) {
    CAPTURE(name);
    const auto first = run({"check", data(name), "--format", "json"});
    const auto second = run({"check", data(name), "--format", "json"});
    CHECK(first.out == second.out);
    REQUIRE(first.code == 0);
    const auto doc = nlohmann::json::parse(first.out);
    CHECK(doc.at("format") == "cohere-report");
    CHECK(doc.at("version") == 1);
    const auto values = testing_support::resubstitute_from_json(first.out);
    REQUIRE(values.size() == doc.at("entries").size());
    for (std::size_t i = 0; i < values.size(); ++i) CHECK(values[i] == doc.at("entries")[i].at("value"));
  }
}
