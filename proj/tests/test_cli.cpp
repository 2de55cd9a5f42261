#include <gtest/gtest.h>

#include "json.hpp"

#include "bzf/command.hpp"
#include "bzf/error.hpp"

using namespace bzf;
using nlohmann::json;

namespace {
  Response exec(std::string const& text, Options options = {}) {
    return execute(text, options);
  }

  json out(std::string const& text, Options options = {}) {
    return json::parse(exec(text, options).json);
  }
}  // namespace

TEST(Cli, parse_examples) {
  EXPECT_TRUE(std::holds_alternative<EvalCmd>(
      parse_command("eval (0,0;[0)) * (1,1;[0))")));
  Command const c = parse_command("classify closure{ {0,1} }");
  ASSERT_TRUE(std::holds_alternative<ClassifyCmd>(c));
  EXPECT_TRUE(std::get<ClassifyCmd>(c).family.closure);
  Command const g = parse_command("green (0,3;{2}) (0,7;{2}) R");
  ASSERT_TRUE(std::holds_alternative<GreenCmd>(g));
  EXPECT_EQ(std::get<GreenCmd>(g).rel, GreenRel::R);
  EXPECT_THROW(parse_command("green (0,3;{2}) (0,7;{2}) X"), SyntaxError);
  EXPECT_THROW(parse_command("frobnicate"), SyntaxError);
}

TEST(Cli, golden_outputs) {
  EXPECT_EQ(exec("eval (0,0;[0)) * (1,1;[0))").json, R"j({"result":"(1,1;[0))"})j");
  EXPECT_EQ(exec("map sigma (2,5;[0))").json, R"j({"result":-3})j");
  EXPECT_EQ(exec("map brandt (-2,3;{4})").json, R"j({"result":"(2,4,7)"})j");
  EXPECT_EQ(exec("closure {0,1}").json,
            R"j({"has_empty":true,"members":["{}","{0}","{0,1}"],"size":3})j");
  EXPECT_EQ(exec("closure{ {0,1}; [3) }").json,
            exec("closure {0,1}; [3)").json);
  EXPECT_EQ(exec("order (3,1;[0)) (1,-1;[0))").json, R"j({"k":2,"leq":true})j");
  EXPECT_EQ(exec("green (0,3;{2}) (0,7;{2}) R").json,
            R"j({"related":true,"relation":"R","witness":["(3,7;{2})","(7,3;{2})"]})j");
  EXPECT_EQ(exec("is-closed family{ [0); [2) }").json,
            R"j({"closed":false,"witness":{"left":"[0)","missing":"[1)","right":"[2)","shift":1}})j");

  Options target;
  target.target = "0+3*w";
  EXPECT_EQ(exec("map reindex (0,1;2+3*w)", target).json,
            R"j({"result":"(0,1;0+3*w)"})j");
}

TEST(Cli, classify_report) {
  json const r = out("classify family{ {}; 2+3*w }");
  EXPECT_EQ(r["iso_type"], "ZeroBisimpleProgression");
  EXPECT_EQ(r["i0"], 2);
  EXPECT_EQ(r["j0"], 3);
  EXPECT_EQ(r["zero_bisimple"], true);
  EXPECT_TRUE(r["witnesses"].contains("bisimple"));

  json const t = out("classify family{ {} }");
  EXPECT_EQ(t["iso_type"], "Trivial");
  EXPECT_EQ(t["has_identity"], true);
}

TEST(Cli, errors_and_exit_codes) {
  Response const syntax = exec("eval (0,0;[0) * (1,1;[0))");
  EXPECT_EQ(syntax.exit_code, 2);
  json const s = json::parse(syntax.json)["error"];
  EXPECT_EQ(s["code"], "SyntaxError");
  EXPECT_EQ(s["line"], 1);
  EXPECT_EQ(s["col"], 15);

  Response const domain = exec("classify family{ {0,1} }");
  EXPECT_EQ(domain.exit_code, 1);
  EXPECT_EQ(json::parse(domain.json)["error"]["code"], "NotOmegaClosed");

  Options small;
  small.max_family = 2;
  Response const cap = exec("closure {0,1,2}", small);
  EXPECT_EQ(cap.exit_code, 1);
  EXPECT_EQ(json::parse(cap.json)["error"]["code"], "ClosureDiverged");

  Options fam;
  fam.family = "family{ [0) }";
  Response const bad = exec("eval (0,0;{3})", fam);
  EXPECT_EQ(json::parse(bad.json)["error"]["code"], "InvalidElement");
}

TEST(Cli, deterministic_selftest) {
  Options o;
  o.samples = 200;
  o.seed    = 99;
  Response const a = exec("selftest associativity", o);
  Response const b = exec("selftest associativity", o);
  EXPECT_EQ(a.json, b.json);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(json::parse(a.json)["passed"], true);
  Response const h = exec("check-hom brandt", o);
  EXPECT_EQ(h.exit_code, 0);
  Response const oc = exec("oracle-check", o);
  EXPECT_EQ(json::parse(oc.json)["suites"].size(), 2u);
}

TEST(Cli, pretty) {
  Options o;
  o.pretty = true;
  EXPECT_EQ(exec("eval (1,1;[0))", o).json, "{\n  \"result\": \"(1,1;[0))\"\n}");
}
