#include <gtest/gtest.h>

#include "json.hpp"
#include "leaktight/decision.hpp"
#include "leaktight/fixtures.hpp"
#include "leaktight/report.hpp"

using namespace leaktight;
using nlohmann::json;

TEST(VerdictLine, Fixtures) {
  ProbAutomaton loop = two_state_loop();
  EXPECT_EQ(verdict_line(decide(loop), loop), "VALUE1_TRUE witness=iter(a)");
  ProbAutomaton sink = rejecting_sink();
  EXPECT_EQ(verdict_line(decide(sink), sink), "VALUE1_FALSE_LEAKTIGHT");
  ProbAutomaton f1 = fig1(Rational(3, 4));
  EXPECT_EQ(verdict_line(decide(f1), f1),
            "NOT_LEAKTIGHT leak=(r=0,q=L2) witness=concat(concat(concat(b, iter(a)), b), iter(a))");
}

TEST(VerdictJson, Structure) {
  ProbAutomaton a = fig1(Rational(3, 4));
  Verdict v = decide(a);
  json doc = json::parse(verdict_json(v, a));
  EXPECT_EQ(doc["automaton"], "fig1");
  EXPECT_EQ(doc["outcome"], "NOT_LEAKTIGHT");
  EXPECT_EQ(doc["witness"]["kind"], "leak");
  EXPECT_EQ(doc["witness"]["states"], json::parse(R"([["0","L2"]])"));
  const json& e = doc["witness"]["elements"][0];
  EXPECT_EQ(e["sharp_height"], 1);
  EXPECT_EQ(e["u"].size(), 5u);
  EXPECT_EQ(doc["closure"]["elements"], 33);
  EXPECT_EQ(doc["closure"]["markov_elements"], 19);
  EXPECT_FALSE(doc["closure"].contains("wall_seconds"));

  ProbAutomaton sink = rejecting_sink();
  json none = json::parse(verdict_json(decide(sink), sink));
  EXPECT_TRUE(none["witness"].is_null());
}

TEST(VerdictJson, IsReproducible) {
  ProbAutomaton a = fig2();
  EXPECT_EQ(verdict_json(decide(a), a), verdict_json(decide(a), a));
}

TEST(VerifyReport, AcceptsGenuineReports) {
  for (const auto& fx : fixture_library()) {
    std::string text = verdict_json(decide(fx.automaton), fx.automaton);
    EXPECT_EQ(verify_report(text, fx.automaton), "") << fx.name;
  }
}

TEST(VerifyReport, RejectsForgeries) {
  ProbAutomaton a = fig2();
  json doc = json::parse(verdict_json(decide(a), a));

  json wrong_outcome = doc;
  wrong_outcome["outcome"] = "NOT_LEAKTIGHT";
  EXPECT_NE(verify_report(wrong_outcome.dump(), a), "");

  json wrong_rows = doc;
  wrong_rows["witness"]["elements"][0]["u"][0] = "111";
  wrong_rows["witness"]["elements"][0]["u_plus"][0] = "111";
  EXPECT_NE(verify_report(wrong_rows.dump(), a), "");

  json wrong_expr = doc;
  wrong_expr["witness"]["elements"][0]["derivation"] = "a";
  EXPECT_NE(verify_report(wrong_expr.dump(), a), "");

  json missing = doc;
  missing["witness"] = nullptr;
  EXPECT_NE(verify_report(missing.dump(), a), "");

  EXPECT_NE(verify_report("{not json", a), "");
  EXPECT_NE(verify_report(R"({"outcome":"MAYBE","witness":null})", a), "");

  // A leaktight claim with a witness attached is inconsistent.
  json lt = doc;
  lt["outcome"] = "VALUE1_FALSE_LEAKTIGHT";
  EXPECT_NE(verify_report(lt.dump(), a), "");
  // The same report does not certify a different automaton.
  EXPECT_NE(verify_report(doc.dump(), rejecting_sink()), "");
}

TEST(ParityJson, Structure) {
  ProbAutomaton a = parity_two_state();
  json doc = json::parse(parity_json(parity_value1(a), a));
  EXPECT_EQ(doc["overall"], "true");
  EXPECT_EQ(doc["witness_subset"], json::parse(R"(["f"])"));
  ASSERT_FALSE(doc["subsets"].empty());
  EXPECT_EQ(doc["subsets"].back()["status"], "true");
  json odd = json::parse(parity_json(parity_value1(parity_all_odd()), parity_all_odd()));
  EXPECT_TRUE(odd["witness_subset"].is_null());
  EXPECT_EQ(odd["subsets"].size(), 3u);
}

TEST(WitnessStates, LeakSummary) {
  ProbAutomaton a = fig2();
  auto leak = is_leaktight(a).leak;
  ASSERT_TRUE(leak);
  EXPECT_EQ(witness_states(*leak, a).rfind("leak=(r=", 0), 0u);
}
