#include "leaktight/report.hpp"

#include "json.hpp"

#include "leaktight/error.hpp"
#include "leaktight/expression.hpp"

namespace leaktight {

using nlohmann::json;

namespace {

json rows(const LimitWord& u) { return json(u.to_rows()); }

LimitWord rows_from(const json& j) {
  std::vector<std::string> r = j.get<std::vector<std::string>>();
  return LimitWord::from_rows(r);
}

std::vector<std::string> subset_names(const std::vector<State>& subset, const ProbAutomaton& aut) {
  std::vector<std::string> names;
  for (State q : subset) names.push_back(aut.state_name(q));
  return names;
}

}  // namespace

std::string witness_states(const WitnessReport& report, const ProbAutomaton& aut) {
  if (report.states.empty()) return {};
  auto [a, b] = report.states.front();
  switch (report.kind) {
    case WitnessKind::Leak:
      return "leak=(r=" + aut.state_name(a) + ",q=" + aut.state_name(b) + ")";
    case WitnessKind::NonSimplicity:
      return "non_simplicity=(r=" + aut.state_name(a) + ",t=" + aut.state_name(b) + ")";
    case WitnessKind::Value1:
      break;
  }
  return {};
}

std::string verdict_line(const Verdict& verdict, const ProbAutomaton& aut) {
  std::string line = to_string(verdict.outcome);
  if (!verdict.witness) return line;
  const WitnessReport& w = *verdict.witness;
  if (w.kind != WitnessKind::Value1) line += ' ' + witness_states(w, aut);
  std::string expr;
  for (std::size_t i = 0; i < w.derivations.size(); ++i) {
    if (i) expr += " ; ";
    expr += to_expression(w.derivations[i], aut);
  }
  return line + " witness=" + expr;
}

std::string verdict_json(const Verdict& verdict, const ProbAutomaton& aut) {
  json doc;
  doc["automaton"] = aut.name();
  doc["outcome"] = to_string(verdict.outcome);
  if (verdict.witness) {
    const WitnessReport& w = *verdict.witness;
    json wj;
    wj["kind"] = to_string(w.kind);
    json states = json::array();
    for (auto [a, b] : w.states) states.push_back({aut.state_name(a), aut.state_name(b)});
    wj["states"] = states;
    json elems = json::array();
    for (std::size_t i = 0; i < w.values.size(); ++i) {
      elems.push_back({{"derivation", to_expression(w.derivations[i], aut)},
                       {"sharp_height", w.derivations[i].sharp_height()},
                       {"u", rows(w.values[i].u())},
                       {"u_plus", rows(w.values[i].u_plus())}});
    }
    wj["elements"] = elems;
    doc["witness"] = wj;
  } else {
    doc["witness"] = nullptr;
  }
  doc["closure"] = {{"elements", verdict.stats.elements},
                    {"markov_elements", verdict.stats.markov_elements},
                    {"max_sharp_height", verdict.stats.max_sharp_height},
                    {"rounds", verdict.stats.rounds}};
  return doc.dump(2) + "\n";
}

std::string verify_report(std::string_view json_text, const ProbAutomaton& aut) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    return std::string("malformed report: ") + e.what();
  }
  try {
    auto outcome = parse_outcome(doc.at("outcome").get<std::string>());
    if (!outcome) return "unknown outcome";
    const json& wj = doc.at("witness");
    if (*outcome == Outcome::Value1FalseLeaktight) {
      return wj.is_null() ? std::string() : "leaktight verdict must not carry a witness";
    }
    if (wj.is_null()) return "verdict requires a witness";

    WitnessReport w;
    std::string kind = wj.at("kind").get<std::string>();
    if (kind == "value1") {
      w.kind = WitnessKind::Value1;
    } else if (kind == "leak") {
      w.kind = WitnessKind::Leak;
    } else {
      return "unexpected witness kind '" + kind + "'";
    }
    if ((w.kind == WitnessKind::Value1) != (*outcome == Outcome::Value1True)) {
      return "witness kind does not match outcome";
    }
    for (const json& s : wj.at("states")) {
      auto a = aut.find_state(s.at(0).get<std::string>());
      auto b = aut.find_state(s.at(1).get<std::string>());
      if (!a || !b) return "unknown state in witness";
      w.states.emplace_back(*a, *b);
    }
    for (const json& e : wj.at("elements")) {
      DerivationTree t = parse_expression(e.at("derivation").get<std::string>(), aut);
      ExtendedLimitWord claimed(rows_from(e.at("u")), rows_from(e.at("u_plus")));
      if (evaluate(t, aut) != claimed) return "derivation does not evaluate to the recorded element";
      w.derivations.push_back(t);
      w.values.push_back(claimed);
    }
    if (!recheck(w, aut)) return "witness conditions do not hold";
  } catch (const json::exception& e) {
    return std::string("malformed report: ") + e.what();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::string parity_json(const ParityReductionResult& result, const ProbAutomaton& aut) {
  json doc;
  doc["automaton"] = aut.name();
  doc["overall"] = to_string(result.overall);
  doc["witness_subset"] =
      result.witness_subset ? json(subset_names(*result.witness_subset, aut)) : json(nullptr);
  json recs = json::array();
  for (const SubsetRecord& r : result.records) {
    recs.push_back({{"subset", subset_names(r.subset, aut)},
                    {"reach", to_string(r.reach)},
                    {"tracked", to_string(r.tracked)},
                    {"status", to_string(r.status)}});
  }
  doc["subsets"] = recs;
  return doc.dump(2) + "\n";
}

}  // namespace leaktight
