#include "leaktight/fixtures.hpp"

#include "leaktight/constructions.hpp"
#include "leaktight/error.hpp"

namespace leaktight {

ProbAutomaton fig1(const Rational& x) {
  if (x <= 0 || x >= 1) throw InvalidArgument("fig1 needs 0 < x < 1");
  const Rational y = 1 - x;
  const Rational half(1, 2);
  return AutomatonBuilder("fig1")
      .alphabet({"a", "b"})
      .states({"0", "L1", "R1", "L2", "R2"})
      .initial("0")
      .final({"L2"})
      .transition("0", "a", {{"0", 1}})
      .transition("0", "b", {{"L1", half}, {"R1", half}})
      .transition("L1", "a", {{"L1", x}, {"0", y}})
      .transition("L1", "b", {{"L2", 1}})
      .transition("R1", "a", {{"R1", y}, {"0", x}})
      .transition("R1", "b", {{"R2", 1}})
      .transition("L2", "a", {{"L2", 1}})
      .transition("L2", "b", {{"L2", 1}})
      .transition("R2", "a", {{"R2", 1}})
      .transition("R2", "b", {{"R2", 1}})
      .build();
}

ProbAutomaton fig2() {
  const Rational half(1, 2);
  return AutomatonBuilder("fig2")
      .alphabet({"a", "b"})
      .states({"0", "L1", "L2"})
      .initial("0")
      .final({"L2"})
      .transition("0", "a", {{"0", 1}})
      .transition("0", "b", {{"L1", 1}})
      .transition("L1", "a", {{"L1", half}, {"0", half}})
      .transition("L1", "b", {{"L2", 1}})
      .transition("L2", "a", {{"L2", 1}})
      .transition("L2", "b", {{"L2", 1}})
      .build();
}

ProbAutomaton two_state_loop() {
  const Rational half(1, 2);
  return AutomatonBuilder("two_state_loop")
      .alphabet({"a"})
      .states({"s", "f"})
      .initial("s")
      .final({"f"})
      .transition("s", "a", {{"s", half}, {"f", half}})
      .transition("f", "a", {{"f", 1}})
      .build();
}

namespace {

ProbAutomaton sink(const std::string& name, std::vector<std::string> alphabet, bool accepting) {
  AutomatonBuilder b(name);
  b.alphabet(alphabet).states({"q"}).initial("q");
  if (accepting) b.final({"q"});
  for (const auto& a : alphabet) b.transition("q", a, {{"q", 1}});
  return b.build();
}

ProbAutomaton with_priorities(unsigned s, unsigned f, const std::string& name) {
  AutomatonBuilder b(name);
  const Rational half(1, 2);
  return b.alphabet({"a"})
      .states({"s", "f"})
      .initial("s")
      .final({"f"})
      .priority({{"s", s}, {"f", f}})
      .transition("s", "a", {{"s", half}, {"f", half}})
      .transition("f", "a", {{"f", 1}})
      .build();
}

}  // namespace

ProbAutomaton accepting_sink(std::vector<std::string> alphabet) {
  return sink("accepting_sink", std::move(alphabet), true);
}

ProbAutomaton rejecting_sink(std::vector<std::string> alphabet) {
  return sink("rejecting_sink", std::move(alphabet), false);
}

ProbAutomaton deterministic_chain(std::size_t length) {
  if (length == 0) throw InvalidArgument("chain needs at least one state");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < length; ++i) names.push_back("q" + std::to_string(i));
  AutomatonBuilder b("chain" + std::to_string(length));
  b.alphabet({"a", "b"}).states(names).initial(names.front()).final({names.back()});
  for (std::size_t i = 0; i < length; ++i) {
    b.transition(names[i], "a", {{names[std::min(i + 1, length - 1)], 1}});
    b.transition(names[i], "b", {{names[i], 1}});
  }
  return b.build();
}

ProbAutomaton pspace_composition(std::span<const ProbAutomaton> parts) {
  return parallel_compose(parts);
}

ProbAutomaton parity_all_even() { return with_priorities(2, 0, "parity_all_even"); }
ProbAutomaton parity_all_odd() { return with_priorities(1, 3, "parity_all_odd"); }
ProbAutomaton parity_two_state() { return with_priorities(1, 0, "parity_two_state"); }

ProbAutomaton leaktight_value1_example() {
  const Rational half(1, 2);
  return AutomatonBuilder("leaktight_value1")
      .alphabet({"a", "b"})
      .states({"0", "1"})
      .initial("0")
      .final({"1"})
      .transition("0", "a", {{"0", half}, {"1", half}})
      .transition("0", "b", {{"0", 1}})
      .transition("1", "a", {{"1", 1}})
      .transition("1", "b", {{"0", 1}})
      .build();
}

ProbAutomaton leaktight_no_value1_example() {
  const Rational half(1, 2);
  return AutomatonBuilder("leaktight_no_value1")
      .alphabet({"a", "b"})
      .states({"0", "F", "S"})
      .initial("0")
      .final({"F"})
      .transition("0", "a", {{"F", half}, {"S", half}})
      .transition("0", "b", {{"0", 1}})
      .transition("F", "a", {{"F", 1}})
      .transition("F", "b", {{"F", 1}})
      .transition("S", "a", {{"S", 1}})
      .transition("S", "b", {{"S", 1}})
      .build();
}

std::vector<NamedFixture> fixture_library() {
  std::vector<NamedFixture> lib;
  lib.push_back({"fig1_x1-4", fig1(Rational(1, 4)).with_name("fig1_x1-4"), "value below 1"});
  lib.push_back({"fig1_x1-2", fig1(Rational(1, 2)).with_name("fig1_x1-2"), "value 1/2"});
  lib.push_back({"fig1_x3-4", fig1(Rational(3, 4)).with_name("fig1_x3-4"), "value 1, leaky"});
  lib.push_back({"fig2", fig2(), "leak from L1 to L2"});
  lib.push_back({"two_state_loop", two_state_loop(), "value 1 via iter(a)"});
  lib.push_back({"accepting_sink", accepting_sink(), "value 1 via eps"});
  lib.push_back({"rejecting_sink", rejecting_sink(), "value 0"});
  lib.push_back({"chain4", deterministic_chain(4), "deterministic, value 1"});
  lib.push_back({"parity_all_even", parity_all_even(), "parity, all priorities even"});
  lib.push_back({"parity_all_odd", parity_all_odd(), "parity, all priorities odd"});
  lib.push_back({"parity_two_state", parity_two_state(), "parity, value 1 with R = {f}"});
  lib.push_back({"leaktight_value1", leaktight_value1_example(),
                 "substitute: leaktight, value 1, not hierarchical"});
  lib.push_back({"leaktight_no_value1", leaktight_no_value1_example(),
                 "substitute: leaktight, value 1/2"});
  return lib;
}

}  // namespace leaktight
