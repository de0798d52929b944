#include "leaktight/dot.hpp"

#include <fstream>
#include <sstream>

#include "leaktight/error.hpp"
#include "leaktight/expression.hpp"

namespace leaktight {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_dot(const ExtendedLimitWord& e, const ProbAutomaton& aut,
                   const std::string& graph_name) {
  if (e.size() != aut.num_states()) throw InvalidArgument("limit-word dimension mismatch");
  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n";
  for (State s = 0; s < e.size(); ++s) out << "  " << quoted(aut.state_name(s)) << ";\n";
  for (State s = 0; s < e.size(); ++s) {
    for (State t = 0; t < e.size(); ++t) {
      if (e.u().get(s, t)) {
        out << "  " << quoted(aut.state_name(s)) << " -> " << quoted(aut.state_name(t)) << ";\n";
      } else if (e.u_plus().get(s, t)) {
        out << "  " << quoted(aut.state_name(s)) << " -> " << quoted(aut.state_name(t))
            << " [style=dashed, label=\"+\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const LimitWord& u, const ProbAutomaton& aut, const std::string& graph_name) {
  return to_dot(ExtendedLimitWord(u), aut, graph_name);
}

void export_closure_dot(const MonoidClosure& closure, const ProbAutomaton& aut,
                        const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream manifest(dir / "manifest.txt");
  if (!manifest) throw Error("cannot write " + (dir / "manifest.txt").string());
  manifest << "# file sharp_height derivation_size expression\n";
  for (std::size_t i = 0; i < closure.size(); ++i) {
    std::string file = "element_" + std::to_string(i) + ".dot";
    std::ofstream dot(dir / file);
    if (!dot) throw Error("cannot write " + (dir / file).string());
    dot << to_dot(closure.element(i), aut, "element_" + std::to_string(i));
    manifest << file << ' ' << closure.sharp_height(i) << ' ' << closure.derivation_size(i) << ' '
             << to_expression(closure.derivation(i), aut) << '\n';
  }
}

}  // namespace leaktight
