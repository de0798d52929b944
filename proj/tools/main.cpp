// leaktight: command-line front end.
//
// Exit status: 0 when the analysis ran (whatever the verdict), 2 for usage
// and input errors, 3 when a closure or word-length budget is exceeded, 4 for
// anything else.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leaktight/constructions.hpp"
#include "leaktight/decision.hpp"
#include "leaktight/dot.hpp"
#include "leaktight/error.hpp"
#include "leaktight/expression.hpp"
#include "leaktight/monoid.hpp"
#include "leaktight/oracle.hpp"
#include "leaktight/parser.hpp"
#include "leaktight/report.hpp"

namespace lt = leaktight;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitOther = 4;

constexpr const char* kFooter = R"(
Witness expressions:
  expr := LETTER | eps | concat(expr, expr) | iter(expr)
  eps is the empty word; iter(x) is the iteration x# of an idempotent x.

Word families (eval --family):
  family := item+          item := LETTER [^ exp] | ( family ) [^ exp]
  exp    := n | INT | exp ^ exp | exp * exp | ( exp )
  e.g. "(b a^n)^(2^n) b". One-character letters may be run together.

Exit status: 0 analysis done, 2 usage or input error, 3 budget exceeded,
4 other failure.)";

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw lt::Error("cannot write " + path);
  out << text;
}

lt::SaturationOptions saturation(std::size_t budget) {
  lt::SaturationOptions opts;
  opts.max_elements = budget;
  return opts;
}

std::string rank_line(const lt::ProbAutomaton& aut, const lt::RankFunction& rf) {
  std::string out;
  for (lt::State s = 0; s < aut.num_states(); ++s) {
    out += ' ' + aut.state_name(s) + ':' + std::to_string(rf.rank[s]);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Value 1 and leaktightness of probabilistic automata"};
  app.footer(kFooter);
  app.require_subcommand(1);

  std::size_t budget = lt::SaturationOptions{}.max_elements;
  std::string report_path;

  // value1
  auto* value1 = app.add_subcommand("value1", "Decide value 1 (exact on leaktight automata)");
  std::string v1_file;
  bool v1_probe = false;
  std::uint64_t v1_nmax = 20;
  value1->add_option("file", v1_file, "Automaton file")->required();
  value1->add_flag("--probe", v1_probe, "Append a convergence table for a value-1 witness");
  value1->add_option("--n-max", v1_nmax, "Largest n probed")->capture_default_str();
  value1->add_option("--budget", budget, "Closure element budget")->capture_default_str();
  value1->add_option("--report", report_path, "Write a JSON report");

  // leaktight
  auto* leaktight = app.add_subcommand("leaktight", "Check for leak witnesses");
  std::string lk_file;
  leaktight->add_option("file", lk_file, "Automaton file")->required();
  leaktight->add_option("--budget", budget, "Closure element budget")->capture_default_str();
  leaktight->add_option("--report", report_path, "Write a JSON report");

  // hierarchical
  auto* hierarchical = app.add_subcommand("hierarchical", "Search for a rank function");
  std::string hi_file;
  hierarchical->add_option("file", hi_file, "Automaton file")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "Acceptance probability of a word or word family");
  std::string ev_file;
  std::string ev_word;
  std::string ev_family;
  std::vector<std::uint64_t> ev_n;
  std::uint64_t ev_from = 0;
  std::uint64_t ev_to = 0;
  eval->add_option("file", ev_file, "Automaton file")->required();
  auto* word_opt = eval->add_option("--word", ev_word, "Word, e.g. \"bab\" or \"b a b\"");
  auto* fam_opt = eval->add_option("--family", ev_family, "Word family, e.g. \"(b a^n)^(2^n) b\"");
  word_opt->excludes(fam_opt);
  auto* n_opt = eval->add_option("--n", ev_n, "Family index (repeatable)")->needs(fam_opt);
  auto* from_opt = eval->add_option("--n-from", ev_from, "First index of a range")->needs(fam_opt);
  auto* to_opt = eval->add_option("--n-to", ev_to, "Last index of a range")->needs(from_opt);
  from_opt->needs(to_opt);
  n_opt->excludes(from_opt);

  // monoid
  auto* monoid = app.add_subcommand("monoid", "Print the extended Markov monoid");
  std::string mo_file;
  std::string mo_dot;
  monoid->add_option("file", mo_file, "Automaton file")->required();
  monoid->add_option("--dot", mo_dot, "Write one DOT file per element plus manifest.txt");
  monoid->add_option("--budget", budget, "Closure element budget")->capture_default_str();

  // compose
  auto* compose = app.add_subcommand("compose", "Combine automata and print the result");
  std::vector<std::string> co_files;
  bool co_parallel = false;
  bool co_product = false;
  std::string co_out;
  compose->add_option("files", co_files, "Automaton files")->required()->expected(2, -1);
  auto* par = compose->add_flag("--parallel", co_parallel, "Parallel composition (weights 1/n)");
  auto* prod = compose->add_flag("--product", co_product, "Synchronized product");
  par->excludes(prod);
  compose->add_option("-o,--output", co_out, "Write to a file instead of stdout");

  // parity
  auto* parity = app.add_subcommand("parity", "Value 1 for parity acceptance on infinite words");
  std::string pa_file;
  parity->add_option("file", pa_file, "Automaton file with priorities")->required();
  parity->add_option("--budget", budget, "Closure element budget")->capture_default_str();
  parity->add_option("--report", report_path, "Write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*value1) {
      auto aut = lt::load_automaton(v1_file);
      lt::Verdict v = lt::decide(aut, saturation(budget));
      std::cout << lt::verdict_line(v, aut) << '\n';
      if (!report_path.empty()) write_file(report_path, lt::verdict_json(v, aut));
      if (v1_probe) {
        if (v.outcome == lt::Outcome::Value1True) {
          auto probe = lt::probe_value1(aut, *v.witness, v1_nmax);
          std::cout << lt::probe_csv(probe) << "verdict " << lt::to_string(probe.verdict) << '\n';
        } else {
          std::cout << "no value-1 witness to probe\n";
        }
      }
    } else if (*leaktight) {
      auto aut = lt::load_automaton(lk_file);
      lt::LeaktightResult r = lt::is_leaktight(aut, saturation(budget));
      lt::Verdict v;
      v.outcome = r.leaktight ? lt::Outcome::Value1FalseLeaktight : lt::Outcome::NotLeaktight;
      v.witness = r.leak;
      v.stats = r.stats;
      if (r.leaktight) {
        std::cout << "LEAKTIGHT\n";
      } else {
        std::cout << lt::verdict_line(v, aut) << '\n';
      }
      if (!report_path.empty()) {
        write_file(report_path, r.leaktight ? lt::verdict_json(lt::decide(aut, saturation(budget)), aut)
                                            : lt::verdict_json(v, aut));
      }
    } else if (*hierarchical) {
      auto aut = lt::load_automaton(hi_file);
      if (auto rf = lt::is_hierarchical(aut)) {
        std::cout << "HIERARCHICAL rank" << rank_line(aut, *rf) << '\n';
      } else {
        std::cout << "NOT_HIERARCHICAL\n";
      }
    } else if (*eval) {
      auto aut = lt::load_automaton(ev_file);
      if (!ev_family.empty()) {
        auto family = lt::parse_family(ev_family, aut);
        std::vector<std::uint64_t> ns = ev_n;
        if (*from_opt) {
          if (ev_to < ev_from) throw lt::InvalidArgument("--n-to is below --n-from");
          for (std::uint64_t n = ev_from; n <= ev_to; ++n) ns.push_back(n);
        }
        if (ns.empty()) throw lt::InvalidArgument("--family needs --n or --n-from/--n-to");
        std::cout << lt::probe_csv(lt::eval_family(aut, family, ns));
      } else if (*word_opt) {
        lt::Word w = lt::parse_word(aut, ev_word);
        std::cout << lt::to_string(lt::acceptance_probability(aut, w)) << '\n';
      } else {
        throw lt::InvalidArgument("eval needs --word or --family");
      }
    } else if (*monoid) {
      auto aut = lt::load_automaton(mo_file);
      lt::MonoidClosure c = lt::saturate(aut, saturation(budget));
      std::cout << "elements " << c.size() << " markov " << c.markov_monoid().words.size()
                << " max_sharp_height " << c.max_sharp_height() << " rounds " << c.rounds()
                << '\n';
      for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& e = c.element(i);
        std::string u;
        std::string up;
        for (const auto& r : e.u().to_rows()) u += (u.empty() ? "" : "/") + r;
        for (const auto& r : e.u_plus().to_rows()) up += (up.empty() ? "" : "/") + r;
        std::cout << i << " h=" << c.sharp_height(i) << " u=" << u << " u+=" << up << ' '
                  << lt::to_expression(c.derivation(i), aut) << '\n';
      }
      if (!mo_dot.empty()) lt::export_closure_dot(c, aut, mo_dot);
    } else if (*compose) {
      std::vector<lt::ProbAutomaton> parts;
      for (const auto& f : co_files) parts.push_back(lt::load_automaton(f));
      if (!co_parallel && !co_product) throw lt::InvalidArgument("compose needs --parallel or --product");
      lt::ProbAutomaton result = parts.front();
      if (co_parallel) {
        result = lt::parallel_compose(parts);
      } else {
        for (std::size_t i = 1; i < parts.size(); ++i) {
          result = lt::synchronized_product(result, parts[i]);
        }
      }
      std::string text = lt::write_automaton(result);
      if (co_out.empty()) {
        std::cout << text;
      } else {
        write_file(co_out, text);
      }
    } else if (*parity) {
      auto aut = lt::load_automaton(pa_file);
      lt::ParityReductionResult r = lt::parity_value1(aut, saturation(budget));
      std::string line = lt::to_string(r.overall);
      if (r.witness_subset) {
        std::string names;
        for (lt::State q : *r.witness_subset) names += (names.empty() ? "" : ",") + aut.state_name(q);
        line += " R={" + names + "}";
      }
      std::cout << line << '\n';
      if (!report_path.empty()) write_file(report_path, lt::parity_json(r, aut));
    }
  } catch (const lt::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const lt::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const lt::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const lt::LengthBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return 0;
}
