#include <algorithm>
#include <iostream>
#include <string>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordgram/errors.hpp"
#include "ordgram/langops.hpp"
#include "ordgram/oracle.hpp"
#include "ordgram/solver.hpp"

using nlohmann::json;
using namespace ordgram;

namespace {

struct Options {
  Limits limits;
  bool quiet = false;
  bool as_json = false;
};

// Grammar whose start symbol derives each word as one flat alternative, so
// finite results render in the ordinary grammar syntax.
Grammar flat_grammar(const Alphabet& alphabet, const std::vector<std::string>& words) {
  Grammar flat;
  flat.alphabet = alphabet;
  flat.nonterminal_names = {"S"};
  flat.productions.resize(1);
  for (const std::string& w : words) {
    SForm body;
    for (char c : w) body.push_back(Symbol{true, static_cast<int>(c)});
    flat.productions[0].push_back(std::move(body));
  }
  return flat;
}

int run_order_type(const std::string& path, const Options& opt) {
  Ordinal o = order_type_of_grammar(parse_grammar_file(path), opt.limits);
  if (opt.as_json)
    std::cout << json{{"order_type", to_text(o)}} << "\n";
  else
    std::cout << to_text(o) << "\n";
  return 0;
}

int run_normalize(const std::string& path, const Options& opt) {
  Grammar g = parse_grammar_file(path);
  NormalizeOutcome outcome = to_normal_form(g, opt.limits);
  std::string text = outcome.finite_language()
                         ? render_grammar(flat_grammar(g.alphabet, outcome.words))
                         : render_grammar(*outcome.grammar);
  if (opt.as_json)
    std::cout << json{{"finite", outcome.finite_language()}, {"grammar", text}} << "\n";
  else
    std::cout << text;
  return 0;
}

int run_analyze(const std::string& path, const Options& opt) {
  GrammarAnalysis a = analyze_grammar(parse_grammar_file(path), opt.limits);
  if (a.outcome.finite_language()) {
    if (opt.as_json)
      std::cout << json{{"order_type", to_text(a.order_type)},
                        {"finite", true},
                        {"word_count", a.outcome.words.size()}}
                << "\n";
    else
      std::cout << "finite language: " << a.outcome.words.size() << " words\n"
                << "order type: " << to_text(a.order_type) << "\n";
    return 0;
  }

  const Grammar& nf = *a.outcome.grammar;
  struct Row {
    int height;
    int comp;
    std::vector<int> members;
  };
  std::vector<Row> rows;
  for (int x = 0; x < static_cast<int>(nf.nonterminal_count()); ++x) {
    int c = a.components.component[static_cast<std::size_t>(x)];
    auto it = std::find_if(rows.begin(), rows.end(), [&](const Row& r) { return r.comp == c; });
    if (it == rows.end())
      rows.push_back({a.components.height[static_cast<std::size_t>(x)], c, {x}});
    else
      it->members.push_back(x);
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& l, const Row& r) { return std::tie(l.height, l.comp) < std::tie(r.height, r.comp); });

  json out{{"order_type", to_text(a.order_type)}, {"finite", false}, {"components", json::array()}};
  for (const Row& row : rows) {
    const bool rec = a.components.recursive[static_cast<std::size_t>(row.members.front())];
    const Ordinal& o = *a.table.order[static_cast<std::size_t>(row.members.front())];
    if (opt.as_json) {
      json jc{{"height", row.height}, {"recursive", rec}, {"order", to_text(o)}};
      json names = json::array();
      for (int x : row.members) names.push_back(nf.name_of(x));
      jc["members"] = names;
      if (rec) {
        const ComponentSolution& sol = a.table.solutions.at(row.comp);
        json us = json::object();
        for (int x : row.members) us[nf.name_of(x)] = a.components.u[static_cast<std::size_t>(x)];
        jc["u"] = us;
        jc["o_alpha"] = to_text(sol.o_alpha);
        jc["o_beta"] = to_text(sol.o_beta);
        jc["case"] = sol.case_used;
      }
      out["components"].push_back(jc);
      continue;
    }
    std::cout << "component of height " << row.height << ":";
    for (int x : row.members) std::cout << " " << nf.name_of(x);
    std::cout << (rec ? " (recursive)" : " (start)") << "\n";
    if (rec) {
      for (int x : row.members)
        std::cout << "  u(" << nf.name_of(x) << ") = " << a.components.u[static_cast<std::size_t>(x)]
                  << "\n";
      const ComponentSolution& sol = a.table.solutions.at(row.comp);
      std::cout << "  o_alpha = " << to_text(sol.o_alpha) << ", o_beta = " << to_text(sol.o_beta)
                << ", case " << sol.case_used << "\n";
    }
    std::cout << "  order type: " << to_text(o) << "\n";
  }
  if (opt.as_json)
    std::cout << out << "\n";
  else
    std::cout << "order type: " << to_text(a.order_type) << "\n";
  return 0;
}

int run_sup(const std::string& path, const std::string& symbol, const Options& opt) {
  Grammar g = parse_grammar_file(path);
  SupInfo result;
  if (symbol.size() == 1 && g.alphabet.contains(symbol[0])) {
    result = {UPWord::finite(symbol), true};
  } else {
    Grammar rerooted = g;
    rerooted.start = g.nonterminal_symbol(symbol).id;
    NormalizeOutcome outcome = to_normal_form(rerooted, opt.limits);
    if (outcome.finite_language()) {
      if (outcome.words.empty()) throw DomainError("the language is empty");
      result = {UPWord::finite(outcome.words.back()), true};
    } else {
      const Grammar& nf = *outcome.grammar;
      ComponentTable comps = compute_components(nf);
      compute_all_u(nf, comps);
      result = sup(nf, comps, SForm{Symbol{false, nf.start}});
    }
  }
  if (opt.as_json)
    std::cout << json{{"value", render_word(result.value)}, {"attained", result.attained}} << "\n";
  else
    std::cout << render_word(result.value) << (result.attained ? " (attained)" : " (not attained)")
              << "\n";
  return 0;
}

int run_iso(const std::string& path1, const std::string& path2, const Options& opt) {
  bool same = isomorphic(parse_grammar_file(path1), parse_grammar_file(path2), opt.limits);
  if (opt.as_json)
    std::cout << json{{"isomorphic", same}} << "\n";
  else if (!opt.quiet)
    std::cout << (same ? "isomorphic" : "not isomorphic") << "\n";
  return same ? 0 : 1;
}

int run_validate(const std::string& path, std::size_t max_len, const Options& opt) {
  ValidateReport rep = validate(parse_grammar_file(path), max_len, opt.limits);
  if (opt.as_json) {
    for (const Finding& f : rep.findings)
      std::cout << json{{"kind", f.kind}, {"detail", f.detail}} << "\n";
  } else if (!opt.quiet) {
    for (const Finding& f : rep.findings) std::cout << f.kind << ": " << f.detail << "\n";
    if (rep.finite_count) std::cout << "finite language: " << *rep.finite_count << " words\n";
    if (rep.clean()) std::cout << "no findings\n";
  }
  return rep.clean() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order types of languages of ordinal grammars"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--step-budget", opt.limits.step_budget, "Step budget for the ordering loop");
  app.add_option("--depth-cap", opt.limits.depth_cap, "Recursion depth cap");
  app.add_flag("--quiet", opt.quiet, "Suppress informational output");
  app.add_flag("--json", opt.as_json, "Machine-readable output");

  std::string file, file2, symbol;
  std::size_t max_len = 8;

  CLI::App* c_order = app.add_subcommand("order-type", "Print the order type in Cantor normal form");
  c_order->add_option("file", file, "Grammar file")->required();

  CLI::App* c_norm = app.add_subcommand("normalize", "Print the normal form of the grammar");
  c_norm->add_option("file", file, "Grammar file")->required();

  CLI::App* c_analyze = app.add_subcommand("analyze", "Print components, pump words and order types");
  c_analyze->add_option("file", file, "Grammar file")->required();

  CLI::App* c_sup = app.add_subcommand("sup", "Print the supremum of a symbol's language");
  c_sup->add_option("file", file, "Grammar file")->required();
  c_sup->add_option("symbol", symbol, "Terminal letter or nonterminal name")->required();

  CLI::App* c_iso = app.add_subcommand("iso", "Decide order isomorphism of two languages");
  c_iso->add_option("file1", file, "First grammar file")->required();
  c_iso->add_option("file2", file2, "Second grammar file")->required();

  CLI::App* c_validate = app.add_subcommand("validate", "Desk-scale checks of the grammar");
  c_validate->add_option("file", file, "Grammar file")->required();
  c_validate->add_option("--max-len", max_len, "Enumeration length bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_order->parsed()) return run_order_type(file, opt);
    if (c_norm->parsed()) return run_normalize(file, opt);
    if (c_analyze->parsed()) return run_analyze(file, opt);
    if (c_sup->parsed()) return run_sup(file, symbol, opt);
    if (c_iso->parsed()) return run_iso(file, file2, opt);
    if (c_validate->parsed()) return run_validate(file, max_len, opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
