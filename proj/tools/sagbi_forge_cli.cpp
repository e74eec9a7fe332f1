// sagbi-forge: command-line front end.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed,
// 2 usage or domain error, 3 budget exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sagbi_forge/sagbi_forge.hpp"

namespace sf = sagbi_forge;

namespace {

constexpr int kPass = 0;
constexpr int kMathFail = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;
constexpr double kDefaultBudgetSecs = 1800.0;

struct Common {
  std::string format;
  std::string out;
  bool timings = false;
  std::string field = "q";
  std::optional<double> budget;
};

struct FieldChoice {
  bool prime = false;
  std::uint32_t p = 32003;
};

FieldChoice parse_field(const std::string& s) {
  if (s == "q") return {};
  if (s.rfind("fp:", 0) == 0) {
    std::size_t used = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(s.substr(3), &used);
    } catch (const std::exception&) {
      throw sf::ParseError("bad field '" + s + "'");
    }
    if (used != s.size() - 3 || p > UINT32_MAX) throw sf::ParseError("bad field '" + s + "'");
    sf::prime_field(static_cast<std::uint32_t>(p));  // validates
    return {true, static_cast<std::uint32_t>(p)};
  }
  throw sf::ParseError("field must be 'q' or 'fp:<prime>', got '" + s + "'");
}

double budget_seconds(const Common& c) {
  if (c.budget) return *c.budget;
  if (const char* env = std::getenv("SAGBI_FORGE_BUDGET_SECS")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw sf::ParseError(std::string("SAGBI_FORGE_BUDGET_SECS is not a number: ") + env);
    }
  }
  return kDefaultBudgetSecs;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw sf::DomainError("cannot write " + c.out);
  f << text;
}

std::string dump(const sf::Json& j) { return j.dump(2) + "\n"; }

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::pair<int, int> parse_pair(const std::string& s) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    std::size_t u1 = 0, u2 = 0;
    std::string l = s.substr(0, comma), r = s.substr(comma + 1);
    int a = std::stoi(l, &u1), b = std::stoi(r, &u2);
    if (u1 != l.size() || u2 != r.size()) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::exception&) {
    throw sf::ParseError("expected 'a,b', got '" + s + "'");
  }
}

sf::Graph load_graph(const std::string& named, const std::string& file) {
  if (!named.empty()) return sf::named_graph(named);
  std::ifstream in(file);
  if (!in) throw sf::DomainError("cannot read " + file);
  sf::Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw sf::ParseError(file + ": " + e.what());
  }
  return sf::graph_from_json(j);
}

// ---------------------------------------------------------------------------
// verify

std::string verify_text(const sf::VerificationReport& r) {
  std::ostringstream os;
  os << "K_{" << r.a << "," << r.b << "} verification (field " << r.field << ")\n";
  os << std::left << std::setw(26) << "step" << std::setw(8) << "result" << std::setw(12) << "ms" << "witness\n";
  for (const auto& s : r.steps) {
    std::ostringstream ms;
    if (s.ms) ms << std::fixed << std::setprecision(1) << *s.ms;
    else ms << "-";
    std::ostringstream line;
    line << std::left << std::setw(26) << s.name << std::setw(8) << (s.pass ? "pass" : "FAIL") << std::setw(12)
         << ms.str() << (s.witness ? *s.witness : "");
    auto text = line.str();
    text.erase(text.find_last_not_of(' ') + 1);
    os << text << "\n";
  }
  os << "dimension: " << (r.dimension ? std::to_string(*r.dimension) : "-") << "\n";
  os << "gorenstein_expected: " << (r.gorenstein_expected ? "true" : "false") << "\n";
  os << "graded: " << (r.graded ? "true" : "false") << "\n";
  os << "overall: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

int cmd_verify(const Common& c, int a, int b) {
  auto field = parse_field(c.field);
  auto opts = sf::GroebnerOptions::with_budget(std::chrono::duration<double>(budget_seconds(c)));
  auto rep = field.prime ? sf::verify_main_theorems<sf::Zp>(a, b, sf::prime_field(field.p), opts, c.timings)
                         : sf::verify_main_theorems<sf::Rational>(a, b, {}, opts, c.timings);
  emit(c, c.format == "text" ? verify_text(rep) : dump(sf::to_json(rep)));
  if (rep.budget_exceeded) return kBudget;
  return rep.pass() ? kPass : kMathFail;
}

// ---------------------------------------------------------------------------
// dim

int cmd_dim(const Common& c, const std::string& named, const std::string& file, const std::string& strategy_name,
            bool no_fallback) {
  auto g = load_graph(named, file);
  auto field = parse_field(c.field);
  auto strategy = strategy_name == "lattice" ? sf::DimStrategy::lattice : sf::DimStrategy::kernel;
  const double secs = budget_seconds(c);
  auto budget = [&] { return sf::GroebnerOptions::with_budget(std::chrono::duration<double>(secs)); };

  auto t0 = std::chrono::steady_clock::now();
  sf::DimResult res;
  std::string used_field = c.field;
  bool fallback = false;
  try {
    res = field.prime ? sf::dim_edge_ring<sf::Zp>(g, strategy, sf::prime_field(field.p), budget())
                      : sf::dim_edge_ring<sf::Rational>(g, strategy, {}, budget());
  } catch (const sf::BudgetExceeded&) {
    if (field.prime || no_fallback) throw;
    auto dom = sf::prime_field(32003);
    res = sf::dim_edge_ring<sf::Zp>(g, strategy, dom, budget());
    used_field = dom.name();
    fallback = true;
  }
  const double ms = elapsed_ms(t0);
  const auto bound = sf::dim_upper_bound(g);
  const bool bip = g.is_bipartite();

  if (c.format == "text") {
    std::ostringstream os;
    os << "dimension: " << res.dimension << "\n";
    os << "upper_bound: " << bound << " (" << (bip ? "bipartite, min(n, 2d-4)" : "non-bipartite, min(n, 2d-3)")
       << ")\n";
    os << "vertices: " << g.vertices() << "  edges: " << g.num_edges() << "\n";
    os << "strategy: " << sf::to_string(res.strategy) << "\n";
    os << "field: " << used_field << (fallback ? " (fallback after rational budget)" : "") << "\n";
    if (c.timings) os << "ms: " << std::fixed << std::setprecision(1) << ms << "\n";
    emit(c, os.str());
  } else {
    sf::Json j{{"graph", sf::to_json(g)},
               {"dimension", res.dimension},
               {"upper_bound", bound},
               {"bipartite", bip},
               {"strategy", sf::to_string(res.strategy)},
               {"field", used_field},
               {"fallback", fallback},
               {"note", res.note},
               {"ms", nullptr}};
    if (c.timings) j["ms"] = ms;
    emit(c, dump(j));
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// poset

int cmd_poset(const Common& c, int a, int b, const std::string& file, const std::string& action) {
  std::optional<sf::Poset> loaded;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw sf::DomainError("cannot read " + file);
    sf::Json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw sf::ParseError(file + ": " + e.what());
    }
    loaded = sf::poset_from_json(j);
  }
  const sf::Poset p = loaded ? *loaded : sf::build_pi(a, b);
  const bool json = c.format == "json";
  sf::Json j{{"poset", sf::to_json(p)}, {"action", action}};
  std::ostringstream os;

  if (action == "count") {
    auto n = sf::enumerate_ideals(p).size();
    j["result"] = n;
    os << n << "\n";
  } else if (action == "graded") {
    bool g = sf::is_graded(p);
    j["result"] = g;
    os << (g ? "true" : "false") << "\n";
  } else if (action == "ideals") {
    sf::Json arr = sf::Json::array();
    for (const auto& id : sf::enumerate_ideals(p)) {
      arr.push_back(sf::to_json(p, id));
      os << "{";
      for (std::size_t k = 0; k < id.members.size(); ++k) os << (k ? ", " : "") << p.label(id.members[k]);
      os << "}\n";
    }
    j["result"] = arr;
  } else {  // hibi
    auto ideals = sf::enumerate_ideals(p);
    auto gens = sf::hibi_generators<sf::Rational>(p);
    auto rels = sf::hibi_toric_gens<sf::Rational>(p);
    sf::Json g = sf::Json::array(), r = sf::Json::array();
    os << "generators:\n";
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      auto label = sf::hibi_label(p, ideals[k]);
      g.push_back({{"label", label}, {"monomial", gens[k].to_string()}});
      os << "  " << label << " -> " << gens[k].to_string() << "\n";
    }
    os << "relations:\n";
    for (const auto& rel : rels) {
      r.push_back(rel.to_string());
      os << "  " << rel.to_string() << "\n";
    }
    j["result"] = sf::Json{{"generators", g}, {"relations", r}};
  }
  emit(c, json ? dump(j) : os.str());
  return kPass;
}

// ---------------------------------------------------------------------------
// sagbi

template <class K>
sf::SubalgebraGens<K> sagbi_source(const std::string& kab, bool quadrics_only, const std::string& named,
                                   const std::string& file, const std::string& order_name, sf::DomainOf<K> dom) {
  std::optional<sf::SubalgebraGens<K>> f;
  if (!kab.empty()) {
    auto [a, b] = parse_pair(kab);
    auto frame = sf::kab_frame<K>(a, b, dom);
    if (quadrics_only) {
      const auto nq = static_cast<std::size_t>(a * b);
      std::vector<sf::Polynomial<K>> gens(frame.gens.gens().begin(), frame.gens.gens().begin() + nq);
      std::vector<std::string> labels(frame.gens.labels().begin(), frame.gens.labels().begin() + nq);
      f.emplace(std::move(gens), frame.order, std::move(labels));
    } else {
      f.emplace(frame.gens);
    }
  } else {
    if (quadrics_only) throw sf::ParseError("--quadrics-only applies to --kab only");
    f.emplace(sf::binomial_gens<K>(load_graph(named, file), dom));
  }
  sf::OrderKind kind = order_name == "lex"       ? sf::OrderKind::lex
                       : order_name == "grevlex" ? sf::OrderKind::graded_reverse_lex
                                                 : sf::OrderKind::graded_lex;
  if (kind == sf::OrderKind::graded_lex) return *f;
  return sf::SubalgebraGens<K>(f->gens(), sf::MonomialOrder::of_kind(kind, f->table()->count()), f->labels());
}

template <class K>
int run_sagbi(const Common& c, const sf::SubalgebraGens<K>& f, const std::string& source) {
  auto opts = sf::GroebnerOptions::with_budget(std::chrono::duration<double>(budget_seconds(c)));
  auto t0 = std::chrono::steady_clock::now();
  auto res = sf::sagbi_check(f, opts);
  const double ms = elapsed_ms(t0);
  if (c.format == "text") {
    std::ostringstream os;
    os << "source: " << source << "\n";
    os << "generators: " << f.size() << "\n";
    os << "order: " << f.order().describe() << "\n";
    os << "field: " << f.domain().name() << "\n";
    os << "relations checked: " << res.relations_checked << "\n";
    os << "result: " << (res.pass ? "pass" : "FAIL") << "\n";
    if (!res.pass) {
      os << "relation: " << res.relation->to_string() << "\n";
      os << "witness: " << res.witness->to_string() << "\n";
    }
    if (c.timings) os << "ms: " << std::fixed << std::setprecision(1) << ms << "\n";
    emit(c, os.str());
  } else {
    sf::Json j{{"source", source},
               {"generators", f.size()},
               {"order", f.order().describe()},
               {"field", f.domain().name()},
               {"pass", res.pass},
               {"relations_checked", res.relations_checked},
               {"relation", nullptr},
               {"witness", nullptr},
               {"ms", nullptr}};
    if (!res.pass) {
      j["relation"] = res.relation->to_string();
      j["witness"] = res.witness->to_string();
    }
    if (c.timings) j["ms"] = ms;
    emit(c, dump(j));
  }
  return res.pass ? kPass : kMathFail;
}

int cmd_sagbi(const Common& c, const std::string& kab, bool quadrics_only, const std::string& named,
              const std::string& file, const std::string& order_name) {
  auto field = parse_field(c.field);
  std::string source = !kab.empty()   ? "kab:" + kab + (quadrics_only ? " (quadrics only)" : "")
                       : !named.empty() ? "graph:" + named
                                        : "file:" + file;
  if (field.prime) {
    auto dom = sf::prime_field(field.p);
    return run_sagbi(c, sagbi_source<sf::Zp>(kab, quadrics_only, named, file, order_name, dom), source);
  }
  return run_sagbi(c, sagbi_source<sf::Rational>(kab, quadrics_only, named, file, order_name, {}), source);
}

void add_common(CLI::App* sub, Common& c, const std::string& default_format, bool with_field) {
  c.format = default_format;
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", c.out, "Write the report to this file instead of stdout");
  sub->add_flag("--timings", c.timings, "Record wall-clock timings in the report");
  if (with_field) {
    sub->add_option("--field", c.field, "Coefficient field: q or fp:<prime>");
    sub->add_option("--budget", c.budget, "Time budget in seconds (default $SAGBI_FORGE_BUDGET_SECS or 1800)")
        ->check(CLI::PositiveNumber);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binomial edge rings, SAGBI bases and Hibi rings: verification and dimension tools"};
  app.require_subcommand(1);

  Common verify_c, dim_c, poset_c, sagbi_c;

  int va = 0, vb = 0;
  auto* verify = app.add_subcommand("verify", "Verify the SAGBI and Hibi-ring results for K_{a,b}");
  verify->add_option("--a", va, "Size of the first part")->required();
  verify->add_option("--b", vb, "Size of the second part")->required();
  add_common(verify, verify_c, "json", true);

  std::string dim_named, dim_file, dim_strategy = "kernel";
  bool no_fallback = false;
  auto* dim = app.add_subcommand("dim", "Krull dimension of a binomial edge ring");
  auto* dn = dim->add_option("--named", dim_named, "g1, g2, path:d, cycle:d, star:b, complete:d, complete_bipartite:a,b");
  auto* dg = dim->add_option("--graph", dim_file, "Graph JSON file")->check(CLI::ExistingFile);
  dn->excludes(dg);
  dim->add_option("--strategy", dim_strategy, "kernel or lattice")->check(CLI::IsMember({"kernel", "lattice"}));
  dim->add_flag("--no-fallback", no_fallback, "Do not retry over fp:32003 when the rational run exceeds the budget");
  add_common(dim, dim_c, "json", true);

  int pa = 0, pb = 0;
  std::string poset_file, action;
  auto* poset = app.add_subcommand("poset", "Ideals, Hibi ring and gradedness of Pi_{a,b} or a poset file");
  auto* poa = poset->add_option("--a", pa, "Parameter a of Pi_{a,b}");
  auto* pob = poset->add_option("--b", pb, "Parameter b of Pi_{a,b}");
  auto* pof = poset->add_option("--poset", poset_file, "Poset JSON file")->check(CLI::ExistingFile);
  poa->needs(pob);
  pob->needs(poa);
  pof->excludes(poa)->excludes(pob);
  poset->add_option("action", action, "ideals, hibi, graded or count")
      ->required()
      ->check(CLI::IsMember({"ideals", "hibi", "graded", "count"}));
  add_common(poset, poset_c, "text", false);

  std::string kab, sagbi_named, sagbi_file, order_name = "grlex";
  bool quadrics_only = false;
  auto* sagbi = app.add_subcommand("sagbi", "Check whether a generating set is a SAGBI basis");
  auto* sk = sagbi->add_option("--kab", kab, "Generators of the K_{a,b} subalgebra, given as a,b");
  auto* sn = sagbi->add_option("--named", sagbi_named, "Edge binomials of a named graph");
  auto* sg = sagbi->add_option("--graph", sagbi_file, "Edge binomials of a graph JSON file")->check(CLI::ExistingFile);
  sk->excludes(sn)->excludes(sg);
  sn->excludes(sg);
  sagbi->add_flag("--quadrics-only", quadrics_only, "Drop the quartic generators (with --kab)");
  sagbi->add_option("--order", order_name, "Monomial order with the natural variable ranking")
      ->check(CLI::IsMember({"grlex", "grevlex", "lex"}));
  add_common(sagbi, sagbi_c, "json", true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(verify_c, va, vb);
    if (*dim) {
      if (dim_named.empty() && dim_file.empty()) throw sf::ParseError("dim needs --named or --graph");
      return cmd_dim(dim_c, dim_named, dim_file, dim_strategy, no_fallback);
    }
    if (*poset) {
      if (poset_file.empty() && !*poa) throw sf::ParseError("poset needs --a/--b or --poset");
      return cmd_poset(poset_c, pa, pb, poset_file, action);
    }
    if (kab.empty() && sagbi_named.empty() && sagbi_file.empty())
      throw sf::ParseError("sagbi needs --kab, --named or --graph");
    return cmd_sagbi(sagbi_c, kab, quadrics_only, sagbi_named, sagbi_file, order_name);
  } catch (const sf::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::logic_error& e) {
    // DomainError, ParseError, DimensionError, StrategyError and friends
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
