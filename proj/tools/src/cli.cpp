#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsg/classifier.hpp"
#include "tsg/cycle_notation.hpp"
#include "tsg/errors.hpp"
#include "verify_paper.hpp"

namespace tsg::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  int n = 0;
  int k = 0;
  bool json_out = false;
  SearchOptions search;
};

std::string pair_name(int n, int k) { return "P(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

std::optional<std::vector<NamedAutomorphism>> paper_generators(int n, int k) {
  auto pick = [&](std::initializer_list<const char*> names) {
    std::vector<NamedAutomorphism> out;
    for (const char* name : names) out.push_back(named_automorphism(n, k, name));
    return out;
  };
  if (!is_exceptional(n, k)) return bnk_generators(n, k);
  if (n == 4 && k == 1) return pick({"rho@S4", "sigma@S4", "delta@S4"});
  if (n == 8 && k == 3) return pick({"mu", "beta", "gamma"});
  if (n == 10 && k == 2) return named_automorphisms(n, k);
  if (n == 10 && k == 3) return pick({"alpha", "beta"});
  return std::nullopt;
}

json cycles_json(const std::vector<Permutation>& perms, int n) {
  json out = json::array();
  for (const auto& p : perms) out.push_back(format_cycles(p, n));
  return out;
}

int cmd_aut(const Common& c, bool oracle_only, bool paper_only, std::ostream& out, std::ostream& err) {
  auto graph = PetersenGraph::build(c.n, c.k);
  std::optional<PermGroup> oracle;
  std::optional<PermGroup> paper;
  std::optional<std::vector<NamedAutomorphism>> paper_gens;
  if (!oracle_only) {
    paper_gens = paper_generators(c.n, c.k);
    if (!paper_gens) {
      if (paper_only) throw UsageError("no paper generators are recorded for " + pair_name(c.n, c.k));
    } else {
      std::vector<Permutation> gens;
      for (const auto& a : *paper_gens) gens.push_back(a.perm);
      paper = closure(gens, graph.vertex_count(), {.cap = 100000});
    }
  }
  if (!paper_only) oracle = automorphism_group(graph, c.search);

  const PermGroup& group = oracle ? *oracle : *paper;
  std::optional<bool> match;
  if (oracle && paper) match = *oracle == *paper;
  std::string label = identify_group(group).str();

  if (c.json_out) {
    json j{{"n", c.n}, {"k", c.k}, {"order", group.order()}, {"label", label}};
    j["oracle"] = oracle ? json{{"order", oracle->order()}, {"generators", cycles_json(oracle->generators(), c.n)}}
                         : json(nullptr);
    if (paper) {
      json gens = json::array();
      for (const auto& a : *paper_gens) gens.push_back({{"name", a.name}, {"cycles", format_cycles(a.perm, c.n)}});
      j["paper"] = {{"order", paper->order()}, {"generators", gens}};
    } else {
      j["paper"] = nullptr;
    }
    j["match"] = match ? json(*match) : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << pair_name(c.n, c.k) << "\n";
    out << "order: " << group.order() << "\n";
    out << "label: " << label << "\n";
    if (oracle) {
      out << "generators (search):\n";
      for (const auto& p : oracle->generators()) out << "  " << format_cycles(p, c.n) << "\n";
    }
    if (paper) {
      out << "generators (recorded):\n";
      for (const auto& a : *paper_gens) out << "  " << a.name << " = " << format_cycles(a.perm, c.n) << "\n";
    } else if (!oracle_only) {
      out << "generators (recorded): none for this pair\n";
    }
    if (match) out << "recorded generators generate Aut: " << (*match ? "yes" : "no") << "\n";
  }
  if (match && !*match) {
    err << "error: closure of recorded generators has order " << paper->order() << ", search found "
        << oracle->order() << "\n";
    return kExitFailure;
  }
  return kExitSuccess;
}

std::string witness_text(const Verdict& v, int n) {
  if (!v.witness) return "";
  std::string s = to_string(v.witness->kind);
  if (v.witness->witness_element) s += " " + format_cycles(*v.witness->witness_element, n);
  return s;
}

std::string citation_ids(const Verdict& v) {
  std::string s;
  for (const auto& c : v.citations) s += (s.empty() ? "" : ";") + c.id;
  return s;
}

struct Row {
  std::size_t order;
  std::string label;
  std::size_t class_size;
  Verdict verdict;
};

void print_rows(const std::vector<Row>& rows, const Common& c, std::ostream& out) {
  if (c.json_out) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(json::parse(verdict_json(c.n, c.k, r.label, r.class_size, r.verdict)));
    out << arr.dump(2) << "\n";
    return;
  }
  out << pair_name(c.n, c.k) << ": " << rows.size() << (rows.size() == 1 ? " row" : " rows") << "\n";
  out << std::left << std::setw(6) << "order" << std::setw(22) << "label" << std::setw(7) << "size" << std::setw(19)
      << "realizable" << std::setw(19) << "positively" << "witness\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(6) << r.order << std::setw(22) << r.label << std::setw(7) << r.class_size
        << std::setw(19) << to_string(r.verdict.realizable) << std::setw(19)
        << to_string(r.verdict.positively_realizable) << witness_text(r.verdict, c.n) << "\n";
  }
}

bool looks_like_cycles(const std::string& s) {
  static const std::regex vertex(R"([uv]_?\{?[0-9])");
  return std::regex_search(s, vertex);
}

std::vector<Row> classify_rows(const Common& c, const std::vector<std::string>& group, bool all) {
  Classifier classifier(c.n, c.k, c.search);
  std::vector<Row> rows;
  if (all) {
    for (auto& r : classifier.classify_all()) {
      const auto& sc = r.subgroup_class;
      rows.push_back({sc.representative.order(), sc.iso_label.str(), sc.class_size, std::move(r.verdict)});
    }
    return rows;
  }
  if (group.size() == 1 && !looks_like_cycles(group[0])) {
    GroupLabel want = parse_label(group[0]);
    auto classes = conjugacy_classes_of_subgroups(classifier.automorphisms(), want);
    if (classes.empty())
      throw NotASubgroupError("no subgroup of Aut(" + pair_name(c.n, c.k) + ") is isomorphic to " + want.str());
    for (const auto& sc : classes)
      rows.push_back({sc.representative.order(), sc.iso_label.str(), sc.class_size, classifier.classify(sc.representative)});
    return rows;
  }
  std::vector<Permutation> gens;
  for (const auto& g : group) gens.push_back(parse_cycles(g, c.n));
  PermGroup h = closure(gens, static_cast<std::size_t>(2 * c.n), {.cap = 100000});
  Verdict v = classifier.classify(h);
  rows.push_back({h.order(), identify_group(h).str(), classifier.class_size(h), std::move(v)});
  return rows;
}

int cmd_subgroups(const Common& c, const std::optional<std::string>& filter, std::ostream& out) {
  auto graph = PetersenGraph::build(c.n, c.k);
  PermGroup aut = automorphism_group(graph, c.search);
  SubgroupLattice lattice(aut);
  std::optional<GroupLabel> want;
  if (filter) want = parse_label(*filter);
  auto classes = lattice.classes(want);
  if (c.json_out) {
    json j{{"n", c.n},
           {"k", c.k},
           {"order", aut.order()},
           {"subgroup_count", lattice.subgroups().size()},
           {"class_count", lattice.class_count()}};
    json arr = json::array();
    for (const auto& sc : classes) {
      json hist = json::object();
      for (auto [o, count] : sc.element_order_histogram) hist[std::to_string(o)] = count;
      arr.push_back({{"order", sc.representative.order()},
                     {"label", sc.iso_label.str()},
                     {"class_size", sc.class_size},
                     {"element_orders", hist},
                     {"generators", cycles_json(sc.representative.generators(), c.n)}});
    }
    j["classes"] = arr;
    out << j.dump(2) << "\n";
    return kExitSuccess;
  }
  out << "Aut(" << pair_name(c.n, c.k) << "): order " << aut.order() << ", " << lattice.subgroups().size()
      << " subgroups in " << lattice.class_count() << " conjugacy classes\n";
  out << std::left << std::setw(6) << "order" << std::setw(22) << "label" << std::setw(7) << "size"
      << "element orders\n";
  for (const auto& sc : classes) {
    std::string hist;
    for (auto [o, count] : sc.element_order_histogram)
      hist += (hist.empty() ? "" : " ") + std::to_string(o) + ":" + std::to_string(count);
    out << std::left << std::setw(6) << sc.representative.order() << std::setw(22) << sc.iso_label.str()
        << std::setw(7) << sc.class_size << hist << "\n";
  }
  return kExitSuccess;
}

int cmd_verify(bool json_out, const std::optional<std::string>& scope, const std::optional<std::string>& registry_path,
               const SearchOptions& search, std::ostream& out, std::ostream& err) {
  std::optional<PaperRegistry> loaded;
  if (registry_path) {
    std::ifstream in(*registry_path, std::ios::binary);
    if (!in) throw UsageError("cannot read registry file " + *registry_path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      loaded = PaperRegistry::load(buf.str());
    } catch (const Error& e) {
      err << "error: registry rejected: " << e.what() << "\n";
      return kExitFailure;
    }
  }
  const PaperRegistry& reg = loaded ? *loaded : PaperRegistry::instance();
  auto results = verify_paper(reg, {scope, search});
  std::size_t passed = std::count_if(results.begin(), results.end(),
                                     [](const ClaimResult& r) { return r.status == ClaimStatus::Pass; });
  if (json_out) {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"claim_id", r.claim_id},
                     {"scope", r.scope},
                     {"citation", {{"location", r.location}, {"quote", r.quote}}},
                     {"expected", r.expected.empty() ? json(nullptr) : json::parse(r.expected)},
                     {"computed", r.computed.empty() ? json(nullptr) : json::parse(r.computed)},
                     {"status", to_string(r.status)}});
    }
    out << json{{"claims", arr}, {"passed", passed}, {"total", results.size()}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << std::left << std::setw(8) << to_string(r.status) << std::setw(30) << r.claim_id << r.location << "\n";
      if (r.status != ClaimStatus::Pass) {
        out << "        expected: " << r.expected << "\n";
        out << "        computed: " << r.computed << "\n";
      }
    }
    out << passed << "/" << results.size() << " claims passed\n";
  }
  if (results.empty()) {
    err << "error: no claims match scope '" << scope.value_or("") << "'\n";
    return kExitUsage;
  }
  return passed == results.size() ? kExitSuccess : kExitFailure;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n ") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

int cmd_export(const Common& c, const std::string& format, bool verdicts, const std::optional<std::string>& output,
               std::ostream& out) {
  std::ostringstream text;
  auto graph = PetersenGraph::build(c.n, c.k);
  if (verdicts) {
    if (format == "dot") throw UsageError("--verdicts needs --format json or csv");
    auto rows = Classifier(c.n, c.k, c.search).classify_all();
    if (format == "json") {
      json arr = json::array();
      for (const auto& r : rows)
        arr.push_back(json::parse(
            verdict_json(c.n, c.k, r.subgroup_class.iso_label.str(), r.subgroup_class.class_size, r.verdict)));
      text << arr.dump(2) << "\n";
    } else {
      text << "n,k,order,subgroup_label,class_size,realizable,positively_realizable,witness_kind,witness_element,"
              "citations\n";
      for (const auto& r : rows) {
        const auto& v = r.verdict;
        text << c.n << "," << c.k << "," << r.subgroup_class.representative.order() << ","
             << csv_field(r.subgroup_class.iso_label.str()) << "," << r.subgroup_class.class_size << ","
             << to_string(v.realizable) << "," << to_string(v.positively_realizable) << ","
             << (v.witness ? to_string(v.witness->kind) : "") << ","
             << csv_field(v.witness && v.witness->witness_element ? format_cycles(*v.witness->witness_element, c.n)
                                                                  : "")
             << "," << csv_field(citation_ids(v)) << "\n";
      }
    }
  } else if (format == "dot") {
    text << to_dot(graph);
  } else if (format == "json") {
    text << to_json(graph) << "\n";
  } else {
    text << "a,b,class\n";
    for (const auto& e : graph.edges())
      text << graph.label(e.a) << "," << graph.label(e.b) << "," << to_string(e.cls) << "\n";
  }
  if (output) {
    std::ofstream f(*output, std::ios::binary);
    if (!f) throw UsageError("cannot write " + *output);
    f << text.str();
  } else {
    out << text.str();
  }
  return kExitSuccess;
}

std::optional<std::uint64_t> env_budget() {
  const char* raw = std::getenv("TSG_NODE_BUDGET");
  if (!raw) return std::nullopt;
  std::string s(raw);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    throw UsageError("TSG_NODE_BUDGET must be a positive integer, got '" + s + "'");
  std::uint64_t v = 0;
  try {
    v = std::stoull(s);
  } catch (const std::exception&) {
    throw UsageError("TSG_NODE_BUDGET out of range: '" + s + "'");
  }
  if (v == 0) throw UsageError("TSG_NODE_BUDGET must be a positive integer, got '" + s + "'");
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automorphism groups and realizability verdicts for generalized Petersen graphs", "tsg"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_flag("--json", c.json_out, "Machine-readable JSON output");

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "Number of outer vertices")->required();
    sub->add_option("--k", c.k, "Inner step, 1 <= k < n/2")->required();
  };

  auto* aut = app.add_subcommand("aut", "Automorphism group: order, label, generators");
  add_pair(aut);
  bool oracle_only = false, paper_only = false;
  auto* oracle_flag = aut->add_flag("--oracle", oracle_only, "Only run the automorphism search");
  aut->add_flag("--paper", paper_only, "Only close the recorded generators")->excludes(oracle_flag);

  auto* classify = app.add_subcommand("classify", "Realizability verdicts for subgroups");
  add_pair(classify);
  std::vector<std::string> group;
  bool all = false;
  auto* group_opt = classify->add_option("--group", group,
                                         "Group label (\"Z4\", \"D_6 x Z_2\") or generators in cycle notation");
  classify->add_flag("--all", all, "One verdict per conjugacy class of subgroups")->excludes(group_opt);

  auto* subgroups = app.add_subcommand("subgroups", "Conjugacy classes of subgroups of Aut");
  add_pair(subgroups);
  std::optional<std::string> label_filter;
  subgroups->add_option("--label", label_filter, "Only classes isomorphic to this group");

  auto* verify = app.add_subcommand("verify-paper", "Re-derive every recorded claim");
  std::optional<std::string> scope, registry_path;
  verify->add_option("--scope", scope, "Claim scope (p41, p83, ...), location, or section number");
  verify->add_option("--registry", registry_path, "Registry JSON to use instead of the embedded one");

  auto* exp = app.add_subcommand("export", "Graph or verdict table as DOT, JSON, or CSV");
  add_pair(exp);
  std::string format;
  bool verdicts = false;
  std::optional<std::string> output;
  exp->add_option("--format", format, "dot, json, or csv")->required()->check(CLI::IsMember({"dot", "json", "csv"}));
  exp->add_flag("--verdicts", verdicts, "Export the verdict table instead of the graph");
  exp->add_option("--output", output, "Write to this file instead of standard output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (auto budget = env_budget()) c.search.node_budget = *budget;
    if (*aut) return cmd_aut(c, oracle_only, paper_only, out, err);
    if (*classify) {
      if (group.empty() && !all) throw UsageError("classify needs --group or --all");
      print_rows(classify_rows(c, group, all), c, out);
      return kExitSuccess;
    }
    if (*subgroups) return cmd_subgroups(c, label_filter, out);
    if (*verify) return cmd_verify(c.json_out, scope, registry_path, c.search, out, err);
    if (*exp) return cmd_export(c, format, verdicts, output, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownLabelError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainMismatchError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidPermutationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace tsg::cli
