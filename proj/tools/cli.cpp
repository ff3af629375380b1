#include "cli.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "agx/ag_index.hpp"
#include "agx/bounds.hpp"
#include "agx/cache.hpp"
#include "agx/constructor.hpp"
#include "agx/enumeration.hpp"
#include "agx/error.hpp"
#include "agx/graph6.hpp"
#include "agx/reference.hpp"
#include "agx/report.hpp"
#include "agx/transforms.hpp"
#include "agx/verify.hpp"

namespace agx::cli {

namespace {

using nlohmann::json;

struct Options {
  int n = -1;
  int m = -1;
  int threads = 0;
  std::string cache_dir;
  std::string format;
  bool exact = false;
  int max_n = -1;
  bool connected = false;
  bool disconnected = false;
  bool gnm = false;
  int which = 0;
  std::string input;
  bool trace = false;
  int max_chain = 6;
  std::vector<std::string> graphs;
};

EnumOptions enum_options(const Options& o) {
  EnumOptions e;
  e.threads = resolve_threads(o.threads);
  e.cache_dir = o.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(o.cache_dir);
  if (o.max_n > 0) {
    e.max_chemical_order = o.max_n;
    e.max_gnm_order = o.max_n;
  }
  return e;
}

Connectivity connectivity(const Options& o) {
  if (o.connected) return Connectivity::Connected;
  if (o.disconnected) return Connectivity::Disconnected;
  return Connectivity::All;
}

std::string fixed4(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", round4(x));
  return buf;
}

// Space-separated rational coefficients of 1, √2, √3, √6.
std::string coefficients(const ExactValue& v) {
  return to_string(v.a()) + " " + to_string(v.b()) + " " + to_string(v.c()) + " " + to_string(v.d());
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

// --- commands ---------------------------------------------------------------

int cmd_ag(const Options& o, std::istream& in, std::ostream& out) {
  const auto inputs = o.graphs.empty() ? read_lines(in) : o.graphs;
  const bool csv = o.format == "csv";
  if (csv) out << "graph6,n,m,ag" << (o.exact ? ",ag_exact" : "") << "\n";
  for (const auto& text : inputs) {
    const ChemicalGraph g = decode_graph6(text);
    const ExactValue ag = ag_value(g);
    if (csv) {
      out << encode_graph6(g) << "," << g.order() << "," << g.size() << "," << fixed4(ag.to_double());
      if (o.exact) out << "," << coefficients(ag);
      out << "\n";
    } else {
      json j = graph_summary(g);
      j["closed_form"] = ag.to_string();
      out << j.dump() << "\n";
    }
  }
  return kSuccess;
}

int cmd_bound(const Options& o, std::ostream& out) {
  const BoundReport r = sharp_bound(o.n, o.m);
  if (o.format == "csv") {
    out << "n,m,residue,exceptional,ub,sharp" << (o.exact ? ",ub_exact,sharp_exact" : "") << "\n";
    out << r.n << "," << r.m << "," << r.residue << "," << (r.exceptional ? "true" : "false") << ","
        << fixed4(r.ub.to_double()) << "," << fixed4(r.sharp.to_double());
    if (o.exact) out << "," << coefficients(r.ub) << "," << coefficients(r.sharp);
    out << "\n";
  } else {
    out << to_json(r).dump() << "\n";
  }
  return kSuccess;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const Construction c = construct_extremal_with_plan(o.n, o.m);
  if (o.format != "json") out << encode_graph6(c.graph) << "\n";
  if (o.format != "graph6") out << to_json(c).dump() << "\n";
  return kSuccess;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const EnumSpec spec{o.n, o.m, connectivity(o), o.gnm ? Target::Gnm : Target::AllChemical};
  const auto keys = enumerate_keys(spec, enum_options(o));
  if (o.format == "csv" || o.format == "json") {
    long long conn = 0;
    for (const auto& k : keys) conn += is_connected(decode_graph6(k)) ? 1 : 0;
    const long long non = static_cast<long long>(keys.size()) - conn;
    if (o.format == "csv") {
      out << "n,m,connected,nonconnected\n" << o.n << "," << o.m << "," << conn << "," << non << "\n";
    } else {
      out << json{{"n", o.n}, {"m", o.m}, {"connected", conn}, {"nonconnected", non}, {"graphs", keys}}.dump()
          << "\n";
    }
    return kSuccess;
  }
  for (const auto& k : keys) out << k << "\n";
  return kSuccess;
}

int cmd_count(const Options& o, std::ostream& out) {
  const ExtremalCounts c = extremal_counts(o.n, o.m, enum_options(o));
  if (o.format == "json") {
    out << json{{"n", o.n}, {"m", o.m}, {"connected", c.connected}, {"nonconnected", c.nonconnected}}.dump() << "\n";
  } else {
    out << "n,m,connected,nonconnected\n" << o.n << "," << o.m << "," << c.connected << "," << c.nonconnected << "\n";
  }
  return kSuccess;
}

int cmd_tables(const Options& o, std::ostream& out) {
  const EnumOptions e = enum_options(o);
  const int table_max_n = o.max_n > 0 ? o.max_n : 10;
  if (o.which == 0 || o.which == 1) {
    out << "n,m,count\n";
    for (const auto& ref : reference_graph_counts()) {
      out << ref.n << "," << ref.m << "," << enumerate_keys({ref.n, ref.m}, e).size() << "\n";
    }
  }
  if (o.which == 0 || o.which == 2) {
    out << "n,m,ag,ub,difference" << (o.exact ? ",ag_exact,ub_exact,difference_exact" : "") << "\n";
    const ExceptionCatalog catalog = derive_exception_catalog(e);
    for (const auto& [pair, rec] : catalog) {
      const ExactValue ub = bound_formula(rec.n, rec.m);
      const ExactValue diff = ub - rec.ag;
      out << rec.n << "," << rec.m << "," << fixed4(rec.ag.to_double()) << "," << fixed4(ub.to_double()) << ","
          << fixed4(diff.to_double());
      if (o.exact) out << "," << coefficients(rec.ag) << "," << coefficients(ub) << "," << coefficients(diff);
      out << "\n";
    }
  }
  if (o.which == 0 || o.which == 3) {
    out << "n,m,connected,nonconnected\n";
    for (const auto& ref : reference_extremal_counts()) {
      if (ref.n > table_max_n) continue;
      const ExtremalCounts c = extremal_counts(ref.n, ref.m, e);
      out << ref.n << "," << ref.m << "," << c.connected << "," << c.nonconnected << "\n";
    }
  }
  return kSuccess;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  const ExceptionCatalog catalog = derive_exception_catalog(enum_options(o));
  if (o.format == "graph6") {
    for (const auto& [pair, rec] : catalog) out << encode_graph6(rec.graph) << "\n";
  } else if (o.format == "csv") {
    out << "n,m,graph6,ag" << (o.exact ? ",ag_exact" : "") << "\n";
    for (const auto& [pair, rec] : catalog) {
      out << rec.n << "," << rec.m << "," << encode_graph6(rec.graph) << "," << fixed4(rec.ag.to_double());
      if (o.exact) out << "," << coefficients(rec.ag);
      out << "\n";
    }
  } else {
    json all = json::array();
    for (const auto& [pair, rec] : catalog) {
      all.push_back({{"n", rec.n},
                     {"m", rec.m},
                     {"graph6", encode_graph6(rec.graph)},
                     {"ag", to_json(rec.ag)},
                     {"closed_form", rec.closed_form}});
    }
    out << all.dump(1) << "\n";
  }
  return kSuccess;
}

int cmd_improve(const Options& o, std::istream& in, std::ostream& out) {
  std::string text = o.input;
  if (text.empty()) {
    const auto lines = read_lines(in);
    if (lines.empty()) throw Error(ErrorCode::MalformedGraph6, "no input graph");
    text = lines.front();
  }
  const ChemicalGraph g = decode_graph6(text);
  MoveOptions mo;
  mo.max_chain_length = o.max_chain;
  const SearchResult r = local_search_traced(g, mo);
  if (o.format == "json") {
    json steps = json::array();
    for (const auto& s : r.trace) {
      json j = to_json(s.move);
      j["delta"] = to_json(s.delta);
      steps.push_back(j);
    }
    out << json{{"input", encode_graph6(g)},
                {"output", encode_graph6(r.graph)},
                {"ag_before", to_json(ag_value(g))},
                {"ag_after", to_json(ag_value(r.graph))},
                {"trace", steps}}
               .dump()
        << "\n";
    return kSuccess;
  }
  if (o.trace) {
    auto edge_list = [](const std::vector<Edge>& edges) {
      std::string s;
      for (const auto& [u, v] : edges) s += (s.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
      return s;
    };
    for (const auto& s : r.trace) {
      out << to_string(s.move.kind) << ": remove " << edge_list(s.move.removed) << ", add " << edge_list(s.move.added)
          << ", delta " << s.delta.to_string() << " (" << fixed4(s.delta.to_double()) << ")\n";
    }
  }
  out << encode_graph6(r.graph) << "\n";
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions v;
  v.enumeration = enum_options(o);
  v.enumeration.max_chemical_order = std::max(v.enumeration.max_chemical_order, 12);
  if (o.max_n > 0) v.max_n = o.max_n;
  if (v.max_n > v.enumeration.max_chemical_order) {
    throw Error(ErrorCode::BudgetExceeded, "verify sweeps are limited to n <= 12");
  }
  bool all = true;
  for (const auto& r : run_verification(v)) {
    out << (r.passed ? "pass " : "FAIL ") << r.name << ": " << r.detail << "\n";
    all = all && r.passed;
  }
  return all ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic-geometric index of chemical graphs: exact values, sharp bounds, extremal graphs",
               "agx"};
  app.require_subcommand(1);
  Options o;

  auto size_flags = [&o](CLI::App* c) {
    c->add_option("-n", o.n, "order")->required()->check(CLI::Range(1, ChemicalGraph::kMaxOrder));
    c->add_option("-m", o.m, "size")->required()->check(CLI::NonNegativeNumber);
  };
  auto run_flags = [&o](CLI::App* c) {
    c->add_option("--threads", o.threads, "worker threads (default AGX_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);
    c->add_option("--cache-dir", o.cache_dir, "result cache (default AGX_CACHE or ./.agx-cache)");
  };
  auto format_flag = [&o](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
    c->add_flag("--exact", o.exact, "add exact coefficients of 1, sqrt2, sqrt3, sqrt6");
  };

  auto* ag = app.add_subcommand("ag", "exact AG of graph6 graphs (arguments or stdin)");
  ag->add_option("graphs", o.graphs, "graph6 strings");
  auto* bound = app.add_subcommand("bound", "closed-form upper bound and sharp value");
  size_flags(bound);
  auto* construct = app.add_subcommand("construct", "connected graph reaching the bound");
  size_flags(construct);
  auto* enumerate = app.add_subcommand("enumerate", "isomorph-free graphs of order n and size m");
  size_flags(enumerate);
  run_flags(enumerate);
  enumerate->add_flag("--gnm", o.gnm, "only members of G(n,m)");
  auto* conn_group = enumerate->add_option_group("connectivity");
  conn_group->add_flag("--connected", o.connected, "connected graphs only");
  conn_group->add_flag("--disconnected", o.disconnected, "non-connected graphs only");
  conn_group->add_flag("--all", "connected and non-connected (default)");
  conn_group->require_option(0, 1);
  enumerate->add_option("--max-n", o.max_n, "raise the order budget");
  auto* count = app.add_subcommand("count", "connected and non-connected extremal graph counts");
  size_flags(count);
  run_flags(count);
  count->add_option("--max-n", o.max_n, "raise the order budget");
  auto* tables = app.add_subcommand("tables", "graph counts, exceptional gaps and extremal counts as CSV");
  run_flags(tables);
  tables->add_option("--which", o.which, "1: graph counts, 2: exceptional gaps, 3: extremal counts (default all)")
      ->check(CLI::Range(0, 3));
  tables->add_option("--max-n", o.max_n, "largest order in the extremal count table (default 10)");
  auto* catalog = app.add_subcommand("catalog", "the 22 uniquely extremal graphs below the bound");
  run_flags(catalog);
  auto* improve = app.add_subcommand("improve", "greedy local search with AG-raising moves");
  improve->add_option("--in", o.input, "graph6 input (default: first line of stdin)");
  improve->add_flag("--trace", o.trace, "print each applied move");
  improve->add_option("--max-chain", o.max_chain, "longest path tried by chain swaps")->check(CLI::Range(4, 64));
  auto* verify = app.add_subcommand("verify", "recompute and check results up to --max-n");
  run_flags(verify);
  verify->add_option("--max-n", o.max_n, "largest order swept (default 8)");

  format_flag(ag, {"json", "csv"});
  format_flag(bound, {"json", "csv"});
  format_flag(construct, {"default", "graph6", "json"});
  format_flag(enumerate, {"graph6", "csv", "json"});
  format_flag(count, {"csv", "json"});
  format_flag(tables, {"csv"});
  format_flag(catalog, {"json", "csv", "graph6"});
  format_flag(improve, {"text", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    auto* chosen = app.get_subcommands().front();
    if (o.format.empty()) {
      static const std::map<std::string, std::string> defaults = {
          {"ag", "json"},       {"bound", "json"},  {"construct", "default"}, {"enumerate", "graph6"},
          {"count", "csv"},     {"tables", "csv"},  {"catalog", "json"},      {"improve", "text"},
          {"verify", "text"}};
      o.format = defaults.at(chosen->get_name());
    }
    if (chosen == ag) return cmd_ag(o, in, out);
    if (chosen == bound) return cmd_bound(o, out);
    if (chosen == construct) return cmd_construct(o, out);
    if (chosen == enumerate) return cmd_enumerate(o, out);
    if (chosen == count) return cmd_count(o, out);
    if (chosen == tables) return cmd_tables(o, out);
    if (chosen == catalog) return cmd_catalog(o, out);
    if (chosen == improve) return cmd_improve(o, in, out);
    if (chosen == verify) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? kBudgetExceeded : kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace agx::cli
