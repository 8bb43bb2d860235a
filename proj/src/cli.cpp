#include "halin/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "halin/cache.hpp"
#include "halin/constructions.hpp"
#include "halin/cycles.hpp"
#include "halin/enumeration.hpp"
#include "halin/errors.hpp"
#include "halin/reductions.hpp"
#include "halin/serialize.hpp"
#include "json.hpp"

namespace halin::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::string cache_dir;
  int jobs = 0;
  int limit = kDefaultEnumerationLimit;
  std::uint64_t seed = 0;

  std::string family;
  int n = 0;
  int forbid = 0;
  std::string input;
  std::string rule;
  std::string site;
  bool witnesses = false;
  bool count_only = false;
  bool no_cache = false;
  int n_min = 0;
  int n_max = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  const Options& opt;
  std::ostream& out;
  std::ostream& err;

  bool json() const { return opt.format == "json"; }
  bool csv() const { return opt.format == "csv"; }

  EnumerationConfig enumeration() const {
    EnumerationConfig c;
    c.limit = opt.limit;
    c.threads = opt.jobs > 0 ? opt.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    c.progress = [this](std::string_view line) { err << line << '\n'; };
    return c;
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw PreconditionFailed("cannot read input file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string joined(const std::vector<Vertex>& vs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(vs[i]);
  }
  return s;
}

std::vector<Vertex> parse_site(const std::string& text) {
  std::vector<Vertex> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      ids.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("--site expects comma-separated vertex ids, got '" + text + "'");
    }
  }
  return ids;
}

int construct(const Context& cx) {
  const auto& o = cx.opt;
  HalinGraph g;
  const auto fixed = [&](BaseTreeId id, int size) {
    if (o.n != 0 && o.n != size) {
      throw PreconditionFailed("family " + std::string(to_string(id)) + " has n=" +
                               std::to_string(size) + ", got --n " + std::to_string(o.n));
    }
    return build_halin(base_tree(id).tree);
  };
  if (o.family == "t16") {
    g = fixed(BaseTreeId::T16, 16);
  } else if (o.family == "t17") {
    g = fixed(BaseTreeId::T17, 17);
  } else if (o.family == "t18") {
    g = fixed(BaseTreeId::T18, 18);
  } else {
    if (o.n == 0) throw UsageError("--family " + o.family + " needs --n");
    if (o.family == "extremal") g = extremal_family(o.n);
    if (o.family == "wheel") g = wheel(o.n - 1);
    if (o.family == "random") g = random_c4free_halin(o.n, o.seed);
  }
  const std::string text = serialize(g);
  if (cx.json()) {
    Json j;
    j["family"] = o.family;
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["leaves"] = g.leaf_count();
    j["graph"] = text;
    cx.out << j.dump(2) << '\n';
  } else {
    cx.out << text << '\n';
  }
  return kOk;
}

int check(const Context& cx) {
  const HalinGraph g = parse(read_input(cx.opt.input));
  const int k = cx.opt.forbid;
  const auto witness = find_cycle(g, k);
  if (cx.json()) {
    Json j;
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["k"] = k;
    j["contains"] = witness.has_value();
    j["witness"] = witness ? Json(*witness) : Json(nullptr);
    cx.out << j.dump(2) << '\n';
  } else if (witness) {
    cx.out << "contains C" << k << ": " << joined(*witness) << '\n';
  } else {
    cx.out << "C" << k << "-free\n";
  }
  return kOk;
}

int faces(const Context& cx) {
  const HalinGraph g = parse(read_input(cx.opt.input));
  const auto fs = bounded_faces(g);
  if (cx.json()) {
    Json list = Json::array();
    for (const auto& f : fs) {
      Json j;
      j["cycle_edge"] = {f.cycle_edge.u, f.cycle_edge.v};
      j["size"] = f.size();
      j["boundary"] = f.boundary;
      list.push_back(j);
    }
    Json j;
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["faces"] = list;
    cx.out << j.dump(2) << '\n';
    return kOk;
  }
  cx.out << "face  edge      size  boundary\n";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& f = fs[i];
    std::ostringstream edge;
    edge << f.cycle_edge.u << '-' << f.cycle_edge.v;
    cx.out << std::left << std::setw(6) << i << std::setw(10) << edge.str() << std::setw(6) << f.size()
           << joined(f.boundary) << '\n';
  }
  return kOk;
}

int reduce(const Context& cx) {
  const auto& o = cx.opt;
  const HalinGraph g = parse(read_input(o.input));
  std::optional<ReductionSite> site;
  if (!o.site.empty()) {
    if (o.rule.empty()) throw UsageError("--site needs --rule");
    site = ReductionSite{parse_rule(o.rule), parse_site(o.site)};
  } else if (!o.rule.empty()) {
    const auto sites = applicable_sites(g, parse_rule(o.rule));
    if (sites.empty()) throw PreconditionFailed("no applicable " + o.rule + " site");
    site = sites.front();
  } else {
    site = find_reduction(g);
    if (!site) throw PreconditionFailed("no applicable reduction");
  }
  const ReductionStep step = apply_reduction(g, *site);
  const std::string result = serialize(step.result);
  if (cx.json()) {
    Json j;
    j["rule"] = to_string(step.rule);
    j["site"] = step.site;
    j["before_edges"] = step.before_edges;
    j["after_edges"] = step.after_edges;
    j["delta"] = step.before_edges - step.after_edges;
    j["before_vertices"] = g.vertex_count();
    j["after_vertices"] = step.result.vertex_count();
    j["result"] = result;
    cx.out << j.dump(2) << '\n';
  } else {
    cx.err << to_string(step.rule) << " at " << joined(step.site, ",") << ": e " << step.before_edges
           << " -> " << step.after_edges << ", n " << g.vertex_count() << " -> "
           << step.result.vertex_count() << '\n';
    cx.out << result << '\n';
  }
  return kOk;
}

CachedRecord cached_extremal(const Context& cx, int n, int k) {
  const EnumerationConfig config = cx.enumeration();
  check_enumerable(n, EnumerationConfig{config.limit, 1, {}});
  if (k < 3) throw OutOfRange("cycle length must be at least 3, got " + std::to_string(k));
  const RecordCache cache(cx.opt.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cx.opt.cache_dir));
  if (!cx.opt.no_cache) {
    if (auto hit = cache.load(n, k)) {
      cx.err << "cache hit: " << cache.path_for(n, k).string() << '\n';
      return *hit;
    }
  }
  CachedRecord r{extremal_number(n, k, config), utc_timestamp()};
  if (!cx.opt.no_cache) {
    try {
      cache.store(r);
    } catch (const std::exception& e) {
      cx.err << "warning: " << e.what() << '\n';
    }
  }
  return r;
}

int extremal(const Context& cx) {
  const CachedRecord r = cached_extremal(cx, cx.opt.n, cx.opt.forbid);
  if (cx.json()) {
    cx.out << encode_record(r);
    return kOk;
  }
  const ExtremalRecord& x = r.record;
  cx.out << "ex_H(" << x.n << ", C" << x.k << ") = ";
  if (x.max_edges) {
    cx.out << *x.max_edges << '\n';
  } else {
    cx.out << "none (every Halin graph on " << x.n << " vertices contains C" << x.k << ")\n";
  }
  cx.out << "extremal graphs: " << x.num_extremal << '\n';
  cx.out << "enumerated: " << x.enumerated_total << '\n';
  if (cx.opt.witnesses) {
    for (const auto& w : x.witnesses) cx.out << w << '\n';
  }
  return kOk;
}

int audit(const Context& cx) {
  EnumerationConfig config = cx.enumeration();
  const BaseCaseAudit a = base_case_audit(cx.opt.n, config);
  if (cx.json()) {
    Json j;
    j["n"] = a.n;
    j["enumerated_total"] = a.enumerated_total;
    j["c4_free_total"] = a.c4_free_total;
    j["max_edges"] = a.max_edges ? Json(*a.max_edges) : Json(nullptr);
    Json classes = Json::array();
    for (const auto& c : a.classes) {
      classes.push_back({{"k", c.k}, {"count", c.count}, {"min_edges", c.min_edges}, {"max_edges", c.max_edges}});
    }
    j["classes"] = classes;
    Json claims = Json::array();
    for (const auto& c : a.claims) {
      claims.push_back({{"claim", c.statement}, {"holds", c.holds}, {"observed", c.observed}});
    }
    j["claims"] = claims;
    j["all_claims_hold"] = a.all_claims_hold();
    cx.out << j.dump(2) << '\n';
  } else if (cx.csv()) {
    cx.out << "n,k,count,min_edges,max_edges\n";
    for (const auto& c : a.classes) {
      cx.out << a.n << ',' << c.k << ',' << c.count << ',' << c.min_edges << ',' << c.max_edges << '\n';
    }
  } else {
    cx.out << "n=" << a.n << ": " << a.enumerated_total << " Halin graphs, " << a.c4_free_total
           << " C4-free\n";
    cx.out << "k  count  e(H)\n";
    for (const auto& c : a.classes) {
      cx.out << std::left << std::setw(3) << c.k << std::setw(7) << c.count << c.min_edges;
      if (c.max_edges != c.min_edges) cx.out << ".." << c.max_edges;
      cx.out << '\n';
    }
    for (const auto& c : a.claims) {
      cx.out << (c.holds ? "[ok]   " : "[FAIL] ") << c.statement << " (" << c.observed << ")\n";
    }
  }
  if (!a.all_claims_hold()) {
    cx.err << "audit: at least one claim does not hold\n";
    return kFailed;
  }
  return kOk;
}

int conjecture(const Context& cx) {
  const auto& o = cx.opt;
  if (o.forbid != 6) throw UsageError("conjecture scan is defined for --forbid 6");
  if (o.n_min > o.n_max) throw UsageError("--n-min must not exceed --n-max");
  for (int n = o.n_min; n <= o.n_max; ++n) check_enumerable(n, EnumerationConfig{o.limit, 1, {}});
  const auto rows = conjecture_scan(o.forbid, o.n_min, o.n_max, [&](int n, int k) {
    return cached_extremal(cx, n, k).record;
  });
  bool counterexample = false;
  for (const auto& r : rows) counterexample = counterexample || (r.exceeds_bound && r.in_stated_range);
  if (cx.json()) {
    Json list = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["n"] = r.n;
      j["value"] = r.value ? Json(*r.value) : Json(nullptr);
      j["bound"] = r.bound;
      j["gap"] = r.gap ? Json(*r.gap) : Json(nullptr);
      j["in_stated_range"] = r.in_stated_range;
      j["exceeds_bound"] = r.exceeds_bound;
      list.push_back(j);
    }
    Json j;
    j["k"] = o.forbid;
    j["rows"] = list;
    j["counterexample_found"] = counterexample;
    cx.out << j.dump(2) << '\n';
    return kOk;
  }
  const auto num = [](const std::optional<double>& v) {
    if (!v) return std::string();
    std::ostringstream s;
    s << std::fixed << std::setprecision(1) << *v;
    return s.str();
  };
  if (cx.csv()) {
    cx.out << "n,value,bound,gap,in_stated_range,exceeds_bound\n";
    for (const auto& r : rows) {
      cx.out << r.n << ',' << (r.value ? std::to_string(*r.value) : "") << ',' << num(r.bound) << ','
             << num(r.gap) << ',' << r.in_stated_range << ',' << r.exceeds_bound << '\n';
    }
    return kOk;
  }
  cx.out << "n   ex_H(n,C6)  8(n-1)/5  gap   note\n";
  for (const auto& r : rows) {
    cx.out << std::left << std::setw(4) << r.n << std::setw(12) << (r.value ? std::to_string(*r.value) : "none")
           << std::setw(10) << num(r.bound) << std::setw(6) << (r.gap ? num(r.gap) : "-");
    if (r.exceeds_bound) cx.out << (r.in_stated_range ? "EXCEEDS BOUND" : "above bound, n < 21");
    else if (!r.in_stated_range) cx.out << "n < 21, outside stated range";
    cx.out << '\n';
  }
  cx.out << (counterexample ? "counterexample found\n" : "no counterexample in range\n");
  return kOk;
}

int enumerate(const Context& cx) {
  const int n = cx.opt.n;
  const EnumerationConfig config = cx.enumeration();
  if (cx.opt.count_only) {
    const auto count = count_halin(n, config);
    if (cx.json()) {
      cx.out << Json{{"n", n}, {"count", count}}.dump(2) << '\n';
    } else {
      cx.out << count << '\n';
    }
    return kOk;
  }
  check_enumerable(n, config);
  const TreeEnumerator e(n);
  // Per-task buffers merged in task order keep the output deterministic.
  const auto graphs = parallel_reduce<std::vector<std::string>>(
      e, config.threads,
      [](std::vector<std::string>& acc, const PlaneTree&, std::string_view parens) {
        acc.push_back(std::string(kHalin1Tag) + " " + std::string(parens));
      },
      [](std::vector<std::string>& total, std::vector<std::string>&& part) {
        total.insert(total.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
      });
  if (cx.json()) {
    cx.out << Json{{"n", n}, {"count", graphs.size()}, {"graphs", graphs}}.dump(2) << '\n';
  } else {
    for (const auto& line : graphs) cx.out << line << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Halin graph workbench", "halin"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string("halin ") + std::string(kToolVersion) +
                                        " (graph format " + std::string(kHalin1Tag) +
                                        ", cache format v" + std::to_string(kCacheFormatVersion) + ")");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", o.cache_dir, "Extremal record cache (default $HALIN_CACHE_DIR or ./.halin-cache)");
  app.add_option("--jobs", o.jobs, "Worker threads for enumeration (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--limit", o.limit, "Largest n that may be enumerated")
      ->check(CLI::Range(4, kMaxEnumerationLimit));
  app.add_option("--seed", o.seed, "Seed for the random family");

  auto* c_construct = app.add_subcommand("construct", "Emit a member of a graph family");
  c_construct->add_option("--family", o.family)
      ->required()
      ->check(CLI::IsMember({"t16", "t17", "t18", "extremal", "wheel", "random"}));
  c_construct->add_option("--n", o.n, "Vertex count");

  auto* c_check = app.add_subcommand("check", "Test a graph for a C_k subgraph");
  c_check->add_option("--input", o.input, "halin1 file, or - for stdin")->required();
  c_check->add_option("--forbid", o.forbid, "Cycle length k")->required()->check(CLI::Range(3, 1 << 20));

  auto* c_faces = app.add_subcommand("faces", "List the bounded faces");
  c_faces->add_option("--input", o.input)->required();

  auto* c_reduce = app.add_subcommand("reduce", "Apply one reduction");
  c_reduce->add_option("--input", o.input)->required();
  c_reduce->add_option("--rule", o.rule)->check(CLI::IsMember({"leaf-removal", "smoothing", "contraction"}));
  c_reduce->add_option("--site", o.site, "Comma-separated vertex ids: v,u | u,v,w | a,b");

  auto* c_extremal = app.add_subcommand("extremal", "Exact ex_H(n, C_k) by enumeration");
  c_extremal->add_option("--n", o.n)->required();
  c_extremal->add_option("--forbid", o.forbid)->required();
  c_extremal->add_flag("--witnesses", o.witnesses, "Print witness graphs");
  c_extremal->add_flag("--no-cache", o.no_cache, "Neither read nor write the cache");

  auto* c_audit = app.add_subcommand("audit", "Per-k structure of C4-free graphs at a base case");
  c_audit->add_option("--n", o.n)->required()->check(CLI::IsMember({16, 17, 18}));

  auto* c_conjecture = app.add_subcommand("conjecture", "ex_H(n, C6) against 8(n-1)/5");
  c_conjecture->add_option("--forbid", o.forbid)->required();
  c_conjecture->add_option("--n-min", o.n_min)->required();
  c_conjecture->add_option("--n-max", o.n_max)->required();
  c_conjecture->add_flag("--no-cache", o.no_cache);

  auto* c_enumerate = app.add_subcommand("enumerate", "All Halin graphs on n vertices");
  c_enumerate->add_option("--n", o.n)->required();
  c_enumerate->add_flag("--count-only", o.count_only);

  std::vector<const char*> argv{"halin"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Context cx{o, out, err};
  try {
    if (cx.csv() && !c_audit->parsed() && !c_conjecture->parsed()) {
      throw UsageError("--format csv is only available for audit and conjecture");
    }
    if (c_construct->parsed()) return construct(cx);
    if (c_check->parsed()) return check(cx);
    if (c_faces->parsed()) return faces(cx);
    if (c_reduce->parsed()) return reduce(cx);
    if (c_extremal->parsed()) return extremal(cx);
    if (c_audit->parsed()) return audit(cx);
    if (c_conjecture->parsed()) return conjecture(cx);
    if (c_enumerate->parsed()) return enumerate(cx);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kLimit;
  } catch (const HalinError& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace halin::cli
