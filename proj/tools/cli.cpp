#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbowlab/coloring.hpp"
#include "rainbowlab/error.hpp"
#include "rainbowlab/geometry.hpp"
#include "rainbowlab/io.hpp"
#include "rainbowlab/partition.hpp"
#include "rainbowlab/pattern.hpp"
#include "rainbowlab/rainbow.hpp"
#include "rainbowlab/ramsey.hpp"
#include "rainbowlab/skew.hpp"

namespace rainbowlab::cli {

namespace {

using Json = nlohmann::ordered_json;

// Everything any subcommand can be given; each subcommand binds the subset it uses.
struct Options {
  std::string file;
  std::string partition;
  std::string coloring;
  std::string points;
  std::string out;
  std::string partition_out;
  std::string check;
  std::string domain;
  std::string subset;
  std::string params;
  std::string sizes;
  std::string mode = "plain";
  std::string method;
  std::string engine = "auto";
  std::string format = "json";
  int arity = 0;
  int n = 0;
  int m = 0;
  int r = 0;
  int c = 0;
  int p = 0;
  int K = 0;
  int L = 0;
  int dim = 2;
  int depth = 0;
  int max_points = 48;
  int threads = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
};

// Collects the run report while a subcommand executes.
struct Report {
  Json inputs = Json::object();
  Json result = Json::object();
  Json budget = Json::object();
  std::optional<std::uint64_t> seed;
  std::vector<std::string> outputs;
};

std::string load(const std::string& path, Report& rep) {
  std::string text = read_file(path);
  rep.inputs[path] = fnv1a_hex(text);
  return text;
}

void save(const std::string& path, const std::string& text, Report& rep) {
  write_file(path, text);
  rep.outputs.push_back(path);
}

IndexSet parse_list(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  return parse_index_set(cleaned);
}

std::string need(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string("missing required flag ") + flag);
  return value;
}

Json to_json(const RainbowVerdict& v, const PointSet& X) {
  Json j;
  j["holds"] = v.holds;
  if (v.holds) return j;
  j["kind"] = std::string(to_string(v.kind));
  j["arity"] = v.arity;
  j["first"] = v.first;
  if (v.kind != ViolationKind::OffHyperplane) j["first_squared_volume"] = to_string(squared_volume(X, v.first).value);
  if (!v.second.empty()) {
    j["second"] = v.second;
    j["second_squared_volume"] = to_string(squared_volume(X, v.second).value);
  }
  j["witness_valid"] = witness_is_valid(X, v);
  return j;
}

Json to_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

int resolve_threads(int requested) {
  int threads = requested > 0 ? requested : 1;
  if (const char* cap = std::getenv("RAINBOWLAB_THREADS")) {
    const int limit = std::atoi(cap);
    if (limit > 0) threads = requested > 0 ? std::min(requested, limit) : limit;
  }
  const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return std::clamp(threads, 1, hw);
}

// ---- subcommands; each returns an exit code ----

int cmd_volume(const Options& o, Report& rep) {
  const PointSet X = parse_pointset(load(need(o.file, "--file"), rep));
  IndexSet idx = o.subset.empty() ? IndexSet{} : parse_list(o.subset);
  if (o.subset.empty())
    for (Index i = 0; i < X.size(); ++i) idx.push_back(i);
  for (Index i : idx)
    if (i >= X.size()) throw InputError("subset index out of range: " + std::to_string(i));
  if (idx.empty()) throw InputError("volume needs at least one point");
  rep.result["indices"] = idx;
  rep.result["arity"] = static_cast<int>(idx.size());
  rep.result["squared_volume"] = to_string(squared_volume(X, idx).value);
  rep.result["cayley_menger"] = to_string(cayley_menger_det(X, idx));
  rep.result["degenerate"] = is_degenerate(X, idx);
  return kExitHolds;
}

int cmd_check_rainbow(const Options& o, Report& rep) {
  const PointSet full = parse_pointset(load(need(o.file, "--file"), rep));
  const PointSet X = o.subset.empty() ? full : full.subset(parse_list(o.subset));
  const RainbowMode mode = parse_rainbow_mode(o.mode);
  const RainbowVerdict v = check_rainbow(X, o.arity, mode);
  rep.result["mode"] = std::string(to_string(mode));
  rep.result["arity"] = o.arity;
  rep.result["verdict"] = to_json(v, X);
  return v.holds ? kExitHolds : kExitFails;
}

int cmd_max_rainbow(const Options& o, Report& rep) {
  const PointSet X = parse_pointset(load(need(o.file, "--file"), rep));
  const RainbowMode mode = parse_rainbow_mode(o.mode);
  const SearchMethod method = parse_search_method(o.method.empty() ? "exact" : o.method);
  RainbowSearchBudget budget;
  budget.max_points = o.max_points;
  if (o.budget) budget.max_nodes = *o.budget;
  rep.budget["limit"] = budget.max_nodes;
  const auto res = max_rainbow_subset(X, o.arity, mode, method, budget);
  rep.budget["used"] = res.nodes;
  rep.result["mode"] = std::string(to_string(mode));
  rep.result["method"] = std::string(to_string(method));
  rep.result["arity"] = o.arity;
  rep.result["size"] = static_cast<int>(res.subset.size());
  rep.result["subset"] = res.subset;
  if (!o.out.empty()) save(o.out, format_pointset(X.subset(res.subset)), rep);
  return res.subset.size() >= static_cast<std::size_t>(o.arity) ? kExitHolds : kExitFails;
}

Json strong_levels(const PointSet& X) {
  Json levels = Json::array();
  for (int a = 2; a <= std::min(X.dim() + 1, X.size()); ++a) levels.push_back(check_rainbow(X, a, RainbowMode::Strong).holds);
  return levels;
}

int cmd_gen_points(const Options& o, Report& rep) {
  rep.seed = o.seed;
  const PointSet X = gen_general_position(o.n, o.dim, o.seed);
  const std::string text = format_pointset(X);
  rep.result["n"] = o.n;
  rep.result["dim"] = o.dim;
  rep.result["digest"] = fnv1a_hex(text);
  rep.result["strong_for_arity_from_2"] = strong_levels(X);
  if (!o.out.empty()) save(o.out, text, rep);
  else rep.result["pointset"] = text;
  return kExitHolds;
}

int cmd_gen_lines(const Options& o, Report& rep) {
  rep.seed = o.seed;
  const IndexSet sizes = parse_list(need(o.sizes, "--sizes"));
  const auto [X, E] = gen_parallel_lines(sizes, o.dim, o.seed);
  const std::string pts = format_pointset(X);
  const std::string part = format_partition(E);
  rep.result["sizes"] = sizes;
  rep.result["dim"] = o.dim;
  rep.result["digest"] = fnv1a_hex(pts);
  if (!o.out.empty()) save(o.out, pts, rep);
  else rep.result["pointset"] = pts;
  if (!o.partition_out.empty()) save(o.partition_out, part, rep);
  else rep.result["partition"] = part;
  return kExitHolds;
}

int cmd_classify_config(const Options& o, Report& rep) {
  const PointSet X = parse_pointset(load(need(o.file, "--file"), rep));
  const Partition E = parse_partition(load(need(o.partition, "--partition"), rep));
  const EConfigReport cfg = classify_e_config(X, E);
  Json levels = Json::array();
  for (const auto& l : cfg.per_class_strict_level) levels.push_back(to_json(l));
  rep.result["per_class_strict_level"] = levels;
  rep.result["a_star"] = to_json(cfg.a_star);
  rep.result["global_strong_level"] = cfg.global_strong_level;
  rep.result["conclusion_holds"] = cfg.conclusion_holds;
  Json viol = Json::array();
  for (const auto& v : cfg.violations) viol.push_back(to_json(v, X));
  rep.result["violations"] = viol;
  return cfg.conclusion_holds ? kExitHolds : kExitFails;
}

Json code_to_json(const VolumeColorCode& code) {
  Json j;
  j["clean"] = code.is_clean();
  Json zeros = Json::object();
  Json equal = Json::object();
  for (int a = 2; a <= code.a; ++a) {
    const auto z = code.zero_subsets_at(a);
    if (!z.empty()) zeros[std::to_string(a)] = z;
    Json pairs = Json::array();
    for (const auto& [u, v] : code.equal_pairs_at(a)) pairs.push_back(Json::array({u, v}));
    if (!pairs.empty()) equal[std::to_string(a)] = pairs;
  }
  j["degenerate_positions"] = zeros;
  j["equal_volume_positions"] = equal;
  return j;
}

int cmd_make_coloring(const Options& o, Report& rep) {
  const PointSet X = parse_pointset(load(need(o.file, "--file"), rep));
  const VolumeColoring vc = make_volume_coloring(X, o.arity);
  const std::string text = format_coloring(vc.coloring);
  rep.result["n"] = vc.coloring.n();
  rep.result["r"] = vc.coloring.r();
  rep.result["colors"] = vc.coloring.c();
  rep.result["digest"] = fnv1a_hex(text);
  Json codes = Json::array();
  for (const auto& code : vc.codes) codes.push_back(code_to_json(code));
  rep.result["codes"] = codes;
  if (!o.out.empty()) save(o.out, text, rep);
  return kExitHolds;
}

int cmd_find_homog(const Options& o, Report& rep) {
  const Coloring g = parse_coloring(load(need(o.coloring, "--coloring"), rep), o.c > 0 ? std::optional<int>(o.c) : std::nullopt);
  const IndexSet A = o.params.empty() ? IndexSet{} : parse_list(o.params);
  rep.result["params"] = A;
  if (!o.check.empty()) {
    const IndexSet X = parse_index_set(load(o.check, rep));
    const bool ok = static_cast<int>(X.size()) >= o.m &&
                    (A.empty() ? is_homogeneous(g, X) : is_homogeneous_over(g, A, X));
    rep.result["checked"] = X;
    rep.result["holds"] = ok;
    return ok ? kExitHolds : kExitFails;
  }
  const HomogMethod method = parse_homog_method(o.method.empty() ? "exhaustive" : o.method);
  NodeBudget budget(o.budget.value_or(NodeBudget::kDefaultLimit));
  rep.budget["limit"] = budget.limit();
  std::optional<IndexSet> found;
  try {
    found = A.empty() ? find_homogeneous(g, o.m, method, {}, &budget)
                      : find_homogeneous_over(g, A, o.m, method, {}, &budget);
  } catch (const BudgetExceeded&) {
    rep.budget["used"] = budget.used();
    throw;
  }
  rep.budget["used"] = budget.used();
  rep.result["method"] = std::string(to_string(method));
  rep.result["m"] = o.m;
  rep.result["found"] = found.has_value();
  if (found) {
    rep.result["subset"] = *found;
    if (A.empty() && found->size() >= static_cast<std::size_t>(g.r()))
      rep.result["color"] = g.at(std::span<const Index>(found->data(), static_cast<std::size_t>(g.r())));
    if (!o.out.empty()) save(o.out, format_index_set(*found), rep);
  }
  return found ? kExitHolds : kExitFails;
}

int cmd_arrow_check(const Options& o, Report& rep) {
  ArrowQuery q{o.n, o.m, o.r, o.c, o.p};
  const std::uint64_t limit = o.budget.value_or(1ULL << 26);
  const int threads = resolve_threads(o.threads);
  rep.budget["limit"] = limit;
  rep.result["query"] = {{"n", q.n}, {"m", q.m}, {"r", q.r}, {"c", q.c}, {"p", q.p}};
  rep.result["threads"] = threads;
  const ArrowResult res = arrow_check(q, limit, threads);
  rep.budget["used"] = res.colorings_checked;
  rep.result["holds"] = res.holds;
  rep.result["colorings_checked"] = res.colorings_checked;
  if (res.counterexample) {
    const std::string text = format_coloring(*res.counterexample);
    rep.result["counterexample"] = {{"params", res.counterexample_params},
                                    {"lex_colors", res.counterexample->lex_colors()},
                                    {"digest", fnv1a_hex(text)}};
    if (!o.out.empty()) save(o.out, text, rep);
  }
  return res.holds ? kExitHolds : kExitFails;
}

// A convexify certificate: every listed class lies inside one E-class, there are
// >= K classes of size >= L, and each is convex in their union.
bool check_convex_classes(const Partition& E, const std::vector<IndexSet>& classes, int K, int L, std::string& why) {
  IndexSet X;
  std::vector<int> seen;
  for (const auto& cls : classes) {
    if (cls.empty() || !strictly_increasing(cls) || cls.back() >= E.n()) {
      why = "class is not a sorted subset of the ground set";
      return false;
    }
    const int label = E.class_of(cls.front());
    for (Index i : cls)
      if (E.class_of(i) != label) {
        why = "class crosses E-classes";
        return false;
      }
    if (std::find(seen.begin(), seen.end(), label) != seen.end()) {
      why = "two classes come from the same E-class";
      return false;
    }
    seen.push_back(label);
    X.insert(X.end(), cls.begin(), cls.end());
  }
  std::sort(X.begin(), X.end());
  int big = 0;
  for (const auto& cls : classes) {
    if (!is_convex(cls, X)) {
      why = "class " + format_index_set(cls) + " is not convex";
      return false;
    }
    if (static_cast<int>(cls.size()) >= L) ++big;
  }
  if (big < K) {
    why = "fewer than K classes of size >= L";
    return false;
  }
  return true;
}

// Classes one per line, without the coverage requirement of a partition file.
std::vector<IndexSet> parse_class_list(const std::string& text) {
  std::vector<IndexSet> classes;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    classes.push_back(parse_index_set(line));
  }
  return classes;
}

int cmd_convexify(const Options& o, Report& rep) {
  const Partition E = parse_partition(load(need(o.partition, "--partition"), rep));
  rep.result["K"] = o.K;
  rep.result["L"] = o.L;
  if (!o.check.empty()) {
    const std::vector<IndexSet> classes = parse_class_list(load(o.check, rep));
    std::string why;
    const bool ok = check_convex_classes(E, classes, o.K, o.L, why);
    rep.result["holds"] = ok;
    if (!ok) rep.result["reason"] = why;
    return ok ? kExitHolds : kExitFails;
  }
  ConvexifyOptions opts;
  opts.use_ramification = o.engine == "auto" || o.engine == "ramification";
  opts.use_direct = o.engine == "auto" || o.engine == "direct";
  if (!opts.use_ramification && !opts.use_direct) throw InputError("unknown engine '" + o.engine + "'");
  if (o.budget) opts.max_nodes = *o.budget;
  rep.budget["limit"] = opts.max_nodes;
  const auto res = convexify(E, o.K, o.L, opts);
  rep.result["found"] = res.has_value();
  if (res) {
    rep.result["engine"] = res->engine == ConvexifyEngine::Ramification ? "ramification" : "direct";
    rep.result["X"] = res->X;
    rep.result["classes"] = res->classes;
    if (!o.out.empty()) save(o.out, format_partition(res->classes), rep);
  }
  return res ? kExitHolds : kExitFails;
}

int cmd_extract_ehomog(const Options& o, Report& rep) {
  const Partition E = parse_partition(load(need(o.partition, "--partition"), rep));
  const Coloring g = parse_coloring(load(need(o.coloring, "--coloring"), rep), o.c > 0 ? std::optional<int>(o.c) : std::nullopt);
  if (!o.check.empty()) {
    const IndexSet X = parse_index_set(load(o.check, rep));
    const EHomogCheck chk = is_e_homogeneous(X, E, g);
    rep.result["checked"] = X;
    rep.result["holds"] = chk.holds;
    if (chk.counterexample)
      rep.result["counterexample"] = Json::array({chk.counterexample->first, chk.counterexample->second});
    return chk.holds ? kExitHolds : kExitFails;
  }
  const IndexSet domain = o.domain.empty() ? IndexSet{} : [&] {
    IndexSet d = parse_index_set(load(o.domain, rep));
    std::sort(d.begin(), d.end());
    return d;
  }();
  ExtractionRequest req{o.K, o.L, g.r(), g.c()};
  const std::uint64_t limit = o.budget.value_or(20'000'000);
  rep.budget["limit"] = limit;
  const ExtractionOutcome res = extract_e_homogeneous(E, g, req, domain, limit);
  rep.result["request"] = {{"K", req.K}, {"L", req.L}, {"r", req.r}, {"c", req.c}};
  rep.result["classes_used"] = res.classes_used;
  rep.result["found"] = res.certificate.has_value();
  if (!res.certificate) {
    rep.result["failure_stage"] = res.failure_stage;
    return kExitFails;
  }
  const auto& cert = *res.certificate;
  Json patterns = Json::array();
  for (const auto& [labels, color] : cert.pattern_colors) patterns.push_back({{"pattern", labels}, {"color", color}});
  rep.result["certificate"] = {
      {"X", cert.X}, {"classes", cert.classes}, {"pattern_colors", patterns}, {"verified", cert.verified}};
  if (!o.out.empty()) save(o.out, format_index_set(cert.X), rep);
  return kExitHolds;
}

int cmd_skew_build(const Options& o, Report& rep) {
  const SkewSet C = build_skew_set(o.depth);
  const std::string text = format_words(C.words());
  rep.result["depth"] = o.depth;
  rep.result["size"] = C.size();
  rep.result["word_length"] = C.word_length();
  rep.result["digest"] = fnv1a_hex(text);
  if (!o.out.empty()) save(o.out, text, rep);
  else {
    Json words = Json::array();
    for (const auto& w : C.words()) words.push_back(w.str());
    rep.result["words"] = words;
  }
  return kExitHolds;
}

Json table_to_json(const CanonicityCheck& chk) {
  Json rows = Json::array();
  for (const auto& [type, color] : chk.table) rows.push_back({{"ascending_gaps", type.ascending}, {"color", color}});
  return rows;
}

// Restricts a coloring of C's a-subsets to the sub-family `idx` (sorted), reindexed.
Coloring induced(const Coloring& f, std::span<const Index> idx) {
  const int k = static_cast<int>(idx.size());
  Coloring h(k, f.r(), f.c());
  for_each_combination(k, f.r(), [&](std::span<const Index> pos) {
    const IndexSet s = select(idx, pos);
    h.set(pos, f.at(s));
    return true;
  });
  return h;
}

int cmd_skew_check(const Options& o, Report& rep) {
  const auto words = parse_words(load(need(o.file, "--file"), rep));
  std::vector<BinaryWord> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  const bool unique = has_unique_meets(sorted);
  rep.result["size"] = static_cast<int>(sorted.size());
  rep.result["meet_unique"] = unique;
  bool ok = unique;
  const int a = o.arity > 0 ? o.arity : std::min<int>(3, static_cast<int>(sorted.size()));
  bool all_skew = true;
  IndexSet bad;
  for (int k = 2; k <= a && all_skew; ++k) {
    for_each_combination(static_cast<int>(sorted.size()), k, [&](std::span<const Index> s) {
      std::vector<BinaryWord> u;
      for (Index i : s) u.push_back(sorted[static_cast<std::size_t>(i)]);
      if (is_skew_tuple(u)) return true;
      all_skew = false;
      bad.assign(s.begin(), s.end());
      return false;
    });
  }
  rep.result["max_arity"] = a;
  rep.result["all_subsets_skew"] = all_skew;
  if (!all_skew) rep.result["non_skew_subset"] = bad;
  ok = ok && all_skew;
  if (!o.coloring.empty()) {
    if (!unique) throw InputError("canonicity check needs a meet-unique word set");
    const SkewSet C(sorted);
    Coloring f = parse_coloring(load(o.coloring, rep), o.c > 0 ? std::optional<int>(o.c) : std::nullopt);
    std::optional<SkewSet> sub;
    if (!o.subset.empty()) {
      const IndexSet idx = parse_index_set(load(o.subset, rep));
      if (static_cast<int>(idx.size()) < f.r()) throw InputError("--subset is smaller than the coloring arity");
      f = induced(f, idx);
      sub = C.subset(idx);
    }
    const SkewSet& target = sub ? *sub : C;
    if (f.n() != target.size()) throw InputError("coloring size does not match the word set");
    const CanonicityCheck chk = check_fstar_canonical(target, f);
    rep.result["canonical"] = chk.canonical;
    if (chk.canonical) rep.result["table"] = table_to_json(chk);
    if (chk.counterexample)
      rep.result["counterexample"] = Json::array({chk.counterexample->first, chk.counterexample->second});
    ok = ok && chk.canonical;
  }
  return ok ? kExitHolds : kExitFails;
}

int cmd_skew_search(const Options& o, Report& rep) {
  const SkewSet C(parse_words(load(need(o.file, "--file"), rep)));
  const Coloring f = [&] {
    if (!o.coloring.empty())
      return parse_coloring(load(o.coloring, rep), o.c > 0 ? std::optional<int>(o.c) : std::nullopt);
    if (o.points.empty()) throw InputError("skew-search needs --coloring or --points");
    // Leaves are mapped to the points in sorted word order.
    const PointSet X = parse_pointset(load(o.points, rep));
    if (X.size() != C.size()) throw InputError("--points must have one point per word");
    return make_volume_coloring(X, o.arity).coloring;
  }();
  if (f.n() != C.size()) throw InputError("coloring size does not match the word set");
  const std::uint64_t limit = o.budget.value_or(5'000'000);
  rep.budget["limit"] = limit;
  const SkewSearchResult res = find_canonical_skew_subset(C, f, o.depth, limit);
  rep.budget["used"] = res.candidates;
  rep.result["depth"] = o.depth;
  rep.result["found"] = res.subset.has_value();
  if (res.subset) {
    rep.result["subset"] = *res.subset;
    // Below the arity there is nothing to color and the table is empty.
    if (static_cast<int>(res.subset->size()) >= f.r())
      rep.result["table"] = table_to_json(check_fstar_canonical(C.subset(*res.subset), induced(f, *res.subset)));
    else
      rep.result["table"] = Json::array();
    if (!o.out.empty()) save(o.out, format_index_set(*res.subset), rep);
  }
  return res.subset ? kExitHolds : kExitFails;
}

void print_text(const Json& j, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object() && !value.empty()) print_text(value, name, out);
    else if (value.is_string()) out << name << ": " << value.get<std::string>() << '\n';
    else out << name << ": " << value.dump() << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact volume-rainbow and canonical Ramsey toolkit", "rainbowlab"};
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, std::function<int(const Options&, Report&)>> handlers;

  auto add = [&](const char* name, const char* about, std::function<int(const Options&, Report&)> fn) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    handlers[sub] = std::move(fn);
    return sub;
  };

  auto* volume = add("volume", "squared volume and Cayley-Menger determinant of a tuple", cmd_volume);
  volume->add_option("--file", o.file, "point set")->required();
  volume->add_option("--subset", o.subset, "indices of the tuple (default: all points)");

  auto* check = add("check-rainbow", "decide the a-rainbow predicate", cmd_check_rainbow);
  check->add_option("--file", o.file, "point set")->required();
  check->add_option("--arity", o.arity, "a")->required();
  check->add_option("--mode", o.mode, "plain, strong or strict");
  check->add_option("--subset", o.subset, "restrict to these indices");

  auto* maxr = add("max-rainbow", "largest rainbow subset", cmd_max_rainbow);
  maxr->add_option("--file", o.file, "point set")->required();
  maxr->add_option("--arity", o.arity, "a")->required();
  maxr->add_option("--mode", o.mode, "plain, strong or strict");
  maxr->add_option("--method", o.method, "exact or greedy");
  maxr->add_option("--budget", o.budget, "node limit");
  maxr->add_option("--max-points", o.max_points, "refuse larger inputs in exact mode");
  maxr->add_option("--out", o.out, "write the subset as a point set");

  auto* genp = add("gen-points", "points in general position", cmd_gen_points);
  genp->add_option("--n", o.n, "number of points")->required();
  genp->add_option("--dim", o.dim, "dimension");
  genp->add_option("--seed", o.seed, "seed");
  genp->add_option("--out", o.out, "point set file");

  auto* genl = add("gen-lines", "points on parallel lines", cmd_gen_lines);
  genl->add_option("--sizes", o.sizes, "points per line, e.g. 4,4")->required();
  genl->add_option("--dim", o.dim, "dimension");
  genl->add_option("--seed", o.seed, "seed");
  genl->add_option("--out", o.out, "point set file");
  genl->add_option("--partition-out", o.partition_out, "partition file (one line per class)");

  auto* classify = add("classify-config", "strict levels of classes and the global strong level", cmd_classify_config);
  classify->add_option("--file", o.file, "point set")->required();
  classify->add_option("--partition", o.partition, "partition file")->required();

  auto* mkcol = add("make-coloring", "volume coloring of 2a-subsets", cmd_make_coloring);
  mkcol->add_option("--file", o.file, "point set")->required();
  mkcol->add_option("--arity", o.arity, "a")->required();
  mkcol->add_option("--out", o.out, "coloring file");

  auto* fh = add("find-homog", "homogeneous set, optionally over parameters", cmd_find_homog);
  fh->add_option("--coloring", o.coloring, "coloring file")->required();
  fh->add_option("--m", o.m, "size wanted")->required();
  fh->add_option("--c", o.c, "number of colors (default: inferred)");
  fh->add_option("--method", o.method, "exhaustive or stepwise");
  fh->add_option("--params", o.params, "parameter set A, e.g. 0,3");
  fh->add_option("--budget", o.budget, "node limit");
  fh->add_option("--out", o.out, "write the set found");
  fh->add_option("--check", o.check, "verify the set in this file instead of searching");

  auto* arrow = add("arrow-check", "exhaust n -> (m)^r_{c,p}", cmd_arrow_check);
  arrow->add_option("--n", o.n, "n")->required();
  arrow->add_option("--m", o.m, "m")->required();
  arrow->add_option("--r", o.r, "r")->required();
  arrow->add_option("--c", o.c, "c")->required();
  arrow->add_option("--p", o.p, "parameter set size bound");
  arrow->add_option("--budget", o.budget, "case limit");
  arrow->add_option("--threads", o.threads, "worker threads (capped by RAINBOWLAB_THREADS)");
  arrow->add_option("--out", o.out, "write the counterexample coloring");

  auto* cvx = add("convexify", "K classes of size L, each convex in their union", cmd_convexify);
  cvx->add_option("--partition", o.partition, "partition file")->required();
  cvx->add_option("--K", o.K, "classes")->required();
  cvx->add_option("--L", o.L, "class size")->required();
  cvx->add_option("--engine", o.engine, "auto, ramification or direct");
  cvx->add_option("--budget", o.budget, "node limit");
  cvx->add_option("--out", o.out, "write the classes as a partition file");
  cvx->add_option("--check", o.check, "verify the classes in this file instead of searching");

  auto* ext = add("extract-ehomog", "E-homogeneous set by the nested-set pipeline", cmd_extract_ehomog);
  ext->add_option("--partition", o.partition, "partition file")->required();
  ext->add_option("--coloring", o.coloring, "coloring file")->required();
  ext->add_option("--K", o.K, "classes");
  ext->add_option("--L", o.L, "class size");
  ext->add_option("--c", o.c, "number of colors (default: inferred)");
  ext->add_option("--domain", o.domain, "index file within which the classes are convex");
  ext->add_option("--budget", o.budget, "node limit");
  ext->add_option("--out", o.out, "write X");
  ext->add_option("--check", o.check, "verify the set in this file instead of searching");

  auto* sb = add("skew-build", "skew set of height m", cmd_skew_build);
  sb->add_option("--depth", o.depth, "height m")->required();
  sb->add_option("--out", o.out, "word file");

  auto* sc = add("skew-check", "meet uniqueness, skew subsets and canonicity", cmd_skew_check);
  sc->add_option("--file", o.file, "word file")->required();
  sc->add_option("--arity", o.arity, "check all subsets of size 2..a (default 3)");
  sc->add_option("--coloring", o.coloring, "coloring of a-subsets to test for canonicity");
  sc->add_option("--c", o.c, "number of colors (default: inferred)");
  sc->add_option("--subset", o.subset, "index file restricting the words and the coloring");

  auto* ss = add("skew-search", "perfect subset on which a coloring is canonical", cmd_skew_search);
  ss->add_option("--file", o.file, "word file")->required();
  ss->add_option("--depth", o.depth, "height m of the subset")->required();
  ss->add_option("--coloring", o.coloring, "coloring file");
  ss->add_option("--c", o.c, "number of colors (default: inferred)");
  ss->add_option("--points", o.points, "color by the volume coloring of these points instead");
  ss->add_option("--arity", o.arity, "a for --points");
  ss->add_option("--budget", o.budget, "candidate limit");
  ss->add_option("--out", o.out, "write the subset indices");

  std::vector<const char*> argv{"rainbowlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    CLI::App* active = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << active->help();
    return kExitError;
  }

  CLI::App* sub = app.get_subcommands().front();
  Report rep;
  Json report;
  report["command"] = sub->get_name();
  report["args"] = args;
  int code = kExitError;
  const auto start = std::chrono::steady_clock::now();
  try {
    code = handlers.at(sub)(o, rep);
  } catch (const BudgetExceeded& e) {
    rep.budget["used"] = e.used();
    rep.budget["limit"] = e.limit();
    report["error"] = {{"kind", "budget"}, {"message", e.what()}};
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    report["error"] = {{"kind", "input"}, {"message", e.what()}};
    err << "error: " << e.what() << '\n';
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  report["inputs"] = rep.inputs;
  if (rep.seed) report["seed"] = *rep.seed;
  if (!rep.budget.empty()) report["budget"] = rep.budget;
  report["result"] = rep.result;
  if (!rep.outputs.empty()) report["outputs"] = rep.outputs;
  report["exit_code"] = code;
  report["timing"] = {{"elapsed_ms", ms}};

  if (o.format == "text") print_text(report, "", out);
  else out << report.dump(2) << '\n';
  return code;
}

}  // namespace rainbowlab::cli
