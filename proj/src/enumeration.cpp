#include "halin/enumeration.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "halin/canonical.hpp"
#include "halin/cycles.hpp"
#include "halin/errors.hpp"
#include "halin/reductions.hpp"

namespace halin {

namespace {

constexpr std::size_t kTaskPrefix = 12;
constexpr std::size_t kNoStop = static_cast<std::size_t>(-1);

// Children still owed by an open vertex: the root needs 3, any other
// internal vertex 2 (a vertex with no children yet may still close as a leaf).
int owed(int children, bool root) {
  if (root) return std::max(0, 3 - children);
  return children == 1 ? 1 : 0;
}

struct Grower {
  int n;
  TreeEnumerator::Task state;

  // Depth-first extension emitting ')' before '(' so strings come out in
  // ascending canonical order.
  template <class Emit>
  void grow(std::size_t stop_at, Emit& emit) {
    auto& s = state;
    if (s.children.empty()) {
      if (s.used == n) emit(s);
      return;
    }
    if (s.prefix.size() == stop_at) {
      emit(s);
      return;
    }
    const std::size_t depth = s.children.size();
    const bool root = depth == 1;
    const int top = s.children.back();
    // The root's first child is a leaf in every canonical string.
    const bool forced_leaf = depth == 2 && s.children[0] == 1;

    if (owed(top, root) == 0 && !(root && s.used < n)) {
      s.children.pop_back();
      s.prefix.push_back(')');
      grow(stop_at, emit);
      s.prefix.pop_back();
      s.children.push_back(top);
    }
    if (!forced_leaf && s.used < n) {
      const int deficit = s.deficit - owed(top, root) + owed(top + 1, root);
      if (n - s.used - 1 >= deficit) {
        const int saved_deficit = s.deficit;
        s.children.back() = top + 1;
        s.children.push_back(0);
        s.deficit = deficit;
        ++s.used;
        s.prefix.push_back('(');
        grow(stop_at, emit);
        s.prefix.pop_back();
        --s.used;
        s.deficit = saved_deficit;
        s.children.pop_back();
        s.children.back() = top;
      }
    }
  }
};

int leaves_in(std::string_view parens) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < parens.size(); ++i) {
    if (parens[i] == '(' && parens[i + 1] == ')') ++count;
  }
  return count;
}

HalinGraph close_tree(const PlaneTree& tree) {
  return HalinGraph(tree, face_traversal_leaves(tree));
}

std::string halin1(std::string_view parens) { return "halin1 " + std::string(parens); }

}  // namespace

void check_enumerable(int n, const EnumerationConfig& config) {
  if (n < 4) throw OutOfRange("Halin graphs need n >= 4, got n=" + std::to_string(n));
  if (config.limit > kMaxEnumerationLimit) {
    throw LimitExceeded("enumeration limit " + std::to_string(config.limit) +
                        " exceeds the supported maximum " + std::to_string(kMaxEnumerationLimit));
  }
  if (n > config.limit) {
    throw LimitExceeded("n=" + std::to_string(n) + " exceeds the enumeration limit " +
                        std::to_string(config.limit) + " (raise it with --limit, up to " +
                        std::to_string(kMaxEnumerationLimit) + ")");
  }
  if (n >= kLongRunningFrom && config.progress) {
    config.progress("warning: exhaustive enumeration at n=" + std::to_string(n) +
                    " is long-running");
  }
}

TreeEnumerator::TreeEnumerator(int n) : n_(n) {
  if (n < 4) throw OutOfRange("Halin graphs need n >= 4, got n=" + std::to_string(n));
  Grower g{n, Task{"(", {0}, 1, 3}};
  auto record = [this](const Task& t) { tasks_.push_back(t); };
  g.grow(kTaskPrefix, record);
}

void TreeEnumerator::run_task(std::size_t task, const TreeVisitor& visit) const {
  Grower g{n_, tasks_.at(task)};
  Canonicalizer canon;
  auto emit = [&](const Task& t) {
    const PlaneTree tree = decode_rooted(t.prefix);
    if (canon.is_canonical(tree, t.prefix)) visit(tree, t.prefix);
  };
  g.grow(kNoStop, emit);
}

void for_each_halin(int n, const EnumerationConfig& config,
                    const std::function<void(const HalinGraph&)>& visit) {
  check_enumerable(n, config);
  const TreeEnumerator e(n);
  for (std::size_t t = 0; t < e.task_count(); ++t) {
    e.run_task(t, [&](const PlaneTree& tree, std::string_view) { visit(close_tree(tree)); });
  }
}

std::vector<HalinGraph> enumerate_halin(int n, const EnumerationConfig& config) {
  std::vector<HalinGraph> out;
  for_each_halin(n, config, [&](const HalinGraph& g) { out.push_back(g); });
  return out;
}

std::uint64_t count_halin(int n, const EnumerationConfig& config) {
  check_enumerable(n, config);
  const TreeEnumerator e(n);
  return parallel_reduce<std::uint64_t>(
      e, config.threads, [](std::uint64_t& acc, const PlaneTree&, std::string_view) { ++acc; },
      [](std::uint64_t& total, std::uint64_t part) { total += part; });
}

namespace {

struct ExtremalAcc {
  int best_leaves = -1;
  std::uint64_t count = 0;
  std::vector<std::string> witnesses;
  std::uint64_t total = 0;
};

}  // namespace

ExtremalRecord extremal_number(int n, int k, const EnumerationConfig& config) {
  if (k < 3) throw OutOfRange("cycle length must be at least 3, got " + std::to_string(k));
  check_enumerable(n, config);
  const TreeEnumerator e(n);
  const auto visit = [k](ExtremalAcc& acc, const PlaneTree& tree, std::string_view parens) {
    ++acc.total;
    // e(H) = n - 1 + L, so a tree with fewer leaves than the best cannot win.
    const int leaves = leaves_in(parens);
    if (leaves < acc.best_leaves) return;
    if (contains_cycle(close_tree(tree), k)) return;
    if (leaves > acc.best_leaves) {
      acc.best_leaves = leaves;
      acc.count = 0;
      acc.witnesses.clear();
    }
    ++acc.count;
    if (acc.witnesses.size() < kMaxStoredWitnesses) acc.witnesses.push_back(halin1(parens));
  };
  const auto merge = [](ExtremalAcc& total, ExtremalAcc&& part) {
    total.total += part.total;
    if (part.best_leaves < 0 || part.best_leaves < total.best_leaves) return;
    if (part.best_leaves > total.best_leaves) {
      total.best_leaves = part.best_leaves;
      total.count = 0;
      total.witnesses.clear();
    }
    total.count += part.count;
    for (auto& w : part.witnesses) {
      if (total.witnesses.size() >= kMaxStoredWitnesses) break;
      total.witnesses.push_back(std::move(w));
    }
  };
  const ExtremalAcc acc = parallel_reduce<ExtremalAcc>(e, config.threads, visit, merge);

  ExtremalRecord record;
  record.n = n;
  record.k = k;
  record.enumerated_total = acc.total;
  if (acc.best_leaves >= 0) {
    record.max_edges = n - 1 + acc.best_leaves;
    record.num_extremal = acc.count;
    record.witnesses = acc.witnesses;
  }
  return record;
}

bool BaseCaseAudit::all_claims_hold() const {
  return std::all_of(claims.begin(), claims.end(), [](const AuditClaim& c) { return c.holds; });
}

const LongestPathClass* BaseCaseAudit::find_class(int k) const {
  for (const auto& c : classes) {
    if (c.k == k) return &c;
  }
  return nullptr;
}

namespace {

struct AuditAcc {
  std::uint64_t total = 0;
  std::uint64_t c4_free = 0;
  std::map<int, LongestPathClass> classes;
};

std::string describe(const LongestPathClass* c) {
  if (c == nullptr) return "no graphs";
  std::ostringstream os;
  os << c->count << " graphs, e in [" << c->min_edges << ", " << c->max_edges << "]";
  return os.str();
}

class ClaimBook {
 public:
  explicit ClaimBook(const BaseCaseAudit& audit) : audit_(audit) {}

  void max_k(int bound) {
    const int top = audit_.classes.empty() ? 0 : audit_.classes.back().k;
    add("longest path length k is at most " + std::to_string(bound), top <= bound,
        "largest k observed: " + std::to_string(top));
  }
  void empty(int k) {
    const auto* c = audit_.find_class(k);
    add("there is no graph with k = " + std::to_string(k), c == nullptr, describe(c));
  }
  void none_up_to(int k) {
    bool ok = true;
    for (const auto& c : audit_.classes) ok = ok && c.k > k;
    const int low = audit_.classes.empty() ? 0 : audit_.classes.front().k;
    add("there is no graph with k <= " + std::to_string(k), ok,
        "smallest k observed: " + std::to_string(low));
  }
  void exactly(int k, int edges) {
    const auto* c = audit_.find_class(k);
    const bool ok = c != nullptr && c->min_edges == edges && c->max_edges == edges;
    add("if k = " + std::to_string(k) + " then e(H) = " + std::to_string(edges), ok, describe(c));
  }
  void at_most(int k, int edges) {
    const auto* c = audit_.find_class(k);
    const bool ok = c != nullptr && c->max_edges <= edges;
    add("if k = " + std::to_string(k) + " then e(H) <= " + std::to_string(edges), ok, describe(c));
  }
  void overall(int edges) {
    const bool ok = audit_.max_edges && *audit_.max_edges == edges;
    add("maximum e(H) over C4-free graphs is " + std::to_string(edges), ok,
        audit_.max_edges ? "observed " + std::to_string(*audit_.max_edges) : "no C4-free graph");
  }

  std::vector<AuditClaim> take() { return std::move(claims_); }

 private:
  void add(std::string statement, bool holds, std::string observed) {
    claims_.push_back({std::move(statement), holds, std::move(observed)});
  }

  const BaseCaseAudit& audit_;
  std::vector<AuditClaim> claims_;
};

}  // namespace

BaseCaseAudit base_case_audit(int n, const EnumerationConfig& config) {
  if (n < 16 || n > 18) {
    throw OutOfRange("base-case audit covers n in {16, 17, 18}, got " + std::to_string(n));
  }
  check_enumerable(n, config);
  const TreeEnumerator e(n);
  const auto visit = [](AuditAcc& acc, const PlaneTree& tree, std::string_view) {
    ++acc.total;
    const HalinGraph g = close_tree(tree);
    if (contains_cycle(g, 4)) return;
    ++acc.c4_free;
    const int k = tree_diameter(tree);
    const int edges = g.edge_count();
    auto [it, fresh] = acc.classes.try_emplace(k, LongestPathClass{k, 0, edges, edges});
    auto& c = it->second;
    ++c.count;
    c.min_edges = std::min(c.min_edges, edges);
    c.max_edges = std::max(c.max_edges, edges);
  };
  const auto merge = [](AuditAcc& total, AuditAcc&& part) {
    total.total += part.total;
    total.c4_free += part.c4_free;
    for (const auto& [k, c] : part.classes) {
      auto [it, fresh] = total.classes.try_emplace(k, c);
      if (fresh) continue;
      it->second.count += c.count;
      it->second.min_edges = std::min(it->second.min_edges, c.min_edges);
      it->second.max_edges = std::max(it->second.max_edges, c.max_edges);
    }
  };
  const AuditAcc acc = parallel_reduce<AuditAcc>(e, config.threads, visit, merge);

  BaseCaseAudit audit;
  audit.n = n;
  audit.enumerated_total = acc.total;
  audit.c4_free_total = acc.c4_free;
  for (const auto& [k, c] : acc.classes) {
    audit.classes.push_back(c);
    audit.max_edges = std::max(audit.max_edges.value_or(c.max_edges), c.max_edges);
  }

  ClaimBook book(audit);
  book.none_up_to(3);
  switch (n) {
    case 16:
      book.max_k(6);
      book.exactly(6, 24);
      book.empty(5);
      book.exactly(4, 25);
      book.overall(25);
      break;
    case 17:
      book.max_k(6);
      book.exactly(6, 26);
      book.exactly(5, 26);
      book.empty(4);
      book.overall(26);
      break;
    case 18:
      book.max_k(7);
      book.exactly(7, 27);
      book.at_most(6, 28);
      book.empty(5);
      book.empty(4);
      book.overall(28);
      break;
  }
  audit.claims = book.take();
  return audit;
}

std::vector<ConjectureRow> conjecture_scan(int k, int n_min, int n_max, const RecordSource& source) {
  std::vector<ConjectureRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const ExtremalRecord r = source(n, k);
    ConjectureRow row;
    row.n = n;
    row.value = r.max_edges;
    row.bound = 8.0 * (n - 1) / 5.0;
    if (r.max_edges) {
      row.gap = row.bound - *r.max_edges;
      row.exceeds_bound = *r.max_edges > row.bound;
    }
    row.in_stated_range = n >= kConjectureFrom;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ConjectureRow> conjecture_scan(int k, int n_min, int n_max,
                                           const EnumerationConfig& config) {
  for (int n = n_min; n <= n_max; ++n) check_enumerable(n, config);
  return conjecture_scan(k, n_min, n_max,
                         [&](int n, int kk) { return extremal_number(n, kk, config); });
}

}  // namespace halin
