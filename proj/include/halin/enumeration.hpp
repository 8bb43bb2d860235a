#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "halin/halin_graph.hpp"

namespace halin {

inline constexpr int kDefaultEnumerationLimit = 18;
/// Hard ceiling for the configurable limit.
inline constexpr int kMaxEnumerationLimit = 22;
/// From this size on, enumeration is allowed only with a raised limit and
/// reports a runtime warning.
inline constexpr int kLongRunningFrom = 19;
/// Witness strings kept per ExtremalRecord; num_extremal still counts all.
inline constexpr std::size_t kMaxStoredWitnesses = 64;

struct EnumerationConfig {
  int limit = kDefaultEnumerationLimit;
  int threads = 1;
  /// Optional sink for progress and warning lines.
  std::function<void(std::string_view)> progress;
};

/// Throws OutOfRange for n < 4 and LimitExceeded above the configured limit
/// (or above kMaxEnumerationLimit).
void check_enumerable(int n, const EnumerationConfig& config);

/// Called for each canonical plane tree with its canonical preorder string.
using TreeVisitor = std::function<void(const PlaneTree& tree, std::string_view parens)>;

/// Orderly generation of rooted ordered trees (root >= 3 children, every
/// other internal vertex >= 2 children, root's first child a leaf) in
/// ascending canonical order, keeping a tree only when its string is its
/// canonical code. Work is split into independent tasks at a fixed prefix
/// depth; running the tasks in index order yields the sequential order.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(int n);

  int vertex_count() const noexcept { return n_; }
  std::size_t task_count() const noexcept { return tasks_.size(); }

  /// Safe to call concurrently for different (or equal) tasks.
  void run_task(std::size_t task, const TreeVisitor& visit) const;

  struct Task {
    std::string prefix;
    std::vector<int> children;  // child counts of the open vertices
    int used = 0;
    int deficit = 0;
  };

 private:
  int n_;
  std::vector<Task> tasks_;
};

/// Runs every task of `e` on `threads` workers with one accumulator per task,
/// then folds the accumulators in task order, so the result does not depend
/// on scheduling.
template <class Acc, class Visit, class Merge>
Acc parallel_reduce(const TreeEnumerator& e, int threads, Visit visit, Merge merge) {
  std::vector<Acc> partial(e.task_count());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t t = next++; t < e.task_count(); t = next++) {
      Acc& acc = partial[t];
      e.run_task(t, [&](const PlaneTree& tree, std::string_view parens) { visit(acc, tree, parens); });
    }
  };
  const int workers = std::max(1, threads);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  Acc total{};
  for (auto& p : partial) merge(total, std::move(p));
  return total;
}

/// Canonical Halin graphs on n vertices, one per plane tree up to rotation
/// and reflection, in ascending canonical order.
void for_each_halin(int n, const EnumerationConfig& config,
                    const std::function<void(const HalinGraph&)>& visit);
std::vector<HalinGraph> enumerate_halin(int n, const EnumerationConfig& config = {});
std::uint64_t count_halin(int n, const EnumerationConfig& config = {});

/// Exact ex_H(n, C_k) with witnesses.
struct ExtremalRecord {
  int n = 0;
  int k = 0;
  /// nullopt when every Halin graph on n vertices contains C_k.
  std::optional<int> max_edges;
  std::uint64_t num_extremal = 0;
  /// `halin1` strings of the first kMaxStoredWitnesses extremal graphs.
  std::vector<std::string> witnesses;
  std::uint64_t enumerated_total = 0;

  friend bool operator==(const ExtremalRecord&, const ExtremalRecord&) = default;
};

ExtremalRecord extremal_number(int n, int k, const EnumerationConfig& config = {});

/// C4-free Halin graphs on n vertices grouped by the longest-path length k
/// of the characteristic tree.
struct LongestPathClass {
  int k = 0;
  std::uint64_t count = 0;
  int min_edges = 0;
  int max_edges = 0;
};

struct AuditClaim {
  std::string statement;
  bool holds = false;
  std::string observed;
};

struct BaseCaseAudit {
  int n = 0;
  std::uint64_t enumerated_total = 0;
  std::uint64_t c4_free_total = 0;
  std::optional<int> max_edges;
  std::vector<LongestPathClass> classes;  // ascending k, non-empty classes only
  std::vector<AuditClaim> claims;

  bool all_claims_hold() const;
  const LongestPathClass* find_class(int k) const;
};

/// Per-k structure of the C4-free graphs on n in {16, 17, 18} checked
/// against the base-case claims. Throws OutOfRange for other n.
BaseCaseAudit base_case_audit(int n, const EnumerationConfig& config = {});

struct ConjectureRow {
  int n = 0;
  std::optional<int> value;
  double bound = 0.0;        // 8(n-1)/5
  std::optional<double> gap;  // bound - value
  bool in_stated_range = false;  // n >= 21
  bool exceeds_bound = false;
};

inline constexpr int kConjectureFrom = 21;

using RecordSource = std::function<ExtremalRecord(int n, int k)>;

/// Exact ex_H(n, C_k) next to 8(n-1)/5 for every n in [n_min, n_max].
std::vector<ConjectureRow> conjecture_scan(int k, int n_min, int n_max, const RecordSource& source);
std::vector<ConjectureRow> conjecture_scan(int k, int n_min, int n_max,
                                           const EnumerationConfig& config = {});

}  // namespace halin
