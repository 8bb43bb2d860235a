#include <map>
#include <set>

#include "doctest.h"
#include "halin/canonical.hpp"
#include "halin/constructions.hpp"
#include "halin/cycles.hpp"
#include "halin/enumeration.hpp"
#include "halin/errors.hpp"
#include "halin/serialize.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace halin;

TEST_SUITE("enumeration") {

TEST_CASE("smallest cases") {
  const auto four = enumerate_halin(4);
  REQUIRE(four.size() == 1);
  CHECK(serialize(four[0]) == serialize(wheel(3)));
  const auto five = enumerate_halin(5);
  REQUIRE(five.size() == 1);
  CHECK(serialize(five[0]) == serialize(wheel(4)));
}

TEST_CASE("counts agree with the labeled-tree oracle, n = 4..8") {
  for (int n = 4; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(count_halin(n) == oracle::count_plane_trees(n));
  }
}

TEST_CASE("counts beyond the oracle's reach are pinned") {
  // n = 4..8 are the oracle values above; the rest are regression pins.
  const std::map<int, std::uint64_t> pinned{{4, 1},   {5, 1},    {6, 2},    {7, 2},    {8, 4},
                                            {9, 6},   {10, 13},  {11, 22},  {12, 50},  {13, 106},
                                            {14, 252}, {15, 589}, {16, 1475}, {17, 3669}, {18, 9435}};
  for (auto [n, count] : pinned) {
    CAPTURE(n);
    CHECK(count_halin(n) == count);
  }
}

TEST_CASE("equal canonical codes exactly when the oracle sees a symmetry, n <= 8") {
  for (int n = 4; n <= 8; ++n) {
    std::map<std::vector<std::vector<Vertex>>, std::string> code_of_key;
    std::map<std::string, std::vector<std::vector<Vertex>>> key_of_code;
    bool consistent = true;
    oracle::for_each_labeled_embedding(n, [&](const oracle::Rotation& rot) {
      const auto key = oracle::embedding_key(rot);
      const std::string code = canonical_code(PlaneTree(rot)).parens();
      auto [a, fresh_a] = code_of_key.try_emplace(key, code);
      auto [b, fresh_b] = key_of_code.try_emplace(code, key);
      consistent = consistent && a->second == code && b->second == key;
    });
    CAPTURE(n);
    CHECK(consistent);
    CHECK(code_of_key.size() == key_of_code.size());
  }
}

TEST_CASE("canonical codes are distinct and ascending") {
  for (int n = 4; n <= 15; ++n) {
    std::string previous;
    std::set<std::string> seen;
    for (const auto& g : enumerate_halin(n)) {
      const std::string code = canonical_code(g.tree()).parens();
      CHECK(seen.insert(code).second);
      if (!previous.empty()) CHECK(compare_parens(previous, code) == std::strong_ordering::less);
      previous = code;
      CHECK(g.vertex_count() == n);
      CHECK(validate(g).valid());
    }
  }
}

TEST_CASE("constructed graphs appear in the enumeration") {
  for (int n = 4; n <= 14; ++n) {
    std::set<std::string> codes;
    for (const auto& g : enumerate_halin(n)) codes.insert(serialize(g));
    CHECK(codes.count(serialize(wheel(n - 1))) == 1);
  }
  for (int n = 16; n <= 18; ++n) {
    std::set<std::string> codes;
    for_each_halin(n, {}, [&](const HalinGraph& g) { codes.insert(serialize(g)); });
    CHECK(codes.count(serialize(extremal_family(n))) == 1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      CHECK(codes.count(serialize(random_c4free_halin(n, seed))) == 1);
    }
  }
}

TEST_CASE("task split does not change the stream") {
  const TreeEnumerator e(13);
  CHECK(e.task_count() > 1);
  std::vector<std::string> sequential;
  for (std::size_t t = 0; t < e.task_count(); ++t) {
    e.run_task(t, [&](const PlaneTree&, std::string_view p) { sequential.emplace_back(p); });
  }
  const auto parallel = parallel_reduce<std::vector<std::string>>(
      e, 4, [](std::vector<std::string>& acc, const PlaneTree&, std::string_view p) { acc.emplace_back(p); },
      [](std::vector<std::string>& all, std::vector<std::string>&& part) {
        all.insert(all.end(), part.begin(), part.end());
      });
  CHECK(parallel == sequential);
}

TEST_CASE("extremal_number") {
  SUBCASE("K4 is the only graph on 4 vertices") {
    const auto r = extremal_number(4, 4);
    CHECK_FALSE(r.max_edges.has_value());
    CHECK(r.num_extremal == 0);
    CHECK(r.witnesses.empty());
    CHECK(r.enumerated_total == 1);
  }
  SUBCASE("witnesses are C_k-free and attain the maximum") {
    for (int n = 7; n <= 16; ++n) {
      for (int k : {4, 5, 6}) {
        const auto r = extremal_number(n, k);
        CHECK(r.enumerated_total == count_halin(n));
        CHECK(r.witnesses.size() == std::min<std::uint64_t>(r.num_extremal, kMaxStoredWitnesses));
        if (!r.max_edges) continue;
        CHECK(*r.max_edges <= 2 * (n - 1));
        for (const auto& w : r.witnesses) {
          const HalinGraph g = parse(w);
          CHECK(g.edge_count() == *r.max_edges);
          CHECK_FALSE(oracle::has_cycle_by_paths(g, k));
        }
      }
    }
  }
  SUBCASE("maximum agrees with a plain scan") {
    for (int n = 8; n <= 13; ++n) {
      for (int k : {4, 5, 6, 7}) {
        std::optional<int> best;
        std::uint64_t count = 0;
        for (const auto& g : enumerate_halin(n)) {
          if (oracle::has_cycle_by_paths(g, k)) continue;
          if (!best || g.edge_count() > *best) {
            best = g.edge_count();
            count = 0;
          }
          if (g.edge_count() == *best) ++count;
        }
        const auto r = extremal_number(n, k);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(r.max_edges == best);
        CHECK(r.num_extremal == count);
      }
    }
  }
  SUBCASE("thread count does not change the record") {
    EnumerationConfig four;
    four.threads = 4;
    CHECK(extremal_number(15, 5) == extremal_number(15, 5, four));
    CHECK(count_halin(15) == count_halin(15, four));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(extremal_number(10, 2), OutOfRange);
    CHECK_THROWS_AS(extremal_number(3, 4), OutOfRange);
    CHECK_THROWS_AS(extremal_number(19, 4), LimitExceeded);
    CHECK_THROWS_AS(enumerate_halin(19), LimitExceeded);
    EnumerationConfig huge;
    huge.limit = kMaxEnumerationLimit + 1;
    CHECK_THROWS_AS(count_halin(10, huge), LimitExceeded);
  }
}

TEST_CASE("long-running sizes warn") {
  std::vector<std::string> lines;
  EnumerationConfig c;
  c.limit = 20;
  c.progress = [&](std::string_view s) { lines.emplace_back(s); };
  check_enumerable(18, c);
  CHECK(lines.empty());
  check_enumerable(19, c);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].find("long-running") != std::string::npos);
}

TEST_CASE("base_case_audit") {
  const auto a16 = base_case_audit(16);
  CHECK(a16.all_claims_hold());
  REQUIRE(a16.find_class(6));
  CHECK(a16.find_class(6)->max_edges == 24);
  CHECK(a16.find_class(5) == nullptr);
  CHECK(a16.max_edges == 25);

  const auto a17 = base_case_audit(17);
  CHECK(a17.all_claims_hold());
  CHECK(a17.find_class(4) == nullptr);

  const auto a18 = base_case_audit(18);
  CHECK(a18.all_claims_hold());
  REQUIRE(a18.find_class(7));
  CHECK(a18.find_class(7)->max_edges == 27);

  // Class totals add up to the C4-free count found by a plain scan.
  std::uint64_t c4_free = 0;
  for_each_halin(16, {}, [&](const HalinGraph& g) { c4_free += !oracle::has_c4_by_subsets(g); });
  std::uint64_t in_classes = 0;
  for (const auto& c : a16.classes) in_classes += c.count;
  CHECK(in_classes == c4_free);
  CHECK(a16.c4_free_total == c4_free);

  CHECK_THROWS_AS(base_case_audit(15), OutOfRange);
  CHECK_THROWS_AS(base_case_audit(19), OutOfRange);
}

TEST_CASE("conjecture_scan bookkeeping") {
  const RecordSource fake = [](int n, int k) {
    ExtremalRecord r;
    r.n = n;
    r.k = k;
    if (n == 20) r.max_edges = 40;  // above 8 * 19 / 5
    if (n == 21) r.max_edges = 32;  // on the bound
    if (n == 22) r.max_edges = 30;
    return r;
  };
  const auto rows = conjecture_scan(6, 19, 22, fake);
  REQUIRE(rows.size() == 4);
  CHECK_FALSE(rows[0].value.has_value());
  CHECK_FALSE(rows[0].exceeds_bound);
  CHECK_FALSE(rows[0].in_stated_range);
  CHECK(rows[1].exceeds_bound);
  CHECK_FALSE(rows[1].in_stated_range);
  CHECK(rows[2].in_stated_range);
  CHECK_FALSE(rows[2].exceeds_bound);
  CHECK(*rows[2].gap == doctest::Approx(0.0));
  CHECK(rows[3].bound == doctest::Approx(33.6));
  CHECK(*rows[3].gap == doctest::Approx(3.6));
}

}  // TEST_SUITE
