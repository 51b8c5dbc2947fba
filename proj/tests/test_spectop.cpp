#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "pbw/spectop.hpp"

using namespace pbw;

namespace {

struct RandomPoset {
  std::vector<PosetNode> nodes;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::string> max;
  std::vector<std::vector<bool>> leq;  // reflexive-transitive closure
};

RandomPoset random_poset(std::mt19937& rng, unsigned n) {
  RandomPoset P;
  P.leq.assign(n, std::vector<bool>(n, false));
  std::bernoulli_distribution edge(0.35), tag(0.5);
  for (unsigned i = 0; i < n; ++i) {
    P.nodes.push_back({"p" + std::to_string(i), tag(rng), tag(rng)});
    P.leq[i][i] = true;
  }
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      if (edge(rng)) {
        P.covers.emplace_back(P.nodes[i].name, P.nodes[j].name);
        P.leq[i][j] = true;
      }
  for (unsigned k = 0; k < n; ++k)
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        if (P.leq[i][k] && P.leq[k][j]) P.leq[i][j] = true;
  for (unsigned i = 0; i < n; ++i) {
    bool maximal = true;
    for (unsigned j = 0; j < n; ++j) maximal = maximal && (j == i || !P.leq[i][j]);
    if (maximal) P.max.push_back(P.nodes[i].name);
  }
  return P;
}

ElementSet bits(unsigned n, unsigned mask) {
  ElementSet s(n);
  for (unsigned i = 0; i < n; ++i)
    if ((mask >> i) & 1u) s.set(i);
  return s;
}

bool is_down_set(const std::vector<std::vector<bool>>& leq, const ElementSet& s) {
  for (std::size_t x = 0; x < leq.size(); ++x)
    for (std::size_t y = 0; y < leq.size(); ++y)
      if (s.test(x) && leq[y][x] && !s.test(y)) return false;
  return true;
}

bool normal_by_brute_force(const RandomPoset& P) {
  const unsigned n = static_cast<unsigned>(P.leq.size());
  std::vector<ElementSet> opens, closed;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (is_down_set(P.leq, bits(n, m))) {
      opens.push_back(bits(n, m));
      closed.push_back(~bits(n, m));
    }
  for (const auto& A : closed)
    for (const auto& B : closed) {
      if ((A & B).any()) continue;
      bool separated = false;
      for (const auto& U : opens)
        for (const auto& V : opens)
          separated = separated || (A.is_subset_of(U) && B.is_subset_of(V) && (U & V).none());
      if (!separated) return false;
    }
  return true;
}

// A retraction onto the maximal points exists iff some map fixing Max pulls every open of the
// Max subspace back to a down-set.
bool retract_by_brute_force(const RandomPoset& P, const FiniteTopology& T) {
  const std::size_t n = P.leq.size();
  std::vector<std::size_t> maxes, rest;
  for (std::size_t i = 0; i < n; ++i) (T.max.test(i) ? maxes : rest).push_back(i);
  const auto sub = T.subspace_opens(T.max);
  std::vector<std::size_t> choice(rest.size(), 0);
  while (true) {
    std::vector<std::size_t> r(n);
    for (std::size_t m : maxes) r[m] = m;
    for (std::size_t k = 0; k < rest.size(); ++k) r[rest[k]] = maxes[choice[k]];
    bool continuous = true;
    for (const auto& U : sub) {
      ElementSet pre(n);
      for (std::size_t i = 0; i < n; ++i)
        if (U.test(r[i])) pre.set(i);
      continuous = continuous && is_down_set(P.leq, pre);
    }
    if (continuous) return true;
    std::size_t k = rest.size();
    while (k > 0 && ++choice[k - 1] == maxes.size()) choice[--k] = 0;
    if (k == 0) return false;
  }
}

}  // namespace

TEST_CASE("spectrum of Z6 is two discrete maximal points") {
  const auto B = spectra(make_zn(6));
  CHECK(B.spec.size() == 2);
  CHECK(B.spec.max.count() == 2);
  CHECK(B.spec.sspec.count() == 2);
  CHECK(B.spec.jspec.count() == 2);
  CHECK(B.spec.opens.size() == 4);  // discrete
  CHECK_FALSE(B.zariski_failure.has_value());
  const TopoReport tp = topo_properties(B.spec);
  CHECK(tp.t1);
  CHECK(tp.normal);
  CHECK(tp.max_hausdorff);
  CHECK(pm_checks(B.spec).degenerate);
}

TEST_CASE("local rings have a one-point spectrum") {
  for (const FiniteRing& R : {make_zn(4), make_ut2_equal_diag(5), make_trunc_st(2, 3)}) {
    const auto B = spectra(R);
    CHECK(B.spec.size() == 1);
    CHECK(B.spec.max.count() == 1);
    CHECK(B.o_matches_subspace);
    CHECK(B.d_matches_subspace);
  }
}

TEST_CASE("finite ring spectra: Spec = Max and the Zariski laws") {
  for (const FiniteRing& R : {make_zn(12), make_zn(30), make_gf(9), make_ut2(3), make_product(make_zn(4), make_zn(3))}) {
    INFO(R.name());
    const auto B = spectra(R);
    CHECK(B.spec.max.count() == B.spec.size());
    CHECK(B.spec.max.is_subset_of(B.spec.sspec));
    CHECK(B.spec.max.is_subset_of(B.spec.jspec));
    CHECK_FALSE(B.zariski_failure.has_value());
    CHECK(spectral_consistency(B.spec).empty());
    const PmReport pm = pm_checks(B.spec);
    CHECK(pm.pm.value);
    CHECK(pm.weakly_pm.value);
    CHECK(pm.j_pm.value);
  }
}

TEST_CASE("Sierpinski chain") {
  const auto T = synthetic_space("s", {{"p", false, true}, {"m", false, false}}, {{"p", "m"}}, {"m"});
  const ElementSet p = bits(2, 1), m = bits(2, 2);
  CHECK(T.is_open(p));
  CHECK_FALSE(T.is_open(m));
  CHECK(T.min_open(m) == bits(2, 3));
  const TopoReport tp = topo_properties(T);
  CHECK(tp.t0);
  CHECK_FALSE(tp.t1);
  const RetractVerdict rv = retract_exists(T);
  REQUIRE(rv.kind == RetractVerdict::Kind::Exists);
  CHECK(rv.retraction == std::vector<std::size_t>{1, 1});
  CHECK(rv.candidates == 1);
  CHECK(pm_checks(T).j_pm.value);
}

TEST_CASE("two maximal points over one prime") {
  const auto T = synthetic_space("vee", {{"p"}, {"m1"}, {"m2"}}, {{"p", "m1"}, {"p", "m2"}}, {"m1", "m2"});
  const PmReport pm = pm_checks(T);
  CHECK_FALSE(pm.pm.value);
  REQUIRE(pm.pm.witness.has_value());
  CHECK(pm.pm.witness->rfind("p lies below 2", 0) == 0);
  const RetractVerdict rv = retract_exists(T);
  CHECK(rv.kind == RetractVerdict::Kind::None);
  CHECK(rv.candidates == 2);
  CHECK_FALSE(topo_properties(T).normal);
  CHECK(spectral_consistency(T).empty());
}

TEST_CASE("antichain is discrete") {
  const auto T = synthetic_space("a3", {{"a"}, {"b"}, {"c"}}, {}, {"a", "b", "c"});
  CHECK(T.opens.size() == 8);
  const TopoReport tp = topo_properties(T);
  CHECK(tp.t1);
  CHECK(tp.normal);
  CHECK(tp.max_hausdorff);
  const RetractVerdict rv = retract_exists(T);
  CHECK(rv.kind == RetractVerdict::Kind::Exists);
  CHECK(rv.retraction == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("malformed posets are rejected") {
  CHECK_THROWS_WITH_AS(synthetic_space("cyc", {{"a"}, {"b"}}, {{"a", "b"}, {"b", "a"}}, {"a"}),
                       doctest::Contains("a"), TopologyError);
  CHECK_THROWS_AS(synthetic_space("tags", {{"a"}, {"b"}}, {{"a", "b"}}, {"a"}), TopologyError);
  CHECK_THROWS_AS(synthetic_space("unknown", {{"a"}}, {{"a", "z"}}, {"a"}), TopologyError);
  CHECK_THROWS_AS(synthetic_space("dup", {{"a"}, {"a"}}, {}, {"a"}), TopologyError);
  std::vector<PosetNode> many;
  std::vector<std::string> names;
  for (int i = 0; i < 25; ++i) {
    many.push_back({"n" + std::to_string(i)});
    names.push_back("n" + std::to_string(i));
  }
  CHECK_THROWS_AS(synthetic_space("big", many, {}, names), TopologyError);
}

TEST_CASE("maximal points are forced into SSpec and JSpec") {
  const auto T = synthetic_space("s", {{"p"}, {"m"}}, {{"p", "m"}}, {"m"});
  CHECK(T.sspec.test(1));
  CHECK(T.jspec.test(1));
  CHECK_FALSE(T.sspec.test(0));
}

TEST_CASE("property: random posets against brute force") {
  std::mt19937 rng(424242);
  std::set<bool> seen_normal, seen_retract;
  for (int trial = 0; trial < 150; ++trial) {
    const unsigned n = 1 + rng() % 6;
    const RandomPoset P = random_poset(rng, n);
    const FiniteTopology T = synthetic_space("rand", P.nodes, P.covers, P.max);
    INFO("trial ", trial, " n=", n);

    // opens are exactly the down-sets
    std::vector<ElementSet> downs;
    for (unsigned m = 0; m < (1u << n); ++m)
      if (is_down_set(P.leq, bits(n, m))) downs.push_back(bits(n, m));
    CHECK(T.opens.size() == downs.size());
    for (const auto& d : downs) CHECK(T.is_open(d));

    // min_open is the down-closure
    for (unsigned x = 0; x < n; ++x) {
      ElementSet down(n);
      for (unsigned y = 0; y < n; ++y)
        if (P.leq[y][x]) down.set(y);
      CHECK(T.min_open(bits(n, 1u << x)) == down);
    }

    const TopoReport tp = topo_properties(T);
    CHECK(tp.t0);  // down-set topologies of partial orders are T0
    CHECK(tp.t1 == (P.covers.empty()));
    CHECK(tp.normal == normal_by_brute_force(P));
    const RetractVerdict rv = retract_exists(T);
    CHECK((rv.kind == RetractVerdict::Kind::Exists) == retract_by_brute_force(P, T));
    CHECK(spectral_consistency(T).empty());
    seen_normal.insert(tp.normal);
    seen_retract.insert(rv.kind == RetractVerdict::Kind::Exists);
  }
  CHECK(seen_normal.size() == 2);
  CHECK(seen_retract.size() == 2);
}

TEST_CASE("union closure and subspace traces") {
  const auto opens = union_closure(3, {bits(3, 1), bits(3, 2)});
  CHECK(opens.size() == 5);  // {}, {0}, {1}, {0,1}, full
  const auto T = synthetic_space("s", {{"p"}, {"m"}}, {{"p", "m"}}, {"m"});
  const auto sub = T.subspace_opens(bits(2, 2));
  CHECK(sub.size() == 2);  // {} and {m}
}

TEST_CASE("retraction budget yields an inconclusive verdict") {
  std::vector<PosetNode> nodes{{"m1"}, {"m2"}, {"m3"}};
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < 6; ++i) {
    nodes.push_back({"p" + std::to_string(i)});
    covers.emplace_back("p" + std::to_string(i), "m1");
  }
  const auto T = synthetic_space("wide", nodes, covers, {"m1", "m2", "m3"});
  const RetractVerdict rv = retract_exists(T, 10);
  CHECK(rv.kind == RetractVerdict::Kind::Inconclusive);
  CHECK(retract_exists(T).kind == RetractVerdict::Kind::Exists);
}
