#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

#include "sadic/automaton.hpp"
#include "sadic/cf_algorithms.hpp"
#include "sadic/geometry.hpp"

using namespace sadic;

TEST_CASE("sturmian prefix automaton edges") {
  const auto set = std::make_shared<const SubstitutionSet>(subs::sturmian());
  const auto aut = PrefixAutomaton::build(set);
  // tau0: 0 -> 0, 1 -> 01; tau1: 0 -> 10, 1 -> 1.
  using Edge = std::tuple<int, int, IntVec, std::string>;
  std::set<Edge> got;
  for (const auto& e : aut.transitions())
    got.emplace(e.from, e.to, aut.digits()[e.t], set->operator[](e.sigma).name());
  const std::set<Edge> want{
      {0, 0, IntVec{0, 0}, "tau0"}, {1, 0, IntVec{0, 0}, "tau0"}, {1, 1, IntVec{1, 0}, "tau0"},
      {0, 1, IntVec{0, 0}, "tau1"}, {0, 0, IntVec{0, 1}, "tau1"}, {1, 1, IntVec{0, 0}, "tau1"}};
  CHECK(got == want);
  for (std::size_t s = 0; s < 2; ++s)
    for (Letter b = 0; b < 2; ++b)
      for (const auto& e : aut.into(s, b)) CHECK(e.to == b);
  CHECK(aut.to_dot().find("digraph") != std::string::npos);
}

TEST_CASE("path counts are matrix entries") {
  const Algorithm& alg = Algorithm::get(AlgorithmKind::arnoux_rauzy);
  const auto aut = PrefixAutomaton::build(alg.set_ptr());
  std::mt19937_64 rng(4);
  std::vector<std::size_t> ids(8);
  for (auto& i : ids) i = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  const IntMatrix m = partial_product(alg, ids, 2, 8);
  for (Letter a = 0; a < 3; ++a)
    for (Letter b = 0; b < 3; ++b) CHECK(path_count(aut, ids, 2, 8, a, b) == BigInt(m(a, b)));
}

TEST_CASE("worm recursion holds on random words") {
  std::mt19937_64 rng(5);
  for (const char* name : {"cassaigne", "brun", "arnoux-rauzy"}) {
    const Algorithm& alg = Algorithm::by_name(name);
    const auto aut = PrefixAutomaton::build(alg.set_ptr());
    for (int trial = 0; trial < 10; ++trial) {
      Word u(30);
      for (auto& c : u) c = Letter(std::uniform_int_distribution<int>(0, 2)(rng));
      for (std::size_t s = 0; s < alg.set().size(); ++s) CHECK(worm_recursion_check(aut, s, u));
    }
  }
}

TEST_CASE("enumerated worm matches the worm of the finite word") {
  const Algorithm& alg = Algorithm::get(AlgorithmKind::cassaigne);
  const auto aut = PrefixAutomaton::build(alg.set_ptr());
  const std::vector<std::size_t> ids{1, 0, 0, 1, 1, 0, 1};
  for (Letter b = 0; b < 3; ++b) {
    Word w{b};
    for (std::size_t k = ids.size(); k-- > 0;) w = alg.set()[ids[k]].apply(w);
    const Worm wm = worm(w, 3);
    for (Letter a = 0; a < 3; ++a) {
      const auto piece = wm.piece(a);
      const std::set<IntVec> expected(piece.begin(), piece.end());
      CHECK(enumerate_worm(aut, ids, a, ids.size(), b) == expected);
    }
  }
}

TEST_CASE("for_each_path visits M entries many paths") {
  const Algorithm& alg = Algorithm::get(AlgorithmKind::cassaigne);
  const auto aut = PrefixAutomaton::build(alg.set_ptr());
  const std::vector<std::size_t> ids{0, 1, 0, 1, 1};
  const IntMatrix m = partial_product(alg, ids, 0, ids.size());
  std::vector<std::int64_t> hits(3, 0);
  for_each_path(aut, ids, ids.size(), 2, [&](Letter a, const IntVec&, Letter start) {
    CHECK(start == 2);
    ++hits[a];
  });
  for (Letter a = 0; a < 3; ++a) CHECK(hits[a] == m(a, 2));
}
