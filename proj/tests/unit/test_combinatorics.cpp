#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "sadic/combinatorics.hpp"
#include "sadic/directive.hpp"

using namespace sadic;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t n, int letters) {
  Word w(n);
  for (auto& c : w) c = Letter(std::uniform_int_distribution<int>(0, letters - 1)(rng));
  return w;
}

}  // namespace

TEST_CASE("suffix array sorts suffixes") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Word w = random_word(rng, 1 + trial * 7, 1 + trial % 3);
    std::vector<std::int32_t> naive(w.size());
    std::iota(naive.begin(), naive.end(), 0);
    std::sort(naive.begin(), naive.end(), [&](int a, int b) {
      return std::lexicographical_compare(w.begin() + a, w.end(), w.begin() + b, w.end());
    });
    const auto sa = suffix_array(w);
    CHECK(sa == naive);
    const auto lcp = lcp_array(w, sa);
    for (std::size_t i = 1; i < sa.size(); ++i) {
      std::int32_t l = 0;
      while (sa[i - 1] + l < std::int32_t(w.size()) && sa[i] + l < std::int32_t(w.size()) && w[sa[i - 1] + l] == w[sa[i] + l]) ++l;
      CHECK(lcp[i] == l);
    }
  }
}

TEST_CASE("factor counts agree with a set of substrings") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Word w = random_word(rng, 200, 2 + trial % 2);
    const auto p = factor_counts(w, 12);
    for (std::size_t n = 0; n <= 12; ++n) {
      std::set<Word> f;
      for (std::size_t i = 0; i + n <= w.size(); ++i) f.insert(Word(w.begin() + std::ptrdiff_t(i), w.begin() + std::ptrdiff_t(i + n)));
      CHECK(p[n] == f.size());
    }
  }
}

TEST_CASE("c0c1 fixed point has complexity 2n+1") {
  // Brute-force reference for n <= 15: 3, 5, 7, ..., 31.
  const auto s = DirectiveSequence::periodic(std::make_shared<const SubstitutionSet>(subs::cassaigne()), {0, 1});
  const Word w = fixed_point_prefix(s, 1, 20000, 200).rows[0].letters;
  const ComplexityTable t = complexity(Word(w.begin(), w.begin() + 20000), 60);
  for (std::size_t n = 1; n <= 60; ++n) CHECK(t.p[n] == 2 * n + 1);
  CHECK(t.stable_under_doubling);
  CHECK(!t.short_prefix);
  CHECK(t.to_csv().substr(0, 22) == "n,p,prefix_length\n0,1,");
}

TEST_CASE("short prefixes are flagged") {
  const ComplexityTable t = complexity(parse_word("0101101"), 3);
  CHECK(t.short_prefix);
  CHECK(t.p[1] == 2);
}

TEST_CASE("sturmian words are balanced") {
  const auto s = DirectiveSequence::periodic(std::make_shared<const SubstitutionSet>(subs::sturmian()), {0, 1});
  const Word w = fixed_point_prefix(s, 1, 5000, 200).rows[0].letters;
  const auto bal = balance_measure(Word(w.begin(), w.begin() + 5000), 2, 40);
  for (std::size_t n = 1; n <= 40; ++n) CHECK(bal[n][0] <= 1);
  const auto t = complexity(Word(w.begin(), w.begin() + 5000), 40);
  for (std::size_t n = 1; n <= 40; ++n) CHECK(t.p[n] == n + 1);
}

TEST_CASE("balance and frequency of a periodic word") {
  Word w;
  for (int k = 0; k < 20; ++k) for (Letter c : parse_word("01001")) w.push_back(c);
  const auto f = frequency(w, 2);
  CHECK(f[0] == Rational(3, 5));
  CHECK(f[1] == Rational(2, 5));
  const auto bal = balance_measure(w, 2, 5);
  CHECK(bal[1][0] == 1);
  CHECK(bal[5][0] == 0);
  CHECK_THROWS(frequency(Word{}, 2));
}
