#include <doctest.h>

#include "sadic/cf_algorithms.hpp"
#include "sadic/directive.hpp"

using namespace sadic;

namespace {

std::shared_ptr<const SubstitutionSet> cassaigne_set() {
  return std::make_shared<const SubstitutionSet>(subs::cassaigne());
}

}  // namespace

TEST_CASE("name parsing") {
  const SubstitutionSet c = subs::cassaigne();
  CHECK(DirectiveSequence::parse_names(c, "c1c0 c0,c1") == std::vector<std::size_t>{1, 0, 0, 1});
  CHECK_THROWS(DirectiveSequence::parse_names(c, "c0c2"));
  const SubstitutionSet b = subs::brun();
  CHECK(DirectiveSequence::parse_names(b, "b210b021").size() == 2);
}

TEST_CASE("periodic and prefix sequences") {
  const auto set = cassaigne_set();
  const auto p = DirectiveSequence::periodic(set, {0, 1});
  CHECK(p.at(0) == 0);
  CHECK(p.at(7) == 1);
  CHECK(p.names(0, 4) == "c0c1c0c1");
  CHECK(p.product(0, 2) == IntMatrix{{1, 1, 0}, {0, 1, 1}, {1, 0, 0}});
  const auto q = DirectiveSequence::with_prefix(set, {1, 1}, {0});
  CHECK(q.names(0, 5) == "c1c1c0c0c0");
  const auto r = DirectiveSequence::with_prefix(set, {1, 0});
  CHECK(r.has(2));
  CHECK(!r.has(3));
  CHECK_THROWS(r.at(2));
}

TEST_CASE("apply_range composes from the left") {
  const auto set = cassaigne_set();
  const auto s = DirectiveSequence::with_prefix(set, {0, 1, 1});
  const Word w{0, 1, 2};
  CHECK(s.apply_range(0, 3, w, 100) == (*set)[0].apply((*set)[1].apply((*set)[1].apply(w))));
  CHECK(s.apply_range(1, 1, w, 100) == w);
  CHECK(s.apply_range(0, 3, w, 2).size() == 2);
}

TEST_CASE("c0c1 fixed point prefix") {
  // Reference: iterate 0 -> 02, 1 -> 01, 2 -> 1 on the letter 0 in a separate script.
  const std::string expected = "0210102010210201021010210201021010201021";
  const auto s = DirectiveSequence::periodic(cassaigne_set(), {0, 1});
  const auto fp = fixed_point_prefix(s, 2, 40, 200);
  CHECK(fp.complete);
  CHECK(to_string(fp.rows[0].letters).substr(0, 40) == expected);
  CHECK(fp.rows[0].determined >= 40);
  const PeriodicPoint pp = periodic_point(compose(subs::cassaigne()[0], subs::cassaigne()[1]), 0, 40);
  CHECK(pp.period == 1);
  CHECK(to_string(pp.prefix) == expected);
  // u_0 = c0(u_1).
  const Word image = (*s.set_ptr())[0].apply(fp.rows[1].letters);
  CHECK(std::equal(fp.rows[0].letters.begin(), fp.rows[0].letters.begin() + 30, image.begin()));
}

TEST_CASE("fixed point rows of a Sturmian directive prefix") {
  const auto set = std::make_shared<const SubstitutionSet>(subs::sturmian());
  const auto ids = DirectiveSequence::parse_names(*set, "tau0 tau1 tau1 tau0 tau0 tau1 tau0 tau0 tau1");
  const auto s = DirectiveSequence::with_prefix(set, ids);
  const auto fp = fixed_point_prefix(s, 7, 50, ids.size());
  const std::vector<std::size_t> determined{46, 27, 19, 11, 8, 5, 3};
  const std::vector<std::string> rows{
      "01010010100101010010100101001010100101001010010101", "11011011101101101110110110111011011101101101110110",
      "10101101010110101011010110101011010101101011010101", "00100010001001000100010010001000100010010001000100",
      "01001001010010010100100100101001001010010010010100", "10101101011010101101011010101101011010101101011010",
      "00100100010010001001000100100100010010001001000100"};
  CHECK(!fp.complete);
  for (std::size_t k = 0; k < 7; ++k) {
    CAPTURE(k);
    CHECK(fp.rows[k].determined == determined[k]);
    CHECK(to_string(fp.rows[k].letters).substr(0, determined[k]) == rows[k].substr(0, determined[k]));
  }
}

TEST_CASE("periodic point requires a growing first-letter cycle") {
  CHECK_THROWS_AS(periodic_point(subs::cassaigne()[0], 0, 10), std::domain_error);
  const PeriodicPoint p = periodic_point(Substitution("s", {"1", "01"}), 0, 8);
  CHECK(p.period == 2);
  CHECK(to_string(p.prefix) == "01101101");
}

TEST_CASE("primitivity and growth windows") {
  const auto set = cassaigne_set();
  CHECK(is_primitive_window(DirectiveSequence::periodic(set, {0, 1}), 0, 20) == 5u);
  CHECK(!is_primitive_window(DirectiveSequence::periodic(set, {0}), 0, 40));
  const GrowthTrace flat = is_everywhere_growing_window(DirectiveSequence::periodic(set, {0}), 16);
  CHECK(flat.flagged);
  CHECK(flat.column_norms[8] == Vec<double>{1, 5, 5});
  CHECK(!is_everywhere_growing_window(DirectiveSequence::periodic(set, {0, 1}), 16).flagged);
}

TEST_CASE("random runs") {
  const Algorithm& cas = Algorithm::get(AlgorithmKind::cassaigne);
  const auto a = random_runs(cas, 11, 3), b = random_runs(cas, 11, 3);
  CHECK(a.names(0, 100) == b.names(0, 100));
  std::size_t run = 1, longest = 1;
  for (std::size_t k = 1; k < 500; ++k) {
    run = a.at(k) == a.at(k - 1) ? run + 1 : 1;
    longest = std::max(longest, run);
  }
  CHECK(longest <= 3);
}
