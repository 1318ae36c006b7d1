#include <doctest.h>

#include <random>

#include "sadic/cf_algorithms.hpp"

using namespace sadic;

namespace {

Vec<Rational> q(std::initializer_list<Rational> l) { return Vec<Rational>(l); }

}  // namespace

TEST_CASE("cassaigne selector and step") {
  const Algorithm& c = Algorithm::get(AlgorithmKind::cassaigne);
  CHECK(c.select(q({3, 1, 1})).id == 0);
  CHECK(c.select(q({1, 1, 3})).id == 1);
  const Selection tie = c.select(q({1, 2, 1}));
  CHECK(tie.id == 0);
  CHECK(tie.tie);
  const auto r = step(c, normalize(q({3, 1, 1})));
  // (x0 - x2, x2, x1) rescaled.
  CHECK(r.x == normalize(q({2, 1, 1})));
  const auto r1 = step(c, normalize(q({1, 2, 3})));
  CHECK(r1.x == normalize(q({2, 1, 2})));
}

TEST_CASE("exact cassaigne orbit of a rational direction") {
  // Reference: the same recursion run on Python fractions.
  const Algorithm& c = Algorithm::get(AlgorithmKind::cassaigne);
  const auto rec = orbit(c, q({Rational(1, 3), Rational(1, 4), Rational(5, 12)}), 12);
  REQUIRE(rec.length() >= 5);
  CHECK(directive_sequence(c, rec).names(0, 5) == "c1c0c1c1c0");
  CHECK(rec.directions[5] == q({Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
  CHECK(rec.ties.size() == rec.ids.size());
  CHECK(rec.ties[5]);
}

TEST_CASE("decimal directions reproduce their directive prefixes") {
  const Algorithm& c = Algorithm::get(AlgorithmKind::cassaigne);
  const Vec<Rational> x{parse_rational("0.256005715380561"), parse_rational("0.286881483823029"),
                        parse_rational("0.457112800796410")};
  const auto rec = orbit(c, x, 38);
  CHECK(directive_sequence(c, rec).names(0, 28) == "c1c0c1c0c1c0c0c0c1c0c0c0c1c1c0c0c0c0c0c0c1c1c0c1c0c0c1c1");
  // Continuation computed with Python fractions.
  CHECK(directive_sequence(c, rec).names(28, 38) == "c0c0c1c1c0c0c0c1c0c1");
  const Vec<Rational> y{parse_rational("0.279291082100669"), parse_rational("0.1294709739854265"),
                        parse_rational("0.5912379439139045")};
  CHECK(algorithm_sequence(c, y).names(0, 45) ==
        "c1c1c0c1c0c0c0c1c1c1c0c1c0c0c1c0c1c0c0c0c0c1c0c1c1c0c0c1c1c1c0c1c1c1c0c0c0c1c0c0c0c1c1c0c0");
}

TEST_CASE("interval mode refuses undecidable branches") {
  const Algorithm& c = Algorithm::get(AlgorithmKind::cassaigne);
  const Vec<Interval> x{Interval(0.3, 0.34), Interval(0.33), Interval(0.33, 0.35)};
  CHECK_THROWS_AS(c.select(x), Inconclusive);
  const auto rec = orbit(c, x, 5);
  CHECK(rec.exit_index == 0u);
  CHECK(rec.exit_inconclusive);
  const Vec<Interval> y{Interval(0.5), Interval(0.3), Interval(0.2)};
  CHECK(c.select(y).id == 0);
}

TEST_CASE("float and exact orbits agree early on") {
  const Algorithm& c = Algorithm::get(AlgorithmKind::cassaigne);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Vec<double> x = sample_simplex(rng, 3);
    Vec<Rational> xq;
    for (double v : x) xq.emplace_back(v);
    const auto a = orbit(c, x, 15);
    const auto b = orbit(c, xq, 15);
    CHECK(a.ids == b.ids);
  }
}

TEST_CASE("sturmian and arnoux-rauzy selectors") {
  const Algorithm& s = Algorithm::get(AlgorithmKind::sturmian);
  CHECK(s.set()[s.select(q({2, 1})).id].name() == "tau0");
  CHECK(s.set()[s.select(q({1, 2})).id].name() == "tau1");
  const Algorithm& ar = Algorithm::get(AlgorithmKind::arnoux_rauzy);
  CHECK(ar.set()[ar.select(q({1, 5, 1})).id].name() == "ar1");
  CHECK_THROWS_AS(ar.select(q({1, 1, 1})), DomainError);
  CHECK(!ar.in_domain(q({2, 1, 1})));
  const auto rec = orbit(ar, q({1, 1, 1}), 3);
  CHECK(rec.exit_index == 0u);
  CHECK(!rec.exit_inconclusive);
}

TEST_CASE("brun selector orders coordinates") {
  const Algorithm& b = Algorithm::get(AlgorithmKind::brun);
  CHECK(b.set()[b.select(q({1, 2, 3})).id].name() == "b012");
  CHECK(b.set()[b.select(q({3, 1, 2})).id].name() == "b120");
  const Selection t = b.select(q({2, 2, 1}));
  CHECK(t.tie);
  CHECK(b.set()[t.id].name() == "b210");
  // One Brun step subtracts the second largest coordinate from the largest.
  CHECK(step(b, normalize(q({1, 2, 3}))).x == normalize(q({1, 2, 1})));
}

TEST_CASE("with_set validates substitutions") {
  CHECK_NOTHROW(Algorithm::with_set(AlgorithmKind::cassaigne, subs::cassaigne()));
  CHECK_THROWS(Algorithm::with_set(AlgorithmKind::cassaigne, subs::sturmian()));
  CHECK_THROWS(Algorithm::by_name("selmer"));
}

TEST_CASE("perron direction of c0c1") {
  const SubstitutionSet c = subs::cassaigne();
  const PerronDirection p = perron_direction(compose(c[0], c[1]).matrix());
  // Reference: 20-digit eigenvector from mpmath.
  const double ref[3] = {0.43015970900194673409, 0.32471795724474602596, 0.24512233375330723995};
  for (int i = 0; i < 3; ++i) {
    CHECK(p.v[i].lo() <= ref[i] + 1e-15);
    CHECK(p.v[i].hi() >= ref[i] - 1e-15);
    CHECK(p.v[i].width() < 1e-12);
  }
  CHECK(p.value.lo() <= 1.7548776662466928);
  CHECK(p.value.hi() >= 1.7548776662466927);
  CHECK_THROWS(perron_direction(c[0].matrix()));
}

TEST_CASE("partial products") {
  const Algorithm& c = Algorithm::get(AlgorithmKind::cassaigne);
  const std::vector<std::size_t> ids{0, 1, 1, 0};
  CHECK(partial_product(c, ids, 1, 3) == c.set()[1].matrix() * c.set()[1].matrix());
  CHECK(partial_product(c, ids, 2, 2) == IntMatrix::identity(3));
}

TEST_CASE("simplex samples") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    const Vec<double> x = sample_simplex(rng, 3);
    CHECK(x[0] + x[1] + x[2] == doctest::Approx(1.0));
    for (double v : x) CHECK(v > 0);
  }
}
