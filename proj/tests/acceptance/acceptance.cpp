// Acceptance suite: one PASS/FAIL line per criterion, with pinned tolerances
// and measured runtimes.  Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sadic/automaton.hpp"
#include "sadic/cf_algorithms.hpp"
#include "sadic/combinatorics.hpp"
#include "sadic/fractal.hpp"
#include "sadic/geometry.hpp"
#include "sadic/io.hpp"
#include "sadic/lyapunov.hpp"
#include "sadic/polynomial.hpp"
#include "sadic/render.hpp"
#include "sadic/torus.hpp"

using namespace sadic;

namespace {

// Pinned tolerances and limits.
constexpr double kSeedLimit = 10.0;
constexpr double kComplexityLimit = 60.0;   // per sequence
constexpr double kDumontThomasLimit = 30.0;
constexpr double kTilingLimit = 10.0;
constexpr double kLyapunovLimit = 300.0;
constexpr double kTheta2Tolerance = 1e-3;
constexpr double kCodingLimit = 120.0;
constexpr double kMaxAmbiguity = 0.01;
constexpr double kRemainderLimit = 60.0;
constexpr double kSturmianBalance = 1.0 + 1e-9;
constexpr double kRenormalizationLimit = 120.0;
constexpr double kRasterTolerance = 0.005;
constexpr double kDetTolerance = 1e-10;

std::string source_path(const std::string& rel) { return std::string(SADIC_SOURCE_DIR) + "/" + rel; }

Json preset(const std::string& name) { return load_preset(source_path("presets/" + name + ".json")); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::shared_ptr<const SubstitutionSet> c0c1_set() {
  const SubstitutionSet c = subs::cassaigne();
  return std::make_shared<const SubstitutionSet>(std::vector<Substitution>{compose(c[0], c[1])});
}

Word prefix_of(const DirectiveSequence& s, std::size_t length, std::size_t max_depth) {
  const auto fp = fixed_point_prefix(s, 1, length, max_depth);
  const auto& row = fp.rows.at(0);
  if (row.determined < length) throw std::runtime_error("fixed point prefix not determined to the requested length");
  return Word(row.letters.begin(), row.letters.begin() + std::ptrdiff_t(length));
}

Outcome seed_certification(double& limit) {
  limit = kSeedLimit;
  Outcome o;
  const Json cfg = preset("cassaigne-c0c1");
  const auto emb = ComplexEmbedding::cassaigne();
  const auto aut = PrefixAutomaton::build(c0c1_set());
  const BallCertificate cert = certify_balls(emb, aut, 0, balls_from_json(cfg["balls"]), cfg["depth"].get<std::size_t>());
  const SeedReport rep = seed_certificate(emb, cert, 1.5);
  const std::set<IntVec> exceptional(rep.exceptional.begin(), rep.exceptional.end());
  o.detail << "n=" << cert.depth << " paths=" << cert.paths << " margin=" << cert.margin << " extent<=" << rep.extent.hi()
           << " exceptional=" << rep.exceptional.size();
  o.require(cert.ok && cert.margin > 0, "ball inclusions");
  o.require(rep.zero_outside_other_balls, "0 outside O_1 and O_2");
  o.require(rep.extent_below_threshold, "max |z|+r below 1.5");
  o.require(rep.inconclusive.empty(), "exceptional lattice points clear all balls");
  o.require(exceptional == std::set<IntVec>{{0, 1, -1}, {0, -1, 1}}, "exceptional set is +-(e1-e2)");
  return o;
}

Outcome characteristic_polynomial_check(double& limit) {
  limit = 1.0;
  Outcome o;
  const SubstitutionSet c = subs::cassaigne();
  const IntMatrix m = compose(c[0], c[1]).matrix();
  const IntPolynomial p = characteristic_polynomial(m);
  const CubicRoots r = cubic_roots(p);
  o.detail << to_string(p) << ", lambda in " << r.real_root << ", |beta| in " << r.beta_modulus;
  o.require(p == IntPolynomial{-1, 1, -2, 1}, "X^3 - 2X^2 + X - 1");
  o.require(irreducible_low_degree(p), "irreducible");
  o.require(r.real_root.lo() > 1.754 && r.real_root.hi() < 1.756, "Perron root in (1.754, 1.756)");
  o.require(r.beta_modulus.hi() < 1.0, "|beta| < 1");
  return o;
}

Outcome complexity_check(double& limit) {
  limit = kComplexityLimit;
  Outcome o;
  const Json cfg = preset("cassaigne-random");
  const std::size_t n_max = cfg["n"].get<std::size_t>();
  const std::size_t length = cfg["prefix_length"].get<std::size_t>();
  double slowest = 0;
  auto check = [&](const std::string& label, const DirectiveSequence& s, std::uint64_t slope) {
    const auto t0 = std::chrono::steady_clock::now();
    const Word w = prefix_of(s, length, 100000);
    const ComplexityTable t = complexity(w, n_max);
    bool exact = true;
    for (std::size_t n = 1; n <= n_max; ++n) exact &= t.p[n] == slope * n + 1;
    o.require(exact, label + " complexity");
    o.require(t.stable_under_doubling, label + " stable under doubling");
    slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  };
  const Algorithm& cas = Algorithm::get(AlgorithmKind::cassaigne);
  check("(c0c1)^w", DirectiveSequence::periodic(cas.set_ptr(), {0, 1}), 2);
  std::size_t odd_runs = 0;
  for (const auto& seed : cfg["seeds"]) {
    const DirectiveSequence s = random_runs(cas, seed.get<std::uint64_t>(), cfg["max_run"].get<std::size_t>());
    // Runs in the part of the directive sequence that the prefix depends on.
    s.has(200);
    std::size_t run = 1;
    bool saw_both = false, saw_odd = false;
    for (std::size_t k = 1; k < 200; ++k) {
      if (s.at(k) == s.at(k - 1)) {
        ++run;
      } else {
        saw_both = true;
        saw_odd |= run % 2 == 1;
        run = 1;
      }
    }
    odd_runs += saw_odd;
    o.require(saw_both && saw_odd, "random sequence uses both letters and odd runs");
    check("seed " + std::to_string(seed.get<std::uint64_t>()), s, 2);
  }
  const Algorithm& stu = Algorithm::get(AlgorithmKind::sturmian);
  check("(tau0tau1)^w", DirectiveSequence::periodic(stu.set_ptr(), {0, 1}), 1);
  check("random Sturmian", random_runs(stu, 7, 3), 1);
  o.detail << "n<=" << n_max << ", prefixes of length " << length << ", 6 Cassaigne + 2 Sturmian sequences, slowest "
           << std::fixed << std::setprecision(2) << slowest << " s";
  o.require(slowest < kComplexityLimit, "per-sequence runtime");
  return o;
}

Outcome dumont_thomas_check(double& limit) {
  limit = kDumontThomasLimit;
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t comparisons = 0;
  for (const char* name : {"cassaigne", "sturmian", "brun", "arnoux-rauzy"}) {
    const Algorithm& alg = Algorithm::by_name(name);
    const auto aut = PrefixAutomaton::build(alg.set_ptr());
    const std::size_t d = alg.dimension();
    bool all = true;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::size_t> ids(12);
      for (auto& id : ids) id = std::uniform_int_distribution<std::size_t>(0, alg.set().size() - 1)(rng);
      for (std::size_t k = 0; k <= 12; ++k)
        for (std::size_t l = k; l <= 12; ++l) {
          const IntMatrix m = partial_product(alg, ids, k, l);
          for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
              ++comparisons;
              all &= path_count(aut, ids, k, l, Letter(a), Letter(b)) == BigInt(m(a, b));
            }
        }
    }
    o.require(all, std::string(name) + " path counts");
  }
  o.detail << comparisons << " exact comparisons over 4 sets x 100 prefixes, all windows of length <= 12";
  return o;
}

Outcome worm_tiling_check(double& limit) {
  limit = kTilingLimit;
  Outcome o;
  std::mt19937_64 rng(99);
  std::size_t translates = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = trial % 2 ? 3 : 2;
    Word w(100);
    for (auto& c : w) c = Letter(std::uniform_int_distribution<int>(0, int(dim) - 1)(rng));
    const Worm wm = worm(w, dim);
    const TilingWindow win{-6, 6};
    const auto t = needed_translates(wm.points, win, 100);
    translates += t.size();
    o.require(tiling_check(wm.points, t, win, 100), "trial " + std::to_string(trial));
  }
  o.detail << "20 random words (d=1,2), slab height 100, window [-6,6], " << translates << " translates in total";
  return o;
}

Outcome sturmian_rows_check(double& limit) {
  limit = 1.0;
  Outcome o;
  const Json cfg = preset("sturmian-example");
  const Algorithm& alg = Algorithm::get(AlgorithmKind::sturmian);
  const auto ids = DirectiveSequence::parse_names(alg.set(), cfg["directive"].get<std::string>());
  const DirectiveSequence s = DirectiveSequence::with_prefix(alg.set_ptr(), ids);
  const auto& rows = cfg["rows"];
  const auto& need = cfg["determined"];
  const auto fp = fixed_point_prefix(s, rows.size(), 50, ids.size());
  o.detail << "determined:";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& row = fp.rows[k];
    const std::string printed = rows[k].get<std::string>();
    const std::string ours = to_string(Word(row.letters.begin(), row.letters.begin() + std::ptrdiff_t(row.determined)));
    o.detail << " u" << k << "=" << row.determined;
    o.require(row.determined >= need[k].get<std::size_t>(), "u" + std::to_string(k) + " length");
    o.require(printed.compare(0, ours.size(), ours) == 0, "u" + std::to_string(k) + " letters");
  }
  return o;
}

Outcome lyapunov_check(double& limit) {
  limit = kLyapunovLimit;
  Outcome o;
  const Algorithm& alg = Algorithm::get(AlgorithmKind::cassaigne);
  const PeriodicDirection dir = certify_periodic(alg, {0, 1});
  const CubicRoots roots = cubic_roots(characteristic_polynomial(dir.matrix));
  // Per Cassaigne step: one period of c0c1 is two steps and contracts P by |beta|.
  const double target = 0.5 * std::log(roots.beta_modulus.mid());
  const double theta2 = theta2_periodic_fixed_left(alg, dir, 2000);
  o.detail << std::setprecision(7) << "periodic theta2(2000)=" << theta2 << " target=" << target
           << " |diff|=" << std::abs(theta2 - target);
  o.require(std::abs(theta2 - target) <= kTheta2Tolerance, "theta2 within 1e-3");
  const LyapunovReport rep = pisot_report(alg, 100, 100000, 1);
  std::size_t good = 0;
  double max2 = -1e300, min1 = 1e300;
  for (const auto& t : rep.trials) {
    if (t.skipped) continue;
    good += t.theta1 > 0 && t.theta2 < 0;
    max2 = std::max(max2, t.theta2);
    min1 = std::min(min1, t.theta1);
  }
  o.detail << "; random: " << good << "/100 with theta1>0>theta2 (min theta1=" << min1 << ", max theta2=" << max2
           << ", skipped " << rep.skipped << ")";
  o.require(good == 100 && rep.skipped == 0, "sign in every trial");
  return o;
}

Outcome coding_check(double& limit) {
  limit = kCodingLimit;
  Outcome o;
  const Json cfg = preset("cassaigne-c0c1");
  const std::size_t n_orbit = cfg["orbit_length"].get<std::size_t>();
  const std::size_t depth = cfg["coding_depth"].get<std::size_t>();
  const auto set = c0c1_set();
  const auto emb = ComplexEmbedding::cassaigne();
  const Vec<double> vd = perron_direction(emb.matrix()).mid();
  const Word u = periodic_point((*set)[0], 0, n_orbit + 1).prefix;

  // Exact identities with the rational direction given by the double enclosure midpoint.
  Vec<Rational> vq;
  for (double c : vd) vq.emplace_back(c);
  vq = normalize(vq);
  const auto tq = TorusTranslation<Rational>::from_direction(vq);
  const auto ex = tq.exchange_vectors();
  bool worm_orbit = true, square = true, orbit_point = true;
  IntVec ab(3, 0);
  Vec<Rational> p = project(vq, ab);
  Vec<Rational> q = torus_reduce(p);
  for (std::size_t n = 0; n < n_orbit; ++n) {
    IntVec next = ab;
    ++next[u[n]];
    const Vec<Rational> pn = project(vq, next);
    Vec<Rational> moved(p);
    for (std::size_t i = 0; i < 2; ++i) moved[i] += ex[u[n]][i];
    worm_orbit &= pn == moved;
    const Vec<Rational> tq_q = tq.translate(q);
    square &= torus_reduce(moved) == tq_q;
    ab = next;
    p = pn;
    q = tq_q;
    orbit_point &= q == torus_reduce(pn);
  }
  o.require(worm_orbit, "worm-orbit identity");
  o.require(square, "exchange/translation square");
  o.require(orbit_point, "orbit point equals reduced worm point");

  if (depth % 2) throw std::runtime_error("coding depth must be even");
  const PieceCover cover = ball_cover(emb, PrefixAutomaton::build(set), 0, balls_from_json(cfg["balls"]), depth / 2);
  const auto tr = TorusTranslation<double>::from_direction(vd);
  const CodingResult res = code_orbit(cover, tr.t, {0.0, 0.0}, n_orbit);
  std::size_t wrong = 0, certain = 0;
  for (std::size_t k = 0; k < n_orbit; ++k)
    if (res.certain[k]) {
      ++certain;
      wrong += res.letters[k] != u[k];
    }
  o.detail << "n<=" << n_orbit << ", depth " << depth << " (" << cover.centers.size() << " disks): certain " << certain
           << ", disagreeing " << wrong << ", ambiguity " << res.ambiguity_rate() << ", uncovered " << res.uncovered;
  o.require(wrong == 0, "coding equals u_0 on certain steps");
  o.require(res.ambiguity_rate() < kMaxAmbiguity, "ambiguity below 1%");
  o.require(res.uncovered == 0, "every orbit point covered");
  return o;
}

Outcome bounded_remainder_criterion(double& limit) {
  limit = kRemainderLimit;
  Outcome o;
  const Algorithm& cas = Algorithm::get(AlgorithmKind::cassaigne);
  const Word w = prefix_of(DirectiveSequence::periodic(cas.set_ptr(), {0, 1}), 200000, 1000);
  const Vec<double> v = perron_direction(compose(cas.set()[0], cas.set()[1]).matrix()).mid();
  const BoundedRemainder k1 = bounded_remainder_check(w, v, 100000);
  const BoundedRemainder k2 = bounded_remainder_check(w, v, 200000);
  o.detail << std::setprecision(12) << "(c0c1)^w: K(1e5)=" << k1.k << " at N=" << k1.argmax << ", K(2e5)=" << k2.k
           << " at N=" << k2.argmax;
  o.require(std::isfinite(k1.k) && std::isfinite(k2.k), "finite K");
  o.require(k1.k == k2.k, "K unchanged when N_max doubles");

  const Algorithm& stu = Algorithm::get(AlgorithmKind::sturmian);
  const DirectiveSequence golden = DirectiveSequence::periodic(stu.set_ptr(), {0, 1});
  const Word g = prefix_of(golden, 10000, 1000);
  const Vec<double> vg = perron_direction(golden.product(0, 2)).mid();
  const BoundedRemainder kg = bounded_remainder_check(g, vg, 10000);
  o.detail << "; golden Sturmian per-letter K=" << kg.per_letter[0] << "," << kg.per_letter[1];
  for (double x : kg.per_letter) o.require(x <= kSturmianBalance, "golden per-letter K <= 1");
  return o;
}

Outcome brun_identity(double& limit) {
  limit = 1.0;
  Outcome o;
  const Json cfg = preset("brun-periodic");
  const Algorithm& brun = Algorithm::get(AlgorithmKind::brun);
  const auto ids = DirectiveSequence::parse_names(brun.set(), cfg["period"].get<std::string>());
  std::vector<const Substitution*> chain;
  for (std::size_t id : ids) chain.push_back(&brun.set()[id]);
  const Substitution product = compose(chain);
  const Substitution rho = substitution_from_json(cfg["cube_root"]);
  const Substitution cube = power(rho, 3);
  for (std::size_t a = 0; a < 3; ++a)
    o.detail << (a ? ", " : "") << a << "->" << to_string(product.image(Letter(a)));
  o.require(product == cube, "images equal the cube");
  return o;
}

Outcome renormalization_check(double& limit) {
  limit = kRenormalizationLimit;
  Outcome o;
  const Json cfg = preset("fig-renormalization");
  const Algorithm& cas = Algorithm::get(AlgorithmKind::cassaigne);
  const Vec<Rational> x = parse_direction(cas, cfg["x"][0].get<std::string>() + "," + cfg["x"][1].get<std::string>() +
                                                   "," + cfg["x"][2].get<std::string>());
  const std::size_t steps = cfg["steps"].get<std::size_t>();
  const std::size_t depth = cfg["depth"].get<std::size_t>();

  const auto rec = orbit(cas, x, 28);
  o.require(directive_sequence(cas, rec).names(0, 28) == cfg["directive"].get<std::string>(), "directive prefix");

  Vec<Rational> cur = x;
  double worst_det = 0;
  for (std::size_t k = 0; k < steps; ++k) {
    const Renormalization r = renormalize(cas, cur, depth - k, depth - k + 12);
    worst_det = std::max(worst_det, std::abs(r.step.det_n - r.step.det_expected));
    o.require(r.step.lifts_match, "induced set equals M applied to the next cloud");
    o.detail << (r.step.bottom ? "bottom " : "top ");
    cur = r.step.next;
  }
  o.detail << "det error " << worst_det;
  o.require(worst_det <= kDetTolerance, "det identity");

  const Raster img = render_renormalization(cas, x, steps, depth, cfg["panel"].get<int>());
  const double diff = img.difference(Raster::read_ppm(source_path(cfg["golden"].get<std::string>())));
  o.detail << ", raster difference " << diff;
  o.require(diff <= kRasterTolerance, "golden raster");

  // Return words of the c0 step: u_1 = c0(u_2) for the fixed point of s(x).
  const Substitution& c0 = cas.set()[0];
  const std::vector<Word> blocks{c0.image(0), c0.image(1), c0.image(2)};
  o.require(std::set<Word>(blocks.begin(), blocks.end()) == std::set<Word>{{0}, {0, 2}, {1}}, "return words {0,02,1}");
  const auto fp = fixed_point_prefix(algorithm_sequence(cas, x), 2, 6000, 60);
  const Word& u1 = fp.rows.at(1).letters;
  const std::size_t usable = std::min(fp.rows[1].determined, u1.size());
  std::size_t factors = 0;
  bool unique = true;
  for (std::size_t i = 0; i + 1000 <= usable; ++i) {
    if (u1[i] == 2) continue;
    ++factors;
    unique &= factorization_count(Word(u1.begin() + std::ptrdiff_t(i), u1.begin() + std::ptrdiff_t(i + 1000)), blocks) == 1;
  }
  o.detail << ", " << factors << " factors of length 1000 factor uniquely: " << (unique ? "yes" : "no");
  o.require(factors > 0 && unique, "unique factorization");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome(double&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "seed certification", seed_certification},
      {2, "characteristic polynomial", characteristic_polynomial_check},
      {3, "factor complexity", complexity_check},
      {4, "Dumont-Thomas path counts", dumont_thomas_check},
      {5, "worm tiling", worm_tiling_check},
      {6, "Sturmian fixed-point rows", sturmian_rows_check},
      {7, "Lyapunov exponents", lyapunov_check},
      {8, "coding and exchange identities", coding_check},
      {9, "bounded remainder", bounded_remainder_criterion},
      {10, "Brun identity", brun_identity},
      {11, "renormalization", renormalization_check},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    double limit = 0;
    Outcome o;
    try {
      o = c.run(limit);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs > limit) o.require(false, "runtime limit");
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.name << "  (" << std::fixed
              << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << limit << " s)  "
              << std::defaultfloat << std::setprecision(6) << o.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed;
}
