#include "sadic/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace sadic {

void ScaledProduct::right_multiply(const Matrix<double>& m) {
  unit = unit.rows() ? unit * m : m;
  double s = 0;
  for (std::size_t i = 0; i < unit.rows(); ++i)
    for (std::size_t j = 0; j < unit.cols(); ++j) s = std::max(s, std::abs(unit(i, j)));
  if (s == 0) throw std::runtime_error("running product vanished");
  for (std::size_t i = 0; i < unit.rows(); ++i)
    for (std::size_t j = 0; j < unit.cols(); ++j) unit(i, j) /= s;
  log_scale += std::log(s);
}

double ScaledProduct::log_norm() const { return log_scale + std::log(max_row_sum(unit)); }

LyapunovEstimate estimate(const Algorithm& alg, Vec<double> x, std::size_t n) {
  if (n == 0) throw std::invalid_argument("at least one step is needed");
  x = normalize(std::move(x));
  ScaledProduct full, plane;
  for (std::size_t k = 0; k < n; ++k) {
    StepResult<double> r = step(alg, x, k);
    const IntMatrix& m = alg.set()[r.selection.id].matrix();
    full.right_multiply(m.cast<double>());
    plane.right_multiply(plane_map(m, x));
    x = std::move(r.x);
  }
  return {full.log_norm() / double(n), plane.log_norm() / double(n), n};
}

double theta1_estimate(const Algorithm& alg, const Vec<double>& x, std::size_t n) {
  return estimate(alg, x, n).theta1;
}

double theta2_estimate(const Algorithm& alg, const Vec<double>& x, std::size_t n) {
  return estimate(alg, x, n).theta2;
}

ScaledProduct projected_product(const Algorithm& alg, const OrbitRecord<double>& orbit,
                                std::size_t k, std::size_t l) {
  if (k > l || l > orbit.length()) throw std::out_of_range("projected product range");
  ScaledProduct p;
  p.unit = Matrix<double>::identity(alg.dimension() - 1);
  for (std::size_t i = k; i < l; ++i)
    p.right_multiply(plane_map(alg.set()[orbit.ids[i]].matrix(), orbit.directions[i]));
  return p;
}

PeriodicDirection certify_periodic(const Algorithm& alg, std::vector<std::size_t> period) {
  PeriodicDirection d;
  d.period = std::move(period);
  d.matrix = partial_product(alg, d.period, 0, d.period.size());
  d.perron = perron_direction(d.matrix);
  OrbitRecord<Interval> rec = orbit(alg, d.perron.v, d.period.size());
  if (rec.exit_index) throw Inconclusive(rec.exit_reason, *rec.exit_index);
  for (std::size_t i = 0; i < d.period.size(); ++i)
    if (rec.ids[i] != d.period[i])
      throw Inconclusive("orbit of the Perron direction leaves the period", i);
  return d;
}

double theta1_periodic(const Algorithm& alg, const PeriodicDirection& dir, std::size_t n) {
  ScaledProduct p;
  for (std::size_t k = 0; k < n; ++k)
    p.right_multiply(alg.set()[dir.period[k % dir.period.size()]].matrix().cast<double>());
  return p.log_norm() / double(n);
}

double theta2_periodic_fixed_left(const Algorithm& alg, const PeriodicDirection& dir,
                                  std::size_t n) {
  const std::size_t dim = alg.dimension();
  const BigMatrix mp = dir.matrix.cast<BigInt>();
  // u = M^(n+64) 1 stands in for the Perron direction.
  Vec<BigInt> u(dim, BigInt(1));
  for (std::size_t k = 0; k < n + 64; ++k) u = mp * u;
  BigInt hu = 0;
  for (const auto& c : u) hu += c;

  BigMatrix prod = BigMatrix::identity(dim);
  for (std::size_t k = 0; k < n; ++k)
    prod = prod * alg.set()[dir.period[k % dir.period.size()]].matrix().cast<BigInt>();

  BigInt best = 0;
  for (std::size_t j = 0; j < dim; ++j) {
    BigInt h = 0;
    for (std::size_t i = 0; i < dim; ++i) h += prod(i, j);
    BigInt norm = 0;
    for (std::size_t i = 1; i < dim; ++i) {
      BigInt w = hu * prod(i, j) - h * u[i];
      norm += w < 0 ? BigInt(-w) : w;
    }
    best = std::max(best, norm);
  }
  return (log_abs(best) - log_abs(hu)) / double(n);
}

std::string LyapunovReport::to_csv() const {
  std::ostringstream os;
  os << std::setprecision(17) << "seed,steps,theta1,theta2,skipped\n";
  for (const auto& t : trials)
    os << t.seed << ',' << t.steps << ',' << t.theta1 << ',' << t.theta2 << ',' << (t.skipped ? 1 : 0) << '\n';
  return os.str();
}

std::string LyapunovReport::summary_json() const {
  nlohmann::json j;
  j["trials"] = trials.size();
  j["skipped"] = skipped;
  j["theta1"] = {{"mean", mean1}, {"stddev", sd1}};
  j["theta2"] = {{"mean", mean2}, {"stddev", sd2}};
  j["verdict"] = verdict;
  j["assumption"] = "codimension of the second Oseledets space is not measured";
  return j.dump();
}

LyapunovReport pisot_report(const Algorithm& alg, std::size_t trials, std::size_t n,
                            std::uint64_t seed) {
  LyapunovReport rep;
  rep.trials.resize(trials);
  auto run = [&](std::size_t i) {
    TrialResult& t = rep.trials[i];
    t.seed = seed + i;
    t.steps = n;
    try {
      std::mt19937_64 rng(t.seed);
      const LyapunovEstimate e = estimate(alg, sample_simplex(rng, alg.dimension()), n);
      t.theta1 = e.theta1;
      t.theta2 = e.theta2;
    } catch (const std::exception& ex) {
      t.skipped = true;
      t.error = ex.what();
    }
  };
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < trials; i += workers) run(i);
    }));
  for (auto& j : jobs) j.get();

  std::vector<double> a, b;
  for (const auto& t : rep.trials) {
    if (t.skipped) {
      ++rep.skipped;
      continue;
    }
    a.push_back(t.theta1);
    b.push_back(t.theta2);
  }
  if (a.empty()) {
    rep.verdict = "insufficient data";
    return rep;
  }
  auto stats = [](const std::vector<double>& v, double& mean, double& sd) {
    mean = 0;
    for (double x : v) mean += x;
    mean /= double(v.size());
    sd = 0;
    for (double x : v) sd += (x - mean) * (x - mean);
    sd = v.size() > 1 ? std::sqrt(sd / double(v.size() - 1)) : 0.0;
  };
  stats(a, rep.mean1, rep.sd1);
  stats(b, rep.mean2, rep.sd2);
  bool pisot = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] > 0 && b[i] < 0 && a[i] >= rep.sd1 && -b[i] >= rep.sd2)) pisot = false;
  rep.verdict = pisot ? "Pisot-like" : "not Pisot-like";
  return rep;
}

}  // namespace sadic
