#include "sadic/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "sadic/cf_algorithms.hpp"
#include "sadic/geometry.hpp"
#include "sadic/lyapunov.hpp"

namespace sadic {

std::vector<std::size_t> FractalApprox::counts() const {
  std::vector<std::size_t> c(alphabet_size, 0);
  for (Letter a : letters) ++c[a];
  return c;
}

std::string FractalApprox::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "letter";
  for (std::size_t i = 1; i < alphabet_size; ++i) os << ",coord" << i;
  os << '\n';
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    os << int(letters[i]);
    for (double c : plane[i]) os << ',' << c;
    os << '\n';
  }
  return os.str();
}

namespace {

double l1(const Vec<double>& p) {
  double s = 0;
  for (double c : p) s += std::abs(c);
  return s;
}

}  // namespace

FractalApprox approximate(const PrefixAutomaton& aut, const DirectiveSequence& s,
                          const Vec<double>& v_in, std::size_t depth,
                          const ApproximateOptions& opt) {
  const std::size_t dim = aut.alphabet_size();
  if (v_in.size() != dim) throw std::invalid_argument("direction has the wrong dimension");
  if (!s.has(depth)) throw std::out_of_range("directive sequence shorter than the depth");
  const Vec<double> v = normalize(v_in);
  std::size_t extra = 0;
  while (extra < opt.remainder_depth && s.has(depth + extra + 1)) ++extra;
  const std::vector<std::size_t> ids = s.prefix(depth + extra);

  FractalApprox f;
  f.alphabet_size = dim;
  f.depth = depth;
  f.v = v;

  const IntMatrix m = s.product(0, depth);
  const IntMatrix minv = unimodular_inverse(m);
  Vec<double> vn(dim, 0.0);
  double scale = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      vn[i] += double(minv(i, j)) * v[j];
      scale = std::max(scale, std::abs(double(minv(i, j))));
    }
  for (double& c : vn) {
    if (c < -1e-9 * scale) throw std::invalid_argument("direction is not in the cone of the directive prefix");
    c = std::max(c, 0.0);
  }
  vn = normalize(vn);

  std::vector<Letter> starts;
  if (opt.first_letter) starts.push_back(*opt.first_letter);
  else
    for (std::size_t b = 0; b < dim; ++b) starts.push_back(static_cast<Letter>(b));
  double total = 0;
  for (Letter b : starts)
    for (std::size_t a = 0; a < dim; ++a) total += double(m(a, b));
  const std::size_t stride =
      total > double(opt.max_points) ? static_cast<std::size_t>(std::ceil(total / double(opt.max_points))) : 1;
  f.downsampled = stride > 1;
  std::size_t counter = 0;
  for (Letter b : starts)
    for_each_path(aut, ids, depth, b, [&](Letter target, const IntVec& p, Letter start) {
      if (counter++ % stride) return;
      f.lifts.push_back(p);
      f.letters.push_back(target);
      f.starts.push_back(start);
      f.plane.push_back(project(v, p));
    });

  // Heuristic tail: twice the radius of the shifted cloud, mapped by N_[0,n).
  double rho = 0;
  if (extra > 0) {
    const std::vector<std::size_t> shifted(ids.begin() + static_cast<std::ptrdiff_t>(depth), ids.end());
    for (std::size_t b = 0; b < dim; ++b)
      for_each_path(aut, shifted, extra, static_cast<Letter>(b),
                    [&](Letter, const IntVec& p, Letter) { rho = std::max(rho, l1(project(vn, p))); });
  } else {
    rho = 1.0;
  }
  f.tail_radius = max_col_sum(plane_map(m, v)) * 2.0 * rho;
  f.tail_rigorous = false;
  return f;
}

ComplexEmbedding ComplexEmbedding::cassaigne() {
  const SubstitutionSet c = subs::cassaigne();
  ComplexEmbedding emb;
  emb.m_ = c[0].matrix() * c[1].matrix();
  emb.roots_ = cubic_roots(characteristic_polynomial(emb.m_));
  const ComplexInterval& b = emb.roots_.beta;
  const ComplexInterval one(Interval(1.0));
  emb.e_ = {one, b * b - b, b - one};
  return emb;
}

ComplexEmbedding ComplexEmbedding::for_matrix(const IntMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("3x3 matrix expected");
  ComplexEmbedding emb;
  emb.m_ = m;
  emb.roots_ = cubic_roots(characteristic_polynomial(m));
  const ComplexInterval& b = emb.roots_.beta;
  // The left kernel of M - beta I is spanned by the cross product of two of its columns.
  auto col = [&](std::size_t j) {
    std::vector<ComplexInterval> c(3);
    for (std::size_t i = 0; i < 3; ++i) {
      c[i] = ComplexInterval(Interval(double(m(i, j))));
      if (i == j) c[i] = c[i] - b;
    }
    return c;
  };
  const auto c0 = col(0), c1 = col(1);
  std::vector<ComplexInterval> e{c0[1] * c1[2] - c0[2] * c1[1], c0[2] * c1[0] - c0[0] * c1[2],
                                 c0[0] * c1[1] - c0[1] * c1[0]};
  const Interval den = norm_sq(e[0]);
  const ComplexInterval conj(e[0].re, -e[0].im);
  for (auto& x : e) {
    ComplexInterval y = x * conj;
    x = ComplexInterval(y.re / den, y.im / den);
  }
  emb.e_ = e;
  return emb;
}

ComplexInterval ComplexEmbedding::phi(const IntVec& z) const {
  ComplexInterval r(Interval(0.0));
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i]) r += Interval(double(z[i])) * e_[i];
  return r;
}

ComplexInterval ComplexEmbedding::phi(const Vec<Interval>& z) const {
  ComplexInterval r(Interval(0.0));
  for (std::size_t i = 0; i < z.size(); ++i) r += z[i] * e_[i];
  return r;
}

std::complex<double> ComplexEmbedding::phi_mid(const IntVec& z) const {
  std::complex<double> r = 0;
  for (std::size_t i = 0; i < z.size(); ++i) r += double(z[i]) * std::complex<double>(e_[i].re.mid(), e_[i].im.mid());
  return r;
}

std::complex<double> ComplexEmbedding::phi_mid(const Vec<double>& z) const {
  std::complex<double> r = 0;
  for (std::size_t i = 0; i < z.size(); ++i) r += z[i] * std::complex<double>(e_[i].re.mid(), e_[i].im.mid());
  return r;
}

std::vector<ComplexInterval> ComplexEmbedding::lattice_basis() const {
  std::vector<ComplexInterval> out;
  for (std::size_t i = 1; i < e_.size(); ++i) out.push_back(e_[i] - e_[0]);
  return out;
}

Ball Ball::from_decimal(const std::string& re, const std::string& im, const std::string& r) {
  return {ComplexInterval(to_interval(parse_rational(re)), to_interval(parse_rational(im))),
          to_interval(parse_rational(r))};
}

Ball Ball::scaled(double factor) const { return {center, radius * Interval(factor)}; }

namespace {

struct PathDisk {
  Letter target;
  Letter start;
  ComplexInterval center;
  Interval radius;
  std::vector<std::size_t> digits;
};

// Visits beta^n O_b + sum_k t_k beta^k for every path b -> ... -> a of length n.
template <class F>
void for_each_disk(const ComplexEmbedding& emb, const PrefixAutomaton& aut, std::size_t sigma,
                   const std::vector<Ball>& balls, std::size_t n, F&& f) {
  const std::size_t dim = aut.alphabet_size();
  if (balls.size() != dim) throw std::invalid_argument("one ball per letter expected");
  std::vector<ComplexInterval> pw{ComplexInterval(Interval(1.0))};
  for (std::size_t k = 0; k < n; ++k) pw.push_back(pw.back() * emb.beta());
  std::vector<ComplexInterval> dphi;
  for (const IntVec& t : aut.digits()) dphi.push_back(emb.phi(t));
  const Interval mod_n = abs(pw[n]);
  PathDisk disk;
  std::vector<ComplexInterval> partial{ComplexInterval(Interval(0.0))};
  auto rec = [&](auto&& self, std::size_t k, Letter state) -> void {
    if (k == n) {
      disk.start = state;
      disk.center = pw[n] * balls[state].center + partial.back();
      disk.radius = mod_n * balls[state].radius;
      f(disk);
      return;
    }
    for (const auto& tr : aut.into(sigma, state)) {
      disk.digits.push_back(tr.t);
      partial.push_back(partial.back() + pw[k] * dphi[tr.t]);
      self(self, k + 1, tr.from);
      partial.pop_back();
      disk.digits.pop_back();
    }
  };
  for (std::size_t a = 0; a < dim; ++a) {
    disk.target = static_cast<Letter>(a);
    rec(rec, 0, static_cast<Letter>(a));
  }
}

}  // namespace

BallCertificate certify_balls(const ComplexEmbedding& emb, const PrefixAutomaton& aut,
                              std::size_t sigma, const std::vector<Ball>& balls, std::size_t n) {
  if (!(emb.roots().beta_modulus.hi() < 1.0)) throw std::domain_error("|beta| is not certified below 1");
  BallCertificate cert;
  cert.balls = balls;
  cert.depth = n;
  if (n == 0) {
    cert.ok = true;
    cert.paths = balls.size();
    return cert;
  }
  double margin = std::numeric_limits<double>::infinity();
  for_each_disk(emb, aut, sigma, balls, n, [&](const PathDisk& d) {
    ++cert.paths;
    const Ball& target = balls[d.target];
    const Interval slack = target.radius - (abs(d.center - target.center) + d.radius);
    margin = std::min(margin, slack.lo());
    if (!slack.certainly_positive())
      cert.violations.push_back({d.target, d.start, d.digits, -slack.lo()});
  });
  cert.margin = margin;
  cert.ok = cert.violations.empty();
  return cert;
}

std::string BallCertificate::to_json() const {
  nlohmann::json j;
  j["depth"] = depth;
  j["paths"] = paths;
  j["margin"] = margin;
  j["ok"] = ok;
  for (const auto& b : balls)
    j["balls"].push_back({{"center", {b.center.re.mid(), b.center.im.mid()}}, {"radius", b.radius.mid()}});
  j["violations"] = nlohmann::json::array();
  for (const auto& v : violations)
    j["violations"].push_back({{"target", v.target}, {"start", v.start}, {"digits", v.digits}, {"deficit", v.deficit}});
  return j.dump();
}

SeedReport seed_certificate(const ComplexEmbedding& emb, const BallCertificate& cert,
                            double threshold) {
  SeedReport rep;
  rep.threshold = threshold;
  const auto& balls = cert.balls;
  rep.zero_outside_other_balls = true;
  for (std::size_t b = 1; b < balls.size(); ++b)
    if (!abs(balls[b].center).certainly_greater(balls[b].radius)) rep.zero_outside_other_balls = false;
  rep.zero_inside_first_ball = abs(balls[0].center).certainly_less(balls[0].radius);
  rep.extent = Interval(0.0);
  for (const auto& b : balls) {
    const Interval e = abs(b.center) + b.radius;
    rep.extent = Interval(std::max(rep.extent.lo(), e.lo()), std::max(rep.extent.hi(), e.hi()));
  }
  rep.extent_below_threshold = rep.extent.hi() < threshold;

  // Coefficients c with |A c| <= R satisfy |c_i| <= R ||row_i(A^{-1})||_2.
  const auto basis = emb.lattice_basis();
  const Interval a = basis[0].re, b = basis[1].re, c = basis[0].im, d = basis[1].im;
  const Interval det = a * d - b * c;
  if (det.contains_zero()) throw std::runtime_error("lattice image is degenerate");
  const double radius = threshold + rep.extent.hi();
  const Interval row0 = sqrt(sqr(d) + sqr(b)) / abs(det);
  const Interval row1 = sqrt(sqr(c) + sqr(a)) / abs(det);
  const auto b0 = static_cast<std::int64_t>(std::ceil(row0.hi() * radius));
  const auto b1 = static_cast<std::int64_t>(std::ceil(row1.hi() * radius));
  for (std::int64_t c0 = -b0; c0 <= b0; ++c0)
    for (std::int64_t c1 = -b1; c1 <= b1; ++c1) {
      if (c0 == 0 && c1 == 0) continue;
      ++rep.enumerated;
      const IntVec t{-c0 - c1, c0, c1};
      const ComplexInterval pt = emb.phi(t);
      if (abs(pt).certainly_greater(Interval(threshold))) continue;
      rep.exceptional.push_back(t);
      bool clear = true;
      for (const auto& ball : balls)
        if (!abs(ball.center + pt).certainly_greater(ball.radius)) clear = false;
      if (!clear) rep.inconclusive.push_back(t);
    }
  rep.ok = cert.ok && rep.zero_outside_other_balls && rep.extent_below_threshold && rep.inconclusive.empty();
  return rep;
}

std::string SeedReport::to_json() const {
  nlohmann::json j;
  j["zero_outside_other_balls"] = zero_outside_other_balls;
  j["zero_inside_first_ball"] = zero_inside_first_ball;
  j["extent"] = {extent.lo(), extent.hi()};
  j["threshold"] = threshold;
  j["extent_below_threshold"] = extent_below_threshold;
  j["enumerated"] = enumerated;
  j["exceptional_lattice_points"] = exceptional;
  j["inconclusive"] = inconclusive;
  j["ok"] = ok;
  return j.dump();
}

PieceCover ball_cover(const ComplexEmbedding& emb, const PrefixAutomaton& aut, std::size_t sigma,
                      const std::vector<Ball>& balls, std::size_t n) {
  PieceCover cover;
  cover.alphabet_size = aut.alphabet_size();
  for_each_disk(emb, aut, sigma, balls, n, [&](const PathDisk& d) {
    const double slack = std::hypot(d.center.re.width(), d.center.im.width());
    cover.centers.emplace_back(d.center.re.mid(), d.center.im.mid());
    cover.radii.push_back(d.radius.hi() + slack);
    cover.letters.push_back(d.target);
  });
  for (const auto& z : emb.lattice_basis()) cover.lattice.emplace_back(z.re.mid(), z.im.mid());
  return cover;
}

PieceCover cloud_cover(const FractalApprox& f) {
  if (f.alphabet_size < 2 || f.alphabet_size > 3) throw std::invalid_argument("cover needs d = 1 or 2");
  PieceCover cover;
  cover.alphabet_size = f.alphabet_size;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& p = f.plane[i];
    cover.centers.emplace_back(p[0], p.size() > 1 ? p[1] : 0.0);
    cover.radii.push_back(f.tail_radius);
    cover.letters.push_back(f.letters[i]);
  }
  cover.lattice.emplace_back(1.0, 0.0);
  if (f.alphabet_size == 3) cover.lattice.emplace_back(0.0, 1.0);
  return cover;
}

namespace {

class Grid {
 public:
  explicit Grid(const std::vector<std::complex<double>>& pts) : pts_(pts) {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == 0 || pts[i].real() < xmin) xmin = pts[i].real();
      if (i == 0 || pts[i].real() > xmax) xmax = pts[i].real();
      if (i == 0 || pts[i].imag() < ymin) ymin = pts[i].imag();
      if (i == 0 || pts[i].imag() > ymax) ymax = pts[i].imag();
    }
    x0_ = xmin;
    y0_ = ymin;
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
    n_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(double(pts.size()))));
    h_ = span / double(n_) * (1 + 1e-9);
    cells_.assign(n_ * n_, {});
    for (std::size_t i = 0; i < pts.size(); ++i) cells_[cell(pts[i])].push_back(i);
  }

  double nearest(std::complex<double> q) const {
    const auto [cx, cy] = coords(q);
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t ring = 0;; ++ring) {
      for (std::int64_t i = cx - ring; i <= cx + ring; ++i)
        for (std::int64_t j = cy - ring; j <= cy + ring; ++j) {
          if (std::max(std::abs(i - cx), std::abs(j - cy)) != ring) continue;
          if (i < 0 || j < 0 || i >= std::int64_t(n_) || j >= std::int64_t(n_)) continue;
          for (std::size_t k : cells_[std::size_t(i) * n_ + std::size_t(j)]) best = std::min(best, std::abs(pts_[k] - q));
        }
      // Points outside the examined square are farther than (ring) * h from q's cell.
      if (best <= double(ring) * h_) return best;
      if (ring > std::int64_t(2 * n_) + std::max<std::int64_t>(std::abs(cx), std::abs(cy))) return best;
    }
  }

 private:
  std::pair<std::int64_t, std::int64_t> coords(std::complex<double> p) const {
    return {static_cast<std::int64_t>(std::floor((p.real() - x0_) / h_)),
            static_cast<std::int64_t>(std::floor((p.imag() - y0_) / h_))};
  }
  std::size_t cell(std::complex<double> p) const {
    auto [i, j] = coords(p);
    i = std::clamp<std::int64_t>(i, 0, std::int64_t(n_) - 1);
    j = std::clamp<std::int64_t>(j, 0, std::int64_t(n_) - 1);
    return std::size_t(i) * n_ + std::size_t(j);
  }

  const std::vector<std::complex<double>>& pts_;
  double x0_ = 0, y0_ = 0, h_ = 1;
  std::size_t n_ = 1;
  std::vector<std::vector<std::size_t>> cells_;
};

std::vector<std::complex<double>> as_complex(const FractalApprox& f) {
  std::vector<std::complex<double>> out;
  for (const auto& p : f.plane) out.emplace_back(p[0], p.size() > 1 ? p[1] : 0.0);
  return out;
}

double directed(const std::vector<std::complex<double>>& from, const Grid& to) {
  double d = 0;
  for (const auto& p : from) d = std::max(d, to.nearest(p));
  return d;
}

}  // namespace

HausdorffEstimate hausdorff_estimate(const FractalApprox& a, const FractalApprox& b) {
  if (a.alphabet_size != b.alphabet_size) throw std::invalid_argument("different planes");
  const auto pa = as_complex(a), pb = as_complex(b);
  HausdorffEstimate h;
  if (pa.empty() || pb.empty()) throw std::invalid_argument("empty cloud");
  const Grid ga(pa), gb(pb);
  h.cloud_distance = std::max(directed(pa, gb), directed(pb, ga));
  const double tails = a.tail_radius + b.tail_radius;
  h.bound = Interval(std::max(0.0, h.cloud_distance - tails), h.cloud_distance + tails);
  return h;
}

}  // namespace sadic
