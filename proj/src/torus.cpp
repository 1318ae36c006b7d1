#include "sadic/torus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "sadic/lyapunov.hpp"

namespace sadic {

namespace {

// Spatial hash over the cover disks.
class DiskIndex {
 public:
  explicit DiskIndex(const PieceCover& c) : cover_(c) {
    double rmax = 0;
    for (std::size_t i = 0; i < c.centers.size(); ++i) {
      rmax = std::max(rmax, c.radii[i]);
      xmin_ = std::min(xmin_, c.centers[i].real() - c.radii[i]);
      xmax_ = std::max(xmax_, c.centers[i].real() + c.radii[i]);
      ymin_ = std::min(ymin_, c.centers[i].imag() - c.radii[i]);
      ymax_ = std::max(ymax_, c.centers[i].imag() + c.radii[i]);
    }
    const double span = std::max({xmax_ - xmin_, ymax_ - ymin_, 1e-12});
    h_ = std::max(2 * rmax, span / std::max(1.0, std::sqrt(double(c.centers.size()))));
    for (std::size_t i = 0; i < c.centers.size(); ++i) {
      const auto [x0, y0] = cell(c.centers[i] - std::complex<double>(c.radii[i], c.radii[i]));
      const auto [x1, y1] = cell(c.centers[i] + std::complex<double>(c.radii[i], c.radii[i]));
      for (std::int64_t x = x0; x <= x1; ++x)
        for (std::int64_t y = y0; y <= y1; ++y) cells_[{x, y}].push_back(i);
    }
  }

  bool inside_box(std::complex<double> z) const {
    return z.real() >= xmin_ && z.real() <= xmax_ && z.imag() >= ymin_ && z.imag() <= ymax_;
  }
  double xmin() const { return xmin_; }
  double xmax() const { return xmax_; }
  double ymin() const { return ymin_; }
  double ymax() const { return ymax_; }

  template <class F>
  void containing(std::complex<double> z, F&& f) const {
    auto it = cells_.find(cell(z));
    if (it == cells_.end()) return;
    for (std::size_t i : it->second)
      if (std::abs(z - cover_.centers[i]) <= cover_.radii[i]) f(i);
  }

 private:
  std::pair<std::int64_t, std::int64_t> cell(std::complex<double> z) const {
    return {static_cast<std::int64_t>(std::floor(z.real() / h_)),
            static_cast<std::int64_t>(std::floor(z.imag() / h_))};
  }

  const PieceCover& cover_;
  double xmin_ = std::numeric_limits<double>::infinity(), xmax_ = -xmin_;
  double ymin_ = xmin_, ymax_ = -xmin_;
  double h_ = 1;
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>> cells_;
};

// Lattice vectors m with z - sum m_i lattice_i possibly inside the cover's bounding box.
std::vector<std::complex<double>> candidate_shifts(const PieceCover& cover, const DiskIndex& idx,
                                                   std::complex<double> z) {
  std::vector<std::complex<double>> out;
  const auto& lat = cover.lattice;
  if (lat.size() == 1) {
    const double l = lat[0].real();
    const auto lo = static_cast<std::int64_t>(std::floor((z.real() - idx.xmax()) / l));
    const auto hi = static_cast<std::int64_t>(std::ceil((z.real() - idx.xmin()) / l));
    for (std::int64_t m = lo; m <= hi; ++m) out.push_back(double(m) * lat[0]);
    return out;
  }
  const double a = lat[0].real(), b = lat[1].real(), c = lat[0].imag(), d = lat[1].imag();
  const double det = a * d - b * c;
  std::int64_t lo[2] = {std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::max()};
  std::int64_t hi[2] = {std::numeric_limits<std::int64_t>::min(), std::numeric_limits<std::int64_t>::min()};
  for (double x : {idx.xmin(), idx.xmax()})
    for (double y : {idx.ymin(), idx.ymax()}) {
      const std::complex<double> w = z - std::complex<double>(x, y);
      const double m0 = (d * w.real() - b * w.imag()) / det;
      const double m1 = (-c * w.real() + a * w.imag()) / det;
      lo[0] = std::min(lo[0], static_cast<std::int64_t>(std::floor(m0)));
      hi[0] = std::max(hi[0], static_cast<std::int64_t>(std::ceil(m0)));
      lo[1] = std::min(lo[1], static_cast<std::int64_t>(std::floor(m1)));
      hi[1] = std::max(hi[1], static_cast<std::int64_t>(std::ceil(m1)));
    }
  for (std::int64_t m0 = lo[0]; m0 <= hi[0]; ++m0)
    for (std::int64_t m1 = lo[1]; m1 <= hi[1]; ++m1) out.push_back(double(m0) * lat[0] + double(m1) * lat[1]);
  return out;
}

}  // namespace

CodingResult code_orbit(const PieceCover& cover, const Vec<double>& t, const Vec<double>& p0,
                        std::size_t n) {
  if (t.size() != cover.lattice.size() || p0.size() != t.size())
    throw std::invalid_argument("orbit and cover dimensions differ");
  if (cover.centers.empty()) throw std::invalid_argument("empty cover");
  CodingResult res;
  const DiskIndex idx(cover);
  for (std::size_t k = 0; k < n; ++k) {
    Vec<double> p(p0);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += double(k) * t[i];
    p = torus_reduce(p);
    std::complex<double> z = 0;
    for (std::size_t i = 0; i < p.size(); ++i) z += p[i] * cover.lattice[i];

    std::set<Letter> hit;
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& shift : candidate_shifts(cover, idx, z)) {
      const std::complex<double> w = z - shift;
      if (!idx.inside_box(w)) continue;
      idx.containing(w, [&](std::size_t i) {
        hit.insert(cover.letters[i]);
        const double dist = std::abs(w - cover.centers[i]);
        if (dist < best_d) {
          best_d = dist;
          best = i;
        }
      });
    }
    if (hit.empty()) {
      ++res.uncovered;
      for (const auto& shift : candidate_shifts(cover, idx, z))
        for (std::size_t i = 0; i < cover.centers.size(); ++i) {
          const double dist = std::abs(z - shift - cover.centers[i]) - cover.radii[i];
          if (dist < best_d) {
            best_d = dist;
            best = i;
          }
        }
    }
    res.letters.push_back(cover.letters[best]);
    res.certain.push_back(hit.size() == 1);
    if (hit.size() > 1) ++res.ambiguous;
  }
  return res;
}

BoundedRemainder bounded_remainder_check(const Word& prefix, const Vec<double>& v,
                                         std::size_t n_max) {
  if (prefix.size() < n_max) throw std::invalid_argument("prefix shorter than N_max");
  BoundedRemainder r;
  r.per_letter.assign(v.size(), 0.0);
  std::vector<std::size_t> count(v.size(), 0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    ++count.at(prefix[n - 1]);
    long double total = 0;
    for (std::size_t a = 0; a < v.size(); ++a) {
      const long double dev = std::abs(static_cast<long double>(count[a]) - static_cast<long double>(n) * v[a]);
      r.per_letter[a] = std::max(r.per_letter[a], double(dev));
      total += dev;
    }
    if (double(total) > r.k) {
      r.k = double(total);
      r.argmax = n;
    }
  }
  return r;
}

ExactRemainder bounded_remainder_exact(const Word& prefix, const Vec<Rational>& v,
                                       std::size_t n_max) {
  if (prefix.size() < n_max) throw std::invalid_argument("prefix shorter than N_max");
  ExactRemainder r;
  r.per_letter.assign(v.size(), Rational(0));
  std::vector<std::int64_t> count(v.size(), 0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    ++count.at(prefix[n - 1]);
    Rational total = 0;
    for (std::size_t a = 0; a < v.size(); ++a) {
      Rational dev = Rational(count[a]) - Rational(static_cast<std::int64_t>(n)) * v[a];
      if (dev < 0) dev = -dev;
      if (dev > r.per_letter[a]) r.per_letter[a] = dev;
      total += dev;
    }
    if (total > r.k) {
      r.k = total;
      r.argmax = n;
    }
  }
  return r;
}

BigInt factorization_count(const Word& w, const std::vector<Word>& blocks) {
  std::vector<BigInt> ways(w.size() + 1, 0);
  ways[w.size()] = 1;
  for (std::size_t i = w.size(); i-- > 0;)
    for (const Word& b : blocks)
      if (!b.empty() && i + b.size() <= w.size() && std::equal(b.begin(), b.end(), w.begin() + std::ptrdiff_t(i)))
        ways[i] += ways[i + b.size()];
  return ways[0];
}

Word desubstitute(const Substitution& sigma, const Word& w) {
  std::vector<Word> blocks;
  for (std::size_t a = 0; a < sigma.alphabet_size(); ++a) blocks.push_back(sigma.image(static_cast<Letter>(a)));
  const BigInt count = factorization_count(w, blocks);
  if (count != 1) throw std::domain_error("word has " + count.str() + " factorizations over " + sigma.name());
  Word out;
  std::size_t i = 0;
  while (i < w.size()) {
    for (std::size_t a = 0; a < blocks.size(); ++a) {
      const Word& b = blocks[a];
      if (i + b.size() > w.size() || !std::equal(b.begin(), b.end(), w.begin() + std::ptrdiff_t(i))) continue;
      const Word rest(w.begin() + std::ptrdiff_t(i + b.size()), w.end());
      if (factorization_count(rest, blocks) == 0) continue;
      out.push_back(static_cast<Letter>(a));
      i += b.size();
      break;
    }
  }
  return out;
}

std::string RenormalizationStep::to_json() const {
  nlohmann::json j;
  j["type"] = bottom ? "bottom" : "top";
  j["removed_piece"] = bottom ? 2 : 0;
  j["substitution"] = substitution;
  std::vector<std::string> xs, ns;
  for (const auto& c : x) xs.push_back(sadic::to_string(c));
  for (const auto& c : next) ns.push_back(sadic::to_string(c));
  j["x"] = xs;
  j["next"] = ns;
  for (std::size_t i = 0; i < n.rows(); ++i) {
    std::vector<double> row;
    for (std::size_t k = 0; k < n.cols(); ++k) row.push_back(n(i, k));
    j["n"].push_back(row);
  }
  j["det_n"] = det_n;
  j["det_expected"] = det_expected;
  j["induced_points"] = induced_points;
  j["lifts_match"] = lifts_match;
  j["hausdorff"] = hausdorff;
  return j.dump();
}

namespace {

Vec<double> to_double(const Vec<Rational>& x) {
  Vec<double> out;
  for (const auto& c : x) out.push_back(sadic::to_double(c));
  return out;
}

}  // namespace

Renormalization renormalize(const Algorithm& cassaigne, const Vec<Rational>& x_in,
                            std::size_t depth, std::size_t directive_length) {
  if (cassaigne.kind() != AlgorithmKind::cassaigne) throw std::invalid_argument("renormalization needs Cassaigne");
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  const Vec<Rational> x = normalize(x_in);
  if (x[0] == x[2]) throw std::domain_error("measure tie between R_0 and R_2");
  const auto rec = orbit(cassaigne, x, std::max(directive_length, depth + 1));
  if (rec.length() < depth + 1) throw std::domain_error("orbit ended early: " + rec.exit_reason);
  const DirectiveSequence s = directive_sequence(cassaigne, rec);
  const std::vector<std::size_t> ids = s.prefix(rec.length());
  const DirectiveSequence shifted =
      DirectiveSequence::with_prefix(cassaigne.set_ptr(), std::vector<std::size_t>(ids.begin() + 1, ids.end()));
  const auto aut = PrefixAutomaton::build(cassaigne.set_ptr());
  const Substitution& sigma = s.substitution(0);
  const IntMatrix m = sigma.matrix();

  Renormalization r;
  RenormalizationStep& st = r.step;
  st.substitution = ids[0];
  st.bottom = x[0] > x[2];
  st.x = x;
  st.next = rec.directions[1];
  const Vec<double> v = to_double(x);
  st.n = plane_map(m, v);
  st.det_n = st.n(0, 0) * st.n(1, 1) - st.n(0, 1) * st.n(1, 0);
  Rational norm = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) norm += Rational(m(i, j)) * st.next[j];
  st.det_expected = sadic::to_double(Rational(static_cast<std::int64_t>(determinant(m))) / norm);

  ApproximateOptions opt;
  opt.max_points = std::numeric_limits<std::size_t>::max();
  r.current = approximate(aut, s, v, depth, opt);
  r.next = approximate(aut, shifted, to_double(st.next), depth - 1, opt);

  // U = points at block boundaries of s_0(s_[1,n)(b)).
  std::set<std::pair<Letter, IntVec>> boundary;
  for (std::size_t b = 0; b < 3; ++b) {
    const Word inner = shifted.apply_range(0, depth - 1, {static_cast<Letter>(b)}, std::numeric_limits<std::size_t>::max());
    IntVec p(3, 0);
    for (Letter c : inner) {
      boundary.insert({static_cast<Letter>(b), p});
      for (Letter e : sigma.image(c)) ++p[e];
    }
  }
  r.induced.resize(r.current.size());
  std::multiset<std::pair<Letter, IntVec>> induced, mapped;
  for (std::size_t i = 0; i < r.current.size(); ++i) {
    r.induced[i] = boundary.count({r.current.starts[i], r.current.lifts[i]}) > 0;
    if (r.induced[i]) induced.insert({r.current.starts[i], r.current.lifts[i]});
  }
  for (std::size_t i = 0; i < r.next.size(); ++i) mapped.insert({r.next.starts[i], m * r.next.lifts[i]});
  st.induced_points = induced.size();
  st.lifts_match = induced == mapped;

  FractalApprox a, b;
  a.alphabet_size = b.alphabet_size = 3;
  for (std::size_t i = 0; i < r.current.size(); ++i)
    if (r.induced[i]) a.plane.push_back(r.current.plane[i]);
  for (const auto& q : r.next.plane) {
    Vec<double> w(2, 0.0);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) w[i] += st.n(i, j) * q[j];
    b.plane.push_back(w);
  }
  a.lifts.resize(a.plane.size());
  b.lifts.resize(b.plane.size());
  st.hausdorff = (a.plane.empty() || b.plane.empty()) ? std::numeric_limits<double>::infinity()
                                                      : hausdorff_estimate(a, b).cloud_distance;
  return r;
}

namespace {

Window fit_both(const FractalApprox& f) {
  const Window w = fit_window(f, 0.0);
  double xmin = w.xmin, xmax = w.xmax, ymin = w.ymin, ymax = w.ymax;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Vec<double> p = f.plane[i];
    const Vec<double> e = project(f.v, unit_vector(3, f.letters[i]));
    for (std::size_t k = 0; k < 2; ++k) p[k] += e[k];
    const auto [x, y] = screen(p);
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  const double span = std::max(xmax - xmin, ymax - ymin) * 1.1;
  const double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
  return {cx - span / 2, cx + span / 2, cy - span / 2, cy + span / 2};
}

// Pixels of the induced set, grown by one pixel, with their boundary drawn in black.
void outline(Raster& r, const FractalApprox& f, const std::vector<bool>& induced) {
  const Window& win = r.window();
  std::vector<char> mask(static_cast<std::size_t>(r.width()) * r.height(), 0);
  auto index = [&](int x, int y) { return static_cast<std::size_t>(y) * r.width() + x; };
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!induced[i]) continue;
    const auto [x, y] = screen(f.plane[i]);
    const int px = static_cast<int>(std::floor((x - win.xmin) / (win.xmax - win.xmin) * r.width()));
    const int py = static_cast<int>(std::floor((win.ymax - y) / (win.ymax - win.ymin) * r.height()));
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy)
        if (px + dx >= 0 && py + dy >= 0 && px + dx < r.width() && py + dy < r.height()) mask[index(px + dx, py + dy)] = 1;
  }
  for (int y = 0; y < r.height(); ++y)
    for (int x = 0; x < r.width(); ++x) {
      if (!mask[index(x, y)]) continue;
      const bool edge = x == 0 || y == 0 || x + 1 == r.width() || y + 1 == r.height() || !mask[index(x - 1, y)] ||
                        !mask[index(x + 1, y)] || !mask[index(x, y - 1)] || !mask[index(x, y + 1)];
      if (edge) r.at(x, y) = {0, 0, 0};
    }
}

void draw_column(Raster& canvas, int col, int panel, const FractalApprox& f, const std::vector<bool>& induced) {
  const Window win = fit_both(f);
  Raster top(panel, panel, win), bottom(panel, panel, win);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Rgb c = letter_color(f.letters[i]);
    auto [x, y] = screen(f.plane[i]);
    top.plot(x, y, c);
    Vec<double> p = f.plane[i];
    const Vec<double> e = project(f.v, unit_vector(3, f.letters[i]));
    for (std::size_t k = 0; k < 2; ++k) p[k] += e[k];
    const auto [u, w] = screen(p);
    bottom.plot(u, w, c);
  }
  if (!induced.empty()) outline(top, f, induced);
  canvas.blit(top, col * panel, 0);
  canvas.blit(bottom, col * panel, panel);
}

}  // namespace

Raster render_renormalization(const Algorithm& cassaigne, const Vec<Rational>& x,
                              std::size_t steps, std::size_t depth, int panel) {
  if (depth <= steps) throw std::invalid_argument("depth must exceed the number of steps");
  Raster canvas(panel * int(steps + 1), 2 * panel, Window{});
  Vec<Rational> cur = normalize(x);
  for (std::size_t k = 0; k <= steps; ++k) {
    const std::size_t dk = depth - k;
    if (k < steps) {
      const Renormalization r = renormalize(cassaigne, cur, dk, dk + 12);
      draw_column(canvas, int(k), panel, r.current, r.induced);
      cur = r.step.next;
    } else {
      const auto rec = orbit(cassaigne, cur, dk + 12);
      const auto aut = PrefixAutomaton::build(cassaigne.set_ptr());
      ApproximateOptions opt;
      opt.max_points = std::numeric_limits<std::size_t>::max();
      draw_column(canvas, int(k), panel, approximate(aut, directive_sequence(cassaigne, rec), to_double(cur), dk, opt), {});
    }
  }
  return canvas;
}

}  // namespace sadic
