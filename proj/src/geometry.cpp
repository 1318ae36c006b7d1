#include "sadic/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace sadic {

std::vector<IntVec> Worm::piece(Letter a) const {
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (letters[i] == a) out.push_back(points[i]);
  return out;
}

std::string Worm::to_csv() const {
  std::ostringstream os;
  os << "h";
  for (std::size_t i = 0; i < alphabet_size; ++i) os << ",z" << i;
  os << ",letter\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    os << i;
    for (auto c : points[i]) os << ',' << c;
    os << ',' << int(letters[i]) << '\n';
  }
  return os.str();
}

Worm worm(const Word& prefix, std::size_t alphabet_size) {
  Worm w;
  w.alphabet_size = alphabet_size;
  IntVec p(alphabet_size, 0);
  for (Letter a : prefix) {
    if (a >= alphabet_size) throw std::invalid_argument("letter outside the alphabet");
    w.points.push_back(p);
    w.letters.push_back(a);
    ++p[a];
  }
  return w;
}

Vec<Rational> torus_reduce(const Vec<Rational>& p) {
  Vec<Rational> r;
  for (const auto& c : p) r.push_back(frac(c));
  return r;
}

Vec<double> torus_reduce(const Vec<double>& p) {
  Vec<double> r;
  for (double c : p) {
    double f = c - std::floor(c);
    if (f >= 1.0) f = 0.0;
    r.push_back(f);
  }
  return r;
}

std::vector<IntVec> lattice_box(std::size_t dim, std::int64_t radius) {
  std::vector<IntVec> out;
  IntVec c(dim - 1, -radius);
  while (true) {
    IntVec z(dim, 0);
    for (std::size_t i = 0; i + 1 < dim; ++i) {
      z[i + 1] = c[i];
      z[0] -= c[i];
    }
    out.push_back(z);
    std::size_t i = 0;
    while (i < c.size() && c[i] == radius) c[i++] = -radius;
    if (i == c.size()) break;
    ++c[i];
  }
  return out;
}

namespace {

// Integer points of height h whose coordinates 1..d lie in the window.
void for_each_slab_point(std::size_t dim, std::int64_t h, const TilingWindow& win,
                         const std::function<void(const IntVec&)>& f) {
  IntVec c(dim - 1, win.lo);
  if (win.hi < win.lo) return;
  while (true) {
    IntVec z(dim, 0);
    z[0] = h;
    for (std::size_t i = 0; i + 1 < dim; ++i) {
      z[i + 1] = c[i];
      z[0] -= c[i];
    }
    f(z);
    std::size_t i = 0;
    while (i < c.size() && c[i] == win.hi) c[i++] = win.lo;
    if (i == c.size()) break;
    ++c[i];
  }
}

bool in_window(const IntVec& z, const TilingWindow& win) {
  for (std::size_t i = 1; i < z.size(); ++i)
    if (z[i] < win.lo || z[i] > win.hi) return false;
  return true;
}

}  // namespace

std::vector<IntVec> needed_translates(const std::vector<IntVec>& points, const TilingWindow& win,
                                      std::int64_t h_max) {
  std::set<IntVec> out;
  for (const IntVec& w : points) {
    const std::int64_t h = height(w);
    if (h < 0 || h >= h_max) continue;
    for_each_slab_point(w.size(), h, win, [&](const IntVec& z) { out.insert(sub(z, w)); });
  }
  return {out.begin(), out.end()};
}

bool tiling_check(const std::vector<IntVec>& points, const std::vector<IntVec>& translates,
                  const TilingWindow& win, std::int64_t h_max) {
  if (h_max <= 0) return true;
  if (points.empty()) return false;
  const std::size_t dim = points.front().size();
  for (const IntVec& t : translates)
    if (height(t) != 0) throw std::invalid_argument("translate outside the lattice");
  std::map<IntVec, int> hits;
  for (const IntVec& w : points) {
    if (height(w) >= h_max) continue;
    for (const IntVec& t : translates) {
      IntVec z = add(w, t);
      if (in_window(z, win)) ++hits[z];
    }
  }
  for (std::int64_t h = 0; h < h_max; ++h) {
    bool ok = true;
    for_each_slab_point(dim, h, win, [&](const IntVec& z) {
      auto it = hits.find(z);
      if (it == hits.end() || it->second != 1) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

double projection_radius(const Word& prefix, const Vec<double>& v) {
  const Worm w = worm(prefix, v.size());
  double r = 0;
  for (const IntVec& p : w.points) {
    double n = 0;
    for (double c : project(v, p)) n += std::abs(c);
    r = std::max(r, n);
  }
  return r;
}

}  // namespace sadic
