#ifndef SADIC_GEOMETRY_HPP
#define SADIC_GEOMETRY_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sadic/rational.hpp"
#include "sadic/words.hpp"

namespace sadic {

inline std::int64_t height(const IntVec& z) { return sum(z); }

struct Worm {
  std::size_t alphabet_size = 0;
  std::vector<IntVec> points;    // points[i] = ab(u[0..i)), so height(points[i]) = i
  std::vector<Letter> letters;   // letters[i] = u[i]

  std::vector<IntVec> piece(Letter a) const;
  std::string to_csv() const;
};

Worm worm(const Word& prefix, std::size_t alphabet_size);

// pi_v(z) = z - h(z) v in the coordinates over e_1 - e_0, ..., e_d - e_0,
// which are just the coordinates 1..d of the ambient vector.  v has 1-norm 1.
template <class T, class Z>
Vec<T> project(const Vec<T>& v, const Vec<Z>& z) {
  T h(0);
  for (const auto& c : z) h += T(c);
  Vec<T> p(v.size() - 1);
  for (std::size_t i = 1; i < v.size(); ++i) p[i - 1] = T(z[i]) - h * v[i];
  return p;
}

// Ambient vector of a plane point given in the basis e_i - e_0.
template <class T>
Vec<T> lift_plane(const Vec<T>& p) {
  Vec<T> z(p.size() + 1, T(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    z[i + 1] = p[i];
    z[0] -= p[i];
  }
  return z;
}

// Fractional parts of the basis coordinates.
Vec<Rational> torus_reduce(const Vec<Rational>& p);
Vec<double> torus_reduce(const Vec<double>& p);

// Translates of the lattice generated by e_i - e_0, as ambient vectors.
std::vector<IntVec> lattice_box(std::size_t dim, std::int64_t radius);

struct TilingWindow {
  std::int64_t lo = 0;   // coordinates 1..d of the checked slab points lie in [lo, hi]
  std::int64_t hi = 0;
};

// Lattice vectors t such that w + t falls in the window for some worm point of
// height < h_max.
std::vector<IntVec> needed_translates(const std::vector<IntVec>& points, const TilingWindow& win,
                                      std::int64_t h_max);

// True iff every integer point of height i < h_max whose coordinates 1..d lie
// in the window is hit exactly once by {w + t}.
bool tiling_check(const std::vector<IntVec>& points, const std::vector<IntVec>& translates,
                  const TilingWindow& win, std::int64_t h_max);

// max_i ||pi_v(points_i)||_1
double projection_radius(const Word& prefix, const Vec<double>& v);

}  // namespace sadic

#endif
