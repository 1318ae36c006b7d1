#ifndef SADIC_TORUS_HPP
#define SADIC_TORUS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sadic/cf_algorithms.hpp"
#include "sadic/fractal.hpp"
#include "sadic/geometry.hpp"
#include "sadic/render.hpp"

namespace sadic {

// T_x on P / Lambda: translation by pi_x(e_0) = e_0 - v(x), in basis coordinates.
template <class T>
struct TorusTranslation {
  Vec<T> v;
  Vec<T> t;

  static TorusTranslation from_direction(Vec<T> x) {
    TorusTranslation tr;
    tr.v = normalize(std::move(x));
    IntVec e0 = unit_vector(tr.v.size(), 0);
    tr.t = torus_reduce(project(tr.v, e0));
    return tr;
  }
  Vec<T> translate(const Vec<T>& p, std::size_t times = 1) const {
    Vec<T> q(p);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += T(static_cast<long>(times)) * t[i];
    return torus_reduce(q);
  }
  // Per-letter translation vectors pi_x(e_a) of the domain exchange.
  std::vector<Vec<T>> exchange_vectors() const {
    std::vector<Vec<T>> out;
    for (std::size_t a = 0; a < v.size(); ++a) out.push_back(project(v, unit_vector(v.size(), a)));
    return out;
  }
};

struct CodingResult {
  Word letters;
  std::vector<bool> certain;
  std::size_t ambiguous = 0;
  std::size_t uncovered = 0;

  double ambiguity_rate() const {
    return letters.empty() ? 0.0 : double(ambiguous) / double(letters.size());
  }
};

// Codes the orbit p0, p0 + t, ... by piece membership.  A step is certain when
// the point lies in a disk of exactly one letter (lattice translates included).
// Points in no disk get the letter of the nearest disk and count as uncovered.
CodingResult code_orbit(const PieceCover& cover, const Vec<double>& t, const Vec<double>& p0,
                        std::size_t n);

struct BoundedRemainder {
  double k = 0.0;                    // max_N ||ab(p_N) - N v||_1
  std::vector<double> per_letter;    // max_N |ab(p_N)_a - N v_a|
  std::size_t argmax = 0;
};

BoundedRemainder bounded_remainder_check(const Word& prefix, const Vec<double>& v,
                                         std::size_t n_max);

struct ExactRemainder {
  Rational k;
  std::vector<Rational> per_letter;
  std::size_t argmax = 0;
};

ExactRemainder bounded_remainder_exact(const Word& prefix, const Vec<Rational>& v,
                                       std::size_t n_max);

// Number of ways to write w as a concatenation of the given words.
BigInt factorization_count(const Word& w, const std::vector<Word>& blocks);

// The unique factorization of w over the images of sigma, as a word over the
// letters whose images were used.  Throws if it is not unique or does not exist.
Word desubstitute(const Substitution& sigma, const Word& w);

struct RenormalizationStep {
  bool bottom = false;               // c0 branch, remove R_2
  std::size_t substitution = 0;
  Vec<Rational> x;                   // v(x)
  Vec<Rational> next;                // v(F x)
  Matrix<double> n;                  // N with N pi_{Fx} = pi_x M, basis e_i - e_0
  double det_n = 0.0;
  double det_expected = 0.0;         // det M / ||M v(Fx)||_1
  std::size_t induced_points = 0;    // cloud points with t_0 = 0
  bool lifts_match = false;          // those points are exactly M applied to the next cloud
  double hausdorff = 0.0;            // N (next cloud) vs induced points, in the plane

  std::string to_json() const;
};

struct Renormalization {
  RenormalizationStep step;
  FractalApprox current;
  FractalApprox next;
  std::vector<bool> induced;         // membership of current points in U
};

// Throws std::domain_error on v0 = v2 (measure tie).
Renormalization renormalize(const Algorithm& cassaigne, const Vec<Rational>& x,
                            std::size_t depth, std::size_t directive_length);

// Two rows of panels per step: the partition and its image under the exchange,
// with the induced set outlined in black.
Raster render_renormalization(const Algorithm& cassaigne, const Vec<Rational>& x,
                              std::size_t steps, std::size_t depth, int panel);

}  // namespace sadic

#endif
