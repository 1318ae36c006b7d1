#ifndef SADIC_FRACTAL_HPP
#define SADIC_FRACTAL_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sadic/automaton.hpp"
#include "sadic/interval.hpp"
#include "sadic/polynomial.hpp"

namespace sadic {

// Path sums sum_{k<n} M_[0,k) t_k over all paths of length n, projected along v.
struct FractalApprox {
  std::size_t alphabet_size = 0;
  std::size_t depth = 0;
  Vec<double> v;
  std::vector<IntVec> lifts;         // exact integer points before projection
  std::vector<Letter> letters;       // target letter of each path
  std::vector<Letter> starts;        // deepest state of each path
  std::vector<Vec<double>> plane;    // pi_v(lift) in the basis e_i - e_0
  double tail_radius = 0.0;          // 1-norm bound, see tail_rigorous
  bool tail_rigorous = false;
  bool downsampled = false;

  std::size_t size() const { return lifts.size(); }
  std::vector<std::size_t> counts() const;
  std::string to_csv() const;
};

struct ApproximateOptions {
  std::optional<Letter> first_letter;   // only paths starting at b_n; all starts if empty
  std::size_t max_points = 4'000'000;   // above this only every k-th path is kept
  std::size_t remainder_depth = 10;     // depth of the shifted cloud used for the tail
};

// Throws std::invalid_argument if v is not in M_[0,n) R_+^{d+1} (up to 1e-9).
FractalApprox approximate(const PrefixAutomaton& aut, const DirectiveSequence& s,
                          const Vec<double>& v, std::size_t depth,
                          const ApproximateOptions& opt = {});

// Linear functional phi(z) = e.z with e a left eigenvector of M for the root beta
// of modulus < 1.  Written for 3x3 matrices with a single real eigenvalue.
class ComplexEmbedding {
 public:
  // For ab(c0 c1): e = (1, beta^2 - beta, beta - 1).
  static ComplexEmbedding cassaigne();
  // Generic left eigenvector for the conjugate root of a 3x3 matrix.
  static ComplexEmbedding for_matrix(const IntMatrix& m);

  const IntMatrix& matrix() const { return m_; }
  const CubicRoots& roots() const { return roots_; }
  const ComplexInterval& beta() const { return roots_.beta; }
  const std::vector<ComplexInterval>& row() const { return e_; }

  ComplexInterval phi(const IntVec& z) const;
  ComplexInterval phi(const Vec<Interval>& z) const;
  std::complex<double> phi_mid(const IntVec& z) const;
  std::complex<double> phi_mid(const Vec<double>& z) const;
  // phi of the lattice basis e_i - e_0.
  std::vector<ComplexInterval> lattice_basis() const;

 private:
  IntMatrix m_;
  CubicRoots roots_;
  std::vector<ComplexInterval> e_;
};

struct Ball {
  ComplexInterval center;
  Interval radius;

  static Ball from_decimal(const std::string& re, const std::string& im, const std::string& r);
  Ball scaled(double factor) const;
};

struct BallViolation {
  Letter target;
  Letter start;
  std::vector<std::size_t> digits;   // t_0 .. t_{n-1}
  double deficit;                    // upper bound of the distance excess
};

struct BallCertificate {
  std::vector<Ball> balls;
  std::size_t depth = 0;
  double margin = 0.0;               // certified lower bound of the worst slack
  bool ok = false;
  std::size_t paths = 0;
  std::vector<BallViolation> violations;

  std::string to_json() const;
};

// For every path b -> ... -> a of length n under sigma^n, the disk
// beta^n O_b + sum t_k beta^k must lie inside O_a.
BallCertificate certify_balls(const ComplexEmbedding& emb, const PrefixAutomaton& aut,
                              std::size_t sigma, const std::vector<Ball>& balls, std::size_t n);

struct SeedReport {
  bool zero_outside_other_balls = false;   // |z_b| > r_b for b != 0
  bool zero_inside_first_ball = false;     // |z_0| < r_0
  Interval extent;                          // max_a |z_a| + r_a
  bool extent_below_threshold = false;
  double threshold = 1.5;
  std::size_t enumerated = 0;               // lattice points examined
  std::vector<IntVec> exceptional;          // lattice vectors t with |phi(t)| not above threshold
  std::vector<IntVec> inconclusive;
  bool ok = false;

  std::string to_json() const;
};

SeedReport seed_certificate(const ComplexEmbedding& emb, const BallCertificate& cert,
                            double threshold = 1.5);

// Closed disks covering the pieces, in a planar coordinate system in which the
// lattice is generated by `lattice`.
struct PieceCover {
  std::size_t alphabet_size = 0;
  std::vector<std::complex<double>> centers;
  std::vector<double> radii;
  std::vector<Letter> letters;
  std::vector<std::complex<double>> lattice;   // images of e_i - e_0
};

// Rigorous cover of R_a for the periodic sequence sigma^omega: for each path of
// length n the disk beta^n O_b + sum t_k beta^k, in phi coordinates.
PieceCover ball_cover(const ComplexEmbedding& emb, const PrefixAutomaton& aut, std::size_t sigma,
                      const std::vector<Ball>& balls, std::size_t n);

// Disks of radius tail_radius around the cloud, in the basis coordinates (d = 1 or 2).
PieceCover cloud_cover(const FractalApprox& f);

struct HausdorffEstimate {
  double cloud_distance = 0.0;
  Interval bound;     // cloud distance widened by both tail radii
};

HausdorffEstimate hausdorff_estimate(const FractalApprox& a, const FractalApprox& b);

}  // namespace sadic

#endif
