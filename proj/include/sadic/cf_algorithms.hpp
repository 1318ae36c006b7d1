#ifndef SADIC_CF_ALGORITHMS_HPP
#define SADIC_CF_ALGORITHMS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sadic/directive.hpp"
#include "sadic/interval.hpp"
#include "sadic/rational.hpp"

namespace sadic {

class DomainError : public std::domain_error {
 public:
  DomainError(const std::string& what, std::size_t step)
      : std::domain_error(what + " at step " + std::to_string(step)), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// An interval comparison could not decide a branch.
class Inconclusive : public std::runtime_error {
 public:
  Inconclusive(const std::string& what, std::size_t step)
      : std::runtime_error(what + " at step " + std::to_string(step)), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

enum class AlgorithmKind { cassaigne, sturmian, brun, arnoux_rauzy };

struct Selection {
  std::size_t id = 0;
  bool tie = false;   // a boundary case was broken by the fixed rule
};

class Algorithm {
 public:
  static const Algorithm& get(AlgorithmKind kind);
  static const Algorithm& by_name(std::string_view name);
  // Same selector over a caller-supplied set, whose names and matrices must
  // match the built-in ones.
  static Algorithm with_set(AlgorithmKind kind, SubstitutionSet set);

  AlgorithmKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::size_t dimension() const { return set_->alphabet_size(); }
  const SubstitutionSet& set() const { return *set_; }
  std::shared_ptr<const SubstitutionSet> set_ptr() const { return set_; }
  const IntMatrix& inverse(std::size_t id) const { return inverses_.at(id); }

  // `step` is only used for error messages.
  Selection select(const Vec<Rational>& x, std::size_t step = 0) const;
  Selection select(const Vec<double>& x, std::size_t step = 0) const;
  Selection select(const Vec<Interval>& x, std::size_t step = 0) const;

  bool in_domain(const Vec<Rational>& x) const;

 private:
  Algorithm(AlgorithmKind kind, std::string name, SubstitutionSet set);
  template <class T>
  Selection select_impl(const Vec<T>& x, std::size_t step) const;

  AlgorithmKind kind_;
  std::string name_;
  std::shared_ptr<const SubstitutionSet> set_;
  std::vector<IntMatrix> inverses_;
  std::vector<std::size_t> brun_index_;   // permutation code -> id
};

template <class T>
struct StepResult {
  Selection selection;
  Vec<T> x;
};

// One step x -> ab(s0(x))^{-1} x, rescaled to 1-norm 1.
template <class T>
StepResult<T> step(const Algorithm& alg, const Vec<T>& x, std::size_t index = 0);

template <class T>
struct OrbitRecord {
  std::vector<Vec<T>> directions;      // x^(0) .. x^(n)
  std::vector<std::size_t> ids;        // s_0 .. s_{n-1}
  std::vector<bool> ties;
  std::optional<std::size_t> exit_index;
  std::string exit_reason;
  bool exit_inconclusive = false;    // an interval comparison, not the domain, ended it

  std::size_t length() const { return ids.size(); }
};

// Runs n steps; a domain exit or undecidable comparison ends the record early.
template <class T>
OrbitRecord<T> orbit(const Algorithm& alg, Vec<T> x, std::size_t n);

template <class T>
Vec<T> normalize(Vec<T> x);

DirectiveSequence directive_sequence(const Algorithm& alg, const OrbitRecord<Rational>& record);

// Lazily driven by the exact orbit of x.
DirectiveSequence algorithm_sequence(const Algorithm& alg, Vec<Rational> x);

IntMatrix partial_product(const Algorithm& alg, const std::vector<std::size_t>& ids,
                          std::size_t k, std::size_t l);

struct PerronDirection {
  Vec<Interval> v;      // enclosure of the Perron eigenvector, 1-norm 1
  Interval value;       // enclosure of the Perron eigenvalue
  Vec<double> mid() const;
};

// Throws std::invalid_argument for non-primitive matrices.
PerronDirection perron_direction(const IntMatrix& m, double precision = 1e-12);

// Runs of a single substitution with lengths uniform in [1, max_run]; each run
// uses a substitution different from the previous one.
DirectiveSequence random_runs(const Algorithm& alg, std::uint64_t seed, std::size_t max_run);

// Uniform sample of the open simplex in dimension n.
template <class Rng>
Vec<double> sample_simplex(Rng& rng, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  Vec<double> x(n);
  for (auto& c : x) c = e(rng);
  return normalize(std::move(x));
}

}  // namespace sadic

#endif
