#ifndef SADIC_DIRECTIVE_HPP
#define SADIC_DIRECTIVE_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sadic/words.hpp"

namespace sadic {

class DirectiveSequence {
 public:
  enum class Kind { periodic, prefix, algorithm };
  // Returns the next identifier, or nothing when the sequence is exhausted.
  using Generator = std::function<std::optional<std::size_t>()>;

  static DirectiveSequence periodic(std::shared_ptr<const SubstitutionSet> set,
                                    std::vector<std::size_t> period);
  // `extension` repeats forever after `prefix`; empty means the sequence stops.
  static DirectiveSequence with_prefix(std::shared_ptr<const SubstitutionSet> set,
                                       std::vector<std::size_t> prefix,
                                       std::vector<std::size_t> extension = {});
  static DirectiveSequence generated(std::shared_ptr<const SubstitutionSet> set, Generator gen);

  // Parses names such as "c0 c1 c1" or "c0c1c1": names are matched greedily.
  static std::vector<std::size_t> parse_names(const SubstitutionSet& set, std::string_view text);

  const SubstitutionSet& set() const { return *set_; }
  std::shared_ptr<const SubstitutionSet> set_ptr() const { return set_; }
  Kind kind() const { return kind_; }

  // Materializes at least n terms if possible and reports whether it could.
  bool has(std::size_t n) const;
  std::size_t at(std::size_t k) const;
  const Substitution& substitution(std::size_t k) const { return (*set_)[at(k)]; }
  std::vector<std::size_t> prefix(std::size_t n) const;
  std::string names(std::size_t k, std::size_t l, std::string_view sep = "") const;

  // M_{[k,l)} = M_k ... M_{l-1}
  IntMatrix product(std::size_t k, std::size_t l) const;
  Word apply_range(std::size_t k, std::size_t l, const Word& w, std::size_t limit) const;

 private:
  std::shared_ptr<const SubstitutionSet> set_;
  Kind kind_ = Kind::periodic;
  std::shared_ptr<Generator> gen_;
  mutable std::shared_ptr<std::vector<std::size_t>> cache_;
  mutable bool exhausted_ = false;
};

struct FixedPointRow {
  Word letters;            // materialized prefix of u_k
  std::size_t determined;  // number of leading letters that do not depend on the seed
  std::size_t depth;       // n such that letters is a prefix of s_[k,n)(seed)
};

struct FixedPointPrefix {
  std::vector<FixedPointRow> rows;
  bool complete = true;    // every row determined to the requested length
};

// Rows u_0..u_{rows-1} of a fixed point, built as s_[k,n)(seed) for the largest
// available n <= max_depth.  A letter is determined when s_[k,n)(b) agrees on it
// for every letter b.  Without a seed the first letter 0 is used.
FixedPointPrefix fixed_point_prefix(const DirectiveSequence& s, std::size_t rows,
                                    std::size_t length, std::size_t max_depth,
                                    std::optional<Letter> seed = std::nullopt);

struct PeriodicPoint {
  std::size_t period = 0;
  Word prefix;
};

// Prefix of the periodic point of sigma through letter a.  Throws
// std::domain_error when the first-letter cycle through a is not growing.
PeriodicPoint periodic_point(const Substitution& sigma, Letter a, std::size_t length);

// Least n in (k, horizon] with M_{[k,n)} entrywise positive.
std::optional<std::size_t> is_primitive_window(const DirectiveSequence& s, std::size_t k,
                                               std::size_t horizon);

struct GrowthTrace {
  std::vector<Vec<double>> column_norms;  // entry n holds the column 1-norms of M_{[0,n)}
  bool flagged = false;              // some column stayed constant over the second half
};

GrowthTrace is_everywhere_growing_window(const DirectiveSequence& s, std::size_t horizon);

}  // namespace sadic

#endif
