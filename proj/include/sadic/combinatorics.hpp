#ifndef SADIC_COMBINATORICS_HPP
#define SADIC_COMBINATORICS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sadic/rational.hpp"
#include "sadic/words.hpp"

namespace sadic {

std::vector<std::int32_t> suffix_array(const Word& w);
// lcp[i] = longest common prefix of the suffixes sa[i-1] and sa[i]; lcp[0] = 0.
std::vector<std::int32_t> lcp_array(const Word& w, const std::vector<std::int32_t>& sa);

struct ComplexityTable {
  std::vector<std::uint64_t> p;         // p[n] for n = 0..n_max
  std::size_t prefix_length = 0;
  bool short_prefix = false;            // prefix shorter than 50 n_max
  bool stable_under_doubling = false;   // table of the first half agrees with the full one

  std::string to_csv() const;
};

// Number of distinct factors of each length n <= n_max of the finite word.
std::vector<std::uint64_t> factor_counts(const Word& w, std::size_t n_max);

ComplexityTable complexity(const Word& prefix, std::size_t n_max);

// balance[n][a] = max |v|_a - |w|_a over factors v, w of length n (n = 0..n_max).
std::vector<std::vector<std::int64_t>> balance_measure(const Word& prefix,
                                                       std::size_t alphabet_size,
                                                       std::size_t n_max);

std::vector<Rational> frequency(const Word& prefix, std::size_t alphabet_size);

}  // namespace sadic

#endif
