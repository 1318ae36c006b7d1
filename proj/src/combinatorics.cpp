#include "sadic/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sadic {

std::vector<std::int32_t> suffix_array(const Word& w) {
  // Prefix doubling over cyclic shifts of w followed by a unique smallest sentinel.
  const std::size_t n = w.size() + 1;
  const std::size_t alphabet = 257;
  std::vector<std::int32_t> p(n), c(n), pn(n), cn(n);
  std::vector<std::int32_t> cnt(std::max(alphabet, n), 0);
  auto sym = [&](std::size_t i) { return i + 1 == n ? 0 : int(w[i]) + 1; };
  for (std::size_t i = 0; i < n; ++i) ++cnt[sym(i)];
  for (std::size_t i = 1; i < alphabet; ++i) cnt[i] += cnt[i - 1];
  for (std::size_t i = n; i-- > 0;) p[--cnt[sym(i)]] = static_cast<std::int32_t>(i);
  c[p[0]] = 0;
  std::int32_t classes = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (sym(p[i]) != sym(p[i - 1])) ++classes;
    c[p[i]] = classes - 1;
  }
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t v = std::int64_t(p[i]) - std::int64_t(h);
      if (v < 0) v += std::int64_t(n);
      pn[i] = static_cast<std::int32_t>(v);
    }
    std::fill(cnt.begin(), cnt.begin() + classes, 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[c[pn[i]]];
    for (std::int32_t i = 1; i < classes; ++i) cnt[i] += cnt[i - 1];
    for (std::size_t i = n; i-- > 0;) p[--cnt[c[pn[i]]]] = pn[i];
    cn[p[0]] = 0;
    classes = 1;
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t a = p[i], b = p[i - 1];
      if (c[a] != c[b] || c[(a + h) % n] != c[(b + h) % n]) ++classes;
      cn[p[i]] = classes - 1;
    }
    c.swap(cn);
    if (classes == std::int32_t(n)) break;
  }
  p.erase(p.begin());   // the sentinel suffix sorts first
  return p;
}

std::vector<std::int32_t> lcp_array(const Word& w, const std::vector<std::int32_t>& sa) {
  const std::size_t n = w.size();
  std::vector<std::int32_t> rank(n), lcp(n, 0);
  for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = static_cast<std::int32_t>(i);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && w[i + h] == w[j + h]) ++h;
    lcp[rank[i]] = static_cast<std::int32_t>(h);
    if (h) --h;
  }
  return lcp;
}

std::vector<std::uint64_t> factor_counts(const Word& w, std::size_t n_max) {
  // p(n) = #{suffixes of length >= n} - #{adjacent suffix pairs sharing n letters}
  const std::size_t len = w.size();
  std::vector<std::uint64_t> p(n_max + 1, 0);
  if (len == 0) {
    p[0] = 1;
    return p;
  }
  const auto sa = suffix_array(w);
  const auto lcp = lcp_array(w, sa);
  std::vector<std::int64_t> lcp_at_least(n_max + 2, 0);
  for (std::size_t i = 1; i < len; ++i) ++lcp_at_least[std::min<std::size_t>(lcp[i], n_max + 1)];
  for (std::size_t n = n_max + 1; n-- > 0;) lcp_at_least[n] += lcp_at_least[n + 1];
  p[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::int64_t suffixes = n <= len ? std::int64_t(len - n + 1) : 0;
    p[n] = static_cast<std::uint64_t>(suffixes - lcp_at_least[n]);
  }
  return p;
}

ComplexityTable complexity(const Word& prefix, std::size_t n_max) {
  ComplexityTable t;
  t.prefix_length = prefix.size();
  t.short_prefix = prefix.size() < 50 * n_max;
  t.p = factor_counts(prefix, n_max);
  Word half(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(prefix.size() / 2));
  t.stable_under_doubling = factor_counts(half, n_max) == t.p;
  return t;
}

std::string ComplexityTable::to_csv() const {
  std::ostringstream os;
  os << "n,p,prefix_length\n";
  for (std::size_t n = 0; n < p.size(); ++n) os << n << ',' << p[n] << ',' << prefix_length << '\n';
  return os.str();
}

std::vector<std::vector<std::int64_t>> balance_measure(const Word& prefix,
                                                       std::size_t alphabet_size,
                                                       std::size_t n_max) {
  std::vector<std::vector<std::int64_t>> out(n_max + 1, std::vector<std::int64_t>(alphabet_size, 0));
  const std::size_t len = prefix.size();
  // cum[a][i] = |prefix[0..i)|_a
  std::vector<std::vector<std::int32_t>> cum(alphabet_size, std::vector<std::int32_t>(len + 1, 0));
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t a = 0; a < alphabet_size; ++a) cum[a][i + 1] = cum[a][i] + (prefix[i] == a);
  for (std::size_t n = 1; n <= n_max && n <= len; ++n)
    for (std::size_t a = 0; a < alphabet_size; ++a) {
      std::int32_t lo = static_cast<std::int32_t>(n) + 1, hi = -1;
      for (std::size_t i = 0; i + n <= len; ++i) {
        const std::int32_t c = cum[a][i + n] - cum[a][i];
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      out[n][a] = hi - lo;
    }
  return out;
}

std::vector<Rational> frequency(const Word& prefix, std::size_t alphabet_size) {
  if (prefix.empty()) throw std::invalid_argument("frequency of the empty word");
  const IntVec ab = abelianize(prefix, alphabet_size);
  std::vector<Rational> f;
  for (auto c : ab) f.emplace_back(c, static_cast<std::int64_t>(prefix.size()));
  return f;
}

}  // namespace sadic
