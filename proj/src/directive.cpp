#include "sadic/directive.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sadic {

DirectiveSequence DirectiveSequence::periodic(std::shared_ptr<const SubstitutionSet> set,
                                              std::vector<std::size_t> period) {
  if (period.empty()) throw std::invalid_argument("empty period");
  for (auto id : period)
    if (id >= set->size()) throw std::invalid_argument("identifier outside the set");
  auto pos = std::make_shared<std::size_t>(0);
  auto p = std::make_shared<std::vector<std::size_t>>(std::move(period));
  DirectiveSequence s = generated(std::move(set), [pos, p]() -> std::optional<std::size_t> {
    return (*p)[(*pos)++ % p->size()];
  });
  s.kind_ = Kind::periodic;
  return s;
}

DirectiveSequence DirectiveSequence::with_prefix(std::shared_ptr<const SubstitutionSet> set,
                                                 std::vector<std::size_t> prefix,
                                                 std::vector<std::size_t> extension) {
  for (auto id : prefix)
    if (id >= set->size()) throw std::invalid_argument("identifier outside the set");
  for (auto id : extension)
    if (id >= set->size()) throw std::invalid_argument("identifier outside the set");
  auto pos = std::make_shared<std::size_t>(0);
  auto pre = std::make_shared<std::vector<std::size_t>>(std::move(prefix));
  auto ext = std::make_shared<std::vector<std::size_t>>(std::move(extension));
  DirectiveSequence s = generated(std::move(set), [pos, pre, ext]() -> std::optional<std::size_t> {
    const std::size_t i = (*pos)++;
    if (i < pre->size()) return (*pre)[i];
    if (ext->empty()) return std::nullopt;
    return (*ext)[(i - pre->size()) % ext->size()];
  });
  s.kind_ = Kind::prefix;
  return s;
}

DirectiveSequence DirectiveSequence::generated(std::shared_ptr<const SubstitutionSet> set,
                                               Generator gen) {
  DirectiveSequence s;
  s.set_ = std::move(set);
  s.kind_ = Kind::algorithm;
  s.gen_ = std::make_shared<Generator>(std::move(gen));
  s.cache_ = std::make_shared<std::vector<std::size_t>>();
  return s;
}

std::vector<std::size_t> DirectiveSequence::parse_names(const SubstitutionSet& set,
                                                        std::string_view text) {
  std::vector<std::size_t> ids;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
      ++i;
      continue;
    }
    std::size_t best = 0, best_id = 0;
    for (std::size_t id = 0; id < set.size(); ++id) {
      const std::string& name = set[id].name();
      if (name.size() > best && text.substr(i, name.size()) == name) {
        best = name.size();
        best_id = id;
      }
    }
    if (best == 0) throw std::invalid_argument("unknown substitution name at '" +
                                               std::string(text.substr(i)) + "'");
    ids.push_back(best_id);
    i += best;
  }
  return ids;
}

bool DirectiveSequence::has(std::size_t n) const {
  while (cache_->size() < n && !exhausted_) {
    auto next = (*gen_)();
    if (!next) {
      exhausted_ = true;
      break;
    }
    if (*next >= set_->size()) throw std::logic_error("generator produced a foreign identifier");
    cache_->push_back(*next);
  }
  return cache_->size() >= n;
}

std::size_t DirectiveSequence::at(std::size_t k) const {
  if (!has(k + 1)) throw std::out_of_range("directive sequence has no term " + std::to_string(k));
  return (*cache_)[k];
}

std::vector<std::size_t> DirectiveSequence::prefix(std::size_t n) const {
  if (!has(n)) throw std::out_of_range("directive sequence shorter than requested prefix");
  return {cache_->begin(), cache_->begin() + static_cast<std::ptrdiff_t>(n)};
}

std::string DirectiveSequence::names(std::size_t k, std::size_t l, std::string_view sep) const {
  std::string out;
  for (std::size_t i = k; i < l; ++i) {
    if (i > k) out += sep;
    out += substitution(i).name();
  }
  return out;
}

IntMatrix DirectiveSequence::product(std::size_t k, std::size_t l) const {
  if (k > l) throw std::out_of_range("empty range");
  IntMatrix m = IntMatrix::identity(set_->alphabet_size());
  for (std::size_t i = k; i < l; ++i) m = m * substitution(i).matrix();
  return m;
}

Word DirectiveSequence::apply_range(std::size_t k, std::size_t l, const Word& w,
                                    std::size_t limit) const {
  Word cur(w);
  if (cur.size() > limit) cur.resize(limit);
  for (std::size_t j = l; j-- > k;) cur = substitution(j).apply_prefix(cur, limit);
  return cur;
}

FixedPointPrefix fixed_point_prefix(const DirectiveSequence& s, std::size_t rows,
                                    std::size_t length, std::size_t max_depth,
                                    std::optional<Letter> seed) {
  const std::size_t n_letters = s.set().alphabet_size();
  const Letter chosen = seed.value_or(0);
  FixedPointPrefix out;
  for (std::size_t k = 0; k < rows; ++k) {
    FixedPointRow row{Word{chosen}, 0, k};
    for (std::size_t n = k + 1; n <= max_depth && s.has(n); ++n) {
      std::vector<Word> images;
      for (std::size_t b = 0; b < n_letters; ++b)
        images.push_back(s.apply_range(k, n, Word{static_cast<Letter>(b)}, length));
      std::size_t lcp = length;
      for (const Word& w : images) {
        std::size_t i = 0;
        const Word& ref = images.front();
        while (i < lcp && i < w.size() && i < ref.size() && w[i] == ref[i]) ++i;
        lcp = std::min(lcp, i);
      }
      row = {images[chosen], lcp, n};
      if (lcp >= length) break;
    }
    if (row.determined < length) out.complete = false;
    out.rows.push_back(std::move(row));
  }
  return out;
}

PeriodicPoint periodic_point(const Substitution& sigma, Letter a, std::size_t length) {
  const std::size_t n = sigma.alphabet_size();
  if (a >= n) throw std::invalid_argument("letter outside the alphabet");
  std::size_t p = 0;
  Letter c = a;
  for (std::size_t i = 1; i <= n; ++i) {
    c = sigma.image(c).front();
    if (c == a) {
      p = i;
      break;
    }
  }
  if (p == 0) throw std::domain_error("no growing periodic point through " + std::to_string(a) +
                                      ": not on a first-letter cycle");
  Word w{a};
  std::size_t last = 1;
  bool grows = false;
  for (std::size_t step = 0; step < (n * n) / p + 1; ++step) {
    for (std::size_t i = 0; i < p; ++i) w = sigma.apply_prefix(w, std::max(length, last + 1));
    if (w.size() > last) {
      grows = true;
      break;
    }
    last = w.size();
  }
  if (!grows) throw std::domain_error("no growing periodic point through " + std::to_string(a));
  while (w.size() < length) {
    const std::size_t before = w.size();
    for (std::size_t i = 0; i < p; ++i) w = sigma.apply_prefix(w, length);
    if (w.size() == before) break;
  }
  if (w.size() > length) w.resize(length);
  return {p, w};
}

std::optional<std::size_t> is_primitive_window(const DirectiveSequence& s, std::size_t k,
                                               std::size_t horizon) {
  const std::size_t n = s.set().alphabet_size();
  std::vector<char> support(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) support[i * n + i] = 1;
  for (std::size_t l = k + 1; l <= horizon && s.has(l); ++l) {
    const IntMatrix& m = s.substitution(l - 1).matrix();
    std::vector<char> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < n && !next[i * n + j]; ++q)
          if (support[i * n + q] && m(q, j) > 0) next[i * n + j] = 1;
    support = std::move(next);
    if (std::all_of(support.begin(), support.end(), [](char c) { return c != 0; })) return l;
  }
  return std::nullopt;
}

GrowthTrace is_everywhere_growing_window(const DirectiveSequence& s, std::size_t horizon) {
  const std::size_t n = s.set().alphabet_size();
  GrowthTrace trace;
  Matrix<double> m = Matrix<double>::identity(n);
  auto norms = [&] {
    Vec<double> c(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) c[j] += m(i, j);
    return c;
  };
  trace.column_norms.push_back(norms());
  for (std::size_t l = 1; l <= horizon && s.has(l); ++l) {
    m = m * s.substitution(l - 1).matrix().cast<double>();
    trace.column_norms.push_back(norms());
  }
  const std::size_t last = trace.column_norms.size() - 1;
  const std::size_t half = last / 2;
  for (std::size_t j = 0; j < n; ++j)
    if (trace.column_norms[last][j] == trace.column_norms[half][j]) trace.flagged = true;
  return trace;
}

}  // namespace sadic
