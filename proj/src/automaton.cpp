#include "sadic/automaton.hpp"

#include <algorithm>
#include <sstream>

#include "sadic/geometry.hpp"

namespace sadic {

namespace {

std::string digit_label(const IntVec& t) {
  std::int64_t total = 0;
  std::size_t where = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] != 0) {
      total += t[i];
      where = i;
    }
  if (total == 0) return "0";
  if (total == 1) return "e" + std::to_string(where);
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

PrefixAutomaton PrefixAutomaton::build(std::shared_ptr<const SubstitutionSet> set) {
  PrefixAutomaton aut;
  aut.set_ = std::move(set);
  const std::size_t n = aut.set_->alphabet_size();
  std::vector<IntVec> digits;
  for (const auto& s : *aut.set_)
    for (std::size_t a = 0; a < n; ++a) {
      const Word& img = s.image(static_cast<Letter>(a));
      for (std::size_t i = 0; i < img.size(); ++i)
        digits.push_back(abelianize(Word(img.begin(), img.begin() + static_cast<std::ptrdiff_t>(i)), n));
    }
  std::sort(digits.begin(), digits.end(), [](const IntVec& x, const IntVec& y) {
    const auto hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
  aut.digits_ = digits;

  aut.into_.assign(aut.set_->size(), std::vector<std::vector<Transition>>(n));
  aut.out_.assign(aut.set_->size(), std::vector<std::vector<Transition>>(n));
  for (std::size_t sigma = 0; sigma < aut.set_->size(); ++sigma)
    for (std::size_t a = 0; a < n; ++a) {
      const Word& img = (*aut.set_)[sigma].image(static_cast<Letter>(a));
      for (std::size_t i = 0; i < img.size(); ++i) {
        const IntVec t = abelianize(Word(img.begin(), img.begin() + static_cast<std::ptrdiff_t>(i)), n);
        const std::size_t ti = static_cast<std::size_t>(
            std::find(aut.digits_.begin(), aut.digits_.end(), t) - aut.digits_.begin());
        Transition tr{static_cast<Letter>(a), ti, sigma, img[i], i};
        aut.transitions_.push_back(tr);
        aut.into_[sigma][img[i]].push_back(tr);
        aut.out_[sigma][a].push_back(tr);
      }
    }
  return aut;
}

const std::vector<Transition>& PrefixAutomaton::into(std::size_t sigma, Letter b) const {
  return into_.at(sigma).at(b);
}

const std::vector<Transition>& PrefixAutomaton::out_of(std::size_t sigma, Letter a) const {
  return out_.at(sigma).at(a);
}

std::string PrefixAutomaton::to_dot(std::string_view title) const {
  std::ostringstream os;
  os << "digraph \"" << title << "\" {\n  rankdir=LR;\n";
  for (std::size_t a = 0; a < alphabet_size(); ++a) os << "  " << a << " [shape=circle];\n";
  for (const auto& t : transitions_)
    os << "  " << int(t.from) << " -> " << int(t.to) << " [label=\"" << digit_label(digits_[t.t])
       << ", " << (*set_)[t.sigma].name() << "\"];\n";
  os << "}\n";
  return os.str();
}

BigInt path_count(const PrefixAutomaton& aut, const std::vector<std::size_t>& ids, std::size_t k,
                  std::size_t l, Letter a, Letter b) {
  if (k > l || l > ids.size()) throw std::out_of_range("path range outside the directive prefix");
  const std::size_t n = aut.alphabet_size();
  std::vector<BigInt> count(n, 0);
  count.at(b) = 1;
  for (std::size_t j = l; j-- > k;) {
    std::vector<BigInt> next(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (count[c] == 0) continue;
      for (const auto& tr : aut.out_of(ids[j], static_cast<Letter>(c))) next[tr.to] += count[c];
    }
    count = std::move(next);
  }
  return count.at(a);
}

void for_each_path(const PrefixAutomaton& aut, const std::vector<std::size_t>& ids, std::size_t n,
                   Letter start, const PathVisitor& visit) {
  if (n > ids.size()) throw std::out_of_range("path longer than the directive prefix");
  const std::size_t dim = aut.alphabet_size();
  std::vector<IntMatrix> prefix{IntMatrix::identity(dim)};
  for (std::size_t j = 0; j + 1 < n; ++j) prefix.push_back(prefix.back() * aut.set()[ids[j]].matrix());
  IntVec point(dim, 0);
  auto rec = [&](auto&& self, std::size_t level, Letter state) -> void {
    if (level == 0) {
      visit(state, point, start);
      return;
    }
    const std::size_t j = level - 1;
    for (const auto& tr : aut.out_of(ids[j], state)) {
      const IntVec step = prefix[j] * aut.digits()[tr.t];
      for (std::size_t i = 0; i < dim; ++i) point[i] += step[i];
      self(self, level - 1, tr.to);
      for (std::size_t i = 0; i < dim; ++i) point[i] -= step[i];
    }
  };
  rec(rec, n, start);
}

std::set<IntVec> enumerate_worm(const PrefixAutomaton& aut, const std::vector<std::size_t>& ids,
                                Letter a, std::size_t n, Letter b_n) {
  std::set<IntVec> out;
  for_each_path(aut, ids, n, b_n, [&](Letter target, const IntVec& p, Letter) {
    if (target == a) out.insert(p);
  });
  return out;
}

bool worm_recursion_check(const PrefixAutomaton& aut, std::size_t sigma, const Word& u) {
  const std::size_t n = aut.alphabet_size();
  const Substitution& s = aut.set()[sigma];
  const Worm lhs = worm(s.apply(u), n);
  const Worm base = worm(u, n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto left = lhs.piece(static_cast<Letter>(a));
    std::multiset<IntVec> l(left.begin(), left.end()), r;
    for (const auto& tr : aut.into(sigma, static_cast<Letter>(a)))
      for (const IntVec& w : base.piece(tr.from)) r.insert(add(s.matrix() * w, aut.digits()[tr.t]));
    if (l != r) return false;
  }
  return true;
}

}  // namespace sadic
