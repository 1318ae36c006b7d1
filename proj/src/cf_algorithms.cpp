#include "sadic/cf_algorithms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>

namespace sadic {

namespace {

enum class Cmp { lt, eq, gt, unknown };

Cmp compare(const Rational& a, const Rational& b) { return a < b ? Cmp::lt : a > b ? Cmp::gt : Cmp::eq; }
Cmp compare(double a, double b) { return a < b ? Cmp::lt : a > b ? Cmp::gt : Cmp::eq; }
Cmp compare(const Interval& a, const Interval& b) {
  if (a.certainly_less(b)) return Cmp::lt;
  if (a.certainly_greater(b)) return Cmp::gt;
  if (a.width() == 0 && b.width() == 0 && a.lo() == b.lo()) return Cmp::eq;
  return Cmp::unknown;
}

template <class T>
void check_direction(const Vec<T>& x, std::size_t dim) {
  if (x.size() != dim) throw std::invalid_argument("direction has the wrong dimension");
  bool nonzero = false;
  for (const auto& c : x) {
    if (compare(c, T(0)) == Cmp::lt) throw std::invalid_argument("direction has a negative coordinate");
    if (compare(c, T(0)) != Cmp::eq) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("zero direction");
}

template <class T>
Vec<T> apply(const IntMatrix& m, const Vec<T>& x) {
  Vec<T> y(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) y[i] += T(static_cast<double>(m(i, j))) * x[j];
  return y;
}

template <>
Vec<Rational> apply(const IntMatrix& m, const Vec<Rational>& x) {
  Vec<Rational> y(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) y[i] += Rational(m(i, j)) * x[j];
  return y;
}

std::string algorithm_name(AlgorithmKind k) {
  switch (k) {
    case AlgorithmKind::cassaigne: return "cassaigne";
    case AlgorithmKind::sturmian: return "sturmian";
    case AlgorithmKind::brun: return "brun";
    case AlgorithmKind::arnoux_rauzy: return "arnoux-rauzy";
  }
  return "?";
}

SubstitutionSet builtin_set(AlgorithmKind k) {
  switch (k) {
    case AlgorithmKind::cassaigne: return subs::cassaigne();
    case AlgorithmKind::sturmian: return subs::sturmian();
    case AlgorithmKind::brun: return subs::brun();
    case AlgorithmKind::arnoux_rauzy: return subs::arnoux_rauzy();
  }
  throw std::logic_error("unknown algorithm");
}

}  // namespace

Algorithm::Algorithm(AlgorithmKind kind, std::string name, SubstitutionSet set)
    : kind_(kind), name_(std::move(name)), set_(std::make_shared<SubstitutionSet>(std::move(set))) {
  for (const auto& s : *set_) inverses_.push_back(unimodular_inverse(s.matrix()));
  if (kind_ == AlgorithmKind::brun) {
    brun_index_.assign(27, 0);
    std::array<Letter, 3> z{0, 1, 2};
    do {
      std::string name = "b";
      for (Letter c : z) name += static_cast<char>('0' + c);
      brun_index_[z[0] * 9 + z[1] * 3 + z[2]] = set_->index(name);
    } while (std::next_permutation(z.begin(), z.end()));
  }
}

const Algorithm& Algorithm::get(AlgorithmKind kind) {
  static const Algorithm cas(AlgorithmKind::cassaigne, "cassaigne", subs::cassaigne());
  static const Algorithm stu(AlgorithmKind::sturmian, "sturmian", subs::sturmian());
  static const Algorithm bru(AlgorithmKind::brun, "brun", subs::brun());
  static const Algorithm ar(AlgorithmKind::arnoux_rauzy, "arnoux-rauzy", subs::arnoux_rauzy());
  switch (kind) {
    case AlgorithmKind::cassaigne: return cas;
    case AlgorithmKind::sturmian: return stu;
    case AlgorithmKind::brun: return bru;
    case AlgorithmKind::arnoux_rauzy: return ar;
  }
  throw std::logic_error("unknown algorithm");
}

const Algorithm& Algorithm::by_name(std::string_view name) {
  for (auto k : {AlgorithmKind::cassaigne, AlgorithmKind::sturmian, AlgorithmKind::brun,
                 AlgorithmKind::arnoux_rauzy})
    if (algorithm_name(k) == name) return get(k);
  throw std::invalid_argument("unknown algorithm " + std::string(name));
}

Algorithm Algorithm::with_set(AlgorithmKind kind, SubstitutionSet set) {
  const SubstitutionSet ref = builtin_set(kind);
  if (set.size() != ref.size()) throw std::invalid_argument("substitution set has the wrong size");
  for (const auto& s : ref) {
    auto i = set.find(s.name());
    if (!i) throw std::invalid_argument("substitution set lacks " + s.name());
    if (!(set[*i].matrix() == s.matrix()))
      throw std::invalid_argument("matrix of " + s.name() + " does not match the algorithm");
  }
  return Algorithm(kind, algorithm_name(kind), std::move(set));
}

template <class T>
Selection Algorithm::select_impl(const Vec<T>& x, std::size_t step) const {
  check_direction(x, dimension());
  auto decide = [&](const T& a, const T& b) {
    const Cmp c = compare(a, b);
    if (c == Cmp::unknown) throw Inconclusive("branch comparison straddles the boundary", step);
    return c;
  };
  switch (kind_) {
    case AlgorithmKind::cassaigne: {
      const Cmp c = decide(x[0], x[2]);
      return {set_->index(c == Cmp::lt ? "c1" : "c0"), c == Cmp::eq};
    }
    case AlgorithmKind::sturmian: {
      const Cmp c = decide(x[0], x[1]);
      return {set_->index(c == Cmp::lt ? "tau1" : "tau0"), c == Cmp::eq};
    }
    case AlgorithmKind::arnoux_rauzy: {
      T total(0);
      for (const auto& c : x) total += c;
      for (std::size_t i = 0; i < 3; ++i) {
        const Cmp c = compare(x[i] + x[i], total);
        if (c == Cmp::gt) return {set_->index("ar" + std::to_string(i)), false};
        if (c == Cmp::unknown) throw Inconclusive("dominance test straddles the boundary", step);
      }
      throw DomainError("no coordinate exceeds the sum of the others", step);
    }
    case AlgorithmKind::brun: {
      // Ascending order; among equal coordinates the smaller index ranks higher.
      std::array<Letter, 3> z{0, 1, 2};
      bool tie = false;
      auto less = [&](Letter i, Letter j) {
        const Cmp c = decide(x[i], x[j]);
        if (c == Cmp::eq) {
          tie = true;
          return i > j;
        }
        return c == Cmp::lt;
      };
      std::sort(z.begin(), z.end(), less);
      return {brun_index_[z[0] * 9 + z[1] * 3 + z[2]], tie};
    }
  }
  throw std::logic_error("unknown algorithm");
}

Selection Algorithm::select(const Vec<Rational>& x, std::size_t step) const { return select_impl(x, step); }
Selection Algorithm::select(const Vec<double>& x, std::size_t step) const { return select_impl(x, step); }
Selection Algorithm::select(const Vec<Interval>& x, std::size_t step) const { return select_impl(x, step); }

bool Algorithm::in_domain(const Vec<Rational>& x) const {
  try {
    select(x);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

template <class T>
Vec<T> normalize(Vec<T> x) {
  T total(0);
  for (const auto& c : x) total += c;
  for (auto& c : x) c /= total;
  return x;
}

template <class T>
StepResult<T> step(const Algorithm& alg, const Vec<T>& x, std::size_t index) {
  const Selection sel = alg.select(x, index);
  Vec<T> y = apply(alg.inverse(sel.id), x);
  for (auto& c : y)
    if (compare(c, T(0)) == Cmp::lt) {
      if constexpr (std::is_same_v<T, double>) {
        c = 0.0;   // rounding residue at a boundary
      } else if constexpr (std::is_same_v<T, Rational>) {
        throw std::logic_error("exact step left the positive cone");
      }
    }
  return {sel, normalize(std::move(y))};
}

template <class T>
OrbitRecord<T> orbit(const Algorithm& alg, Vec<T> x, std::size_t n) {
  OrbitRecord<T> rec;
  rec.directions.push_back(normalize(x));
  for (std::size_t k = 0; k < n; ++k) {
    try {
      StepResult<T> r = step(alg, rec.directions.back(), k);
      rec.ids.push_back(r.selection.id);
      rec.ties.push_back(r.selection.tie);
      rec.directions.push_back(std::move(r.x));
    } catch (const DomainError& e) {
      rec.exit_index = k;
      rec.exit_reason = e.what();
      break;
    } catch (const Inconclusive& e) {
      rec.exit_index = k;
      rec.exit_reason = e.what();
      rec.exit_inconclusive = true;
      break;
    }
  }
  return rec;
}

template Vec<Rational> normalize(Vec<Rational>);
template Vec<double> normalize(Vec<double>);
template Vec<Interval> normalize(Vec<Interval>);
template StepResult<Rational> step(const Algorithm&, const Vec<Rational>&, std::size_t);
template StepResult<double> step(const Algorithm&, const Vec<double>&, std::size_t);
template StepResult<Interval> step(const Algorithm&, const Vec<Interval>&, std::size_t);
template OrbitRecord<Rational> orbit(const Algorithm&, Vec<Rational>, std::size_t);
template OrbitRecord<double> orbit(const Algorithm&, Vec<double>, std::size_t);
template OrbitRecord<Interval> orbit(const Algorithm&, Vec<Interval>, std::size_t);

DirectiveSequence directive_sequence(const Algorithm& alg, const OrbitRecord<Rational>& record) {
  return DirectiveSequence::with_prefix(alg.set_ptr(), record.ids);
}

DirectiveSequence algorithm_sequence(const Algorithm& alg, Vec<Rational> x) {
  struct State {
    Vec<Rational> x;
    std::size_t k = 0;
    bool done = false;
  };
  auto st = std::make_shared<State>(State{normalize(std::move(x))});
  const Algorithm* a = &alg;
  return DirectiveSequence::generated(alg.set_ptr(), [st, a]() -> std::optional<std::size_t> {
    if (st->done) return std::nullopt;
    try {
      StepResult<Rational> r = step(*a, st->x, st->k++);
      st->x = std::move(r.x);
      return r.selection.id;
    } catch (const DomainError&) {
      st->done = true;
      return std::nullopt;
    }
  });
}

IntMatrix partial_product(const Algorithm& alg, const std::vector<std::size_t>& ids, std::size_t k,
                          std::size_t l) {
  if (k > l || l > ids.size()) throw std::out_of_range("partial product range");
  IntMatrix m = IntMatrix::identity(alg.dimension());
  for (std::size_t i = k; i < l; ++i) m = m * alg.set()[ids[i]].matrix();
  return m;
}

Vec<double> PerronDirection::mid() const {
  Vec<double> out;
  for (const auto& c : v) out.push_back(c.mid());
  return out;
}

PerronDirection perron_direction(const IntMatrix& m, double precision) {
  if (!m.square()) throw std::invalid_argument("square matrix expected");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) < 0) throw std::invalid_argument("matrix has a negative entry");
  {
    // Wielandt: a primitive n x n matrix has a positive power of exponent <= n^2 - 2n + 2.
    std::vector<char> s(n * n), base(n * n);
    for (std::size_t i = 0; i < n * n; ++i) s[i] = base[i] = m(i / n, i % n) > 0;
    bool primitive = std::all_of(s.begin(), s.end(), [](char c) { return c; });
    for (std::size_t e = 2; e <= n * n - 2 * n + 2 && !primitive; ++e) {
      std::vector<char> t(n * n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t q = 0; q < n && !t[i * n + j]; ++q) t[i * n + j] = s[i * n + q] && base[q * n + j];
      s = std::move(t);
      primitive = std::all_of(s.begin(), s.end(), [](char c) { return c; });
    }
    if (!primitive) throw std::invalid_argument("matrix is not primitive");
  }
  const Matrix<double> md = m.cast<double>();
  Vec<double> v(n, 1.0 / double(n));
  for (int it = 0; it < 20000; ++it) {
    Vec<double> w = normalize(md * v);
    double change = 0;
    for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::abs(w[i] - v[i]));
    v = std::move(w);
    if (change == 0.0 && it > 50) break;
  }
  const std::size_t r = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
  Vec<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = v[i] / v[r];

  for (double delta = precision / 8; delta < 1e-3; delta *= 4) {
    Vec<Interval> box(n);
    for (std::size_t i = 0; i < n; ++i)
      box[i] = i == r ? Interval(1.0) : Interval(y[i] - delta, y[i] + delta);
    // M maps the cone over the box into itself iff every vertex image does.
    bool inside = true;
    const std::size_t free = n - 1;
    for (std::size_t mask = 0; mask < (std::size_t(1) << free) && inside; ++mask) {
      Vec<Interval> vert(n);
      for (std::size_t i = 0, bit = 0; i < n; ++i) {
        if (i == r) {
          vert[i] = Interval(1.0);
          continue;
        }
        vert[i] = Interval((mask >> bit++) & 1u ? box[i].hi() : box[i].lo());
      }
      Vec<Interval> img(n, Interval(0.0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) img[i] += Interval(double(m(i, j))) * vert[j];
      for (std::size_t i = 0; i < n && inside; ++i) {
        if (i == r) continue;
        const Interval ratio = img[i] / img[r];
        if (!(box[i].lo() < ratio.lo() && ratio.hi() < box[i].hi())) inside = false;
      }
    }
    if (!inside) continue;
    PerronDirection out;
    Interval total(0.0);
    for (const auto& c : box) total += c;
    for (const auto& c : box) out.v.push_back(c / total);
    Interval value(0.0);
    for (std::size_t j = 0; j < n; ++j) value += Interval(double(m(r, j))) * box[j];
    out.value = value;
    double width = 0;
    for (const auto& c : out.v) width = std::max(width, c.width());
    if (width > precision) throw std::runtime_error("Perron direction not certified to the requested precision");
    return out;
  }
  throw std::runtime_error("could not certify the Perron direction");
}

DirectiveSequence random_runs(const Algorithm& alg, std::uint64_t seed, std::size_t max_run) {
  if (max_run == 0) throw std::invalid_argument("max_run must be positive");
  const std::size_t n = alg.set().size();
  struct State {
    std::mt19937_64 rng;
    std::size_t current = 0;
    std::size_t left = 0;
  };
  auto st = std::make_shared<State>();
  st->rng.seed(seed);
  st->current = std::uniform_int_distribution<std::size_t>(0, n - 1)(st->rng);
  st->left = std::uniform_int_distribution<std::size_t>(1, max_run)(st->rng);
  return DirectiveSequence::generated(alg.set_ptr(), [st, n, max_run]() -> std::optional<std::size_t> {
    if (st->left == 0) {
      const std::size_t shift = n > 1 ? std::uniform_int_distribution<std::size_t>(1, n - 1)(st->rng) : 0;
      st->current = (st->current + shift) % n;
      st->left = std::uniform_int_distribution<std::size_t>(1, max_run)(st->rng);
    }
    --st->left;
    return st->current;
  });
}

}  // namespace sadic
