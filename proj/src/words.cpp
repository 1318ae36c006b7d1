#include "sadic/words.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace sadic {

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("letters must be digits");
    w.push_back(static_cast<Letter>(c - '0'));
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string s(w.size(), '0');
  for (std::size_t i = 0; i < w.size(); ++i) s[i] = static_cast<char>('0' + w[i]);
  return s;
}

IntVec abelianize(const Word& w, std::size_t alphabet_size) {
  IntVec v(alphabet_size, 0);
  for (Letter a : w) ++v.at(a);
  return v;
}

Substitution::Substitution(std::string name, std::vector<Word> images)
    : name_(std::move(name)), images_(std::move(images)) {
  const std::size_t n = images_.size();
  if (n < 2) throw std::invalid_argument("alphabet needs at least two letters");
  matrix_ = IntMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (images_[a].empty()) throw std::invalid_argument("erasing substitution " + name_);
    for (Letter b : images_[a]) {
      if (b >= n) throw std::invalid_argument("image letter outside the alphabet");
      ++matrix_(b, a);
    }
  }
  const BigInt det = determinant(matrix_);
  unimodular_ = det == 1 || det == -1;
}

Substitution::Substitution(std::string name, std::initializer_list<std::string_view> images)
    : Substitution(std::move(name), [&] {
        std::vector<Word> w;
        for (auto s : images) w.push_back(parse_word(s));
        return w;
      }()) {}

Word Substitution::apply(const Word& w) const {
  Word out;
  for (Letter a : w) {
    const Word& img = images_.at(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word Substitution::apply_prefix(const Word& w, std::size_t limit) const {
  Word out;
  for (Letter a : w) {
    if (out.size() >= limit) break;
    const Word& img = images_.at(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  if (out.size() > limit) out.resize(limit);
  return out;
}

Substitution compose(const Substitution& f, const Substitution& g) {
  if (f.alphabet_size() != g.alphabet_size()) throw std::invalid_argument("alphabet mismatch");
  std::vector<Word> images;
  for (const Word& img : g.images()) images.push_back(f.apply(img));
  return Substitution(f.name() + g.name(), std::move(images));
}

Substitution compose(const std::vector<const Substitution*>& chain) {
  if (chain.empty()) throw std::invalid_argument("empty composition");
  Substitution r = *chain.back();
  for (std::size_t i = chain.size() - 1; i-- > 0;) r = compose(*chain[i], r);
  return r;
}

Substitution power(const Substitution& s, unsigned n) {
  Substitution r = subs::identity(s.alphabet_size());
  for (unsigned i = 0; i < n; ++i) r = compose(s, r);
  return Substitution(s.name() + "^" + std::to_string(n), r.images());
}

IntMatrix abelianize(const Substitution& s) { return s.matrix(); }

SubstitutionSet::SubstitutionSet(std::vector<Substitution> subs) : subs_(std::move(subs)) {
  if (subs_.empty()) throw std::invalid_argument("empty substitution set");
  alphabet_size_ = subs_.front().alphabet_size();
  for (const auto& s : subs_)
    if (s.alphabet_size() != alphabet_size_) throw std::invalid_argument("alphabet mismatch");
}

std::optional<std::size_t> SubstitutionSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < subs_.size(); ++i)
    if (subs_[i].name() == name) return i;
  return std::nullopt;
}

std::size_t SubstitutionSet::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown substitution " + std::string(name));
}

namespace subs {

Substitution identity(std::size_t alphabet_size) {
  std::vector<Word> images;
  for (std::size_t a = 0; a < alphabet_size; ++a) images.push_back(Word{static_cast<Letter>(a)});
  return Substitution("id", std::move(images));
}

SubstitutionSet cassaigne() {
  return SubstitutionSet({Substitution("c0", {"0", "02", "1"}),
                          Substitution("c1", {"1", "02", "2"})});
}

SubstitutionSet sturmian() {
  return SubstitutionSet({Substitution("tau0", {"0", "01"}),
                          Substitution("tau1", {"10", "1"})});
}

SubstitutionSet arnoux_rauzy() {
  return SubstitutionSet({Substitution("ar0", {"0", "10", "20"}),
                          Substitution("ar1", {"01", "1", "21"}),
                          Substitution("ar2", {"02", "12", "2"})});
}

Substitution brun(Letter z0, Letter z1, Letter z2) {
  std::vector<Word> images{{0}, {1}, {2}};
  images.at(z1).push_back(z2);
  std::string name = "b";
  for (Letter z : {z0, z1, z2}) name += static_cast<char>('0' + z);
  return Substitution(name, std::move(images));
}

SubstitutionSet brun() {
  std::vector<Substitution> all;
  std::array<Letter, 3> z{0, 1, 2};
  do {
    all.push_back(brun(z[0], z[1], z[2]));
  } while (std::next_permutation(z.begin(), z.end()));
  return SubstitutionSet(std::move(all));
}

}  // namespace subs

}  // namespace sadic
