#ifndef SADIC_WORDS_HPP
#define SADIC_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sadic/matrix.hpp"

namespace sadic {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Letters are written as decimal digits, so alphabets have at most 10 letters.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

IntVec abelianize(const Word& w, std::size_t alphabet_size);

class Substitution {
 public:
  Substitution() = default;
  Substitution(std::string name, std::vector<Word> images);
  Substitution(std::string name, std::initializer_list<std::string_view> images);

  const std::string& name() const { return name_; }
  std::size_t alphabet_size() const { return images_.size(); }
  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const { return images_; }
  const IntMatrix& matrix() const { return matrix_; }
  bool unimodular() const { return unimodular_; }

  Word apply(const Word& w) const;
  // First `limit` letters of apply(w), reading only as much of w as needed.
  Word apply_prefix(const Word& w, std::size_t limit) const;

  bool operator==(const Substitution& o) const { return images_ == o.images_; }

 private:
  std::string name_;
  std::vector<Word> images_;
  IntMatrix matrix_;
  bool unimodular_ = false;
};

// (f * g)(w) = f(g(w)); the matrix is ab(f) ab(g).
Substitution compose(const Substitution& f, const Substitution& g);
Substitution compose(const std::vector<const Substitution*>& chain);
Substitution power(const Substitution& s, unsigned n);

IntMatrix abelianize(const Substitution& s);

class SubstitutionSet {
 public:
  SubstitutionSet() = default;
  explicit SubstitutionSet(std::vector<Substitution> subs);

  std::size_t size() const { return subs_.size(); }
  std::size_t alphabet_size() const { return alphabet_size_; }
  const Substitution& operator[](std::size_t i) const { return subs_.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;
  const std::vector<Substitution>& all() const { return subs_; }

  auto begin() const { return subs_.begin(); }
  auto end() const { return subs_.end(); }

 private:
  std::vector<Substitution> subs_;
  std::size_t alphabet_size_ = 0;
};

namespace subs {

Substitution identity(std::size_t alphabet_size);

SubstitutionSet cassaigne();      // c0, c1
SubstitutionSet sturmian();       // tau0, tau1
SubstitutionSet arnoux_rauzy();   // ar0, ar1, ar2
// b<z0><z1><z2> for each permutation z: z1 -> z1 z2, other letters fixed.
SubstitutionSet brun();
Substitution brun(Letter z0, Letter z1, Letter z2);

}  // namespace subs

}  // namespace sadic

#endif
