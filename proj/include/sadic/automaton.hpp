#ifndef SADIC_AUTOMATON_HPP
#define SADIC_AUTOMATON_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sadic/directive.hpp"

namespace sadic {

// Edge a --(t, sigma)--> b: sigma(a) = u b v with ab(u) = t.
struct Transition {
  Letter from;
  std::size_t t;       // index into the Dumont-Thomas alphabet
  std::size_t sigma;   // index into the substitution set
  Letter to;
  std::size_t position;  // |u|
};

class PrefixAutomaton {
 public:
  static PrefixAutomaton build(std::shared_ptr<const SubstitutionSet> set);

  const SubstitutionSet& set() const { return *set_; }
  std::size_t alphabet_size() const { return set_->alphabet_size(); }
  const std::vector<IntVec>& digits() const { return digits_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  // Transitions labelled sigma that end in b.
  const std::vector<Transition>& into(std::size_t sigma, Letter b) const;
  const std::vector<Transition>& out_of(std::size_t sigma, Letter a) const;

  std::string to_dot(std::string_view title = "automaton") const;

 private:
  std::shared_ptr<const SubstitutionSet> set_;
  std::vector<IntVec> digits_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<std::vector<Transition>>> into_;   // [sigma][b]
  std::vector<std::vector<std::vector<Transition>>> out_;    // [sigma][a]
};

// Number of paths b = a_l -> ... -> a_k = a whose labels read s_{l-1}, ..., s_k.
BigInt path_count(const PrefixAutomaton& aut, const std::vector<std::size_t>& ids,
                  std::size_t k, std::size_t l, Letter a, Letter b);

// Visits every path of length n from `start` (the deepest state) with the
// directive labels ids[0..n), reporting the target letter and the integer point
// sum_k M_[0,k) t_k together with the deepest state.
using PathVisitor = std::function<void(Letter target, const IntVec& point, Letter start)>;
void for_each_path(const PrefixAutomaton& aut, const std::vector<std::size_t>& ids,
                   std::size_t n, Letter start, const PathVisitor& visit);

// Finite part of W_a(u_0) reached by paths of length n starting from b_n.
std::set<IntVec> enumerate_worm(const PrefixAutomaton& aut, const std::vector<std::size_t>& ids,
                                Letter a, std::size_t n, Letter b_n);

// Exact check of W_a(sigma(u)) = U_{b -(t,sigma)-> a} ab(sigma) W_b(u) + t on
// the finite word u.
bool worm_recursion_check(const PrefixAutomaton& aut, std::size_t sigma, const Word& u);

}  // namespace sadic

#endif
