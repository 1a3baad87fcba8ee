#pragma once

// Cycle-lemma machinery on extended labeled words: the cyclic deletion
// index, the shifting operator, and the (n+1)-to-1 projection onto labeled
// Dyck words.

#include "flowvol/dyck.hpp"

#include <functional>
#include <set>
#include <vector>

namespace flowvol {

/// Word of length 2n+1 starting with U, with n+1 U's and weakly decreasing
/// labels on consecutive D's.
class ExtendedWord {
public:
  ExtendedWord(Steps letters, int n, int k);

  static ExtendedWord parse(std::string_view text, int k);

  const Steps &letters() const { return letters_; }
  int n() const { return n_; }
  int k() const { return k_; }
  std::string to_string() const { return format_steps(letters_); }

  friend bool operator==(const ExtendedWord &, const ExtendedWord &) = default;

private:
  Steps letters_;
  int n_;
  int k_;
};

/// Word of length 2n-i+1 starting with U, with n+1 U's.
class PrefixExtendedWord {
public:
  PrefixExtendedWord(Steps letters, int n, int i, int k);

  static PrefixExtendedWord parse(std::string_view text, int n, int i, int k);

  const Steps &letters() const { return letters_; }
  int n() const { return n_; }
  int i() const { return i_; }
  int k() const { return k_; }
  std::string to_string() const { return format_steps(letters_); }

private:
  Steps letters_;
  int n_;
  int i_;
  int k_;
};

enum class DeletionOrder { leftmost, rightmost };

/// Deletes cyclically adjacent (U, D) pairs until one U is left and returns
/// its ordinal (1-based) among the U's of w.
int ind(const ExtendedWord &w, DeletionOrder order = DeletionOrder::leftmost);

/// Ordinals of the U's that survive some deletion sequence down to i+1
/// letters, over all deletion sequences.
std::set<int> index_candidates(const PrefixExtendedWord &w);

/// Survivors of every possible deletion sequence for an extended word; a
/// singleton exactly when ind does not depend on the deletion order.
std::set<int> ind_all_orders(const ExtendedWord &w);

/// s(w) = w_i ... w_{2n+1} w_1 ... w_{i-1} with i the last U position.
ExtendedWord shift(const ExtendedWord &w);

struct Projection {
  LabeledDyckWord word;
  int shifts;
};

/// The unique j in 0..n with s^j(w) = w' U for a labeled Dyck word w'.
Projection project(const ExtendedWord &w);

/// Inserts i D0 letters immediately before the candidate-th U (cyclically,
/// so candidate 1 appends them at the end).
ExtendedWord lift_prefix_word(const PrefixExtendedWord &w, int candidate);

/// Projection of a lifted prefix word with its trailing i D0 letters removed.
DyckPrefixWord prefix_of_lift(const PrefixExtendedWord &w, int candidate);

void for_each_extended_word(int n, int k,
                            const std::function<void(const Steps &)> &visit);
std::vector<ExtendedWord> enumerate_extended_words(int n, int k);

void for_each_prefix_extended_word(
    int n, int i, int k, const std::function<void(const Steps &)> &visit);

} // namespace flowvol
