#pragma once

// Labeled Dyck words and their enumerators.
//
// Text grammar: `U`, or `D` immediately followed by a decimal label. A doubly
// labeled word appends `|` and the comma-separated extra labels of its
// eligible steps (every U and every D0) in path order. No whitespace.
//
// Enumeration order is lexicographic over letters with
// D0 < D1 < ... < Dk < U, which for single-digit labels coincides with the
// byte order of the text form.

#include "flowvol/integer.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace flowvol {

/// One letter: an up step, or a down step carrying a label >= 0.
class Step {
public:
  static constexpr Step up() { return Step(-1); }
  static constexpr Step down(int label) { return Step(label); }

  constexpr bool is_up() const { return label_ < 0; }
  constexpr bool is_down() const { return label_ >= 0; }
  /// Label of a down step; -1 for an up step.
  constexpr int label() const { return label_; }

  friend constexpr bool operator==(Step, Step) = default;
  /// Enumeration order D0 < D1 < ... < U.
  friend constexpr bool operator<(Step a, Step b) {
    return a.order_key() < b.order_key();
  }

private:
  constexpr explicit Step(int label) : label_(label) {}
  constexpr std::int64_t order_key() const {
    return is_up() ? INT64_MAX : label_;
  }
  int label_;
};

using Steps = std::vector<Step>;

/// Invalid word; position is the 1-based index of the first offending letter
/// (0 when the problem is global, e.g. a wrong letter count).
class WordError : public std::invalid_argument {
public:
  WordError(const std::string &message, std::size_t position)
      : std::invalid_argument(message), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

std::string format_steps(const Steps &steps);

/// Tokenises `("U" | "D"<decimal>)*` with an optional `|<extras>` tail.
struct RawWord {
  Steps steps;
  std::optional<std::vector<int>> extras;
};
RawWord tokenize_word(std::string_view text);

/// Per-label counts (a_0, ..., a_k) of down steps.
std::vector<int> label_counts(const Steps &steps, int k);

/// k-labeled Dyck word of semilength n.
class LabeledDyckWord {
public:
  LabeledDyckWord(Steps steps, int k);

  const Steps &steps() const { return steps_; }
  int k() const { return k_; }
  int n() const { return static_cast<int>(steps_.size() / 2); }
  int zero_count() const;
  std::string to_string() const { return format_steps(steps_); }

  friend bool operator==(const LabeledDyckWord &,
                         const LabeledDyckWord &) = default;

private:
  Steps steps_;
  int k_;
};

/// Labeled Dyck word with a weakly increasing second channel in 1..k on
/// every up step and every D0 step.
class DoublyLabeledDyckWord {
public:
  DoublyLabeledDyckWord(LabeledDyckWord base, std::vector<int> extra);

  const LabeledDyckWord &base() const { return base_; }
  const std::vector<int> &extra() const { return extra_; }
  std::string to_string() const;

  friend bool operator==(const DoublyLabeledDyckWord &,
                         const DoublyLabeledDyckWord &) = default;

private:
  LabeledDyckWord base_;
  std::vector<int> extra_;
};

/// Prefix of a k-labeled Dyck word of semilength n ending at height i after
/// 2n - i steps.
class DyckPrefixWord {
public:
  DyckPrefixWord(Steps steps, int n, int height, int k);

  const Steps &steps() const { return steps_; }
  int n() const { return n_; }
  int height() const { return height_; }
  int k() const { return k_; }
  std::string to_string() const { return format_steps(steps_); }

  friend bool operator==(const DyckPrefixWord &,
                         const DyckPrefixWord &) = default;

private:
  Steps steps_;
  int n_;
  int height_;
  int k_;
};

/// Parses a word; a `|` tail selects the doubly labeled type.
std::variant<LabeledDyckWord, DoublyLabeledDyckWord>
parse_word(std::string_view text, int k);
LabeledDyckWord parse_labeled_word(std::string_view text, int k);
DoublyLabeledDyckWord parse_doubly_labeled_word(std::string_view text, int k);

/// Restriction on the down-step labels of enumerated words.
struct LabelFilter {
  static LabelFilter none() { return {}; }
  static LabelFilter zeros(int d) { return {d, {}}; }
  static LabelFilter composition(std::vector<int> counts) {
    return {std::nullopt, std::move(counts)};
  }

  std::optional<int> zero_count;
  std::vector<int> label_counts;  // empty: unconstrained
};

using StepsVisitor = std::function<void(const Steps &)>;

/// Visits LD_n(k) (restricted by the filter) in enumeration order.
void for_each_ld(int n, int k, const LabelFilter &filter,
                 const StepsVisitor &visit);
std::vector<LabeledDyckWord> enumerate_ld(int n, int k,
                                          const LabelFilter &filter = {});
Integer count_ld(int n, int k, const LabelFilter &filter = {});

/// Visits DLD_n(k): each labeled word followed by every weakly increasing
/// extra channel.
void for_each_dld(
    int n, int k,
    const std::function<void(const Steps &, const std::vector<int> &)> &visit);
std::vector<DoublyLabeledDyckWord> enumerate_dld(int n, int k);
Integer count_dld(int n, int k);

/// Visits Dyck_{n,i}(k; a_0..a_k).
void for_each_prefix(int n, int i, int k, const std::vector<int> &counts,
                     const StepsVisitor &visit);
std::vector<DyckPrefixWord> enumerate_prefixes(int n, int i, int k,
                                               const std::vector<int> &counts);
Integer count_prefixes(int n, int i, int k, const std::vector<int> &counts);

/// |D_n(a_1..a_n)|: run-length vectors (d_1..d_n) with sum n, d_i >= a_i,
/// and U D^{d_n} U D^{d_{n-1}} ... U D^{d_1} a Dyck word.
Integer enumerate_min_constrained(int n, const std::vector<int> &mins);

/// Geometric form: visited lattice points from (0,0) plus the labels of the
/// down steps in order.
struct LatticePath {
  std::vector<std::pair<int, int>> points;
  std::vector<int> down_labels;

  friend bool operator==(const LatticePath &, const LatticePath &) = default;
};

LatticePath path_of_word(const LabeledDyckWord &w);
LabeledDyckWord word_of_path(const LatticePath &path, int k);

/// All weak compositions of total into parts nonnegative entries, in
/// lexicographically decreasing order.
std::vector<std::vector<int>> weak_compositions(int total, int parts);

/// Checks the letter alphabet and the weak decrease of consecutive down
/// labels; throws WordError.
void check_labels(const Steps &steps, int k);

} // namespace flowvol
