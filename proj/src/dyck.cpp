#include "flowvol/dyck.hpp"

#include <numeric>

namespace flowvol {

std::string format_steps(const Steps &steps) {
  std::string out;
  for (Step s : steps) {
    if (s.is_up()) {
      out += 'U';
    } else {
      out += 'D';
      out += std::to_string(s.label());
    }
  }
  return out;
}

RawWord tokenize_word(std::string_view text) {
  RawWord raw;
  std::size_t bar = text.find('|');
  std::string_view body = text.substr(0, bar);
  std::size_t pos = 0;
  while (pos < body.size()) {
    const std::size_t letter = raw.steps.size() + 1;
    char c = body[pos];
    if (c == 'U') {
      raw.steps.push_back(Step::up());
      ++pos;
    } else if (c == 'D') {
      std::size_t start = ++pos;
      while (pos < body.size() && body[pos] >= '0' && body[pos] <= '9') {
        ++pos;
      }
      if (start == pos) {
        throw WordError("letter " + std::to_string(letter) +
                            ": D must be followed by a label",
                        letter);
      }
      if (pos - start > 9) {
        throw WordError("letter " + std::to_string(letter) + ": label too large",
                        letter);
      }
      raw.steps.push_back(
          Step::down(std::stoi(std::string(body.substr(start, pos - start)))));
    } else {
      throw WordError("letter " + std::to_string(letter) +
                          ": unexpected character '" + std::string(1, c) + "'",
                      letter);
    }
  }
  if (bar != std::string_view::npos) {
    std::vector<int> extras;
    std::string_view tail = text.substr(bar + 1);
    std::size_t start = 0;
    while (true) {
      std::size_t comma = tail.find(',', start);
      std::string_view item = tail.substr(start, comma - start);
      if (item.empty() || item.size() > 9 ||
          item.find_first_not_of("0123456789") != std::string_view::npos) {
        throw WordError("malformed extra label '" + std::string(item) + "'", 0);
      }
      extras.push_back(std::stoi(std::string(item)));
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    raw.extras = std::move(extras);
  }
  return raw;
}

std::vector<int> label_counts(const Steps &steps, int k) {
  std::vector<int> counts(static_cast<std::size_t>(k) + 1, 0);
  for (Step s : steps) {
    if (s.is_down()) {
      if (s.label() > k) {
        throw WordError("label " + std::to_string(s.label()) + " exceeds k", 0);
      }
      ++counts[static_cast<std::size_t>(s.label())];
    }
  }
  return counts;
}

void check_labels(const Steps &steps, int k) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step s = steps[i];
    if (s.is_down() && s.label() > k) {
      throw WordError("letter " + std::to_string(i + 1) + ": label " +
                          std::to_string(s.label()) + " exceeds k=" +
                          std::to_string(k),
                      i + 1);
    }
    if (i > 0 && s.is_down() && steps[i - 1].is_down() &&
        steps[i - 1].label() < s.label()) {
      throw WordError("letter " + std::to_string(i + 1) +
                          ": labels within a down-run must weakly decrease",
                      i + 1);
    }
  }
}

namespace {

// Checks that no prefix has more down steps than up steps; returns the final
// height.
int check_prefix_heights(const Steps &steps) {
  int height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += steps[i].is_up() ? 1 : -1;
    if (height < 0) {
      throw WordError("letter " + std::to_string(i + 1) +
                          ": path goes below the axis",
                      i + 1);
    }
  }
  return height;
}

void check_k(int k) {
  if (k < 1) {
    throw std::invalid_argument("label bound k must be at least 1");
  }
}

} // namespace

LabeledDyckWord::LabeledDyckWord(Steps steps, int k)
    : steps_(std::move(steps)), k_(k) {
  check_k(k_);
  check_labels(steps_, k_);
  if (check_prefix_heights(steps_) != 0) {
    throw WordError("word does not return to height 0", 0);
  }
}

int LabeledDyckWord::zero_count() const {
  int zeros = 0;
  for (Step s : steps_) {
    zeros += (s.is_down() && s.label() == 0) ? 1 : 0;
  }
  return zeros;
}

DoublyLabeledDyckWord::DoublyLabeledDyckWord(LabeledDyckWord base,
                                             std::vector<int> extra)
    : base_(std::move(base)), extra_(std::move(extra)) {
  const std::size_t eligible =
      static_cast<std::size_t>(base_.n() + base_.zero_count());
  if (extra_.size() != eligible) {
    throw WordError("doubly labeled word needs " + std::to_string(eligible) +
                        " extra labels, got " + std::to_string(extra_.size()),
                    0);
  }
  for (std::size_t i = 0; i < extra_.size(); ++i) {
    if (extra_[i] < 1 || extra_[i] > base_.k()) {
      throw WordError("extra label " + std::to_string(i + 1) +
                          " is outside 1..k",
                      0);
    }
    if (i > 0 && extra_[i - 1] > extra_[i]) {
      throw WordError("extra label " + std::to_string(i + 1) +
                          " breaks the weakly increasing order",
                      0);
    }
  }
}

std::string DoublyLabeledDyckWord::to_string() const {
  std::string out = base_.to_string() + "|";
  for (std::size_t i = 0; i < extra_.size(); ++i) {
    out += (i ? "," : "") + std::to_string(extra_[i]);
  }
  return out;
}

DyckPrefixWord::DyckPrefixWord(Steps steps, int n, int height, int k)
    : steps_(std::move(steps)), n_(n), height_(height), k_(k) {
  check_k(k_);
  if (height_ < 0 || height_ > n_) {
    throw std::invalid_argument("prefix height must lie in 0..n");
  }
  if (steps_.size() != static_cast<std::size_t>(2 * n_ - height_)) {
    throw WordError("prefix must have 2n-i letters", 0);
  }
  check_labels(steps_, k_);
  if (check_prefix_heights(steps_) != height_) {
    throw WordError("prefix does not end at the declared height", 0);
  }
}

std::variant<LabeledDyckWord, DoublyLabeledDyckWord>
parse_word(std::string_view text, int k) {
  RawWord raw = tokenize_word(text);
  LabeledDyckWord base(std::move(raw.steps), k);
  if (raw.extras) {
    return DoublyLabeledDyckWord(std::move(base), std::move(*raw.extras));
  }
  return base;
}

LabeledDyckWord parse_labeled_word(std::string_view text, int k) {
  auto word = parse_word(text, k);
  if (auto *plain = std::get_if<LabeledDyckWord>(&word)) {
    return std::move(*plain);
  }
  throw WordError("unexpected extra label channel", 0);
}

DoublyLabeledDyckWord parse_doubly_labeled_word(std::string_view text, int k) {
  auto word = parse_word(text, k);
  if (auto *doubly = std::get_if<DoublyLabeledDyckWord>(&word)) {
    return std::move(*doubly);
  }
  throw WordError("doubly labeled word needs a '|' extra label channel", 0);
}

namespace {

// Depth-first generator shared by the LD and prefix enumerators: words of
// `length` letters with `ups` up steps, never below the axis, weakly
// decreasing down-runs, and down-label counts bounded by `limits`
// (per label) and `zero_target` (exact D0 count when set).
class WordGenerator {
public:
  WordGenerator(int length, int ups, int k, std::vector<int> limits,
                std::optional<int> zero_target, const StepsVisitor &visit)
      : length_(length), ups_(ups), k_(k), limits_(std::move(limits)),
        zero_target_(zero_target), visit_(visit),
        used_(static_cast<std::size_t>(k) + 1, 0) {
    word_.reserve(static_cast<std::size_t>(length));
  }

  void run() { extend(0, 0); }

private:
  void extend(int ups_used, int height) {
    const int pos = static_cast<int>(word_.size());
    if (pos == length_) {
      if (!zero_target_ || used_[0] == *zero_target_) {
        visit_(word_);
      }
      return;
    }
    const int downs_left = (length_ - pos) - (ups_ - ups_used);
    if (height > 0 && downs_left > 0) {
      const int cap = (!word_.empty() && word_.back().is_down())
                          ? word_.back().label()
                          : k_;
      for (int label = 0; label <= cap; ++label) {
        if (!label_allowed(label, downs_left)) {
          continue;
        }
        ++used_[static_cast<std::size_t>(label)];
        word_.push_back(Step::down(label));
        extend(ups_used, height - 1);
        word_.pop_back();
        --used_[static_cast<std::size_t>(label)];
      }
    }
    if (ups_used < ups_) {
      word_.push_back(Step::up());
      extend(ups_used + 1, height + 1);
      word_.pop_back();
    }
  }

  bool label_allowed(int label, int downs_left) const {
    const auto idx = static_cast<std::size_t>(label);
    if (!limits_.empty() && used_[idx] >= limits_[idx]) {
      return false;
    }
    if (zero_target_) {
      const int zeros_needed = *zero_target_ - used_[0];
      if (label == 0) {
        return zeros_needed > 0;
      }
      // A nonzero label still leaves room for the remaining zeros.
      return zeros_needed <= downs_left - 1;
    }
    return true;
  }

  int length_;
  int ups_;
  int k_;
  std::vector<int> limits_;
  std::optional<int> zero_target_;
  const StepsVisitor &visit_;
  std::vector<int> used_;
  Steps word_;
};

void check_composition(const std::vector<int> &counts, int k, int total) {
  if (counts.size() != static_cast<std::size_t>(k) + 1) {
    throw std::invalid_argument("label composition needs k+1 entries");
  }
  for (int c : counts) {
    if (c < 0) {
      throw std::invalid_argument("label composition has a negative entry");
    }
  }
  if (std::accumulate(counts.begin(), counts.end(), 0) != total) {
    throw std::invalid_argument("label composition must sum to " +
                                std::to_string(total));
  }
}

} // namespace

void for_each_ld(int n, int k, const LabelFilter &filter,
                 const StepsVisitor &visit) {
  check_k(k);
  if (n < 0) {
    throw std::invalid_argument("n must be nonnegative");
  }
  if (filter.zero_count && (*filter.zero_count < 0 || *filter.zero_count > n)) {
    throw std::invalid_argument("zero count must lie in 0..n");
  }
  if (!filter.label_counts.empty()) {
    check_composition(filter.label_counts, k, n);
  }
  WordGenerator(2 * n, n, k, filter.label_counts, filter.zero_count, visit)
      .run();
}

std::vector<LabeledDyckWord> enumerate_ld(int n, int k,
                                          const LabelFilter &filter) {
  std::vector<LabeledDyckWord> out;
  for_each_ld(n, k, filter,
              [&](const Steps &steps) { out.emplace_back(steps, k); });
  return out;
}

Integer count_ld(int n, int k, const LabelFilter &filter) {
  std::uint64_t count = 0;
  for_each_ld(n, k, filter, [&](const Steps &) { ++count; });
  return Integer(static_cast<unsigned long>(count));
}

namespace {

void extend_extras(std::vector<int> &extra, std::size_t length, int k,
                   const std::function<void()> &emit) {
  if (extra.size() == length) {
    emit();
    return;
  }
  const int start = extra.empty() ? 1 : extra.back();
  for (int v = start; v <= k; ++v) {
    extra.push_back(v);
    extend_extras(extra, length, k, emit);
    extra.pop_back();
  }
}

} // namespace

void for_each_dld(
    int n, int k,
    const std::function<void(const Steps &, const std::vector<int> &)> &visit) {
  for_each_ld(n, k, LabelFilter::none(), [&](const Steps &steps) {
    std::size_t eligible = 0;
    for (Step s : steps) {
      eligible += (s.is_up() || s.label() == 0) ? 1 : 0;
    }
    std::vector<int> extra;
    extra.reserve(eligible);
    extend_extras(extra, eligible, k, [&] { visit(steps, extra); });
  });
}

std::vector<DoublyLabeledDyckWord> enumerate_dld(int n, int k) {
  std::vector<DoublyLabeledDyckWord> out;
  for_each_dld(n, k, [&](const Steps &steps, const std::vector<int> &extra) {
    out.emplace_back(LabeledDyckWord(steps, k), extra);
  });
  return out;
}

Integer count_dld(int n, int k) {
  std::uint64_t count = 0;
  for_each_dld(n, k, [&](const Steps &, const std::vector<int> &) { ++count; });
  return Integer(static_cast<unsigned long>(count));
}

void for_each_prefix(int n, int i, int k, const std::vector<int> &counts,
                     const StepsVisitor &visit) {
  check_k(k);
  if (n < 0 || i < 0 || i > n) {
    throw std::invalid_argument("prefix needs 0 <= i <= n");
  }
  check_composition(counts, k, n - i);
  WordGenerator(2 * n - i, n, k, counts, std::nullopt, visit).run();
}

std::vector<DyckPrefixWord> enumerate_prefixes(int n, int i, int k,
                                               const std::vector<int> &counts) {
  std::vector<DyckPrefixWord> out;
  for_each_prefix(n, i, k, counts,
                  [&](const Steps &steps) { out.emplace_back(steps, n, i, k); });
  return out;
}

Integer count_prefixes(int n, int i, int k, const std::vector<int> &counts) {
  std::uint64_t count = 0;
  for_each_prefix(n, i, k, counts, [&](const Steps &) { ++count; });
  return Integer(static_cast<unsigned long>(count));
}

namespace {

bool runs_form_dyck_word(const std::vector<int> &d) {
  // U D^{d_n} U D^{d_{n-1}} ... U D^{d_1}
  int height = 0;
  for (std::size_t idx = d.size(); idx-- > 0;) {
    height += 1 - d[idx];
    if (height < 0) {
      return false;
    }
  }
  return height == 0;
}

void extend_runs(std::vector<int> &d, std::size_t pos, int remaining,
                 const std::vector<int> &mins, std::uint64_t &count) {
  if (pos + 1 == d.size()) {
    if (remaining >= mins[pos]) {
      d[pos] = remaining;
      count += runs_form_dyck_word(d) ? 1 : 0;
    }
    return;
  }
  for (int x = mins[pos]; x <= remaining; ++x) {
    d[pos] = x;
    extend_runs(d, pos + 1, remaining - x, mins, count);
  }
}

} // namespace

Integer enumerate_min_constrained(int n, const std::vector<int> &mins) {
  if (n < 0 || mins.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("min-constrained Dyck paths need n minimums");
  }
  if (n == 0) {
    return 1;
  }
  std::vector<int> lower(mins.size());
  for (std::size_t i = 0; i < mins.size(); ++i) {
    lower[i] = std::max(mins[i], 0);
  }
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  extend_runs(d, 0, n, lower, count);
  return Integer(static_cast<unsigned long>(count));
}

LatticePath path_of_word(const LabeledDyckWord &w) {
  LatticePath path;
  path.points.emplace_back(0, 0);
  int x = 0;
  int y = 0;
  for (Step s : w.steps()) {
    ++x;
    if (s.is_up()) {
      ++y;
    } else {
      --y;
      path.down_labels.push_back(s.label());
    }
    path.points.emplace_back(x, y);
  }
  return path;
}

LabeledDyckWord word_of_path(const LatticePath &path, int k) {
  if (path.points.empty() || path.points.front() != std::pair{0, 0}) {
    throw WordError("path must start at (0,0)", 0);
  }
  Steps steps;
  std::size_t next_label = 0;
  for (std::size_t i = 1; i < path.points.size(); ++i) {
    const auto [x0, y0] = path.points[i - 1];
    const auto [x1, y1] = path.points[i];
    if (x1 != x0 + 1 || (y1 != y0 + 1 && y1 != y0 - 1)) {
      throw WordError("step " + std::to_string(i) +
                          " is neither (1,1) nor (1,-1)",
                      i);
    }
    if (y1 > y0) {
      steps.push_back(Step::up());
    } else {
      if (next_label >= path.down_labels.size()) {
        throw WordError("missing label for down step " + std::to_string(i), i);
      }
      steps.push_back(Step::down(path.down_labels[next_label++]));
    }
  }
  if (next_label != path.down_labels.size()) {
    throw WordError("more labels than down steps", 0);
  }
  return LabeledDyckWord(std::move(steps), k);
}

std::vector<std::vector<int>> weak_compositions(int total, int parts) {
  if (total < 0 || parts < 0) {
    throw std::invalid_argument("weak_compositions needs nonnegative arguments");
  }
  std::vector<std::vector<int>> out;
  if (parts == 0) {
    if (total == 0) {
      out.emplace_back();
    }
    return out;
  }
  std::vector<int> current(static_cast<std::size_t>(parts), 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t pos, int left) {
    if (pos + 1 == current.size()) {
      current[pos] = left;
      out.push_back(current);
      return;
    }
    for (int v = left; v >= 0; --v) {
      current[pos] = v;
      fill(pos + 1, left - v);
    }
  };
  fill(0, total);
  return out;
}

} // namespace flowvol
