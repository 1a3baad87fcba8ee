#include "flowvol/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

namespace flowvol {
namespace {

void check_cyclic_word(const Steps &letters, std::size_t length, int ups,
                       int k) {
  if (k < 1) {
    throw std::invalid_argument("label bound k must be at least 1");
  }
  if (letters.size() != length) {
    throw WordError("word must have " + std::to_string(length) + " letters",
                    0);
  }
  if (letters.empty() || !letters.front().is_up()) {
    throw WordError("letter 1: word must start with U", 1);
  }
  const auto up_count =
      std::count_if(letters.begin(), letters.end(),
                    [](Step s) { return s.is_up(); });
  if (up_count != ups) {
    throw WordError("word must contain exactly " + std::to_string(ups) +
                        " U letters",
                    0);
  }
  check_labels(letters, k);
}

std::vector<int> up_ordinals(const Steps &letters) {
  std::vector<int> ordinal(letters.size(), 0);
  int seen = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].is_up()) {
      ordinal[i] = ++seen;
    }
  }
  return ordinal;
}

// Literal deletion with a fixed scan direction; returns surviving positions.
std::vector<std::size_t> reduce(const Steps &letters, std::size_t keep,
                                DeletionOrder order) {
  std::vector<std::size_t> alive(letters.size());
  for (std::size_t i = 0; i < alive.size(); ++i) {
    alive[i] = i;
  }
  while (alive.size() > keep) {
    const std::size_t size = alive.size();
    std::size_t found = size;
    for (std::size_t step = 0; step < size; ++step) {
      const std::size_t p =
          order == DeletionOrder::leftmost ? step : size - 1 - step;
      if (letters[alive[p]].is_up() && letters[alive[(p + 1) % size]].is_down()) {
        found = p;
        break;
      }
    }
    if (found == size) {
      throw std::logic_error("cyclic deletion got stuck");
    }
    const std::size_t partner = (found + 1) % size;
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(std::max(found, partner)));
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(std::min(found, partner)));
  }
  return alive;
}

// All survivor sets reachable by any deletion sequence, as a union of the
// surviving U ordinals.
std::set<int> survivors_all_orders(const Steps &letters, std::size_t keep) {
  if (letters.size() > 63) {
    throw std::invalid_argument("word too long for exhaustive deletion search");
  }
  const std::vector<int> ordinal = up_ordinals(letters);
  std::set<int> result;
  std::unordered_set<std::uint64_t> visited;
  const std::uint64_t full = (std::uint64_t{1} << letters.size()) - 1;

  std::function<void(std::uint64_t)> explore = [&](std::uint64_t mask) {
    if (!visited.insert(mask).second) {
      return;
    }
    if (static_cast<std::size_t>(std::popcount(mask)) == keep) {
      for (std::size_t i = 0; i < letters.size(); ++i) {
        if (mask >> i & 1U) {
          result.insert(ordinal[i]);
        }
      }
      return;
    }
    std::vector<std::size_t> alive;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (mask >> i & 1U) {
        alive.push_back(i);
      }
    }
    for (std::size_t p = 0; p < alive.size(); ++p) {
      const std::size_t a = alive[p];
      const std::size_t b = alive[(p + 1) % alive.size()];
      if (letters[a].is_up() && letters[b].is_down()) {
        explore(mask & ~(std::uint64_t{1} << a) & ~(std::uint64_t{1} << b));
      }
    }
  };
  explore(full);
  return result;
}

Steps rotate_to(const Steps &letters, std::size_t start) {
  Steps out;
  out.reserve(letters.size());
  out.insert(out.end(), letters.begin() + static_cast<std::ptrdiff_t>(start),
             letters.end());
  out.insert(out.end(), letters.begin(),
             letters.begin() + static_cast<std::ptrdiff_t>(start));
  return out;
}

bool is_dyck_body(const Steps &letters, std::size_t length) {
  int height = 0;
  for (std::size_t i = 0; i < length; ++i) {
    height += letters[i].is_up() ? 1 : -1;
    if (height < 0) {
      return false;
    }
  }
  return height == 0;
}

// Words with `length` letters starting with U, `ups` U's in total, and
// weakly decreasing consecutive labels.
void generate_cyclic_words(int length, int ups, int k,
                           const std::function<void(const Steps &)> &visit) {
  Steps word;
  word.reserve(static_cast<std::size_t>(length));
  word.push_back(Step::up());
  const int downs = length - ups;
  std::function<void(int, int)> extend = [&](int ups_used, int downs_used) {
    if (static_cast<int>(word.size()) == length) {
      visit(word);
      return;
    }
    if (downs_used < downs) {
      const int cap = word.back().is_down() ? word.back().label() : k;
      for (int label = 0; label <= cap; ++label) {
        word.push_back(Step::down(label));
        extend(ups_used, downs_used + 1);
        word.pop_back();
      }
    }
    if (ups_used < ups) {
      word.push_back(Step::up());
      extend(ups_used + 1, downs_used);
      word.pop_back();
    }
  };
  if (length >= 1 && ups >= 1) {
    extend(1, 0);
  }
}

} // namespace

ExtendedWord::ExtendedWord(Steps letters, int n, int k)
    : letters_(std::move(letters)), n_(n), k_(k) {
  if (n_ < 0) {
    throw std::invalid_argument("n must be nonnegative");
  }
  check_cyclic_word(letters_, static_cast<std::size_t>(2 * n_ + 1), n_ + 1, k_);
}

ExtendedWord ExtendedWord::parse(std::string_view text, int k) {
  RawWord raw = tokenize_word(text);
  if (raw.extras) {
    throw WordError("extended words carry no extra label channel", 0);
  }
  if (raw.steps.size() % 2 == 0) {
    throw WordError("extended word must have odd length", 0);
  }
  const int n = static_cast<int>(raw.steps.size() / 2);
  return ExtendedWord(std::move(raw.steps), n, k);
}

PrefixExtendedWord::PrefixExtendedWord(Steps letters, int n, int i, int k)
    : letters_(std::move(letters)), n_(n), i_(i), k_(k) {
  if (n_ < 0 || i_ < 0 || i_ > n_) {
    throw std::invalid_argument("prefix extended word needs 0 <= i <= n");
  }
  check_cyclic_word(letters_, static_cast<std::size_t>(2 * n_ - i_ + 1),
                    n_ + 1, k_);
}

PrefixExtendedWord PrefixExtendedWord::parse(std::string_view text, int n,
                                             int i, int k) {
  RawWord raw = tokenize_word(text);
  if (raw.extras) {
    throw WordError("extended words carry no extra label channel", 0);
  }
  return PrefixExtendedWord(std::move(raw.steps), n, i, k);
}

int ind(const ExtendedWord &w, DeletionOrder order) {
  const std::vector<std::size_t> left = reduce(w.letters(), 1, order);
  return up_ordinals(w.letters())[left.front()];
}

std::set<int> ind_all_orders(const ExtendedWord &w) {
  return survivors_all_orders(w.letters(), 1);
}

std::set<int> index_candidates(const PrefixExtendedWord &w) {
  return survivors_all_orders(w.letters(), static_cast<std::size_t>(w.i()) + 1);
}

ExtendedWord shift(const ExtendedWord &w) {
  const Steps &letters = w.letters();
  std::size_t last_up = letters.size();
  while (last_up-- > 0 && !letters[last_up].is_up()) {
  }
  return ExtendedWord(rotate_to(letters, last_up), w.n(), w.k());
}

Projection project(const ExtendedWord &w) {
  ExtendedWord current = w;
  const auto body = static_cast<std::size_t>(2 * w.n());
  for (int j = 0; j <= w.n(); ++j) {
    const Steps &letters = current.letters();
    if (letters.back().is_up() && is_dyck_body(letters, body)) {
      return {LabeledDyckWord(Steps(letters.begin(), letters.end() - 1), w.k()),
              j};
    }
    current = shift(current);
  }
  throw std::logic_error("no shift of " + w.to_string() +
                         " ends in U after a Dyck word");
}

ExtendedWord lift_prefix_word(const PrefixExtendedWord &w, int candidate) {
  const std::vector<int> ordinal = up_ordinals(w.letters());
  Steps letters = w.letters();
  const Steps zeros(static_cast<std::size_t>(w.i()), Step::down(0));
  if (candidate == 1) {
    letters.insert(letters.end(), zeros.begin(), zeros.end());
  } else {
    auto it = std::find(ordinal.begin(), ordinal.end(), candidate);
    if (it == ordinal.end()) {
      throw std::invalid_argument("candidate ordinal out of range");
    }
    letters.insert(letters.begin() + (it - ordinal.begin()), zeros.begin(),
                   zeros.end());
  }
  return ExtendedWord(std::move(letters), w.n(), w.k());
}

DyckPrefixWord prefix_of_lift(const PrefixExtendedWord &w, int candidate) {
  const Projection p = project(lift_prefix_word(w, candidate));
  const Steps &steps = p.word.steps();
  const auto tail = static_cast<std::size_t>(w.i());
  for (std::size_t t = steps.size() - tail; t < steps.size(); ++t) {
    if (steps[t] != Step::down(0)) {
      throw std::logic_error("lifted word " + p.word.to_string() +
                             " does not end with " + std::to_string(tail) +
                             " D0 letters");
    }
  }
  return DyckPrefixWord(Steps(steps.begin(), steps.end() - static_cast<std::ptrdiff_t>(tail)),
                        w.n(), w.i(), w.k());
}

void for_each_extended_word(int n, int k,
                            const std::function<void(const Steps &)> &visit) {
  if (n < 0 || k < 1) {
    throw std::invalid_argument("extended words need n >= 0 and k >= 1");
  }
  generate_cyclic_words(2 * n + 1, n + 1, k, visit);
}

std::vector<ExtendedWord> enumerate_extended_words(int n, int k) {
  std::vector<ExtendedWord> out;
  for_each_extended_word(n, k, [&](const Steps &s) { out.emplace_back(s, n, k); });
  return out;
}

void for_each_prefix_extended_word(
    int n, int i, int k, const std::function<void(const Steps &)> &visit) {
  if (n < 0 || i < 0 || i > n || k < 1) {
    throw std::invalid_argument("prefix extended words need 0 <= i <= n, k >= 1");
  }
  generate_cyclic_words(2 * n - i + 1, n + 1, k, visit);
}

} // namespace flowvol
