#include "rcq/rewriting.hpp"

#include <deque>
#include <unordered_set>

#include "rcq/error.hpp"

namespace rcq {

namespace {

// moves[x*n+y]: the length-two words equal to x y by one relation.
std::vector<std::vector<std::pair<Elem, Elem>>> relation_moves(OpTable const& T) {
  std::size_t n = T.size();
  std::vector<std::vector<std::pair<Elem, Elem>>> moves(n * n);
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      if (s != t) {
        moves[s * n + T.op(s, t)].emplace_back(t, T.op(t, s));
      }
    }
  }
  return moves;
}

template <typename F>
void for_each_neighbour(Word& w, std::size_t n,
                        std::vector<std::vector<std::pair<Elem, Elem>>> const& moves, F&& f) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    Elem x = w[i], y = w[i + 1];
    for (auto [p, q] : moves[x * n + y]) {
      w[i] = p;
      w[i + 1] = q;
      f(w);
    }
    w[i] = x;
    w[i + 1] = y;
  }
}

std::uint64_t checked_pow(std::size_t n, std::size_t length) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (__builtin_mul_overflow(total, n, &total) || total > (std::uint64_t(1) << 32)) {
      throw BudgetError("too many words of length " + std::to_string(length));
    }
  }
  return total;
}

}  // namespace

Word word_from_index(std::uint64_t index, std::size_t n, std::size_t length) {
  Word w(length);
  for (std::size_t i = length; i-- > 0;) {
    w[i] = static_cast<Elem>(index % n);
    index /= n;
  }
  return w;
}

std::uint64_t index_of_word(Word const& w, std::size_t n) {
  std::uint64_t idx = 0;
  for (Elem x : w) {
    idx = idx * n + x;
  }
  return idx;
}

OracleVerdict oracle_equal_bfs(OpTable const& table, Word const& u, Word const& v,
                               std::uint64_t budget) {
  if (u.size() != v.size()) {
    return OracleVerdict::not_equal;
  }
  if (u == v) {
    return OracleVerdict::equal;
  }
  std::size_t n = table.size();
  auto moves = relation_moves(table);
  std::uint64_t target = index_of_word(v, n);
  std::unordered_set<std::uint64_t> seen{index_of_word(u, n)};
  std::deque<Word> queue{u};
  bool found = false;
  bool exhausted = false;
  while (!queue.empty() && !found && !exhausted) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for_each_neighbour(w, n, moves, [&](Word const& x) {
      if (found || exhausted) {
        return;
      }
      std::uint64_t idx = index_of_word(x, n);
      if (seen.insert(idx).second) {
        if (idx == target) {
          found = true;
        } else if (seen.size() > budget) {
          exhausted = true;
        } else {
          queue.push_back(x);
        }
      }
    });
  }
  if (found) {
    return OracleVerdict::equal;
  }
  return exhausted ? OracleVerdict::inconclusive : OracleVerdict::not_equal;
}

std::vector<std::uint64_t> word_classes(OpTable const& table, std::size_t length) {
  std::size_t n = table.size();
  std::uint64_t total = checked_pow(n, length);
  auto moves = relation_moves(table);
  constexpr std::uint64_t unset = ~std::uint64_t(0);
  std::vector<std::uint64_t> label(total, unset);
  for (std::uint64_t start = 0; start < total; ++start) {
    if (label[start] != unset) {
      continue;
    }
    label[start] = start;
    std::deque<Word> queue{word_from_index(start, n, length)};
    while (!queue.empty()) {
      Word w = std::move(queue.front());
      queue.pop_front();
      for_each_neighbour(w, n, moves, [&](Word const& x) {
        std::uint64_t idx = index_of_word(x, n);
        if (label[idx] == unset) {
          label[idx] = start;
          queue.push_back(x);
        }
      });
    }
  }
  return label;
}

}  // namespace rcq
