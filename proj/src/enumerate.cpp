#include "rcq/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "rcq/error.hpp"

namespace rcq {

OpTable relabel(OpTable const& table, Perm const& pi) {
  std::size_t n = table.size();
  std::vector<Elem> op(n * n);
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      op[pi(s) * n + pi(t)] = pi(table.op(s, t));
    }
  }
  return OpTable(table.names(), std::move(op));
}

namespace {

template <typename F>
void for_each_perm(std::size_t n, F&& f) {
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), Elem(0));
  do {
    f(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

bool lex_less_relabeled(std::vector<Elem> const& op, std::size_t n, std::vector<Elem> const& pi,
                        std::vector<Elem>& scratch) {
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      scratch[pi[s] * n + pi[t]] = pi[op[s * n + t]];
    }
  }
  return scratch < op;
}

bool canonical_data(std::vector<Elem> const& op, std::size_t n) {
  std::vector<Elem> scratch(n * n);
  bool minimal = true;
  for_each_perm(n, [&](std::vector<Elem> const& pi) {
    if (minimal && lex_less_relabeled(op, n, pi, scratch)) {
      minimal = false;
    }
  });
  return minimal;
}

void check_bijective_or_throw(OpTable const& t) {
  if (!validate(t).bijective.holds) {
    throw InconsistencyError("finite right-cyclic quasigroup found that is not bijective");
  }
}

class Search {
 public:
  Search(std::size_t n, EnumerationOptions const& opts,
         std::function<void(OpTable const&)> const& emit)
      : _n(n), _opts(opts), _emit(emit), _op(n * n), _names(default_names(n)) {
    for_each_perm(n, [&](std::vector<Elem> const& p) { _perms.push_back(p); });
  }

  std::size_t run() {
    dfs(0);
    return _count;
  }

 private:
  bool consistent(Elem k) const {
    // Triples touching row k whose four rows are all fixed.
    for (Elem x = 0; x <= k; ++x) {
      for (Elem y = 0; y <= k; ++y) {
        Elem a = _op[x * _n + y], b = _op[y * _n + x];
        if (a > k || b > k || (x != k && y != k && a != k && b != k)) {
          continue;
        }
        for (Elem z = 0; z < _n; ++z) {
          if (_op[a * _n + _op[x * _n + z]] != _op[b * _n + _op[y * _n + z]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void dfs(Elem k) {
    if (k == _n) {
      if (_opts.up_to_iso && !canonical_data(_op, _n)) {
        return;
      }
      OpTable t(_names, _op);
      check_bijective_or_throw(t);
      ++_count;
      _emit(t);
      return;
    }
    for (auto const& p : _perms) {
      std::copy(p.begin(), p.end(), _op.begin() + k * _n);
      if (consistent(k)) {
        dfs(k + 1);
      }
    }
  }

  std::size_t _n;
  EnumerationOptions const& _opts;
  std::function<void(OpTable const&)> const& _emit;
  std::vector<Elem> _op;
  std::vector<std::string> _names;
  std::vector<std::vector<Elem>> _perms;
  std::size_t _count = 0;
};

}  // namespace

std::size_t for_each_rc_quasigroup(std::size_t n, EnumerationOptions const& opts,
                                   std::function<void(OpTable const&)> const& emit) {
  if (n == 0) {
    throw StructuralError("enumeration size must be positive");
  }
  if (n > opts.max_n) {
    throw BudgetError("enumeration of size " + std::to_string(n) + " exceeds the bound "
                      + std::to_string(opts.max_n));
  }
  return Search(n, opts, emit).run();
}

std::vector<OpTable> enumerate_rc_quasigroups(std::size_t n, EnumerationOptions const& opts) {
  std::vector<OpTable> out;
  for_each_rc_quasigroup(n, opts, [&](OpTable const& t) { out.push_back(t); });
  return out;
}

std::vector<OpTable> enumerate_rc_quasigroups_naive(std::size_t n, bool up_to_iso) {
  if (n == 0 || n > 3) {
    throw BudgetError("naive enumeration is limited to 1 <= n <= 3");
  }
  std::size_t cells = n * n;
  std::vector<Elem> op(cells, 0);
  std::vector<OpTable> out;
  auto names = default_names(n);
  while (true) {
    OpTable t(names, op);
    auto r = validate(t);
    if (r.quasigroup.holds && r.rc.holds) {
      if (!r.bijective.holds) {
        throw InconsistencyError("finite right-cyclic quasigroup found that is not bijective");
      }
      if (!up_to_iso || canonical_data(op, n)) {
        out.push_back(std::move(t));
      }
    }
    // Odometer with the last cell fastest, giving lexicographic order.
    std::size_t i = cells;
    while (i > 0 && op[i - 1] == n - 1) {
      op[i - 1] = 0;
      --i;
    }
    if (i == 0) {
      break;
    }
    ++op[i - 1];
  }
  return out;
}

OpTable canonical_form(OpTable const& table) {
  std::size_t n = table.size();
  std::vector<Elem> best = table.op_data();
  std::vector<Elem> scratch(n * n);
  for_each_perm(n, [&](std::vector<Elem> const& pi) {
    lex_less_relabeled(table.op_data(), n, pi, scratch);
    if (scratch < best) {
      best = scratch;
    }
  });
  return OpTable(table.names(), std::move(best));
}

bool is_canonical(OpTable const& table) {
  return canonical_data(table.op_data(), table.size());
}

}  // namespace rcq
