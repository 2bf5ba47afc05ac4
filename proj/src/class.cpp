#include "rcq/class.hpp"

#include <numeric>

#include "rcq/error.hpp"

namespace rcq {

Elem omega_power(OpTable const& table, Elem s, std::uint64_t m, Elem t) {
  std::size_t n = table.size();
  std::vector<Elem> phi(n), next(n);
  std::iota(phi.begin(), phi.end(), Elem(0));
  for (std::uint64_t k = 0; k < m; ++k) {
    Elem head = phi[s];
    for (Elem u = 0; u < n; ++u) {
      next[u] = table.op(head, phi[u]);
    }
    phi.swap(next);
  }
  return phi[t];
}

namespace {

// Marks the m in 1..limit at which the prefix map of s^m is the identity.
std::vector<bool> identity_steps(OpTable const& table, Elem s, std::uint64_t limit) {
  std::size_t n = table.size();
  std::vector<bool> out(limit + 1, false);
  std::vector<Elem> phi(n), next(n);
  std::iota(phi.begin(), phi.end(), Elem(0));
  for (std::uint64_t m = 1; m <= limit; ++m) {
    Elem head = phi[s];
    bool id = true;
    for (Elem u = 0; u < n; ++u) {
      next[u] = table.op(head, phi[u]);
      id = id && next[u] == u;
    }
    phi.swap(next);
    out[m] = id;
  }
  return out;
}

}  // namespace

bool has_class(OpTable const& table, std::uint64_t m) {
  if (m == 0) {
    return false;
  }
  for (Elem s = 0; s < table.size(); ++s) {
    for (Elem t = 0; t < table.size(); ++t) {
      if (omega_power(table, s, m, t) != t) {
        return false;
      }
    }
  }
  return true;
}

ClassData class_of(OpTable const& table) {
  std::size_t n = table.size();
  std::vector<Elem> img(n * n);
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      img[s * n + t] = table.op(s, s) * n + table.op(s, t);
    }
  }
  if (!is_permutation(img)) {
    throw PropertyError("(s, t) -> (s*s, s*t) is not a bijection", {});
  }
  Perm phi(std::move(img));
  std::uint64_t d = phi.order();
  if (d > 100'000'000) {
    throw BudgetError("class " + std::to_string(d) + " is too large to certify");
  }
  std::vector<bool> all(d + 1, true);
  for (Elem s = 0; s < n; ++s) {
    auto steps = identity_steps(table, s, d);
    for (std::uint64_t m = 1; m <= d; ++m) {
      all[m] = all[m] && steps[m];
    }
  }
  if (!all[d]) {
    throw InconsistencyError("class identity fails at the order of the pair map");
  }
  for (std::uint64_t m = 1; m < d; ++m) {
    if (all[m]) {
      throw InconsistencyError("class identity holds below the order of the pair map");
    }
  }
  return ClassData{d, std::move(phi)};
}

}  // namespace rcq
