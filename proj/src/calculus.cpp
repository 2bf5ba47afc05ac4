#include "rcq/calculus.hpp"

#include <numeric>

#include "rcq/error.hpp"

namespace rcq {

namespace {

void check_tuple(OpTable const& table, std::span<Elem const> x, bool nonempty) {
  if (nonempty && x.empty()) {
    throw StructuralError("tuple must be nonempty");
  }
  for (Elem e : x) {
    if (e >= table.size()) {
      throw StructuralError("tuple entry " + std::to_string(e) + " is out of range");
    }
  }
}

}  // namespace

std::vector<Elem> omega_prefix_images(OpTable const& table, std::span<Elem const> prefix) {
  check_tuple(table, prefix, false);
  std::size_t n = table.size();
  std::vector<Elem> phi(n), next(n);
  std::iota(phi.begin(), phi.end(), Elem(0));
  for (Elem x : prefix) {
    Elem head = phi[x];
    for (Elem t = 0; t < n; ++t) {
      next[t] = table.op(head, phi[t]);
    }
    phi.swap(next);
  }
  return phi;
}

std::vector<Elem> omega_tilde_suffix_images(OpTable const& table, std::span<Elem const> suffix) {
  check_tuple(table, suffix, false);
  if (!table.has_lop()) {
    throw StructuralError("left operation not available");
  }
  std::size_t n = table.size();
  std::vector<Elem> chi(n), next(n);
  std::iota(chi.begin(), chi.end(), Elem(0));
  for (auto it = suffix.rbegin(); it != suffix.rend(); ++it) {
    Elem tail = chi[*it];
    for (Elem t = 0; t < n; ++t) {
      next[t] = table.lop(chi[t], tail);
    }
    chi.swap(next);
  }
  return chi;
}

Elem omega(OpTable const& table, std::span<Elem const> x) {
  check_tuple(table, x, true);
  return omega_prefix_images(table, x.first(x.size() - 1))[x.back()];
}

Elem omega_tilde(OpTable const& table, std::span<Elem const> x) {
  check_tuple(table, x, true);
  return omega_tilde_suffix_images(table, x.subspan(1))[x.front()];
}

Tuple pi_word(OpTable const& table, std::span<Elem const> x) {
  check_tuple(table, x, false);
  std::size_t n = table.size();
  Tuple out;
  out.reserve(x.size());
  std::vector<Elem> phi(n), next(n);
  std::iota(phi.begin(), phi.end(), Elem(0));
  for (Elem xi : x) {
    Elem head = phi[xi];
    out.push_back(head);
    for (Elem t = 0; t < n; ++t) {
      next[t] = table.op(head, phi[t]);
    }
    phi.swap(next);
  }
  return out;
}

Tuple pi_tilde_word(OpTable const& table, std::span<Elem const> x) {
  check_tuple(table, x, false);
  if (!table.has_lop()) {
    throw StructuralError("left operation not available");
  }
  std::size_t n = table.size();
  Tuple out(x.size());
  std::vector<Elem> chi(n), next(n);
  std::iota(chi.begin(), chi.end(), Elem(0));
  for (std::size_t i = x.size(); i-- > 0;) {
    Elem tail = chi[x[i]];
    out[i] = tail;
    for (Elem t = 0; t < n; ++t) {
      next[t] = table.lop(chi[t], tail);
    }
    chi.swap(next);
  }
  return out;
}

Tuple tilde_vector(OpTable const& table, std::span<Elem const> x) {
  check_tuple(table, x, true);
  Tuple out;
  Tuple moved;
  for (std::size_t i = 0; i < x.size(); ++i) {
    moved.assign(x.begin(), x.end());
    moved.erase(moved.begin() + static_cast<std::ptrdiff_t>(i));
    moved.push_back(x[i]);
    out.push_back(omega(table, moved));
  }
  return out;
}

Tuple invert_coordinates(OpTable const& table, std::span<Elem const> s) {
  check_tuple(table, s, false);
  std::size_t n = table.size();
  Tuple r;
  r.reserve(s.size());
  std::vector<Elem> phi(n), inv(n), next(n);
  std::iota(phi.begin(), phi.end(), Elem(0));
  for (Elem si : s) {
    if (!is_permutation(phi)) {
      throw StructuralError("prefix map is not a permutation; rows must be permutations");
    }
    for (Elem t = 0; t < n; ++t) {
      inv[phi[t]] = t;
    }
    Elem ri = inv[si];
    r.push_back(ri);
    for (Elem t = 0; t < n; ++t) {
      next[t] = table.op(si, phi[t]);
    }
    phi.swap(next);
  }
  return r;
}

}  // namespace rcq
