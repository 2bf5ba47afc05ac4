#include "rcq/permutation.hpp"

#include <numeric>

#include "rcq/error.hpp"

namespace rcq {

bool is_permutation(std::span<Elem const> images) {
  std::vector<bool> seen(images.size(), false);
  for (Elem x : images) {
    if (x >= images.size() || seen[x]) {
      return false;
    }
    seen[x] = true;
  }
  return true;
}

Perm::Perm(std::vector<Elem> images) : _img(std::move(images)) {
  if (!is_permutation(_img)) {
    throw StructuralError("image list is not a permutation");
  }
}

Perm Perm::identity(std::size_t n) {
  Perm p;
  p._img.resize(n);
  std::iota(p._img.begin(), p._img.end(), Elem(0));
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p._img.resize(_img.size());
  for (Elem i = 0; i < _img.size(); ++i) {
    p._img[_img[i]] = i;
  }
  return p;
}

bool Perm::is_identity() const noexcept {
  for (Elem i = 0; i < _img.size(); ++i) {
    if (_img[i] != i) {
      return false;
    }
  }
  return true;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) {
    return 0;
  }
  std::uint64_t q = a / std::gcd(a, b);
  std::uint64_t l;
  if (__builtin_mul_overflow(q, b, &l)) {
    throw BudgetError("lcm overflows 64 bits");
  }
  return l;
}

std::vector<std::vector<Elem>> Perm::cycles() const {
  std::vector<std::vector<Elem>> out;
  std::vector<bool> seen(_img.size(), false);
  for (Elem i = 0; i < _img.size(); ++i) {
    if (seen[i]) {
      continue;
    }
    std::vector<Elem> c;
    for (Elem j = i; !seen[j]; j = _img[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  for (auto const& c : cycles()) {
    o = lcm_u64(o, c.size());
  }
  return o;
}

Perm compose(Perm const& p, Perm const& q) {
  if (p.degree() != q.degree()) {
    throw StructuralError("composing permutations of different degree");
  }
  std::vector<Elem> img(q.degree());
  for (Elem i = 0; i < img.size(); ++i) {
    img[i] = p(q(i));
  }
  return Perm(std::move(img));
}

std::string to_cycle_string(Perm const& p, std::vector<std::string> const& names) {
  std::string out;
  for (auto const& c : p.cycles()) {
    if (c.size() < 2) {
      continue;
    }
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0) {
        out += ' ';
      }
      out += names[c[k]];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace rcq
