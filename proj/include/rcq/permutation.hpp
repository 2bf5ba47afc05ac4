#ifndef RCQ_PERMUTATION_HPP
#define RCQ_PERMUTATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rcq/types.hpp"

namespace rcq {

bool is_permutation(std::span<Elem const> images);

// Permutation of {0, ..., n-1} stored by images.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Elem> images);

  static Perm identity(std::size_t n);

  std::size_t degree() const noexcept {
    return _img.size();
  }

  Elem operator()(Elem x) const {
    return _img[x];
  }

  std::vector<Elem> const& images() const noexcept {
    return _img;
  }

  Perm inverse() const;
  bool is_identity() const noexcept;
  std::uint64_t order() const;
  std::vector<std::vector<Elem>> cycles() const;

  bool operator==(Perm const&) const = default;
  auto operator<=>(Perm const&) const = default;

 private:
  std::vector<Elem> _img;
};

// (p * q)(x) = p(q(x))
Perm compose(Perm const& p, Perm const& q);

// Cycle notation such as "(a b c)"; "()" for the identity.
std::string to_cycle_string(Perm const& p, std::vector<std::string> const& names);

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace rcq

#endif
