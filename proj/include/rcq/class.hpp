#ifndef RCQ_CLASS_HPP
#define RCQ_CLASS_HPP

#include <cstdint>

#include "rcq/op_table.hpp"

namespace rcq {

struct ClassData {
  // Least d >= 1 with Omega_{d+1}(s, ..., s, t) = t for all s, t.
  std::uint64_t d;
  // (s, t) -> (s*s, s*t) on pairs indexed s*n+t.
  Perm phi;
};

// d is read off as the order of phi, then certified directly: the identity
// holds at d and fails at every smaller positive value.
ClassData class_of(OpTable const& table);

// Omega_{m+1}(s, ..., s, t) with m copies of s.
Elem omega_power(OpTable const& table, Elem s, std::uint64_t m, Elem t);

bool has_class(OpTable const& table, std::uint64_t m);

}  // namespace rcq

#endif
