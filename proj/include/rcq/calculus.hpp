#ifndef RCQ_CALCULUS_HPP
#define RCQ_CALCULUS_HPP

#include <span>
#include <vector>

#include "rcq/op_table.hpp"

namespace rcq {

using Tuple = std::vector<Elem>;

// Images of t -> Omega_{k+1}(x_1, ..., x_k, t) for the prefix x of length k.
// Defined for any table; a permutation when the rows are.
std::vector<Elem> omega_prefix_images(OpTable const& table, std::span<Elem const> prefix);

// Images of t -> OmegaTilde_{k+1}(t, y_1, ..., y_k) for the suffix y of
// length k.  Needs the left operation.
std::vector<Elem> omega_tilde_suffix_images(OpTable const& table, std::span<Elem const> suffix);

Elem omega(OpTable const& table, std::span<Elem const> x);
Elem omega_tilde(OpTable const& table, std::span<Elem const> x);

// (Omega_1(x_1), Omega_2(x_1, x_2), ..., Omega_n(x_1, ..., x_n))
Tuple pi_word(OpTable const& table, std::span<Elem const> x);

// (OmegaTilde_n(x_1..x_n), OmegaTilde_{n-1}(x_2..x_n), ..., OmegaTilde_1(x_n))
Tuple pi_tilde_word(OpTable const& table, std::span<Elem const> x);

// i-th entry: Omega_n of x with x_i moved to the last position.
Tuple tilde_vector(OpTable const& table, std::span<Elem const> x);

// The tuple r with Omega_i(r_1, ..., r_i) = s_i for every i.
Tuple invert_coordinates(OpTable const& table, std::span<Elem const> s);

}  // namespace rcq

#endif
