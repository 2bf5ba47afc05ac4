#ifndef RCQ_LINREP_HPP
#define RCQ_LINREP_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "rcq/coxeter.hpp"
#include "rcq/monoid.hpp"

namespace rcq {

// Monomial matrix over Z[q, q^-1]: row i has the single nonzero entry
// q^exps[i] in column perm(i).  With a modulus d, q is a primitive d-th root
// of unity and exponents are kept in 0..d-1.
struct MonomialMatrix {
  std::vector<std::int64_t> exps;
  Perm perm;
  std::optional<std::uint64_t> modulus;

  std::size_t dim() const noexcept {
    return exps.size();
  }
  bool is_identity() const noexcept;
  bool operator==(MonomialMatrix const&) const = default;
  auto operator<=>(MonomialMatrix const&) const = default;
};

MonomialMatrix identity_matrix(std::size_t n, std::optional<std::uint64_t> modulus = {});
MonomialMatrix multiply(MonomialMatrix const& a, MonomialMatrix const& b);

// Theta(g) = Theta_diag(coords of g) P_psi(g).
MonomialMatrix theta(MonoidElement const& g);
MonomialMatrix theta(GroupElement const& g);
MonomialMatrix theta_generator(StructureMonoid const& M, Elem s);

MonomialMatrix specialize(MonomialMatrix const& m, std::uint64_t d);

// Least k >= 1 with m^k = I; needs a modulus.
std::uint64_t matrix_order(MonomialMatrix const& m);

// Every row and column has exactly one entry, a root of unity.
bool is_unitary_specialized(MonomialMatrix const& m);

// Rows as "[0 q 0]" with entries 0, 1, q, q^k; under a modulus the variable
// name stands for the chosen root of unity.
std::string render(MonomialMatrix const& m, std::string const& var = "q");

// Theta(s) Theta(s*t) = Theta(t) Theta(t*s) for all s != t, computed from the
// generator matrices only.
bool relations_respected(StructureMonoid const& M);

struct FaithfulnessReport {
  std::uint64_t generated = 0;
  std::uint64_t expected = 0;
  // x -> specialized Theta(x) is injective on the quotient and its image is
  // the group the specialized generators span.
  bool matches_quotient = false;

  bool ok() const noexcept {
    return generated == expected && matches_quotient;
  }
};

FaithfulnessReport check_specialized_faithfulness(CoxGroup const& G);

}  // namespace rcq

#endif
