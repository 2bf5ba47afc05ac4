#ifndef RCQ_COXETER_HPP
#define RCQ_COXETER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcq/monoid.hpp"

namespace rcq {

// Element of the finite quotient: one residue modulo d per generator.
using Residues = std::vector<std::uint32_t>;

struct IybQuotient {
  std::uint64_t order = 0;
  // psi(s)^-1 for each generator s.
  std::vector<Perm> generators;
  std::vector<Perm> elements;
};

struct GermReport {
  bool section_multiplicative = true;
  bool relations_are_germ_instances = true;
  bool cayley_matches_divisors = true;
  bool growth_matches = true;
  std::uint64_t pairs_checked = 0;
  bool exhaustive = true;
  std::vector<std::string> failures;

  bool ok() const noexcept {
    return section_multiplicative && relations_are_germ_instances && cayley_matches_divisors
           && growth_matches;
  }
};

struct ModularReport {
  bool psi_well_defined = true;
  bool istructure = true;
  bool generated_by_atoms = true;

  bool ok() const noexcept {
    return psi_well_defined && istructure && generated_by_atoms;
  }
};

struct WreathReport {
  bool homomorphism = true;
  bool injective = true;
  std::uint64_t pairs_checked = 0;
  bool exhaustive = true;

  bool ok() const noexcept {
    return homomorphism && injective;
  }
};

// The quotient of the structure group by the subgroup generated by the
// frozen elements s^[d]: residues modulo d with product x + psi(x)^-1[y].
// The referenced monoid must outlive this object.
class CoxGroup {
 public:
  static constexpr std::uint64_t default_budget = 1'000'000;

  explicit CoxGroup(StructureMonoid const& M, std::uint64_t budget = default_budget);
  // d must be a class of the table, not necessarily the least one.
  CoxGroup(StructureMonoid const& M, std::uint64_t d, std::uint64_t budget);

  StructureMonoid const& monoid() const noexcept {
    return _M;
  }
  std::uint64_t d() const noexcept {
    return _d;
  }
  std::size_t rank() const noexcept {
    return _M.rank();
  }
  std::uint64_t order() const noexcept {
    return _order;
  }

  // Mixed radix, first generator least significant.
  std::uint64_t index(Residues const& x) const;
  Residues element(std::uint64_t index) const;

  Residues identity() const;
  Residues generator(Elem s) const;
  Perm psi(Residues const& x) const;
  Residues multiply(Residues const& x, Residues const& y) const;
  Residues inverse(Residues const& x) const;
  Residues power(Residues const& x, std::uint64_t k) const;

  Residues project(GroupElement const& g) const;
  Residues project(MonoidElement const& g) const;
  // The divisor of Delta^(d-1) with coordinates in 0..d-1.
  MonoidElement section(Residues const& x) const;
  std::uint64_t norm(Residues const& x) const;

  // Defined exactly when norm(x) + norm(y) = norm(xy).
  std::optional<Residues> germ_product(Residues const& x, Residues const& y) const;
  // No coordinate of x + psi(x)^-1[y] reaches d.
  bool twisted_sum_in_box(Residues const& x, Residues const& y) const;

  std::uint64_t element_order(Residues const& x) const;
  std::uint64_t exponent() const;

  IybQuotient iyb_quotient() const;
  // Needs d >= 2; a class-1 table can be viewed with d = 2 instead.
  GermReport verify_germ_presentation(std::size_t max_length = 4,
                                      std::uint64_t pair_limit = 4'000'000) const;
  ModularReport check_modular_istructure() const;
  WreathReport wreath_embedding_check(std::uint64_t pair_limit = 4'000'000,
                                      std::uint64_t seed = 7) const;

  std::string format(Residues const& x) const;

 private:
  void init(std::uint64_t budget);

  StructureMonoid const& _M;
  std::uint64_t _d;
  std::uint64_t _order = 0;
  // psi of every element, flattened by index.
  std::vector<Elem> _psi;
  bool _generated = true;
};

}  // namespace rcq

#endif
