#ifndef RCQ_MONOID_HPP
#define RCQ_MONOID_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "rcq/class.hpp"
#include "rcq/io.hpp"
#include "rcq/op_table.hpp"
#include "rcq/permutation.hpp"

namespace rcq {

class StructureMonoid;

// An element of the structure monoid, stored by its I-structure coordinates
// (one natural number per generator) together with the permutation psi.
class MonoidElement {
 public:
  Coords const& coords() const noexcept {
    return _coords;
  }
  Perm const& psi() const noexcept {
    return _psi;
  }
  std::int64_t length() const noexcept;

  bool operator==(MonoidElement const& that) const noexcept {
    return _coords == that._coords;
  }
  bool operator<(MonoidElement const& that) const noexcept {
    return _coords < that._coords;
  }

 private:
  friend class StructureMonoid;
  MonoidElement(Coords c, Perm p) : _coords(std::move(c)), _psi(std::move(p)) {}

  Coords _coords;
  Perm _psi;
};

// An element of the structure group; coordinates may be negative and psi is
// the permutation of the coordinates reduced modulo the class.
class GroupElement {
 public:
  Coords const& coords() const noexcept {
    return _coords;
  }
  Perm const& psi() const noexcept {
    return _psi;
  }
  bool is_identity() const noexcept;

  bool operator==(GroupElement const& that) const noexcept {
    return _coords == that._coords;
  }
  bool operator<(GroupElement const& that) const noexcept {
    return _coords < that._coords;
  }

 private:
  friend class StructureMonoid;
  GroupElement(Coords c, Perm p) : _coords(std::move(c)), _psi(std::move(p)) {}

  Coords _coords;
  Perm _psi;
};

// Defining relation s (s*t) = t (t*s).
struct Relation {
  Word lhs;
  Word rhs;
};

// Structure monoid (and group) of a bijective RC-quasigroup.  The table is
// validated on construction.  Lazily computed data (class, opposite monoid)
// is guarded for concurrent readers.
class StructureMonoid {
 public:
  explicit StructureMonoid(OpTable const& table);
  StructureMonoid(StructureMonoid const&) = delete;
  StructureMonoid& operator=(StructureMonoid const&) = delete;
  ~StructureMonoid();

  OpTable const& table() const noexcept {
    return _table;
  }
  std::size_t rank() const noexcept {
    return _table.size();
  }

  MonoidElement one() const;
  MonoidElement generator(Elem s) const;
  MonoidElement element(Coords c) const;
  MonoidElement element_from_word(Word const& w) const;

  // nu applied to the sorted decomposition of the coordinates.
  Word canonical_word(MonoidElement const& g) const;
  std::string format(MonoidElement const& g) const;

  // psi for nonnegative coordinates, folded over the sorted decomposition.
  Perm psi_of(Coords const& c) const;

  MonoidElement multiply(MonoidElement const& g, MonoidElement const& h) const;
  MonoidElement power(MonoidElement const& g, std::uint64_t k) const;
  bool word_problem(Word const& u, Word const& v) const;

  bool left_divides(MonoidElement const& g, MonoidElement const& h) const;
  MonoidElement right_lcm(MonoidElement const& g, MonoidElement const& h) const;
  MonoidElement left_gcd(MonoidElement const& g, MonoidElement const& h) const;
  // The x with g x = right_lcm(g, h).
  MonoidElement right_complement(MonoidElement const& g, MonoidElement const& h) const;
  // h = g x for some x; the x, if any.
  std::optional<MonoidElement> left_quotient(MonoidElement const& g,
                                             MonoidElement const& h) const;

  bool right_divides(MonoidElement const& g, MonoidElement const& h) const;
  MonoidElement left_lcm(MonoidElement const& g, MonoidElement const& h) const;
  MonoidElement right_gcd(MonoidElement const& g, MonoidElement const& h) const;
  // The x with x g = left_lcm(g, h).
  MonoidElement left_complement(MonoidElement const& g, MonoidElement const& h) const;

  // Structure monoid of x ~*opp y = y ~* x, whose relations are the mirror
  // images of these.
  StructureMonoid const& opposite() const;
  MonoidElement to_opposite(MonoidElement const& g) const;
  MonoidElement from_opposite(MonoidElement const& g) const;

  MonoidElement delta() const;
  MonoidElement delta_of_subset(std::vector<bool> const& subset) const;
  // All Delta_I ordered by the bitmask of I (bit s set when s in I).
  std::vector<MonoidElement> garside_family() const;
  std::vector<MonoidElement> greedy_normal_form(MonoidElement const& g) const;

  std::vector<Relation> presentation() const;

  ClassData const& class_data() const;
  std::uint64_t class_number() const {
    return class_data().d;
  }
  // s^[q] = nu(s, ..., s) with q letters.
  MonoidElement frozen(Elem s, std::uint64_t q) const;

  GroupElement group_one() const;
  GroupElement to_group(MonoidElement const& g) const;
  GroupElement group_element(Coords c) const;
  GroupElement group_generator(Elem s, bool inverse = false) const;
  GroupElement group_element_from_word(GroupWord const& w) const;
  GroupElement group_multiply(GroupElement const& g, GroupElement const& h) const;
  GroupElement group_inverse(GroupElement const& g) const;
  GroupElement group_power(GroupElement const& g, std::int64_t k) const;
  // psi of arbitrary integer coordinates, reduced modulo the class.
  Perm psi_reduced(Coords const& c) const;

 private:
  void check_coords(Coords const& c, bool nonnegative) const;
  Coords twisted_sum(Coords const& a, Perm const& psi_a, Coords const& b) const;

  OpTable _table;
  std::vector<Perm> _left;

  mutable std::once_flag _class_once;
  mutable std::unique_ptr<ClassData> _class;
  mutable std::once_flag _opp_once;
  mutable std::unique_ptr<StructureMonoid> _opp;
};

}  // namespace rcq

#endif
