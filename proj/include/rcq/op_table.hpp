#ifndef RCQ_OP_TABLE_HPP
#define RCQ_OP_TABLE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcq/permutation.hpp"
#include "rcq/types.hpp"

namespace rcq {

// "a", "b", ..., "z", then "x26", "x27", ...
std::vector<std::string> default_names(std::size_t n);

// Finite binary operation s * t on {0, ..., n-1}, optionally together with the
// left operation s ~* t.  Entries are stored row-major: op(s, t) = data[s*n+t].
class OpTable {
 public:
  OpTable() = default;
  OpTable(std::vector<std::string> names, std::vector<Elem> op);
  OpTable(std::vector<std::string> names, std::vector<std::vector<Elem>> const& rows);

  std::size_t size() const noexcept {
    return _names.size();
  }

  Elem op(Elem s, Elem t) const {
    return _op[s * size() + t];
  }

  bool has_lop() const noexcept {
    return !_lop.empty();
  }

  Elem lop(Elem s, Elem t) const;

  std::vector<Elem> const& op_data() const noexcept {
    return _op;
  }

  std::vector<Elem> const& lop_data() const noexcept {
    return _lop;
  }

  std::vector<std::string> const& names() const noexcept {
    return _names;
  }

  std::string const& name(Elem s) const {
    return _names.at(s);
  }

  Elem index_of(std::string_view label) const;

  // Row s as a permutation; throws StructuralError if the row is not one.
  Perm left_translation(Elem s) const;

  // Copy carrying the given left operation (validated for shape only).
  OpTable with_lop(std::vector<Elem> lop) const;
  OpTable without_lop() const;

  bool operator==(OpTable const&) const = default;

 private:
  void check_shape(std::vector<Elem> const& data, char const* what) const;

  std::vector<std::string> _names;
  std::vector<Elem> _op;
  std::vector<Elem> _lop;
};

// s * t = f(t) for every s.
OpTable permutation_table(Perm const& f, std::vector<std::string> names = {});

// s * t = f_s(t) with one permutation per row.
OpTable table_from_rows(std::vector<Perm> const& rows, std::vector<std::string> names = {});

struct Flag {
  bool holds = true;
  std::vector<Elem> witness;
};

// Witness conventions: quasigroup (s, t1, t2) with s*t1 = s*t2; rc (x, y, z);
// bijective (s1, t1, s2, t2) with equal images; lc (x, y, z);
// involutive_pair (x, y).
struct ValidationReport {
  Flag quasigroup;
  Flag rc;
  Flag bijective;
  std::optional<Flag> lc;
  std::optional<Flag> involutive_pair;

  bool is_bijective_rc_quasigroup() const noexcept {
    return quasigroup.holds && rc.holds && bijective.holds;
  }

  bool ok() const noexcept {
    return is_bijective_rc_quasigroup() && (!lc || lc->holds)
           && (!involutive_pair || involutive_pair->holds);
  }
};

ValidationReport validate(OpTable const& table);

// Throws PropertyError with the first witness unless the table is a bijective
// RC-quasigroup.
void require_bijective_rc_quasigroup(OpTable const& table);

// Returns a copy of the table with s ~* t filled in from the inverse of
// (s, t) -> (s*t, t*s).  Throws NotBijectiveError if that map is not onto.
OpTable derive_left_operation(OpTable const& table);

// Involutive set-theoretic solution rho(a, b) = (rho1(a, b), rho2(a, b)).
struct YbeSolution {
  std::vector<std::string> names;
  std::vector<Elem> rho1;
  std::vector<Elem> rho2;

  std::size_t size() const noexcept {
    return names.size();
  }
  Elem first(Elem a, Elem b) const {
    return rho1[a * size() + b];
  }
  Elem second(Elem a, Elem b) const {
    return rho2[a * size() + b];
  }
  bool operator==(YbeSolution const&) const = default;
};

// Witnesses: bijective (a1, b1, a2, b2); braid (a, b, c); involutive (a, b);
// nondegenerate (a, x, y) where the left translation of rho1 or the right
// translation of rho2 by a identifies x and y.
struct YbeReport {
  Flag bijective;
  Flag braid;
  Flag involutive;
  Flag nondegenerate;

  bool ok() const noexcept {
    return bijective.holds && braid.holds && involutive.holds && nondegenerate.holds;
  }
};

YbeSolution to_ybe(OpTable const& table);
OpTable from_ybe(YbeSolution const& rho);
YbeReport validate_ybe(YbeSolution const& rho);

// a up b = rho1(a, b), a down b = rho2(a, b).
struct Birack {
  std::vector<std::string> names;
  std::vector<Elem> up;
  std::vector<Elem> down;

  std::size_t size() const noexcept {
    return names.size();
  }
  Elem up_op(Elem a, Elem b) const {
    return up[a * size() + b];
  }
  Elem down_op(Elem a, Elem b) const {
    return down[a * size() + b];
  }
  bool operator==(Birack const&) const = default;
};

struct BirackReport {
  Flag rack1;
  Flag rack2;
  Flag rack3;
  Flag translations;
  Flag rack4;

  bool ok() const noexcept {
    return rack1.holds && rack2.holds && rack3.holds && translations.holds && rack4.holds;
  }
};

Birack to_birack(OpTable const& table);
OpTable from_birack(Birack const& b);
BirackReport validate_birack(Birack const& b);

// theta(theta(r, s), theta(r, t)) = theta(theta(s, r), theta(s, t)).
Flag check_cube_condition(OpTable const& theta);

// Rebuilds a table from its off-diagonal entries.  Each diagonal entry is the
// unique value missing from its row.  Throws InjectivityError if a row repeats
// a value and ReconstructionError if the result is not a bijective
// RC-quasigroup.
OpTable reconstruct_from_complement(std::vector<std::string> names,
                                    std::vector<std::vector<std::optional<Elem>>> const& partial);

}  // namespace rcq

#endif
