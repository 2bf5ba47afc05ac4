#ifndef RCQ_CALCULUS_CHECK_HPP
#define RCQ_CALCULUS_CHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rcq/op_table.hpp"

namespace rcq {

enum class CheckStatus { passed, failed, skipped };

char const* to_string(CheckStatus s);

struct IdentityCheck {
  std::string name;
  CheckStatus status = CheckStatus::passed;
  // Offending tuple; for "retrieval" the tuple is followed by the permutation
  // images and the index i.
  std::vector<Elem> witness;
  std::string note;
};

struct CalculusCheckOptions {
  std::size_t max_length = 4;
  // Lengths with at most this many tuples are checked exhaustively.
  std::uint64_t exhaustive_limit = 100'000;
  std::size_t samples = 2'000;
  std::uint64_t seed = 20'260'101;
};

struct CalculusReport {
  std::vector<IdentityCheck> checks;
  std::uint64_t tuples_checked = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;

  bool ok() const noexcept;
  IdentityCheck const& find(std::string const& name) const;
};

// Checks over tuples of length 1..max_length:
//   "omega-symmetry"  Omega_n is symmetric in its first n-1 arguments;
//   "splitting"       Pi_{p+q}(x, y) = Pi_p(x) . Pi_q(Omega_{p+1}(x, y_j)_j);
//   "retrieval"       Omega_i(s_pi(1..i)) = OmegaTilde_{n+1-i}(st_pi(i..n));
//   "pi-pi-tilde"     Pi_n(s) = PiTilde_n(st) in the structure monoid.
// The last two are skipped unless the table is a bijective RC-quasigroup.
CalculusReport check_calculus_identities(OpTable const& table,
                                         CalculusCheckOptions const& opts = {});

}  // namespace rcq

#endif
