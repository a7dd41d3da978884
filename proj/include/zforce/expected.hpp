#pragma once

#include <optional>
#include <string>

#include "zforce/families.hpp"

namespace zf {

/// Closed-form values known for a family member.
///
/// Exact values and upper bounds are kept apart: triangular and king grids
/// only carry an upper bound on I, and cycle_x_cycle carries an upper bound
/// on Z plus the conjectured exact value. Parameters outside every known
/// formula's hypotheses yield an empty record, never a guess.
struct ExpectedInvariants {
  FamilySpec spec;
  std::optional<int> z;
  std::optional<int> z_upper;
  std::optional<int> z_conjectured;
  std::optional<int> i;
  std::optional<int> i_upper;
  std::string source;  // the formulas used, e.g. "Z(C_n)=2; I(C_n)=ceil((n-2)/2)"

  bool has_value() const { return z || z_upper || i || i_upper; }
};

ExpectedInvariants expected_invariants(const FamilySpec& spec);

struct ExpectedCheck {
  bool applicable = false;  // something to compare against
  bool z_ok = true;
  bool i_ok = true;
  bool match() const { return z_ok && i_ok; }
};

/// Exact values must be equal, upper bounds must hold. The conjectured value
/// is reported separately and does not take part.
ExpectedCheck compare(const ExpectedInvariants& e, int z, int i);

}  // namespace zf
