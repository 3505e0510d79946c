#pragma once

// Closed-form Wedderburn and Aut data for the 2-groups of types D1 and D2,
// used as regression targets for the generic engine.

#include <cstdint>
#include <string>
#include <vector>

#include "fqg/aut.hpp"
#include "fqg/engine.hpp"
#include "fqg/field.hpp"
#include "fqg/group.hpp"

namespace fqg {

enum class Family { D1, D2 };

std::string to_string(Family f);
FiniteGroup family_group(Family f, unsigned m);

struct Lambda {
  std::uint64_t value = 0;  // 2-adic valuation of q - branch
  int branch = 1;           // q = branch (mod 4)
};

/// Throws EvenQ.
Lambda lambda_of(std::uint64_t q);

/// Both require m >= 2 and odd q; throw EvenQ, BadPresentation.  Terms with
/// multiplicity 0 are left out.
WedderburnSummary d1_closed_form(unsigned m, std::uint64_t q);
WedderburnSummary d2_closed_form(unsigned m, std::uint64_t q);
WedderburnSummary closed_form(Family f, unsigned m, std::uint64_t q);

/// Normalized, comparable with aut_description().
AutExpr d1_aut_closed_form(unsigned m, std::uint64_t q);
AutExpr d2_aut_closed_form(unsigned m, std::uint64_t q);
AutExpr aut_closed_form(Family f, unsigned m, std::uint64_t q);

/// The non-identity normal subgroups of d1_group(m) in the listed order:
/// <t^{2^a}, x>, <t^{2^a}, y>, <t^{2^a}, xy>, <t^{2^a}, x, y> (0 <= a < m);
/// <t^{2^b} x>, <t^{2^b} y>, <t^{2^{m-1}}, t^{2^b} xy>, <t^{2^{m-1}}, x, t^{2^b} y>,
/// <t^{2^{m-1}}, t^{2^b} x, y>, <t^{2^b} x, t^{2^b} y> (0 <= b < m-1);
/// <t^{2^c}> (0 <= c < m).  Throws AssertionFailure on a repeat or a
/// non-normal entry.
std::vector<Subgroup> d1_normal_subgroup_list(const FiniteGroup& G, unsigned m);

struct FamilyComparison {
  Family family = Family::D1;
  unsigned m = 2;
  std::uint64_t q = 3;
  WedderburnSummary closed, engine;
  AutExpr closed_aut, engine_aut;
  bool closed_dimension_ok = false;  // sum alpha d^2 l = 2^{m+2}

  bool summary_match() const { return closed == engine; }
  bool aut_match() const { return closed_aut == engine_aut; }
  bool agree() const { return closed_dimension_ok && summary_match() && aut_match(); }
};

FamilyComparison compare_family(Family f, unsigned m, const FieldTower& field, const DecomposeOptions& options = {});

}  // namespace fqg
