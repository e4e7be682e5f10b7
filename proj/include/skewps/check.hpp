#pragma once

#include <string>
#include <vector>

#include "skewps/element.hpp"

namespace skewps {

enum class ClauseStatus { Pass, Fail, Skipped };

const char* to_string(ClauseStatus s);

// One verdict of a checker run. `key` is the stable machine-readable id used
// in kv output; `human` is the text rendering; `witness` is set on failure.
struct CheckClause {
    std::string key;
    std::string human;
    ClauseStatus status = ClauseStatus::Pass;
    std::string witness;
};

struct CheckReport {
    std::string check_name;
    bool passed = true;  // true iff every clause passed
    std::vector<CheckClause> clauses;
};

// Verifies that the generator-level (tau_l, delta_l) rules descend to
// well-defined maps on the lower ring: for every level l and every pair
// j' > j below l, tau_l and delta_l of both sides of the defining relation
// y_j' y_j = nf(y_j' y_j) must agree (multiplicativity / Leibniz on the left,
// the normal-form extension on the right).
CheckReport check_well_defined(const PresentationPtr& p);

// Verifies the filtration hypotheses level by level:
//   (a) every tau scalar is a unit and tau_l(y_j) lies in I,
//   (b) min_degree(delta_l(y_j)) >= 1 for all j < l and delta_l kills C,
//   (c) min_degree(delta_l(y_j)) >= 2, and over a CentralSeries base
//       delta_l of a degree-1 base monomial vanishes.
// Ideal membership uses the degree criterion, valid inductively: once a level
// fails, higher levels are reported as skipped.
CheckReport check_setup(const PresentationPtr& p);

}  // namespace skewps
