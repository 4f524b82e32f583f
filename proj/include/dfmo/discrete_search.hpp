#pragma once

#include "dfmo/directions.hpp"
#include "dfmo/search_context.hpp"

namespace dfmo {

/// Discrete Search along a primitive direction with integer stepsizes.
///
/// With abar the largest feasible step and alpha = min(abar, alpha^(d)_p):
/// if alpha is 0, or the trial y + alpha p is beaten everywhere by y itself
/// with margin xi, alpha^(d)_p is halved (never below 1) and the call reports
/// failure. Otherwise the step doubles (capped at abar); each alpha-trial the
/// doubled trial does not beat everywhere by xi is added with alpha^(d)_p =
/// alpha, doubling continues while beta < abar and no list point beats the
/// beta-trial everywhere by xi, and a final beta == abar trial is added with
/// alpha^(d)_p = abar.
SearchOutcome discrete_search(FrontEntry entry, const PrimitiveDirection& p,
                              FrontList& list, SearchContext& ctx);

}  // namespace dfmo
