#pragma once

#include <span>

#include "dfmo/directions.hpp"
#include "dfmo/search_context.hpp"

namespace dfmo {

struct ExpansionParams {
  double gamma = 1e-6;  // sufficient-decrease coefficient
  double delta = 0.5;   // beta = alpha / delta
  double theta = 0.5;   // failure shrink factor

  void validate() const;
};

/// Projected Expansion along a continuous direction.
///
/// Trial points are [y + alpha p] projected onto the box. If some list point
/// beats the first trial by gamma alpha^2 in every objective, the entry's
/// alpha^c is multiplied by theta (only if the entry is still in the list) and
/// the call reports failure. Otherwise the stepsize keeps growing as
/// alpha / delta; each alpha-trial not beaten everywhere by the next trial
/// (margin gamma (beta^2 - alpha^2)) goes through Add&Filter with alpha^c =
/// alpha, and the expansion continues while no list point beats the
/// beta-trial by gamma beta^2 everywhere.
SearchOutcome projected_expansion(FrontEntry entry, std::span<const double> direction,
                                  FrontList& list, const ExpansionParams& params,
                                  SearchContext& ctx);

}  // namespace dfmo
