#pragma once

// Builders for set-instance data in which every map is inclusion by element name.

#include <vector>

#include "acgw/set_closed.hpp"

namespace acgw {

/// objects[k] is X_{lo+k}; bars[k] is Xbar_{lo+1+k}. Legs are inclusions by name.
SetComplex named_complex(int lo, const std::vector<std::vector<Element>>& objects,
                         const std::vector<std::vector<Element>>& bars);

/// Levelwise inclusions by name; throws PreconditionError if a name is missing.
SetHorChainMor named_hor(const SetComplex& x, const SetComplex& y);
SetVerChainMor named_ver(const SetComplex& z, const SetComplex& y);
/// source <-| middle >-> target, both legs inclusions by name.
SetChainMap named_map(const SetComplex& source, const SetComplex& middle, const SetComplex& target);

}  // namespace acgw
