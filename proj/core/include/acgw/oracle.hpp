#pragma once

// Independent verification: the free-module functor from set complexes to
// complexes of F_p-vector spaces and rank-based homology dimensions.

#include <cstdint>
#include <vector>

#include "acgw/chains.hpp"
#include "acgw/finset.hpp"
#include "acgw/fp_matrix.hpp"
#include "acgw/linear.hpp"

namespace acgw {

struct FreeComplex {
    int lo = 0;
    std::uint32_t p = 2;
    std::vector<std::size_t> dims;  // dims[k] = |X_{lo+k}|
    std::vector<FpMatrix> d;        // d[k] : F^{X_{lo+k+1}} -> F^{X_{lo+k}}

    int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
    /// d_i, or nullptr outside the support.
    const FpMatrix* differential(int i) const;
};

/// d_i has a 1 at (lower(t), upper(t)) for each t in Xbar_i.
FreeComplex free_complex(const ChainComplex<FinSetInstance>& x, std::uint32_t p = 2);

/// n_i - rank d_i - rank d_{i+1} for each degree of the support, ascending.
std::vector<std::size_t> rank_homology_dims(const FreeComplex& f);

/// Whether d_i d_{i+1} = 0 throughout.
bool differentials_compose_to_zero(const FreeComplex& f);

/// The same complex in the linear instance: elements become basis vectors.
ChainComplex<LinearInstance> lift_to_linear(const ChainComplex<FinSetInstance>& x, std::uint32_t p = 2);

}  // namespace acgw
