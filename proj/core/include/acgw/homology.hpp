#pragma once

// Homology of a chain complex as a subquotient, computed in both orders:
// kernel side first, H = (X_i \ Xbar_i) / Xbar_{i+1}, and cokernel side first,
// H' = (X_i / Xbar_{i+1}) \ Xbar_i, together with the canonical iso H' >-> H.

#include <string>
#include <vector>

#include "acgw/chains.hpp"

namespace acgw {

template <AcgwInstance I>
struct HomologyGrid {
    int degree = 0;
    typename I::Hor kernel_incl;         // K = X_i \ Xbar_i >-> X_i
    typename I::Ver cokernel_proj;       // Q = X_i / Xbar_{i+1} -|> X_i
    typename I::Hor image_into_kernel;   // Xbar_{i+1} >-> K
    typename I::Ver trans_into_cokernel; // Xbar_i -|> Q
    typename I::Ver h_leg;               // H -|> K
    typename I::Hor h_prime_leg;         // H' >-> Q
    typename I::Hor iso;                 // H' >-> H

    const typename I::Obj& h() const { return h_leg.source; }
    const typename I::Obj& h_prime() const { return h_prime_leg.source; }
};

template <AcgwInstance I>
HomologyGrid<I> homology_grid(const ChainComplex<I>& x, int i) {
    const I& inst = x.inst;
    const auto up = x.transition(i + 1);
    const auto down = x.transition(i);
    HomologyGrid<I> g;
    g.degree = i;
    g.kernel_incl = inst.complement_v(down.upper);
    g.cokernel_proj = inst.complement_h(up.lower);
    auto m = inst.factor_h(up.lower, g.kernel_incl);
    if (!m) throw PreconditionError("not a chain complex at degree " + std::to_string(i));
    g.image_into_kernel = *m;
    auto e = inst.factor_v(down.upper, g.cokernel_proj);
    if (!e) throw PreconditionError("not a chain complex at degree " + std::to_string(i));
    g.trans_into_cokernel = *e;
    g.h_leg = inst.complement_h(g.image_into_kernel);
    g.h_prime_leg = inst.complement_v(g.trans_into_cokernel);
    auto iso = inst.subquotient_iso(g.h_prime_leg, g.cokernel_proj, g.h_leg, g.kernel_incl);
    if (!iso) throw InternalError("the two homology orders disagree at degree " + std::to_string(i));
    g.iso = *iso;
    return g;
}

/// H_i(X), kernel side first.
template <AcgwInstance I>
typename I::Obj homology_at(const ChainComplex<I>& x, int i) {
    return homology_grid(x, i).h();
}

/// H_i(X), cokernel side first.
template <AcgwInstance I>
typename I::Obj homology_at_cokernel_first(const ChainComplex<I>& x, int i) {
    return homology_grid(x, i).h_prime();
}

template <AcgwInstance I>
bool is_exact(const ChainComplex<I>& x) {
    for (int i = x.lo; i <= x.hi(); ++i)
        if (!x.inst.is_zero(homology_at(x, i))) return false;
    return true;
}

/// Degrees in the support where homology is nonzero.
template <AcgwInstance I>
std::vector<int> non_exact_degrees(const ChainComplex<I>& x) {
    std::vector<int> out;
    for (int i = x.hi(); i >= x.lo; --i)
        if (!x.inst.is_zero(homology_at(x, i))) out.push_back(i);
    return out;
}

}  // namespace acgw
