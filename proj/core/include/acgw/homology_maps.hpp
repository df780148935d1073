#pragma once

// Induced spans on homology, functoriality, quasi-isomorphisms and the
// quasi-isomorphism between a complex and its homology.

#include <utility>
#include <vector>

#include "acgw/les.hpp"

namespace acgw {

/// H_i(f) for every degree in the joint support, in descending degree order.
template <AcgwInstance I>
std::vector<std::pair<int, FlatMor<I>>> h_on_map_all(const ChainMap<I>& f) {
    const I& inst = f.inst();
    if (auto v = validate_chain_map(f); !v.empty())
        throw ValidationError("chain map: degree " + std::to_string(v.front().degree) + ": " + v.front().message);
    const auto [back, front] = split(f);
    const auto les1 = les_of_ses(ses_of_ver(back));   // X\Z >-> X <-| Z
    const auto les2 = les_of_ses(ses_of_hor(front));  // Z >-> Y <-| Y/Z
    const auto r = support_union(f.source, f.middle, f.target);
    std::vector<std::pair<int, FlatMor<I>>> out;
    for (int i = r.hi; i >= r.lo; --i)
        out.emplace_back(i, compose_flat(inst, les1.at(i).y_to_z, les2.at(i).x_to_y));
    return out;
}

template <AcgwInstance I>
FlatMor<I> h_on_map(const ChainMap<I>& f, int i) {
    for (auto& [d, m] : h_on_map_all(f))
        if (d == i) return m;
    return zero_flat(f.inst(), homology_at(f.source, i), homology_at(f.target, i));
}

/// Whether H(g . f) and H(g) . H(f) agree at every degree.
template <AcgwInstance I>
bool check_functoriality(const ChainMap<I>& f, const ChainMap<I>& g) {
    const I& inst = f.inst();
    const auto gf = compose_chain_maps(f, g);
    const auto hf = h_on_map_all(f);
    const auto hg = h_on_map_all(g);
    const auto hgf = h_on_map_all(gf);
    const auto r = support_union(f.source, f.target, g.target);
    auto find = [](const auto& v, int i) -> const FlatMor<I>* {
        for (const auto& [d, m] : v)
            if (d == i) return &m;
        return nullptr;
    };
    for (int i = r.lo; i <= r.hi; ++i) {
        const auto* a = find(hf, i);
        const auto* b = find(hg, i);
        const auto* c = find(hgf, i);
        if (!a || !b || !c) return false;
        if (!span_equiv(inst, *c, compose_flat(inst, *a, *b))) return false;
    }
    return true;
}

template <AcgwInstance I>
bool is_quasi_iso(const ChainMap<I>& f) {
    for (const auto& [d, m] : h_on_map_all(f))
        if (!is_iso_flat(f.inst(), m)) return false;
    return true;
}

enum class Direction { horizontal, vertical };

template <AcgwInstance I>
struct HomologyComplex {
    ChainComplex<I> complex;  // H_i with zero transitions
    ChainMap<I> map;          // H -> X (horizontal) or X -> H (vertical)
};

template <AcgwInstance I>
HomologyComplex<I> homology_complex(const ChainComplex<I>& x, Direction dir) {
    const I& inst = x.inst;
    if (auto v = validate_complex(x); !v.empty())
        throw ValidationError("complex: degree " + std::to_string(v.front().degree) + ": " + v.front().message);
    HomologyComplex<I> out;
    out.complex = ChainComplex<I>{inst, x.lo, {}, {}};
    std::vector<typename I::Hor> hor;
    std::vector<typename I::Ver> ver;
    for (int i = x.lo; i <= x.hi(); ++i) {
        const auto g = homology_grid(x, i);
        out.complex.objects.push_back(g.h());
        if (i > x.lo)
            out.complex.transitions.push_back({inst.zero(), inst.initial_v(g.h()), inst.initial_h(out.complex.objects[i - 1 - x.lo])});
        if (dir == Direction::horizontal)
            hor.push_back(inst.compose_h(inst.section_v(g.h_leg), g.kernel_incl));
        else
            ver.push_back(inst.compose_v(g.h_leg, inst.retraction_h(g.kernel_incl)));
    }
    std::vector<typename I::Hor> hor_t;
    std::vector<typename I::Ver> ver_t;
    for (int i = x.lo; i <= x.hi(); ++i) {
        hor_t.push_back(inst.initial_h(x.transition(i).bar));
        ver_t.push_back(inst.initial_v(x.transition(i).bar));
    }
    if (dir == Direction::horizontal)
        out.map = to_chain_map(HorChainMor<I>{out.complex, x, {x.lo, std::move(hor)}, {x.lo, std::move(hor_t)}});
    else
        out.map = to_chain_map(VerChainMor<I>{out.complex, x, {x.lo, std::move(ver)}, {x.lo, std::move(ver_t)}});
    return out;
}

/// (quasi-iso, complement exact) for a horizontal morphism; the two must agree.
template <AcgwInstance I>
std::pair<bool, bool> qiso_iff_complement_exact(const HorChainMor<I>& f) {
    return {is_quasi_iso(to_chain_map(f)), is_exact(coker_hor(f).source)};
}

template <AcgwInstance I>
std::pair<bool, bool> qiso_iff_complement_exact(const VerChainMor<I>& g) {
    return {is_quasi_iso(to_chain_map(g)), is_exact(ker_ver(g).source)};
}

}  // namespace acgw
