#pragma once

// Long exact sequence in homology of a short exact sequence of chain complexes,
// assembled degree by degree from strong snake instances and spliced.

#include <string>
#include <vector>

#include "acgw/homology.hpp"
#include "acgw/snake.hpp"

namespace acgw {

template <AcgwInstance I>
struct LesDegree {
    int degree = 0;
    FlatMor<I> x_to_y;      // H_i(X) -> H_i(Y)
    FlatMor<I> y_to_z;      // H_i(Y) -> H_i(Z)
    FlatMor<I> connecting;  // H_i(Z) -> H_{i-1}(X)
};

template <AcgwInstance I>
struct LesResult {
    ExactZigzag<I> zigzag;        // H_hi(X), H_hi(Y), H_hi(Z), H_{hi-1}(X), ...
    std::vector<LesDegree<I>> degrees;  // descending degree

    const LesDegree<I>& at(int i) const {
        for (const auto& d : degrees)
            if (d.degree == i) return d;
        throw PreconditionError("no LES data at degree " + std::to_string(i));
    }
};

namespace detail {

/// The strong snake input whose output objects are H_i and H_{i-1} of X, Y, Z.
template <AcgwInstance I>
StrongSnakeInput<I> les_snake_input(const ChainSES<I>& ses, int i) {
    const I& inst = ses.hor.source.inst;
    const auto& xc = ses.hor.source;
    const auto& yc = ses.hor.target;
    const auto& zc = ses.ver.source;
    const auto tx = xc.transition(i), ty = yc.transition(i), tz = zc.transition(i);

    const auto qb = inst.complement_h(yc.transition(i + 1).lower);  // B = Y_i / Ybar_{i+1}
    const auto pa = inst.mixed_pullback(ses.hor.level_at(i), qb);   // Abar -|> X_i, Abar >-> B
    const auto qa = inst.complement_h(xc.transition(i + 1).lower);
    const auto qc = inst.complement_h(zc.transition(i + 1).lower);

    const auto ka2 = inst.complement_v(xc.transition(i - 1).upper);  // A' = X_{i-1} \ Xbar_{i-1}
    const auto kb2 = inst.complement_v(yc.transition(i - 1).upper);
    const auto pc = inst.mixed_pullback(kb2, ses.ver.level_at(i - 1));  // C'bar -|> B', C'bar >-> Z_{i-1}
    const auto kc = inst.complement_v(zc.transition(i - 1).upper);

    StrongSnakeInput<I> s;
    auto& w = s.weak;
    w.inst = inst;
    w.a_b = pa.to_b;
    w.c_b = expect(inst.factor_v(inst.compose_v(qc, ses.ver.level_at(i)), qb), "C into B");
    w.x_y = ses.hor.trans_at(i);
    w.z_y = ses.ver.trans_at(i);
    w.a2_b2 = expect(inst.factor_h(inst.compose_h(ka2, ses.hor.level_at(i - 1)), kb2), "A' into B'");
    w.c2_b2 = pc.to_a;
    w.x_a = expect(inst.factor_v(tx.upper, pa.to_a), "X into A");
    w.x_a2 = expect(inst.factor_h(tx.lower, ka2), "X into A'");
    w.y_b = expect(inst.factor_v(ty.upper, qb), "Y into B");
    w.y_b2 = expect(inst.factor_h(ty.lower, kb2), "Y into B'");
    w.z_c = expect(inst.factor_v(tz.upper, qc), "Z into C");
    w.z_c2 = expect(inst.factor_h(tz.lower, pc.to_b), "Z into C'");
    s.abar_a = expect(inst.factor_v(pa.to_a, qa), "A into A_outer");
    s.cbar_c = expect(inst.factor_h(pc.to_b, kc), "C' into C'_outer");
    return s;
}

/// O >-> Q -|> X_i presenting H_i: the iso O >-> H_i (kernel-first coordinates).
template <AcgwInstance I>
typename I::Hor iso_from_cokernel_side(const I& inst, const HomologyGrid<I>& g, const typename I::Hor& o_in_q) {
    return expect(inst.subquotient_iso(o_in_q, g.cokernel_proj, g.h_leg, g.kernel_incl), "homology transport");
}

/// O -|> K >-> X_i presenting H_i.
template <AcgwInstance I>
typename I::Hor iso_from_kernel_side(const I& inst, const HomologyGrid<I>& g, const typename I::Ver& o_on_k) {
    const auto beta = expect(inst.subquotient_iso(g.h_prime_leg, g.cokernel_proj, o_on_k, g.kernel_incl),
                             "homology transport");
    return inst.compose_h(inst.invert_h(beta), g.iso);
}

/// Transition transported along isos of its two ends.
template <AcgwInstance I>
Transition<I> transport(const I& inst, const Transition<I>& t, const typename I::Hor& from, const typename I::Hor& to) {
    return {t.bar, inst.compose_v(t.upper, inst.flip_h(inst.invert_h(from))), inst.compose_h(t.lower, to)};
}

template <AcgwInstance I>
FlatMor<I> as_flat(const I& inst, const Transition<I>& t) {
    return make_flat(inst, t.upper, t.lower);
}

}  // namespace detail

/// Per-degree snake outputs in canonical homology coordinates.
template <AcgwInstance I>
std::vector<Transition<I>> les_degree_transitions(const ChainSES<I>& ses, int i) {
    const I& inst = ses.hor.source.inst;
    const auto snake = snake_strong(detail::les_snake_input(ses, i));
    const std::array<const ChainComplex<I>*, 3> cx = {&ses.hor.source, &ses.hor.target, &ses.ver.source};
    std::array<typename I::Hor, 6> iso;
    for (int j = 0; j < 3; ++j) {
        iso[j] = detail::iso_from_cokernel_side(inst, homology_grid(*cx[j], i), snake.kernel_legs[j]);
        iso[j + 3] = detail::iso_from_kernel_side(inst, homology_grid(*cx[j], i - 1), snake.cokernel_legs[j]);
    }
    std::vector<Transition<I>> out;
    for (int j = 0; j < 5; ++j)
        out.push_back(detail::transport(inst, snake.zigzag.transitions[j], iso[j], iso[j + 1]));
    return out;
}

template <AcgwInstance I>
LesResult<I> les_of_ses(const ChainSES<I>& ses) {
    const I& inst = ses.hor.source.inst;
    if (auto v = validate_ses(ses); !v.empty())
        throw ValidationError("short exact sequence: degree " + std::to_string(v.front().degree) + ": " +
                              v.front().message);
    const auto r = support_union(ses.hor.source, ses.hor.target, ses.ver.source);
    LesResult<I> out;
    out.zigzag.inst = inst;
    if (r.empty()) return out;

    std::vector<std::vector<Transition<I>>> per;  // per[k] for degree hi+1-k
    for (int i = r.hi + 1; i >= r.lo; --i) per.push_back(les_degree_transitions(ses, i));
    auto at = [&](int i) -> const std::vector<Transition<I>>& { return per[r.hi + 1 - i]; };

    for (int i = r.hi; i >= r.lo; --i) {
        const auto& above = at(i + 1);
        const auto& here = at(i);
        if (!span_equiv(inst, detail::as_flat(inst, above[3]), detail::as_flat(inst, here[0])))
            throw InternalError("LES splice disagreement at H_" + std::to_string(i) + "(X) -> H_" +
                                std::to_string(i) + "(Y)");
        if (!span_equiv(inst, detail::as_flat(inst, above[4]), detail::as_flat(inst, here[1])))
            throw InternalError("LES splice disagreement at H_" + std::to_string(i) + "(Y) -> H_" +
                                std::to_string(i) + "(Z)");
        const std::string d = std::to_string(i);
        out.zigzag.objects.push_back(homology_at(ses.hor.source, i));
        out.zigzag.objects.push_back(homology_at(ses.hor.target, i));
        out.zigzag.objects.push_back(homology_at(ses.ver.source, i));
        out.zigzag.labels.insert(out.zigzag.labels.end(), {"H_" + d + "(X)", "H_" + d + "(Y)", "H_" + d + "(Z)"});
        out.zigzag.transitions.push_back(here[0]);
        out.zigzag.transitions.push_back(here[1]);
        out.zigzag.transition_labels.push_back("H_" + d + "(f)");
        out.zigzag.transition_labels.push_back("H_" + d + "(g)");
        if (i > r.lo) {
            out.zigzag.transitions.push_back(here[2]);
            out.zigzag.transition_labels.push_back("delta_" + d);
        }
        out.degrees.push_back({i, detail::as_flat(inst, here[0]), detail::as_flat(inst, here[1]),
                               detail::as_flat(inst, here[2])});
    }
    return out;
}

}  // namespace acgw
