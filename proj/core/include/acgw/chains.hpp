#pragma once

// Chain complexes over an ACGW instance, chain maps as levelwise spans, and the
// horizontal/vertical chain morphisms with their complements.
//
// A complex with support [lo, hi] stores X_lo..X_hi and the transitions
// Xbar_i (lo < i <= hi) with legs Xbar_i -|> X_i and Xbar_i >-> X_{i-1}.
// Everything outside the support is the zero object.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "acgw/instance.hpp"

namespace acgw {

struct Violation {
    int degree = 0;
    std::string message;
    friend bool operator==(const Violation&, const Violation&) = default;
};

std::string format_violations(const std::vector<Violation>& v);

template <AcgwInstance I>
struct Transition {
    typename I::Obj bar;
    typename I::Ver upper;  // bar -|> X_i
    typename I::Hor lower;  // bar >-> X_{i-1}
};

template <AcgwInstance I>
struct ChainComplex {
    I inst{};
    int lo = 0;
    std::vector<typename I::Obj> objects;   // X_lo .. X_hi
    std::vector<Transition<I>> transitions;  // Xbar_{lo+1} .. Xbar_hi

    int hi() const { return lo + static_cast<int>(objects.size()) - 1; }
    bool in_support(int i) const { return i >= lo && i <= hi(); }

    typename I::Obj object(int i) const { return in_support(i) ? objects[i - lo] : inst.zero(); }

    bool has_transition(int i) const { return i > lo && i <= hi(); }

    Transition<I> transition(int i) const {
        if (has_transition(i)) return transitions[i - lo - 1];
        return {inst.zero(), inst.initial_v(object(i)), inst.initial_h(object(i - 1))};
    }
};

/// Degrees [lo, hi] covering the supports of all given complexes.
struct DegreeRange {
    int lo = 0;
    int hi = -1;
    bool empty() const { return hi < lo; }
};

template <AcgwInstance I, class... Rest>
DegreeRange support_union(const ChainComplex<I>& first, const Rest&... rest) {
    DegreeRange r;
    auto add = [&r](const ChainComplex<I>& c) {
        if (c.objects.empty()) return;
        if (r.empty()) {
            r = {c.lo, c.hi()};
        } else {
            r.lo = std::min(r.lo, c.lo);
            r.hi = std::max(r.hi, c.hi());
        }
    };
    add(first);
    (add(rest), ...);
    return r;
}

/// Morphisms indexed by degree over a contiguous range.
template <class M>
struct Levelwise {
    int lo = 0;
    std::vector<M> items;

    const M* find(int i) const {
        if (i < lo || i >= lo + static_cast<int>(items.size())) return nullptr;
        return &items[i - lo];
    }
};

template <AcgwInstance I>
struct HorChainMor {
    ChainComplex<I> source;
    ChainComplex<I> target;
    Levelwise<typename I::Hor> level;  // X_i >-> Y_i
    Levelwise<typename I::Hor> trans;  // Xbar_i >-> Ybar_i

    typename I::Hor level_at(int i) const {
        if (auto m = level.find(i)) return *m;
        return source.inst.initial_h(target.object(i));
    }
    typename I::Hor trans_at(int i) const {
        if (auto m = trans.find(i)) return *m;
        return source.inst.initial_h(target.transition(i).bar);
    }
};

template <AcgwInstance I>
struct VerChainMor {
    ChainComplex<I> source;
    ChainComplex<I> target;
    Levelwise<typename I::Ver> level;  // Z_i -|> Y_i
    Levelwise<typename I::Ver> trans;  // Zbar_i -|> Ybar_i

    typename I::Ver level_at(int i) const {
        if (auto m = level.find(i)) return *m;
        return source.inst.initial_v(target.object(i));
    }
    typename I::Ver trans_at(int i) const {
        if (auto m = trans.find(i)) return *m;
        return source.inst.initial_v(target.transition(i).bar);
    }
};

/// A morphism of chain complexes source <-| middle >-> target.
template <AcgwInstance I>
struct ChainMap {
    ChainComplex<I> source;
    ChainComplex<I> middle;
    ChainComplex<I> target;
    Levelwise<typename I::Ver> back;         // Z_i -|> X_i
    Levelwise<typename I::Hor> front;        // Z_i >-> Y_i
    Levelwise<typename I::Ver> trans_back;   // Zbar_i -|> Xbar_i
    Levelwise<typename I::Hor> trans_front;  // Zbar_i >-> Ybar_i

    const I& inst() const { return source.inst; }

    typename I::Ver back_at(int i) const {
        if (auto m = back.find(i)) return *m;
        return inst().initial_v(source.object(i));
    }
    typename I::Hor front_at(int i) const {
        if (auto m = front.find(i)) return *m;
        return inst().initial_h(target.object(i));
    }
    typename I::Ver trans_back_at(int i) const {
        if (auto m = trans_back.find(i)) return *m;
        return inst().initial_v(source.transition(i).bar);
    }
    typename I::Hor trans_front_at(int i) const {
        if (auto m = trans_front.find(i)) return *m;
        return inst().initial_h(target.transition(i).bar);
    }

    FlatMor<I> at(int i) const { return make_flat(inst(), back_at(i), front_at(i)); }
};

/// X >-> Y <-| Z with each morphism the complement of the other.
template <AcgwInstance I>
struct ChainSES {
    HorChainMor<I> hor;
    VerChainMor<I> ver;
};

// ---------------------------------------------------------------------------
// validation

namespace detail {

template <AcgwInstance I>
void check_mor_h(const I& inst, std::vector<Violation>& out, int deg, const std::string& what,
                 const typename I::Hor& h, const typename I::Obj& src, const typename I::Obj& tgt) {
    if (auto e = inst.check_h(h)) {
        out.push_back({deg, what + ": " + *e});
        return;
    }
    if (!inst.same_object(h.source, src) || !inst.same_object(h.target, tgt))
        out.push_back({deg, what + ": endpoints are " + inst.describe(h.source) + " >-> " + inst.describe(h.target) +
                                ", expected " + inst.describe(src) + " >-> " + inst.describe(tgt)});
}

template <AcgwInstance I>
void check_mor_v(const I& inst, std::vector<Violation>& out, int deg, const std::string& what,
                 const typename I::Ver& v, const typename I::Obj& src, const typename I::Obj& tgt) {
    if (auto e = inst.check_v(v)) {
        out.push_back({deg, what + ": " + *e});
        return;
    }
    if (!inst.same_object(v.source, src) || !inst.same_object(v.target, tgt))
        out.push_back({deg, what + ": endpoints are " + inst.describe(v.source) + " -|> " + inst.describe(v.target) +
                                ", expected " + inst.describe(src) + " -|> " + inst.describe(tgt)});
}

template <AcgwInstance I>
void require_pseudo(const I& inst, std::vector<Violation>& out, int deg, const std::string& what,
                    const typename I::Hor& top, const typename I::Ver& left, const typename I::Hor& bottom,
                    const typename I::Ver& right) {
    try {
        const auto cls = inst.classify_mixed(top, left, bottom, right);
        if (cls != SquareClass::pseudo_commutative && cls != SquareClass::cartesian)
            out.push_back({deg, what + " is " + to_string(cls) + ", expected pseudo-commutative"});
    } catch (const std::exception& e) {
        out.push_back({deg, what + ": " + e.what()});
    }
}

inline void sort_violations(std::vector<Violation>& v) {
    std::stable_sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) { return a.degree > b.degree; });
}

}  // namespace detail

/// Every violated condition, sorted by descending degree. Empty means valid.
template <AcgwInstance I>
std::vector<Violation> validate_complex(const ChainComplex<I>& x) {
    const I& inst = x.inst;
    std::vector<Violation> out;
    const std::size_t want = x.objects.empty() ? 0 : x.objects.size() - 1;
    if (x.transitions.size() != want) {
        out.push_back({x.lo, "expected " + std::to_string(want) + " transitions, found " +
                                 std::to_string(x.transitions.size())});
        return out;
    }
    for (int i = x.lo; i <= x.hi(); ++i)
        if (auto e = inst.check_object(x.object(i))) out.push_back({i, "object: " + *e});
    std::vector<bool> leg_ok(x.objects.size() + 2, true);
    for (int i = x.lo + 1; i <= x.hi(); ++i) {
        const auto t = x.transition(i);
        const std::size_t before = out.size();
        detail::check_mor_v(inst, out, i, "upper transition leg", t.upper, t.bar, x.object(i));
        detail::check_mor_h(inst, out, i, "lower transition leg", t.lower, t.bar, x.object(i - 1));
        if (out.size() != before) leg_ok[i - x.lo] = false;
    }
    for (int i = x.lo - 1; i <= x.hi() + 1; ++i) {
        if (!x.objects.empty() && ((x.has_transition(i) && !leg_ok[i - x.lo]) ||
                                   (x.has_transition(i + 1) && !leg_ok[i + 1 - x.lo])))
            continue;
        const auto in = x.transition(i + 1);
        const auto out_t = x.transition(i);
        const auto pb = inst.mixed_pullback(in.lower, out_t.upper);
        if (!inst.is_zero(pb.corner))
            out.push_back({i, "transitions " + std::to_string(i + 1) + " and " + std::to_string(i) +
                                  " intersect in X_" + std::to_string(i) + " (" + inst.describe(pb.corner) + ")"});
    }
    detail::sort_violations(out);
    return out;
}

template <AcgwInstance I>
std::vector<Violation> validate_hor(const HorChainMor<I>& f) {
    const I& inst = f.source.inst;
    const auto& x = f.source;
    const auto& y = f.target;
    std::vector<Violation> out;
    const auto r = support_union(x, y);
    for (int i = r.lo; i <= r.hi; ++i) {
        const auto tx = x.transition(i);
        const auto ty = y.transition(i);
        const std::size_t before = out.size();
        detail::check_mor_h(inst, out, i, "level map", f.level_at(i), x.object(i), y.object(i));
        detail::check_mor_h(inst, out, i, "transition map", f.trans_at(i), tx.bar, ty.bar);
        if (out.size() != before) continue;
        detail::require_pseudo(inst, out, i, "left square (Xbar_i = X_i meet Ybar_i)", f.trans_at(i), tx.upper,
                               f.level_at(i), ty.upper);
        if (!inst.equal_h(inst.compose_h(tx.lower, f.level_at(i - 1)), inst.compose_h(f.trans_at(i), ty.lower)))
            out.push_back({i, "right square does not commute"});
    }
    detail::sort_violations(out);
    return out;
}

template <AcgwInstance I>
std::vector<Violation> validate_ver(const VerChainMor<I>& g) {
    const I& inst = g.source.inst;
    const auto& z = g.source;
    const auto& y = g.target;
    std::vector<Violation> out;
    const auto r = support_union(z, y);
    for (int i = r.lo; i <= r.hi; ++i) {
        const auto tz = z.transition(i);
        const auto ty = y.transition(i);
        const std::size_t before = out.size();
        detail::check_mor_v(inst, out, i, "level map", g.level_at(i), z.object(i), y.object(i));
        detail::check_mor_v(inst, out, i, "transition map", g.trans_at(i), tz.bar, ty.bar);
        if (out.size() != before) continue;
        if (!inst.equal_v(inst.compose_v(tz.upper, g.level_at(i)), inst.compose_v(g.trans_at(i), ty.upper)))
            out.push_back({i, "left square does not commute"});
        detail::require_pseudo(inst, out, i, "right square (Zbar_i = Z_{i-1} meet Ybar_i)", tz.lower, g.trans_at(i),
                               ty.lower, g.level_at(i - 1));
    }
    detail::sort_violations(out);
    return out;
}

template <AcgwInstance I>
std::vector<Violation> validate_chain_map(const ChainMap<I>& f) {
    const I& inst = f.inst();
    std::vector<Violation> out;
    for (auto v : validate_complex(f.middle)) {
        v.message = "middle complex: " + v.message;
        out.push_back(std::move(v));
    }
    const auto r = support_union(f.source, f.middle, f.target);
    for (int i = r.lo; i <= r.hi; ++i) {
        const auto tx = f.source.transition(i);
        const auto tz = f.middle.transition(i);
        const auto ty = f.target.transition(i);
        const std::size_t before = out.size();
        detail::check_mor_v(inst, out, i, "back leg", f.back_at(i), f.middle.object(i), f.source.object(i));
        detail::check_mor_h(inst, out, i, "front leg", f.front_at(i), f.middle.object(i), f.target.object(i));
        detail::check_mor_v(inst, out, i, "transition back leg", f.trans_back_at(i), tz.bar, tx.bar);
        detail::check_mor_h(inst, out, i, "transition front leg", f.trans_front_at(i), tz.bar, ty.bar);
        if (out.size() != before) continue;
        if (!inst.equal_v(inst.compose_v(tz.upper, f.back_at(i)), inst.compose_v(f.trans_back_at(i), tx.upper)))
            out.push_back({i, "upper-left square does not commute"});
        detail::require_pseudo(inst, out, i, "upper-right square (Zbar_i = Xbar_i meet Z_{i-1})", tz.lower,
                               f.trans_back_at(i), tx.lower, f.back_at(i - 1));
        detail::require_pseudo(inst, out, i, "lower-left square (Zbar_i = Z_i meet Ybar_i)", f.trans_front_at(i),
                               tz.upper, f.front_at(i), ty.upper);
        if (!inst.equal_h(inst.compose_h(tz.lower, f.front_at(i - 1)), inst.compose_h(f.trans_front_at(i), ty.lower)))
            out.push_back({i, "lower-right square does not commute"});
    }
    detail::sort_violations(out);
    return out;
}

template <AcgwInstance I>
std::vector<Violation> validate_ses(const ChainSES<I>& s);

// ---------------------------------------------------------------------------
// conversions

template <AcgwInstance I>
ChainComplex<I> zero_complex(const I& inst) {
    return ChainComplex<I>{inst, 0, {}, {}};
}

template <AcgwInstance I>
HorChainMor<I> identity_hor(const ChainComplex<I>& x) {
    HorChainMor<I> f{x, x, {x.lo, {}}, {x.lo, {}}};
    for (int i = x.lo; i <= x.hi(); ++i) {
        f.level.items.push_back(x.inst.id_h(x.object(i)));
        f.trans.items.push_back(x.inst.id_h(x.transition(i).bar));
    }
    return f;
}

template <AcgwInstance I>
VerChainMor<I> identity_ver(const ChainComplex<I>& x) {
    VerChainMor<I> f{x, x, {x.lo, {}}, {x.lo, {}}};
    for (int i = x.lo; i <= x.hi(); ++i) {
        f.level.items.push_back(x.inst.id_v(x.object(i)));
        f.trans.items.push_back(x.inst.id_v(x.transition(i).bar));
    }
    return f;
}

/// A horizontal morphism X >-> Y as the chain map X <-| X >-> Y.
template <AcgwInstance I>
ChainMap<I> to_chain_map(const HorChainMor<I>& f) {
    const I& inst = f.source.inst;
    const auto r = support_union(f.source, f.target);
    ChainMap<I> m{f.source, f.source, f.target, {r.lo, {}}, {r.lo, {}}, {r.lo, {}}, {r.lo, {}}};
    for (int i = r.lo; i <= r.hi; ++i) {
        m.back.items.push_back(inst.id_v(f.source.object(i)));
        m.front.items.push_back(f.level_at(i));
        m.trans_back.items.push_back(inst.id_v(f.source.transition(i).bar));
        m.trans_front.items.push_back(f.trans_at(i));
    }
    return m;
}

/// A vertical morphism Z -|> Y as the chain map Y <-| Z >-> Z.
template <AcgwInstance I>
ChainMap<I> to_chain_map(const VerChainMor<I>& g) {
    const I& inst = g.source.inst;
    const auto r = support_union(g.source, g.target);
    ChainMap<I> m{g.target, g.source, g.source, {r.lo, {}}, {r.lo, {}}, {r.lo, {}}, {r.lo, {}}};
    for (int i = r.lo; i <= r.hi; ++i) {
        m.back.items.push_back(g.level_at(i));
        m.front.items.push_back(inst.id_h(g.source.object(i)));
        m.trans_back.items.push_back(g.trans_at(i));
        m.trans_front.items.push_back(inst.id_h(g.source.transition(i).bar));
    }
    return m;
}

template <AcgwInstance I>
ChainMap<I> identity_map(const ChainComplex<I>& x) {
    return to_chain_map(identity_hor(x));
}

/// The two legs of a chain map: middle -|> source and middle >-> target.
template <AcgwInstance I>
std::pair<VerChainMor<I>, HorChainMor<I>> split(const ChainMap<I>& f) {
    const auto r = support_union(f.source, f.middle, f.target);
    VerChainMor<I> v{f.middle, f.source, {r.lo, {}}, {r.lo, {}}};
    HorChainMor<I> h{f.middle, f.target, {r.lo, {}}, {r.lo, {}}};
    for (int i = r.lo; i <= r.hi; ++i) {
        v.level.items.push_back(f.back_at(i));
        v.trans.items.push_back(f.trans_back_at(i));
        h.level.items.push_back(f.front_at(i));
        h.trans.items.push_back(f.trans_front_at(i));
    }
    return {std::move(v), std::move(h)};
}

/// Reassemble source <-| middle >-> target from its legs.
template <AcgwInstance I>
ChainMap<I> join(const VerChainMor<I>& v, const HorChainMor<I>& h) {
    const auto r = support_union(v.target, v.source, h.target);
    ChainMap<I> m{v.target, v.source, h.target, {r.lo, {}}, {r.lo, {}}, {r.lo, {}}, {r.lo, {}}};
    for (int i = r.lo; i <= r.hi; ++i) {
        m.back.items.push_back(v.level_at(i));
        m.front.items.push_back(h.level_at(i));
        m.trans_back.items.push_back(v.trans_at(i));
        m.trans_front.items.push_back(h.trans_at(i));
    }
    return m;
}

/// Whether two chain maps with the same endpoints agree as spans at every degree.
template <AcgwInstance I>
bool chain_maps_equivalent(const ChainMap<I>& f, const ChainMap<I>& g) {
    const I& inst = f.inst();
    const auto r = support_union(f.source, f.target, g.source, g.target);
    for (int i = r.lo; i <= r.hi; ++i)
        if (!span_equiv(inst, f.at(i), g.at(i))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// constructions

namespace detail {

template <class T>
T expect(std::optional<T> v, const char* what) {
    if (!v) throw InternalError(std::string("construction failed: ") + what);
    return std::move(*v);
}

template <AcgwInstance I>
ChainComplex<I> complex_from_levels(const I& inst, int lo, int hi, std::vector<typename I::Obj> objects,
                                    std::vector<Transition<I>> transitions_from_lo) {
    // transitions_from_lo[k] is the transition at degree lo + k; the one at lo must be zero.
    ChainComplex<I> c{inst, lo, std::move(objects), {}};
    for (int i = lo + 1; i <= hi; ++i) c.transitions.push_back(std::move(transitions_from_lo[i - lo]));
    return c;
}

}  // namespace detail

/// g . f for f: X -> Y (via Z) and g: Y -> W (via Z'), levelwise flat composition.
template <AcgwInstance I>
ChainMap<I> compose_chain_maps(const ChainMap<I>& f, const ChainMap<I>& g) {
    const I& inst = f.inst();
    const auto r = support_union(f.source, f.target, g.source, g.target);
    for (int i = r.lo; i <= r.hi; ++i)
        if (!inst.same_object(f.target.object(i), g.source.object(i)))
            throw PreconditionError("compose_chain_maps: target and source differ at degree " + std::to_string(i));

    std::vector<typename I::Obj> mids;
    std::vector<typename I::Ver> mid_to_z;    // P_i -|> Z_i
    std::vector<typename I::Hor> mid_to_zp;   // P_i >-> Z'_i
    std::vector<typename I::Obj> bars;
    std::vector<typename I::Ver> bar_to_zbar;   // Pbar_i -|> Zbar_i
    std::vector<typename I::Hor> bar_to_zpbar;  // Pbar_i >-> Zbar'_i
    ChainMap<I> out{f.source, {}, g.target, {r.lo, {}}, {r.lo, {}}, {r.lo, {}}, {r.lo, {}}};
    for (int i = r.lo; i <= r.hi; ++i) {
        auto pb = inst.mixed_pullback(f.front_at(i), g.back_at(i));
        auto tpb = inst.mixed_pullback(f.trans_front_at(i), g.trans_back_at(i));
        out.back.items.push_back(inst.compose_v(pb.to_a, f.back_at(i)));
        out.front.items.push_back(inst.compose_h(pb.to_b, g.front_at(i)));
        out.trans_back.items.push_back(inst.compose_v(tpb.to_a, f.trans_back_at(i)));
        out.trans_front.items.push_back(inst.compose_h(tpb.to_b, g.trans_front_at(i)));
        mids.push_back(pb.corner);
        mid_to_z.push_back(pb.to_a);
        mid_to_zp.push_back(pb.to_b);
        bars.push_back(tpb.corner);
        bar_to_zbar.push_back(tpb.to_a);
        bar_to_zpbar.push_back(tpb.to_b);
    }
    std::vector<Transition<I>> trans;
    for (int i = r.lo; i <= r.hi; ++i) {
        const std::size_t k = static_cast<std::size_t>(i - r.lo);
        if (i == r.lo) {
            trans.push_back({inst.zero(), inst.initial_v(mids[k]), inst.initial_h(inst.zero())});
            continue;
        }
        const auto upper = detail::expect(
            inst.factor_v(inst.compose_v(bar_to_zbar[k], f.middle.transition(i).upper), mid_to_z[k]),
            "middle transition upper leg");
        const auto lower = detail::expect(
            inst.factor_h(inst.compose_h(bar_to_zpbar[k], g.middle.transition(i).lower), mid_to_zp[k - 1]),
            "middle transition lower leg");
        trans.push_back({bars[k], upper, lower});
    }
    if (!r.empty()) out.middle = detail::complex_from_levels(inst, r.lo, r.hi, std::move(mids), std::move(trans));
    else out.middle = zero_complex(inst);
    return out;
}

/// The cokernel Y / X of a horizontal morphism, with its vertical inclusion into Y.
template <AcgwInstance I>
VerChainMor<I> coker_hor(const HorChainMor<I>& f) {
    const I& inst = f.source.inst;
    const auto& y = f.target;
    const auto r = support_union(f.source, y);
    if (r.empty()) return VerChainMor<I>{zero_complex(inst), y, {0, {}}, {0, {}}};
    std::vector<typename I::Obj> objs;
    std::vector<typename I::Ver> q;  // Z_i -|> Y_i
    for (int i = r.lo; i <= r.hi; ++i) {
        q.push_back(inst.complement_h(f.level_at(i)));
        objs.push_back(q.back().source);
    }
    std::vector<Transition<I>> trans;
    std::vector<typename I::Ver> trans_map;
    for (int i = r.lo; i <= r.hi; ++i) {
        const std::size_t k = static_cast<std::size_t>(i - r.lo);
        const auto ty = y.transition(i);
        const typename I::Ver below = i == r.lo ? inst.id_v(inst.zero()) : q[k - 1];
        auto pb = inst.mixed_pullback(ty.lower, below);  // Zbar_i -|> Ybar_i, Zbar_i >-> Z_{i-1}
        const auto upper = detail::expect(inst.factor_v(inst.compose_v(pb.to_a, ty.upper), q[k]),
                                          "cokernel transition upper leg");
        trans.push_back({pb.corner, upper, pb.to_b});
        trans_map.push_back(pb.to_a);
    }
    VerChainMor<I> out{detail::complex_from_levels(inst, r.lo, r.hi, std::move(objs), std::move(trans)), y,
                       {r.lo, std::move(q)}, {r.lo, std::move(trans_map)}};
    return out;
}

/// The kernel Y \ Z of a vertical morphism, with its horizontal inclusion into Y.
template <AcgwInstance I>
HorChainMor<I> ker_ver(const VerChainMor<I>& g) {
    const I& inst = g.source.inst;
    const auto& y = g.target;
    const auto r = support_union(g.source, y);
    if (r.empty()) return HorChainMor<I>{zero_complex(inst), y, {0, {}}, {0, {}}};
    std::vector<typename I::Obj> objs;
    std::vector<typename I::Hor> k;  // X_i >-> Y_i
    for (int i = r.lo; i <= r.hi; ++i) {
        k.push_back(inst.complement_v(g.level_at(i)));
        objs.push_back(k.back().source);
    }
    std::vector<Transition<I>> trans;
    std::vector<typename I::Hor> trans_map;
    for (int i = r.lo; i <= r.hi; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i - r.lo);
        const auto ty = y.transition(i);
        auto pb = inst.mixed_pullback(k[idx], ty.upper);  // Xbar_i -|> X_i, Xbar_i >-> Ybar_i
        typename I::Hor lower = inst.initial_h(inst.zero());
        if (i == r.lo) {
            if (!inst.is_zero(pb.corner)) throw InternalError("kernel transition below the support");
        } else {
            lower = detail::expect(inst.factor_h(inst.compose_h(pb.to_b, ty.lower), k[idx - 1]),
                                   "kernel transition lower leg");
        }
        trans.push_back({pb.corner, pb.to_a, lower});
        trans_map.push_back(pb.to_b);
    }
    HorChainMor<I> out{detail::complex_from_levels(inst, r.lo, r.hi, std::move(objs), std::move(trans)), y,
                       {r.lo, std::move(k)}, {r.lo, std::move(trans_map)}};
    return out;
}

template <AcgwInstance I>
ChainSES<I> ses_of_hor(const HorChainMor<I>& f) {
    return {f, coker_hor(f)};
}

template <AcgwInstance I>
ChainSES<I> ses_of_ver(const VerChainMor<I>& g) {
    return {ker_ver(g), g};
}

template <AcgwInstance I>
std::vector<Violation> validate_ses(const ChainSES<I>& s) {
    const I& inst = s.hor.source.inst;
    std::vector<Violation> out = validate_hor(s.hor);
    for (auto v : validate_ver(s.ver)) out.push_back(std::move(v));
    if (!out.empty()) return out;
    const auto r = support_union(s.hor.source, s.hor.target, s.ver.source, s.ver.target);
    for (int i = r.lo; i <= r.hi; ++i)
        if (!inst.same_object(s.hor.target.object(i), s.ver.target.object(i)))
            out.push_back({i, "the two morphisms have different targets"});
    if (!out.empty()) return out;
    const auto c = coker_hor(s.hor);
    for (int i = r.lo; i <= r.hi; ++i) {
        if (!inst.same_image_v(c.level_at(i), s.ver.level_at(i)))
            out.push_back({i, "vertical morphism is not the complement of the horizontal one"});
        else if (!inst.same_image_v(c.trans_at(i), s.ver.trans_at(i)))
            out.push_back({i, "transition of the complement does not match"});
    }
    detail::sort_violations(out);
    return out;
}

/// A >-> B <-| C as the exact complex A = A >-> B <-| C = C in degrees 3, 2, 1.
template <AcgwInstance I>
ChainComplex<I> ses_from_injection(const I& inst, const typename I::Hor& m) {
    if (auto e = inst.check_h(m)) throw ValidationError("ses_from_injection: " + *e);
    const auto c = inst.complement_h(m);
    ChainComplex<I> x{inst, 1, {c.source, m.target, m.source}, {}};
    x.transitions.push_back({c.source, c, inst.id_h(c.source)});
    x.transitions.push_back({m.source, inst.id_v(m.source), m});
    return x;
}

}  // namespace acgw
