#include "acgw/set_closed.hpp"

#include <algorithm>

namespace acgw {

namespace {

bool in_image(const InjectionData& f, const Element& e) {
    auto j = f.target.index_of(e);
    if (!j) return false;
    return std::find(f.map.begin(), f.map.end(), *j) != f.map.end();
}

FinSetObj filter(const FinSetObj& s, auto keep) {
    std::vector<Element> out;
    for (const auto& e : s.elements())
        if (keep(e)) out.push_back(e);
    return FinSetObj(std::move(out));
}

}  // namespace

FinSetObj image_of(std::initializer_list<const InjectionData*> chain) {
    if (chain.size() == 0) throw PreconditionError("image_of: empty chain");
    auto it = chain.begin();
    std::vector<std::size_t> idx = (*it)->map;
    const InjectionData* last = *it;
    for (++it; it != chain.end(); ++it) {
        if (!((*it)->source == last->target)) throw PreconditionError("image_of: chain does not compose");
        for (auto& k : idx) k = (*it)->map[k];
        last = *it;
    }
    std::vector<Element> out;
    for (auto k : idx) out.push_back(last->target[k]);
    return FinSetObj(std::move(out));
}

FinSetObj homology_closed(const SetComplex& x, int i) {
    const auto up = x.transition(i + 1);
    const auto down = x.transition(i);
    return set_difference(x.object(i), set_union(up.lower.image(), down.upper.image()));
}

std::vector<LevelSets> coker_closed(const SetHorChainMor& f) {
    const auto r = support_union(f.source, f.target);
    std::vector<LevelSets> out;
    for (int i = r.lo; i <= r.hi; ++i) {
        const auto ty = f.target.transition(i);
        const auto xi = f.level_at(i).image();
        const auto xbar = f.trans_at(i).image();
        const auto below = f.level_at(i - 1);
        out.push_back({i, set_difference(f.target.object(i), xi), filter(ty.bar, [&](const Element& t) {
                           return !xbar.contains(t) && !in_image(below, ty.lower.apply(t));
                       })});
    }
    return out;
}

std::vector<LevelSets> ker_closed(const SetVerChainMor& g) {
    const auto r = support_union(g.source, g.target);
    std::vector<LevelSets> out;
    for (int i = r.lo; i <= r.hi; ++i) {
        const auto ty = g.target.transition(i);
        const auto zi = g.level_at(i).image();
        const auto zbar = g.trans_at(i).image();
        out.push_back({i, set_difference(g.target.object(i), zi), filter(ty.bar, [&](const Element& t) {
                           return !zbar.contains(t) && !zi.contains(ty.upper.apply(t));
                       })});
    }
    return out;
}

std::vector<LevelSets> level_sets(const SetVerChainMor& g) {
    const auto r = support_union(g.source, g.target);
    std::vector<LevelSets> out;
    for (int i = r.lo; i <= r.hi; ++i) out.push_back({i, g.level_at(i).image(), g.trans_at(i).image()});
    return out;
}

std::vector<LevelSets> level_sets(const SetHorChainMor& f) {
    const auto r = support_union(f.source, f.target);
    std::vector<LevelSets> out;
    for (int i = r.lo; i <= r.hi; ++i) out.push_back({i, f.level_at(i).image(), f.trans_at(i).image()});
    return out;
}

SetFlat h_on_map_closed(const SetChainMap& f, int i) {
    const auto hx = homology_closed(f.source, i);
    const auto hy = homology_closed(f.target, i);
    const auto back = f.back_at(i);
    const auto front = f.front_at(i);
    const auto xbar = f.source.transition(i).upper;
    const auto ybar_up = f.target.transition(i + 1).lower;
    const auto m = filter(f.middle.object(i), [&](const Element& z) {
        const auto& x = back.apply(z);
        const auto& y = front.apply(z);
        return !in_image(xbar, x) && !in_image(ybar_up, y) && hx.contains(x) && hy.contains(y);
    });
    SetVer b(m, hx, {});
    SetHor h(m, hy, {});
    for (const auto& z : m.elements()) {
        b.map.push_back(*hx.index_of(back.apply(z)));
        h.map.push_back(*hy.index_of(front.apply(z)));
    }
    return SetFlat{hx, m, hy, std::move(b), std::move(h)};
}

bool qiso_four_sets(const SetChainMap& f) {
    const auto r = support_union(f.source, f.middle, f.target);
    for (int i = r.lo; i <= r.hi; ++i) {
        const auto back = f.back_at(i);
        const auto front = f.front_at(i);
        const auto tx = f.source.transition(i), txu = f.source.transition(i + 1);
        const auto ty = f.target.transition(i), tyu = f.target.transition(i + 1);
        const auto tz = f.middle.transition(i), tzu = f.middle.transition(i + 1);
        const auto x_rest = set_difference(
            f.source.object(i), set_union(set_union(tx.upper.image(), txu.lower.image()), back.image()));
        const auto y_rest = set_difference(
            f.target.object(i), set_union(set_union(ty.upper.image(), tyu.lower.image()), front.image()));
        if (!x_rest.empty() || !y_rest.empty()) return false;
        const auto zi = f.middle.object(i);
        for (const auto& z : zi.elements()) {
            const bool in_ybar_up = in_image(tyu.lower, front.apply(z));
            const bool in_xbar = in_image(tx.upper, back.apply(z));
            if (in_ybar_up && !in_image(tzu.lower, z) && !in_xbar) return false;
            if (in_xbar && !in_image(tz.upper, z) && !in_ybar_up) return false;
        }
    }
    return true;
}

SnakeClosed snake_closed(const SnakeInput<FinSetInstance>& s) {
    const auto y = image_of({&s.y_b});
    const auto x = image_of({&s.x_y, &s.y_b});
    const auto z = image_of({&s.z_y, &s.y_b});
    const auto c = image_of({&s.c_b});
    const auto y2 = image_of({&s.y_b2});
    const auto z2 = image_of({&s.z_y, &s.y_b2});
    const auto a2 = image_of({&s.a2_b2});
    return {set_difference(c, set_difference(y, x)), set_difference(set_difference(y, x), z),
            set_difference(a2, set_difference(y2, z2))};
}

SnakeClosed snake_images(const SnakeInput<FinSetInstance>& s, const SnakeResult<FinSetInstance>& r) {
    return {image_of({&r.d_in_c, &s.c_b}), image_of({&r.w_in_q, &r.q_in_y, &s.y_b}),
            image_of({&r.d2_in_a2, &s.a2_b2})};
}

bool zigzag_disjoint_union(const ExactZigzag<FinSetInstance>& z) {
    const std::size_t n = z.objects.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (j == 0 && !z.exact_at_front) continue;
        if (j + 1 == n && !z.exact_at_back) continue;
        const FinSetObj in = j > 0 ? z.transitions[j - 1].lower.image() : FinSetObj{};
        const FinSetObj out = j + 1 < n ? z.transitions[j].upper.image() : FinSetObj{};
        if (!set_intersection(in, out).empty()) return false;
        if (!(set_union(in, out) == z.objects[j])) return false;
    }
    return true;
}

}  // namespace acgw
