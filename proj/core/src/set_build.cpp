#include "acgw/set_build.hpp"

namespace acgw {

SetComplex named_complex(int lo, const std::vector<std::vector<Element>>& objects,
                         const std::vector<std::vector<Element>>& bars) {
    const std::size_t want = objects.empty() ? 0 : objects.size() - 1;
    if (bars.size() != want) throw PreconditionError("named_complex: wrong number of transitions");
    SetComplex x{FinSetInstance{}, lo, {}, {}};
    for (const auto& o : objects) x.objects.emplace_back(o);
    for (std::size_t k = 0; k < bars.size(); ++k) {
        FinSetObj bar(bars[k]);
        x.transitions.push_back({bar, SetVer(inclusion(bar, x.objects[k + 1])), SetHor(inclusion(bar, x.objects[k]))});
    }
    return x;
}

SetHorChainMor named_hor(const SetComplex& x, const SetComplex& y) {
    const auto r = support_union(x, y);
    SetHorChainMor f{x, y, {r.lo, {}}, {r.lo, {}}};
    for (int i = r.lo; i <= r.hi; ++i) {
        f.level.items.emplace_back(inclusion(x.object(i), y.object(i)));
        f.trans.items.emplace_back(inclusion(x.transition(i).bar, y.transition(i).bar));
    }
    return f;
}

SetVerChainMor named_ver(const SetComplex& z, const SetComplex& y) {
    const auto r = support_union(z, y);
    SetVerChainMor g{z, y, {r.lo, {}}, {r.lo, {}}};
    for (int i = r.lo; i <= r.hi; ++i) {
        g.level.items.emplace_back(inclusion(z.object(i), y.object(i)));
        g.trans.items.emplace_back(inclusion(z.transition(i).bar, y.transition(i).bar));
    }
    return g;
}

SetChainMap named_map(const SetComplex& source, const SetComplex& middle, const SetComplex& target) {
    return join(named_ver(middle, source), named_hor(middle, target));
}

}  // namespace acgw
