#include "acgw/finset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace acgw {

std::string to_string(SquareClass c) {
    switch (c) {
        case SquareClass::not_a_square: return "not-a-square";
        case SquareClass::commuting: return "commuting";
        case SquareClass::pseudo_commutative: return "pseudo-commutative";
        case SquareClass::cartesian: return "cartesian";
    }
    return "?";
}

FinSetObj::FinSetObj(std::vector<Element> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    auto dup = std::adjacent_find(elements_.begin(), elements_.end());
    if (dup != elements_.end()) throw ValidationError("duplicate element '" + *dup + "'");
}

std::optional<std::size_t> FinSetObj::index_of(const Element& e) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
    if (it == elements_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

std::string describe_set(const FinSetObj& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
    os << '}';
    return os.str();
}

FinSetObj set_union(const FinSetObj& a, const FinSetObj& b) {
    std::vector<Element> out;
    std::set_union(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                   std::back_inserter(out));
    return FinSetObj(std::move(out));
}

FinSetObj set_intersection(const FinSetObj& a, const FinSetObj& b) {
    std::vector<Element> out;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                          std::back_inserter(out));
    return FinSetObj(std::move(out));
}

FinSetObj set_difference(const FinSetObj& a, const FinSetObj& b) {
    std::vector<Element> out;
    std::set_difference(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
    return FinSetObj(std::move(out));
}

const Element& InjectionData::apply(const Element& e) const {
    auto i = source.index_of(e);
    if (!i) throw PreconditionError("element '" + e + "' is not in the source " + describe_set(source));
    return target[map[*i]];
}

FinSetObj InjectionData::image() const {
    std::vector<Element> out;
    out.reserve(map.size());
    for (auto j : map) out.push_back(target[j]);
    return FinSetObj(std::move(out));
}

std::optional<Element> InjectionData::preimage(const Element& e) const {
    auto j = target.index_of(e);
    if (!j) return std::nullopt;
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] == *j) return source[i];
    return std::nullopt;
}

std::optional<std::string> check_injection(const InjectionData& f) {
    if (f.map.size() != f.source.size())
        return "map has " + std::to_string(f.map.size()) + " entries for a source of size " +
               std::to_string(f.source.size());
    std::vector<bool> hit(f.target.size(), false);
    for (std::size_t i = 0; i < f.map.size(); ++i) {
        if (f.map[i] >= f.target.size()) return "element '" + f.source[i] + "' maps outside the target";
        if (hit[f.map[i]]) return "not injective: two elements map to '" + f.target[f.map[i]] + "'";
        hit[f.map[i]] = true;
    }
    return std::nullopt;
}

InjectionData inclusion(const FinSetObj& sub, const FinSetObj& super) {
    InjectionData d{sub, super, {}};
    d.map.reserve(sub.size());
    for (const auto& e : sub.elements()) {
        auto j = super.index_of(e);
        if (!j) throw PreconditionError("'" + e + "' of " + describe_set(sub) + " is not in " + describe_set(super));
        d.map.push_back(*j);
    }
    return d;
}

namespace {

InjectionData compose_data(const InjectionData& f, const InjectionData& g) {
    if (!(f.target == g.source))
        throw PreconditionError("cannot compose: " + describe_set(f.target) + " vs " + describe_set(g.source));
    InjectionData d{f.source, g.target, {}};
    d.map.reserve(f.map.size());
    for (auto j : f.map) d.map.push_back(g.map[j]);
    return d;
}

InjectionData complement_data(const InjectionData& m) {
    FinSetObj rest = set_difference(m.target, m.image());
    return inclusion(rest, m.target);
}

std::optional<InjectionData> factor_data(const InjectionData& f, const InjectionData& g) {
    if (!(f.target == g.target)) throw PreconditionError("factor: morphisms have different targets");
    std::vector<std::optional<std::size_t>> back(g.target.size());
    for (std::size_t i = 0; i < g.map.size(); ++i) back[g.map[i]] = i;
    InjectionData d{f.source, g.source, {}};
    for (auto j : f.map) {
        if (!back[j]) return std::nullopt;
        d.map.push_back(*back[j]);
    }
    return d;
}

InjectionData inverse_data(const InjectionData& h) {
    if (h.source.size() != h.target.size()) throw PreconditionError("not an isomorphism");
    InjectionData d{h.target, h.source, std::vector<std::size_t>(h.map.size())};
    for (std::size_t i = 0; i < h.map.size(); ++i) d.map[h.map[i]] = i;
    return d;
}

}  // namespace

std::optional<std::string> FinSetInstance::check_object(const Obj& a) const {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (!(a[i - 1] < a[i])) return std::string("elements not strictly sorted");
    return std::nullopt;
}

SetHor FinSetInstance::id_h(const Obj& a) const { return SetHor(inclusion(a, a)); }
SetVer FinSetInstance::id_v(const Obj& a) const { return SetVer(inclusion(a, a)); }

SetHor FinSetInstance::compose_h(const Hor& f, const Hor& g) const { return SetHor(compose_data(f, g)); }
SetVer FinSetInstance::compose_v(const Ver& f, const Ver& g) const { return SetVer(compose_data(f, g)); }

SetVer FinSetInstance::complement_h(const Hor& m) const {
    if (auto e = check_injection(m)) throw ValidationError("complement_h: " + *e);
    return SetVer(complement_data(m));
}

SetHor FinSetInstance::complement_v(const Ver& e) const {
    if (auto err = check_injection(e)) throw ValidationError("complement_v: " + *err);
    return SetHor(complement_data(e));
}

FinSetInstance::Pullback FinSetInstance::mixed_pullback(const Hor& m, const Ver& e) const {
    if (!(m.target == e.target))
        throw PreconditionError("mixed_pullback: targets differ: " + describe_set(m.target) + " vs " +
                                describe_set(e.target));
    FinSetObj corner = set_intersection(m.image(), e.image());
    auto to_a = factor_data(inclusion(corner, m.target), m);
    auto to_b = factor_data(inclusion(corner, e.target), e);
    return {corner, SetVer(std::move(*to_a)), SetHor(std::move(*to_b))};
}

std::optional<SetHor> FinSetInstance::factor_h(const Hor& f, const Hor& g) const {
    auto d = factor_data(f, g);
    if (!d) return std::nullopt;
    return SetHor(std::move(*d));
}

std::optional<SetVer> FinSetInstance::factor_v(const Ver& f, const Ver& g) const {
    auto d = factor_data(f, g);
    if (!d) return std::nullopt;
    return SetVer(std::move(*d));
}

bool FinSetInstance::same_image_h(const Hor& a, const Hor& b) const {
    return a.target == b.target && a.image() == b.image();
}

bool FinSetInstance::same_image_v(const Ver& a, const Ver& b) const {
    return a.target == b.target && a.image() == b.image();
}

SetVer FinSetInstance::flip_h(const Hor& h) const { return SetVer(inverse_data(h)); }
SetHor FinSetInstance::flip_v(const Ver& v) const { return SetHor(inverse_data(v)); }
SetHor FinSetInstance::invert_h(const Hor& h) const { return SetHor(inverse_data(h)); }

std::optional<SetHor> FinSetInstance::subquotient_iso(const Hor& h1, const Ver& q, const Ver& e2,
                                                      const Hor& k) const {
    const auto first = compose_data(h1, q);
    const auto second = compose_data(e2, k);
    if (!(first.target == second.target) || !(first.image() == second.image())) return std::nullopt;
    auto d = factor_data(first, second);
    return SetHor(std::move(*d));
}

SquareClass classify_square(const InjectionData& top, const InjectionData& left, const InjectionData& bottom,
                            const InjectionData& right) {
    if (!(top.source == left.source) || !(left.target == bottom.source) || !(top.target == right.source) ||
        !(bottom.target == right.target))
        throw PreconditionError("square boundary objects do not match");
    if (!(compose_data(left, bottom) == compose_data(top, right))) return SquareClass::not_a_square;
    const FinSetObj corner = compose_data(top, right).image();
    if (corner == set_intersection(bottom.image(), right.image())) return SquareClass::pseudo_commutative;
    return SquareClass::commuting;
}

SquareClass FinSetInstance::classify_mixed(const Hor& top, const Ver& left, const Hor& bottom,
                                           const Ver& right) const {
    return classify_square(top, left, bottom, right);
}

PartialInjection partial_injection(const FlatMor<FinSetInstance>& f) {
    PartialInjection out;
    out.reserve(f.middle.size());
    for (std::size_t i = 0; i < f.middle.size(); ++i)
        out.emplace_back(f.back.target[f.back.map[i]], f.front.target[f.front.map[i]]);
    std::sort(out.begin(), out.end());
    return out;
}

PartialInjection FinSetInstance::flat_key(const FlatMor<FinSetInstance>& f) const {
    return partial_injection(f);
}

PointedMap to_pointed(const FlatMor<FinSetInstance>& f) {
    PointedMap g{f.source, f.target, std::vector<std::optional<std::size_t>>(f.source.size())};
    for (std::size_t i = 0; i < f.middle.size(); ++i) g.values[f.back.map[i]] = f.front.map[i];
    return g;
}

FlatMor<FinSetInstance> from_pointed(const PointedMap& g) {
    if (g.values.size() != g.source.size()) throw ValidationError("pointed map has the wrong number of values");
    std::vector<Element> kept;
    std::map<std::size_t, Element> fiber;
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        if (!g.values[i]) continue;
        if (*g.values[i] >= g.target.size()) throw ValidationError("pointed map value outside the target");
        auto [it, fresh] = fiber.emplace(*g.values[i], g.source[i]);
        if (!fresh)
            throw ValidationError("not injective away from the basepoint: '" + it->second + "' and '" +
                                  g.source[i] + "' both map to '" + g.target[*g.values[i]] + "'");
        kept.push_back(g.source[i]);
    }
    FinSetObj middle(std::move(kept));
    SetVer back(inclusion(middle, g.source));
    SetHor front(middle, g.target, {});
    for (const auto& e : middle.elements()) front.map.push_back(*g.values[*g.source.index_of(e)]);
    return FlatMor<FinSetInstance>{g.source, middle, g.target, std::move(back), std::move(front)};
}

PointedMap compose_pointed(const PointedMap& f, const PointedMap& g) {
    if (!(f.target == g.source)) throw PreconditionError("compose_pointed: object mismatch");
    PointedMap out{f.source, g.target, std::vector<std::optional<std::size_t>>(f.source.size())};
    for (std::size_t i = 0; i < f.values.size(); ++i)
        if (f.values[i]) out.values[i] = g.values[*f.values[i]];
    return out;
}

}  // namespace acgw
