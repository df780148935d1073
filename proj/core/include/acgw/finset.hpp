#pragma once

// The ACGW category of finite sets: injections in both directions, pullback
// squares as the pseudo-commutative squares. Every construction names its
// elements after elements of an input ambient set, so "unique up to unique
// isomorphism" results come out as literal subsets.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acgw/instance.hpp"

namespace acgw {

using Element = std::string;

/// A finite set of named elements, stored sorted.
class FinSetObj {
public:
    FinSetObj() = default;
    /// Sorts `elements`; throws ValidationError on duplicates.
    explicit FinSetObj(std::vector<Element> elements);

    const std::vector<Element>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    std::optional<std::size_t> index_of(const Element& e) const;
    bool contains(const Element& e) const { return index_of(e).has_value(); }
    const Element& operator[](std::size_t i) const { return elements_[i]; }

    friend bool operator==(const FinSetObj&, const FinSetObj&) = default;

private:
    std::vector<Element> elements_;
};

std::string describe_set(const FinSetObj& s);

FinSetObj set_union(const FinSetObj& a, const FinSetObj& b);
FinSetObj set_intersection(const FinSetObj& a, const FinSetObj& b);
FinSetObj set_difference(const FinSetObj& a, const FinSetObj& b);

/// Injective element map source -> target, as target indices.
struct InjectionData {
    FinSetObj source;
    FinSetObj target;
    std::vector<std::size_t> map;

    const Element& apply(const Element& e) const;
    /// Image as a subset of the target.
    FinSetObj image() const;
    /// Preimage of a target element, if any.
    std::optional<Element> preimage(const Element& e) const;

    friend bool operator==(const InjectionData&, const InjectionData&) = default;
};

std::optional<std::string> check_injection(const InjectionData& f);

/// Inclusion of `sub` into `super` by element name.
InjectionData inclusion(const FinSetObj& sub, const FinSetObj& super);

struct HorTag {};
struct VerTag {};

template <class Tag>
struct Injection : InjectionData {
    Injection() = default;
    explicit Injection(InjectionData d) : InjectionData(std::move(d)) {}
    Injection(FinSetObj s, FinSetObj t, std::vector<std::size_t> m)
        : InjectionData{std::move(s), std::move(t), std::move(m)} {}
    friend bool operator==(const Injection&, const Injection&) = default;
};

using SetHor = Injection<HorTag>;
using SetVer = Injection<VerTag>;

/// Partial injection source -> target as sorted (source element, target element) pairs.
using PartialInjection = std::vector<std::pair<Element, Element>>;

class FinSetInstance {
public:
    using Obj = FinSetObj;
    using Hor = SetHor;
    using Ver = SetVer;
    struct Pullback {
        FinSetObj corner;
        SetVer to_a;
        SetHor to_b;
    };
    using FlatKey = PartialInjection;

    Obj zero() const { return {}; }
    bool is_zero(const Obj& a) const { return a.empty(); }
    bool same_object(const Obj& a, const Obj& b) const { return a == b; }
    std::size_t size(const Obj& a) const { return a.size(); }
    std::string describe(const Obj& a) const { return describe_set(a); }
    std::optional<std::string> check_object(const Obj& a) const;

    std::optional<std::string> check_h(const Hor& h) const { return check_injection(h); }
    std::optional<std::string> check_v(const Ver& v) const { return check_injection(v); }

    Hor id_h(const Obj& a) const;
    Ver id_v(const Obj& a) const;
    Hor initial_h(const Obj& a) const { return Hor(Obj{}, a, {}); }
    Ver initial_v(const Obj& a) const { return Ver(Obj{}, a, {}); }
    Hor compose_h(const Hor& f, const Hor& g) const;
    Ver compose_v(const Ver& f, const Ver& g) const;

    Ver complement_h(const Hor& m) const;
    Hor complement_v(const Ver& e) const;
    Pullback mixed_pullback(const Hor& m, const Ver& e) const;

    std::optional<Hor> factor_h(const Hor& f, const Hor& g) const;
    std::optional<Ver> factor_v(const Ver& f, const Ver& g) const;

    bool is_iso_h(const Hor& h) const { return h.source.size() == h.target.size(); }
    bool is_iso_v(const Ver& v) const { return v.source.size() == v.target.size(); }
    bool equal_h(const Hor& a, const Hor& b) const { return a == b; }
    bool equal_v(const Ver& a, const Ver& b) const { return a == b; }
    bool same_image_h(const Hor& a, const Hor& b) const;
    bool same_image_v(const Ver& a, const Ver& b) const;

    Ver flip_h(const Hor& h) const;
    Hor flip_v(const Ver& v) const;
    Hor invert_h(const Hor& h) const;
    Hor section_v(const Ver& v) const { return Hor(InjectionData(v)); }
    Ver retraction_h(const Hor& h) const { return Ver(InjectionData(h)); }

    std::optional<Hor> subquotient_iso(const Hor& h1, const Ver& q, const Ver& e2, const Hor& k) const;

    SquareClass classify_mixed(const Hor& top, const Ver& left, const Hor& bottom, const Ver& right) const;

    FlatKey flat_key(const FlatMor<FinSetInstance>& f) const;

    friend bool operator==(const FinSetInstance&, const FinSetInstance&) = default;
};

static_assert(AcgwInstance<FinSetInstance>);

/// Square of plain injections top: P->B, left: P->A, bottom: A->C, right: B->C.
/// pseudo_commutative iff it commutes and P covers all of A ∩ B inside C.
SquareClass classify_square(const InjectionData& top, const InjectionData& left, const InjectionData& bottom,
                            const InjectionData& right);

/// A map A_+ -> B_+ of pointed sets; nullopt stands for the basepoint.
/// The basepoint of A_+ always goes to the basepoint of B_+.
struct PointedMap {
    FinSetObj source;
    FinSetObj target;
    std::vector<std::optional<std::size_t>> values;

    friend bool operator==(const PointedMap&, const PointedMap&) = default;
};

PointedMap to_pointed(const FlatMor<FinSetInstance>& f);
/// Throws ValidationError if g is not injective away from the basepoint.
FlatMor<FinSetInstance> from_pointed(const PointedMap& g);
PointedMap compose_pointed(const PointedMap& f, const PointedMap& g);

/// The partial injection presented by a span.
PartialInjection partial_injection(const FlatMor<FinSetInstance>& f);

}  // namespace acgw
