#pragma once

// Generic interface to an ACGW category and the flattened span category built on it.
//
// An instance is a small value type (it may carry parameters such as the field
// characteristic) whose const member functions implement the double-category
// operations. Horizontal morphisms are written A >-> B, vertical ones A -|> B.

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>

#include "acgw/errors.hpp"

namespace acgw {

enum class SquareClass {
    not_a_square,
    commuting,
    pseudo_commutative,
    cartesian,
};

std::string to_string(SquareClass c);

template <class I>
concept AcgwInstance = requires(const I& inst, const typename I::Obj& a, const typename I::Hor& h,
                                const typename I::Ver& v) {
    typename I::Obj;
    typename I::Hor;
    typename I::Ver;
    typename I::Pullback;  // { Obj corner; Ver to_a; Hor to_b; }
    typename I::FlatKey;   // equality-comparable normal form of a span class

    { inst.zero() } -> std::same_as<typename I::Obj>;
    { inst.is_zero(a) } -> std::same_as<bool>;
    { inst.same_object(a, a) } -> std::same_as<bool>;
    { inst.size(a) } -> std::convertible_to<std::size_t>;
    { inst.describe(a) } -> std::convertible_to<std::string>;
    { inst.check_object(a) } -> std::same_as<std::optional<std::string>>;

    { h.source } -> std::convertible_to<typename I::Obj>;
    { h.target } -> std::convertible_to<typename I::Obj>;
    { v.source } -> std::convertible_to<typename I::Obj>;
    { v.target } -> std::convertible_to<typename I::Obj>;

    { inst.check_h(h) } -> std::same_as<std::optional<std::string>>;
    { inst.check_v(v) } -> std::same_as<std::optional<std::string>>;
    { inst.id_h(a) } -> std::same_as<typename I::Hor>;
    { inst.id_v(a) } -> std::same_as<typename I::Ver>;
    { inst.initial_h(a) } -> std::same_as<typename I::Hor>;
    { inst.initial_v(a) } -> std::same_as<typename I::Ver>;
    { inst.compose_h(h, h) } -> std::same_as<typename I::Hor>;
    { inst.compose_v(v, v) } -> std::same_as<typename I::Ver>;

    // c and k
    { inst.complement_h(h) } -> std::same_as<typename I::Ver>;
    { inst.complement_v(v) } -> std::same_as<typename I::Hor>;
    // A >-> C <-| B  completed to the pseudo-commutative square with corner A (/)_C B
    { inst.mixed_pullback(h, v) } -> std::same_as<typename I::Pullback>;

    // f = g . x for some x, when the image of f lies in the image of g
    { inst.factor_h(h, h) } -> std::same_as<std::optional<typename I::Hor>>;
    { inst.factor_v(v, v) } -> std::same_as<std::optional<typename I::Ver>>;

    { inst.is_iso_h(h) } -> std::same_as<bool>;
    { inst.is_iso_v(v) } -> std::same_as<bool>;
    { inst.equal_h(h, h) } -> std::same_as<bool>;
    { inst.equal_v(v, v) } -> std::same_as<bool>;
    { inst.same_image_h(h, h) } -> std::same_as<bool>;
    { inst.same_image_v(v, v) } -> std::same_as<bool>;

    // An isomorphism viewed in the other direction class, representing the same
    // flat morphism: flip_h(A >-> B) = B -|> A, flip_v(A -|> B) = B >-> A.
    { inst.flip_h(h) } -> std::same_as<typename I::Ver>;
    { inst.flip_v(v) } -> std::same_as<typename I::Hor>;
    { inst.invert_h(h) } -> std::same_as<typename I::Hor>;

    // H1 >-> Q -|> Y  versus  H2 -|> K >-> Y: the isomorphism H1 >-> H2 when both
    // present the same subquotient of Y.
    { inst.subquotient_iso(h, v, v, h) } -> std::same_as<std::optional<typename I::Hor>>;

    // Non-canonical splittings: a horizontal H >-> K through which v: H -|> K is
    // the identity on H, and a vertical K -|> X left inverse to h: K >-> X.
    { inst.section_v(v) } -> std::same_as<typename I::Hor>;
    { inst.retraction_h(h) } -> std::same_as<typename I::Ver>;

    // Square P >-> B (top), P -|> A (left), A >-> C (bottom), B -|> C (right).
    { inst.classify_mixed(h, v, h, v) } -> std::same_as<SquareClass>;
};

/// A morphism of the flattened category: source <-| middle >-> target.
template <class I>
struct FlatMor {
    typename I::Obj source;
    typename I::Obj middle;
    typename I::Obj target;
    typename I::Ver back;   // middle -|> source
    typename I::Hor front;  // middle >-> target
};

template <AcgwInstance I>
FlatMor<I> make_flat(const I&, typename I::Ver back, typename I::Hor front) {
    if (!(back.source == front.source))
        throw PreconditionError("span legs must share their middle object");
    return FlatMor<I>{back.target, back.source, front.target, std::move(back), std::move(front)};
}

template <AcgwInstance I>
FlatMor<I> identity_flat(const I& inst, const typename I::Obj& a) {
    return make_flat(inst, inst.id_v(a), inst.id_h(a));
}

template <AcgwInstance I>
FlatMor<I> zero_flat(const I& inst, const typename I::Obj& a, const typename I::Obj& b) {
    return make_flat(inst, inst.initial_v(a), inst.initial_h(b));
}

/// Flat morphism of a horizontal morphism A >-> B (the span A <-| A >-> B).
template <AcgwInstance I>
FlatMor<I> flat_of_h(const I& inst, const typename I::Hor& h) {
    return make_flat(inst, inst.id_v(h.source), h);
}

/// Flat morphism of a vertical morphism A -|> B, read as a morphism B -> A.
template <AcgwInstance I>
FlatMor<I> flat_of_v(const I& inst, const typename I::Ver& v) {
    return make_flat(inst, v, inst.id_h(v.source));
}

template <AcgwInstance I>
bool is_zero_flat(const I& inst, const FlatMor<I>& f) {
    return inst.is_zero(f.middle);
}

template <AcgwInstance I>
std::optional<std::string> check_flat(const I& inst, const FlatMor<I>& f) {
    if (auto e = inst.check_v(f.back)) return "back leg: " + *e;
    if (auto e = inst.check_h(f.front)) return "front leg: " + *e;
    if (!inst.same_object(f.back.source, f.middle) || !inst.same_object(f.front.source, f.middle))
        return std::string("legs do not start at the middle object");
    if (!inst.same_object(f.back.target, f.source)) return std::string("back leg does not end at the source");
    if (!inst.same_object(f.front.target, f.target)) return std::string("front leg does not end at the target");
    return std::nullopt;
}

/// Composite g . f: the middle is the mixed pullback of f's front leg against g's back leg.
template <AcgwInstance I>
FlatMor<I> compose_flat(const I& inst, const FlatMor<I>& f, const FlatMor<I>& g) {
    if (!inst.same_object(f.target, g.source))
        throw PreconditionError("compose_flat: target " + inst.describe(f.target) + " != source " +
                                inst.describe(g.source));
    auto pb = inst.mixed_pullback(f.front, g.back);
    return FlatMor<I>{f.source, pb.corner, g.target, inst.compose_v(pb.to_a, f.back),
                      inst.compose_h(pb.to_b, g.front)};
}

/// Whether two spans present the same morphism (an iso of middles commuting with both legs).
template <AcgwInstance I>
bool span_equiv(const I& inst, const FlatMor<I>& f, const FlatMor<I>& g) {
    if (!inst.same_object(f.source, g.source) || !inst.same_object(f.target, g.target)) return false;
    return inst.flat_key(f) == inst.flat_key(g);
}

/// Both legs invertible.
template <AcgwInstance I>
bool is_iso_flat(const I& inst, const FlatMor<I>& f) {
    return inst.is_iso_v(f.back) && inst.is_iso_h(f.front);
}

}  // namespace acgw
