#pragma once

// Weak and strong snake lemma and the long exact sequence in homology.
//
// Snake input layout (rows left to right, columns top to bottom):
//
//     A  >->  B  <-|  C
//     ^|      ^|      ^|
//     X  >->  Y  <-|  Z
//     v       v       v
//     A' >->  B' <-|  C'
//
// with the top row and bottom row short exact. The output is the zigzag
// A\X, B\Y, C\Z, A'/X, B'/Y, C'/Z joined by the transitions
// A\X, D = C \ (Y/X), W = (Y/X) \ Z, D' = A' \ (Y\Z), C'/Z.

#include <array>
#include <string>
#include <vector>

#include "acgw/chains.hpp"
#include "acgw/homology.hpp"

namespace acgw {

template <AcgwInstance I>
struct SnakeInput {
    I inst{};
    typename I::Hor a_b;    // A >-> B
    typename I::Ver c_b;    // C -|> B
    typename I::Hor x_y;    // X >-> Y
    typename I::Ver z_y;    // Z -|> Y
    typename I::Hor a2_b2;  // A' >-> B'
    typename I::Ver c2_b2;  // C' -|> B'
    typename I::Ver x_a;    // X -|> A
    typename I::Hor x_a2;   // X >-> A'
    typename I::Ver y_b;
    typename I::Hor y_b2;
    typename I::Ver z_c;
    typename I::Hor z_c2;
};

/// Weak input plus the outer objects: Abar = A -|> A_outer and C'bar = C' >-> C'_outer.
template <AcgwInstance I>
struct StrongSnakeInput {
    SnakeInput<I> weak;
    typename I::Ver abar_a;  // A -|> A_outer
    typename I::Hor cbar_c;  // C' >-> C'_outer
};

/// A sequence of objects joined by flat transitions; O_j <-| T_j >-> O_{j+1}.
template <AcgwInstance I>
struct ExactZigzag {
    I inst{};
    std::vector<typename I::Obj> objects;
    std::vector<Transition<I>> transitions;  // upper: T_j -|> O_j, lower: T_j >-> O_{j+1}
    std::vector<std::string> labels;
    std::vector<std::string> transition_labels;
    bool exact_at_front = true;  // whether exactness is claimed at the first object
    bool exact_at_back = true;
};

template <AcgwInstance I>
struct SnakeResult {
    ExactZigzag<I> zigzag;
    std::array<typename I::Hor, 3> kernel_legs;    // O1 >-> A, O2 >-> B, O3 >-> C
    std::array<typename I::Ver, 3> cokernel_legs;  // O4 -|> A', O5 -|> B', O6 -|> C'
    typename I::Hor d_in_c;       // D >-> C
    typename I::Hor w_in_q;       // W >-> Y/X
    typename I::Ver q_in_y;       // Y/X -|> Y
    typename I::Ver d2_in_a2;     // D' -|> A'
};

namespace detail {

template <AcgwInstance I>
void snake_check_h(const I& inst, std::vector<std::string>& out, const char* name, const typename I::Hor& h) {
    if (auto e = inst.check_h(h)) out.push_back(std::string(name) + ": " + *e);
}
template <AcgwInstance I>
void snake_check_v(const I& inst, std::vector<std::string>& out, const char* name, const typename I::Ver& v) {
    if (auto e = inst.check_v(v)) out.push_back(std::string(name) + ": " + *e);
}
template <AcgwInstance I>
void snake_same(const I& inst, std::vector<std::string>& out, const char* what, const typename I::Obj& a,
                const typename I::Obj& b) {
    if (!inst.same_object(a, b)) out.push_back(std::string(what) + ": " + inst.describe(a) + " vs " + inst.describe(b));
}

}  // namespace detail

/// All violated hypotheses of the weak snake lemma.
template <AcgwInstance I>
std::vector<std::string> validate_snake(const SnakeInput<I>& s) {
    const I& inst = s.inst;
    std::vector<std::string> out;
    detail::snake_check_h(inst, out, "A>B", s.a_b);
    detail::snake_check_v(inst, out, "C>B", s.c_b);
    detail::snake_check_h(inst, out, "X>Y", s.x_y);
    detail::snake_check_v(inst, out, "Z>Y", s.z_y);
    detail::snake_check_h(inst, out, "A'>B'", s.a2_b2);
    detail::snake_check_v(inst, out, "C'>B'", s.c2_b2);
    detail::snake_check_v(inst, out, "X>A", s.x_a);
    detail::snake_check_h(inst, out, "X>A'", s.x_a2);
    detail::snake_check_v(inst, out, "Y>B", s.y_b);
    detail::snake_check_h(inst, out, "Y>B'", s.y_b2);
    detail::snake_check_v(inst, out, "Z>C", s.z_c);
    detail::snake_check_h(inst, out, "Z>C'", s.z_c2);
    if (!out.empty()) return out;
    detail::snake_same(inst, out, "object A", s.a_b.source, s.x_a.target);
    detail::snake_same(inst, out, "object B", s.a_b.target, s.c_b.target);
    detail::snake_same(inst, out, "object B", s.a_b.target, s.y_b.target);
    detail::snake_same(inst, out, "object C", s.c_b.source, s.z_c.target);
    detail::snake_same(inst, out, "object X", s.x_y.source, s.x_a.source);
    detail::snake_same(inst, out, "object X", s.x_y.source, s.x_a2.source);
    detail::snake_same(inst, out, "object Y", s.x_y.target, s.z_y.target);
    detail::snake_same(inst, out, "object Y", s.x_y.target, s.y_b.source);
    detail::snake_same(inst, out, "object Y", s.x_y.target, s.y_b2.source);
    detail::snake_same(inst, out, "object Z", s.z_y.source, s.z_c.source);
    detail::snake_same(inst, out, "object Z", s.z_y.source, s.z_c2.source);
    detail::snake_same(inst, out, "object A'", s.a2_b2.source, s.x_a2.target);
    detail::snake_same(inst, out, "object B'", s.a2_b2.target, s.c2_b2.target);
    detail::snake_same(inst, out, "object B'", s.a2_b2.target, s.y_b2.target);
    detail::snake_same(inst, out, "object C'", s.c2_b2.source, s.z_c2.target);
    if (!out.empty()) return out;
    if (!inst.same_image_v(inst.complement_h(s.a_b), s.c_b)) out.push_back("top row is not short exact");
    if (!inst.same_image_v(inst.complement_h(s.a2_b2), s.c2_b2)) out.push_back("bottom row is not short exact");
    const auto tl = inst.classify_mixed(s.x_y, s.x_a, s.a_b, s.y_b);
    if (tl != SquareClass::pseudo_commutative && tl != SquareClass::cartesian)
        out.push_back("top-left square is " + to_string(tl) + ", expected pseudo-commutative");
    const auto br = inst.classify_mixed(s.z_c2, s.z_y, s.y_b2, s.c2_b2);
    if (br != SquareClass::pseudo_commutative && br != SquareClass::cartesian)
        out.push_back("bottom-right square is " + to_string(br) + ", expected pseudo-commutative");
    if (!inst.equal_v(inst.compose_v(s.z_y, s.y_b), inst.compose_v(s.z_c, s.c_b)))
        out.push_back("top-right square does not commute");
    if (!inst.equal_h(inst.compose_h(s.x_y, s.y_b2), inst.compose_h(s.x_a2, s.a2_b2)))
        out.push_back("bottom-left square does not commute");
    return out;
}

template <AcgwInstance I>
std::vector<std::string> validate_snake(const StrongSnakeInput<I>& s) {
    const I& inst = s.weak.inst;
    auto out = validate_snake(s.weak);
    detail::snake_check_v(inst, out, "A>A_outer", s.abar_a);
    detail::snake_check_h(inst, out, "C'>C'_outer", s.cbar_c);
    if (!out.empty()) return out;
    detail::snake_same(inst, out, "object A", s.abar_a.source, s.weak.a_b.source);
    detail::snake_same(inst, out, "object C'", s.cbar_c.source, s.weak.c2_b2.source);
    return out;
}

template <AcgwInstance I>
SnakeResult<I> snake_weak(const SnakeInput<I>& s) {
    const I& inst = s.inst;
    if (auto v = validate_snake(s); !v.empty()) throw ValidationError("snake input: " + v.front());
    using detail::expect;

    const auto o1 = inst.complement_v(s.x_a);
    const auto o2 = inst.complement_v(s.y_b);
    const auto o3 = inst.complement_v(s.z_c);
    const auto o4 = inst.complement_h(s.x_a2);
    const auto o5 = inst.complement_h(s.y_b2);
    const auto o6 = inst.complement_h(s.z_c2);

    Transition<I> t1{o1.source, inst.id_v(o1.source),
                     expect(inst.factor_h(inst.compose_h(o1, s.a_b), o2), "A\\X into B\\Y")};

    const auto q = inst.complement_h(s.x_y);  // Y/X -|> Y
    const auto q_c = expect(inst.factor_v(inst.compose_v(q, s.y_b), s.c_b), "Y/X into C");

    const auto pd = inst.mixed_pullback(o2, s.c_b);
    Transition<I> d{pd.corner, pd.to_a, expect(inst.factor_h(pd.to_b, o3), "D into C\\Z")};
    if (!inst.same_image_h(pd.to_b, inst.complement_v(q_c)))
        throw InternalError("D disagrees with C \\ (Y/X)");

    const auto pw = inst.mixed_pullback(o3, q_c);  // W -|> C\Z, W >-> Y/X
    const auto kz = inst.complement_v(s.z_y);      // Y\Z >-> Y
    const auto k_a2 = expect(inst.factor_h(inst.compose_h(kz, s.y_b2), s.a2_b2), "Y\\Z into A'");
    const auto pw2 = inst.mixed_pullback(k_a2, o4);  // W2 -|> Y\Z, W2 >-> A'/X
    const auto iso = expect(inst.subquotient_iso(pw.to_b, q, pw2.to_a, kz), "W as a subquotient of Y");
    Transition<I> w{pw.corner, pw.to_a, inst.compose_h(iso, pw2.to_b)};
    if (!inst.same_image_h(pw.to_b, inst.complement_v(expect(inst.factor_v(s.z_y, q), "Z into Y/X"))))
        throw InternalError("W disagrees with (Y/X) \\ Z");
    if (!inst.same_image_v(pw2.to_a, inst.complement_h(expect(inst.factor_h(s.x_y, kz), "X into Y\\Z"))))
        throw InternalError("W disagrees with (Y\\Z) / X");

    const auto pd2 = inst.mixed_pullback(s.a2_b2, o5);  // D' -|> A', D' >-> B'/Y
    Transition<I> d2{pd2.corner, expect(inst.factor_v(pd2.to_a, o4), "D' into A'/X"), pd2.to_b};
    if (!inst.same_image_v(pd2.to_a, inst.complement_h(k_a2)))
        throw InternalError("D' disagrees with A' / (Y\\Z)");

    Transition<I> t5{o6.source, expect(inst.factor_v(inst.compose_v(o6, s.c2_b2), o5), "C'/Z into B'/Y"),
                     inst.id_h(o6.source)};

    SnakeResult<I> r;
    r.zigzag.inst = inst;
    r.zigzag.objects = {o1.source, o2.source, o3.source, o4.source, o5.source, o6.source};
    r.zigzag.transitions = {t1, d, w, d2, t5};
    r.zigzag.labels = {"A\\X", "B\\Y", "C\\Z", "A'/X", "B'/Y", "C'/Z"};
    r.zigzag.transition_labels = {"A\\X", "D", "W", "D'", "C'/Z"};
    r.kernel_legs = {o1, o2, o3};
    r.cokernel_legs = {o4, o5, o6};
    r.d_in_c = pd.to_b;
    r.w_in_q = pw.to_b;
    r.q_in_y = q;
    r.d2_in_a2 = pd2.to_a;
    return r;
}

template <AcgwInstance I>
SnakeResult<I> snake_strong(const StrongSnakeInput<I>& s) {
    const I& inst = s.weak.inst;
    if (auto v = validate_snake(s); !v.empty()) throw ValidationError("snake input: " + v.front());
    using detail::expect;
    auto r = snake_weak(s.weak);
    const auto& w = s.weak;

    const auto o1 = inst.complement_v(inst.compose_v(w.x_a, s.abar_a));  // A_outer \ X
    const auto p1 = inst.mixed_pullback(o1, s.abar_a);                    // T1 -|> O1, T1 >-> A
    Transition<I> t1{p1.corner, p1.to_a,
                     expect(inst.factor_h(inst.compose_h(p1.to_b, w.a_b), r.kernel_legs[1]), "A\\X into B\\Y")};

    const auto o6 = inst.complement_h(inst.compose_h(w.z_c2, s.cbar_c));  // C'_outer / Z
    const auto p5 = inst.mixed_pullback(s.cbar_c, o6);                    // T5 -|> C', T5 >-> O6
    Transition<I> t5{p5.corner,
                     expect(inst.factor_v(inst.compose_v(p5.to_a, w.c2_b2), r.cokernel_legs[1]), "C'/Z into B'/Y"),
                     p5.to_b};

    r.zigzag.objects.front() = o1.source;
    r.zigzag.objects.back() = o6.source;
    r.zigzag.transitions.front() = t1;
    r.zigzag.transitions.back() = t5;
    r.zigzag.exact_at_front = false;
    r.zigzag.exact_at_back = false;
    r.kernel_legs[0] = o1;
    r.cokernel_legs[2] = o6;
    return r;
}

/// The zigzag as a chain complex: object j of n sits in degree n - j.
template <AcgwInstance I>
ChainComplex<I> zigzag_complex(const ExactZigzag<I>& z) {
    const int n = static_cast<int>(z.objects.size());
    ChainComplex<I> c{z.inst, 1, {}, {}};
    for (int d = 1; d <= n; ++d) c.objects.push_back(z.objects[n - d]);
    for (int d = 2; d <= n; ++d) c.transitions.push_back(z.transitions[n - d]);
    return c;
}

/// Indices of objects where exactness is claimed but fails.
template <AcgwInstance I>
std::vector<std::size_t> zigzag_exactness_failures(const ExactZigzag<I>& z) {
    const auto c = zigzag_complex(z);
    std::vector<std::size_t> out;
    if (!validate_complex(c).empty()) {
        for (std::size_t j = 0; j < z.objects.size(); ++j) out.push_back(j);
        return out;
    }
    const int n = static_cast<int>(z.objects.size());
    for (int j = 0; j < n; ++j) {
        if (j == 0 && !z.exact_at_front) continue;
        if (j == n - 1 && !z.exact_at_back) continue;
        if (!z.inst.is_zero(homology_at(c, n - j))) out.push_back(static_cast<std::size_t>(j));
    }
    return out;
}

template <AcgwInstance I>
bool is_exact_zigzag(const ExactZigzag<I>& z) {
    return zigzag_exactness_failures(z).empty();
}

}  // namespace acgw
