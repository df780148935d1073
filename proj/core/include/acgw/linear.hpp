#pragma once

// The ACGW category of finite-dimensional F_p vector spaces: monomorphisms are
// horizontal, reversed epimorphisms are vertical, c and k are cokernel and kernel.
// All arithmetic is exact; representatives are chosen through reduced row echelon form.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "acgw/fp_matrix.hpp"
#include "acgw/instance.hpp"

namespace acgw {

struct VectObj {
    std::size_t dim = 0;
    std::uint32_t p = 2;
    friend bool operator==(const VectObj&, const VectObj&) = default;
};

/// Horizontal A >-> B: a full column rank (dim B x dim A) matrix.
struct MatMono {
    VectObj source;
    VectObj target;
    FpMatrix matrix;
    friend bool operator==(const MatMono&, const MatMono&) = default;
};

/// Vertical A -|> B: an epimorphism B ->> A, stored as its (dim A x dim B) matrix.
struct MatEpi {
    VectObj source;
    VectObj target;
    FpMatrix matrix;
    friend bool operator==(const MatEpi&, const MatEpi&) = default;
};

class LinearInstance {
public:
    using Obj = VectObj;
    using Hor = MatMono;
    using Ver = MatEpi;
    struct Pullback {
        VectObj corner;
        MatEpi to_a;
        MatMono to_b;
    };
    using FlatKey = FpMatrix;

    explicit LinearInstance(std::uint32_t p = 2);
    std::uint32_t prime() const { return p_; }

    Obj space(std::size_t dim) const { return {dim, p_}; }
    MatMono mono(FpMatrix m) const;  // validates
    MatEpi epi(FpMatrix m) const;    // validates; m is the underlying epimorphism's matrix

    Obj zero() const { return {0, p_}; }
    bool is_zero(const Obj& a) const { return a.dim == 0; }
    bool same_object(const Obj& a, const Obj& b) const { return a == b; }
    std::size_t size(const Obj& a) const { return a.dim; }
    std::string describe(const Obj& a) const;
    std::optional<std::string> check_object(const Obj& a) const;

    std::optional<std::string> check_h(const Hor& h) const;
    std::optional<std::string> check_v(const Ver& v) const;

    Hor id_h(const Obj& a) const;
    Ver id_v(const Obj& a) const;
    Hor initial_h(const Obj& a) const;
    Ver initial_v(const Obj& a) const;
    Hor compose_h(const Hor& f, const Hor& g) const;
    Ver compose_v(const Ver& f, const Ver& g) const;

    Ver complement_h(const Hor& m) const;
    Hor complement_v(const Ver& e) const;
    Pullback mixed_pullback(const Hor& m, const Ver& e) const;

    std::optional<Hor> factor_h(const Hor& f, const Hor& g) const;
    std::optional<Ver> factor_v(const Ver& f, const Ver& g) const;

    bool is_iso_h(const Hor& h) const { return h.source.dim == h.target.dim; }
    bool is_iso_v(const Ver& v) const { return v.source.dim == v.target.dim; }
    bool equal_h(const Hor& a, const Hor& b) const { return a == b; }
    bool equal_v(const Ver& a, const Ver& b) const { return a == b; }
    bool same_image_h(const Hor& a, const Hor& b) const;
    bool same_image_v(const Ver& a, const Ver& b) const;

    Ver flip_h(const Hor& h) const;
    Hor flip_v(const Ver& v) const;
    Hor invert_h(const Hor& h) const;
    Hor section_v(const Ver& v) const;
    Ver retraction_h(const Hor& h) const;

    std::optional<Hor> subquotient_iso(const Hor& h1, const Ver& q, const Ver& e2, const Hor& k) const;

    SquareClass classify_mixed(const Hor& top, const Ver& left, const Hor& bottom, const Ver& right) const;

    /// Square of monomorphisms top: P>->B, left: P>->A, bottom: A>->C, right: B>->C.
    /// cartesian iff it commutes and P is the full intersection of the images in C.
    SquareClass classify_horizontal(const Hor& top, const Hor& left, const Hor& bottom, const Hor& right) const;

    /// The linear map source -> target presented by the span.
    FlatKey flat_key(const FlatMor<LinearInstance>& f) const;

    friend bool operator==(const LinearInstance&, const LinearInstance&) = default;

private:
    std::uint32_t p_;
};

static_assert(AcgwInstance<LinearInstance>);

/// Cokernel of a monomorphism, as the projection determined by the RREF pivots of its image.
MatEpi coker(const LinearInstance& inst, const MatMono& m);
/// Kernel of an epimorphism with the standard RREF null-space basis.
MatMono ker(const LinearInstance& inst, const MatEpi& e);

/// M = mono * epi with the mono's columns taken from the pivot columns of M.
struct EpiMono {
    FpMatrix epi;   // rank x cols
    FpMatrix mono;  // rows x rank
};
EpiMono epi_mono_factor(const FpMatrix& m);

/// The flat morphism of an arbitrary linear map (epi-mono factorization read as a span).
FlatMor<LinearInstance> flat_of_matrix(const LinearInstance& inst, const FpMatrix& m);

}  // namespace acgw
