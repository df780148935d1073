#include "acgw/linear.hpp"

namespace acgw {

namespace {

std::string shape(const FpMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

LinearInstance::LinearInstance(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
}

MatMono LinearInstance::mono(FpMatrix m) const {
    MatMono h{space(m.cols()), space(m.rows()), std::move(m)};
    if (auto e = check_h(h)) throw ValidationError("mono: " + *e);
    return h;
}

MatEpi LinearInstance::epi(FpMatrix m) const {
    MatEpi v{space(m.rows()), space(m.cols()), std::move(m)};
    if (auto e = check_v(v)) throw ValidationError("epi: " + *e);
    return v;
}

std::string LinearInstance::describe(const Obj& a) const {
    return "F" + std::to_string(a.p) + "^" + std::to_string(a.dim);
}

std::optional<std::string> LinearInstance::check_object(const Obj& a) const {
    if (a.p != p_) return "object over F_" + std::to_string(a.p) + " in an F_" + std::to_string(p_) + " instance";
    return std::nullopt;
}

std::optional<std::string> LinearInstance::check_h(const Hor& h) const {
    if (h.matrix.prime() != p_ || h.source.p != p_ || h.target.p != p_) return std::string("wrong characteristic");
    if (h.matrix.rows() != h.target.dim || h.matrix.cols() != h.source.dim)
        return "matrix is " + shape(h.matrix) + " for a map of dimension " + std::to_string(h.source.dim) +
               " -> " + std::to_string(h.target.dim);
    if (h.matrix.rank() != h.source.dim) return std::string("matrix does not have full column rank");
    return std::nullopt;
}

std::optional<std::string> LinearInstance::check_v(const Ver& v) const {
    if (v.matrix.prime() != p_ || v.source.p != p_ || v.target.p != p_) return std::string("wrong characteristic");
    if (v.matrix.rows() != v.source.dim || v.matrix.cols() != v.target.dim)
        return "matrix is " + shape(v.matrix) + " for an epimorphism of dimension " +
               std::to_string(v.target.dim) + " ->> " + std::to_string(v.source.dim);
    if (v.matrix.rank() != v.source.dim) return std::string("matrix does not have full row rank");
    return std::nullopt;
}

MatMono LinearInstance::id_h(const Obj& a) const { return {a, a, FpMatrix::identity(a.dim, p_)}; }
MatEpi LinearInstance::id_v(const Obj& a) const { return {a, a, FpMatrix::identity(a.dim, p_)}; }
MatMono LinearInstance::initial_h(const Obj& a) const { return {zero(), a, FpMatrix(a.dim, 0, p_)}; }
MatEpi LinearInstance::initial_v(const Obj& a) const { return {zero(), a, FpMatrix(0, a.dim, p_)}; }

MatMono LinearInstance::compose_h(const Hor& f, const Hor& g) const {
    if (!(f.target == g.source)) throw PreconditionError("compose_h: dimension mismatch");
    return {f.source, g.target, g.matrix * f.matrix};
}

MatEpi LinearInstance::compose_v(const Ver& f, const Ver& g) const {
    if (!(f.target == g.source)) throw PreconditionError("compose_v: dimension mismatch");
    return {f.source, g.target, f.matrix * g.matrix};
}

MatEpi LinearInstance::complement_h(const Hor& m) const {
    if (auto e = check_h(m)) throw ValidationError("coker: " + *e);
    const std::size_t n = m.target.dim;
    const auto ech = m.matrix.transpose().rref();  // rows span the image
    std::vector<bool> is_pivot(n, false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free.push_back(c);
    // (P v)_q = v_q - sum_j r_j[q] v[p_j]: zero the pivot coordinates, keep the rest.
    FpMatrix proj(free.size(), n, p_);
    for (std::size_t row = 0; row < free.size(); ++row) {
        const std::size_t q = free[row];
        proj.set(row, q, 1);
        for (std::size_t j = 0; j < ech.pivots.size(); ++j)
            proj.set(row, ech.pivots[j], -static_cast<long long>(ech.reduced.at(j, q)));
    }
    return {space(free.size()), m.target, std::move(proj)};
}

MatMono LinearInstance::complement_v(const Ver& e) const {
    if (auto err = check_v(e)) throw ValidationError("ker: " + *err);
    FpMatrix basis = e.matrix.null_space();
    return {space(basis.cols()), e.target, std::move(basis)};
}

LinearInstance::Pullback LinearInstance::mixed_pullback(const Hor& m, const Ver& e) const {
    if (!(m.target == e.target)) throw PreconditionError("mixed_pullback: targets differ");
    auto fac = epi_mono_factor(e.matrix * m.matrix);
    const VectObj corner = space(fac.epi.rows());
    return {corner, MatEpi{corner, m.source, std::move(fac.epi)}, MatMono{corner, e.source, std::move(fac.mono)}};
}

std::optional<MatMono> LinearInstance::factor_h(const Hor& f, const Hor& g) const {
    if (!(f.target == g.target)) throw PreconditionError("factor_h: targets differ");
    auto x = g.matrix.solve(f.matrix);
    if (!x) return std::nullopt;
    return MatMono{f.source, g.source, std::move(*x)};
}

std::optional<MatEpi> LinearInstance::factor_v(const Ver& f, const Ver& g) const {
    if (!(f.target == g.target)) throw PreconditionError("factor_v: targets differ");
    auto xt = g.matrix.transpose().solve(f.matrix.transpose());
    if (!xt) return std::nullopt;
    return MatEpi{f.source, g.source, xt->transpose()};
}

bool LinearInstance::same_image_h(const Hor& a, const Hor& b) const {
    return a.target == b.target && a.matrix.column_space_key() == b.matrix.column_space_key();
}

bool LinearInstance::same_image_v(const Ver& a, const Ver& b) const {
    return a.target == b.target && a.matrix.row_space_key() == b.matrix.row_space_key();
}

MatEpi LinearInstance::flip_h(const Hor& h) const {
    if (!is_iso_h(h)) throw PreconditionError("flip_h: not an isomorphism");
    return {h.target, h.source, h.matrix};
}

MatMono LinearInstance::flip_v(const Ver& v) const {
    if (!is_iso_v(v)) throw PreconditionError("flip_v: not an isomorphism");
    return {v.target, v.source, v.matrix};
}

MatMono LinearInstance::invert_h(const Hor& h) const {
    auto inv = h.matrix.inverse();
    if (!inv) throw PreconditionError("invert_h: not an isomorphism");
    return {h.target, h.source, std::move(*inv)};
}

MatMono LinearInstance::section_v(const Ver& v) const {
    auto s = v.matrix.solve(FpMatrix::identity(v.source.dim, p_));
    if (!s) throw ValidationError("section_v: not an epimorphism");
    return {v.source, v.target, std::move(*s)};
}

MatEpi LinearInstance::retraction_h(const Hor& h) const {
    auto rt = h.matrix.transpose().solve(FpMatrix::identity(h.source.dim, p_));
    if (!rt) throw ValidationError("retraction_h: not a monomorphism");
    return {h.source, h.target, rt->transpose()};
}

std::optional<MatMono> LinearInstance::subquotient_iso(const Hor& h1, const Ver& q, const Ver& e2,
                                                       const Hor& k) const {
    if (!(h1.target == q.source) || !(e2.target == k.source) || !(q.target == k.target))
        throw PreconditionError("subquotient_iso: objects do not line up");
    // Route one presents V1/U1 with U1 = ker q, route two V2/U2 with V2 = im k.
    const FpMatrix u1 = q.matrix.null_space();
    const FpMatrix u2 = k.matrix * e2.matrix.null_space();
    if (u1.column_space_key() != u2.column_space_key()) return std::nullopt;
    auto lifts = q.matrix.solve(h1.matrix);
    if (!lifts) return std::nullopt;
    if (hconcat(u1, *lifts).column_space_key() != k.matrix.column_space_key()) return std::nullopt;
    auto x = (q.matrix * k.matrix).solve(h1.matrix);
    if (!x) return std::nullopt;
    FpMatrix iso = e2.matrix * *x;
    if (iso.rows() != iso.cols() || iso.rank() != iso.rows()) return std::nullopt;
    return MatMono{h1.source, e2.source, std::move(iso)};
}

SquareClass LinearInstance::classify_mixed(const Hor& top, const Ver& left, const Hor& bottom,
                                           const Ver& right) const {
    if (!(top.source == left.source) || !(left.target == bottom.source) || !(top.target == right.source) ||
        !(bottom.target == right.target))
        throw PreconditionError("square boundary objects do not match");
    // In the abelian category: C ->> B after A >-> C equals A ->> P >-> B.
    if (right.matrix * bottom.matrix == top.matrix * left.matrix) return SquareClass::pseudo_commutative;
    return SquareClass::not_a_square;
}

SquareClass LinearInstance::classify_horizontal(const Hor& top, const Hor& left, const Hor& bottom,
                                                const Hor& right) const {
    if (!(top.source == left.source) || !(left.target == bottom.source) || !(top.target == right.source) ||
        !(bottom.target == right.target))
        throw PreconditionError("square boundary objects do not match");
    if (!(bottom.matrix * left.matrix == right.matrix * top.matrix)) return SquareClass::not_a_square;
    const std::size_t meet = bottom.source.dim + right.source.dim - hconcat(bottom.matrix, right.matrix).rank();
    return top.source.dim == meet ? SquareClass::cartesian : SquareClass::commuting;
}

FpMatrix LinearInstance::flat_key(const FlatMor<LinearInstance>& f) const { return f.front.matrix * f.back.matrix; }

MatEpi coker(const LinearInstance& inst, const MatMono& m) { return inst.complement_h(m); }
MatMono ker(const LinearInstance& inst, const MatEpi& e) { return inst.complement_v(e); }

EpiMono epi_mono_factor(const FpMatrix& m) {
    auto ech = m.rref();
    return {std::move(ech.reduced), m.select_columns(ech.pivots)};
}

FlatMor<LinearInstance> flat_of_matrix(const LinearInstance& inst, const FpMatrix& m) {
    auto fac = epi_mono_factor(m);
    const VectObj mid = inst.space(fac.epi.rows());
    MatEpi back{mid, inst.space(m.cols()), std::move(fac.epi)};
    MatMono front{mid, inst.space(m.rows()), std::move(fac.mono)};
    return FlatMor<LinearInstance>{back.target, mid, front.target, std::move(back), std::move(front)};
}

}  // namespace acgw
