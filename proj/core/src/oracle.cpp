#include "acgw/oracle.hpp"

namespace acgw {

const FpMatrix* FreeComplex::differential(int i) const {
    if (i <= lo || i > hi()) return nullptr;
    return &d[static_cast<std::size_t>(i - lo - 1)];
}

FreeComplex free_complex(const ChainComplex<FinSetInstance>& x, std::uint32_t p) {
    if (auto v = validate_complex(x); !v.empty()) throw ValidationError("free_complex: " + v.front().message);
    FreeComplex f{x.lo, p, {}, {}};
    for (const auto& o : x.objects) f.dims.push_back(o.size());
    for (int i = x.lo + 1; i <= x.hi(); ++i) {
        const auto t = x.transition(i);
        FpMatrix m(x.object(i - 1).size(), x.object(i).size(), p);
        for (std::size_t k = 0; k < t.bar.size(); ++k) m.set(t.lower.map[k], t.upper.map[k], 1);
        f.d.push_back(std::move(m));
    }
    return f;
}

std::vector<std::size_t> rank_homology_dims(const FreeComplex& f) {
    std::vector<std::size_t> out;
    for (int i = f.lo; i <= f.hi(); ++i) {
        std::size_t n = f.dims[static_cast<std::size_t>(i - f.lo)];
        if (auto d = f.differential(i)) n -= d->rank();
        if (auto d = f.differential(i + 1)) n -= d->rank();
        out.push_back(n);
    }
    return out;
}

bool differentials_compose_to_zero(const FreeComplex& f) {
    for (int i = f.lo + 1; i < f.hi(); ++i)
        if (!(*f.differential(i) * *f.differential(i + 1)).is_zero()) return false;
    return true;
}

ChainComplex<LinearInstance> lift_to_linear(const ChainComplex<FinSetInstance>& x, std::uint32_t p) {
    LinearInstance lin(p);
    ChainComplex<LinearInstance> out{lin, x.lo, {}, {}};
    for (const auto& o : x.objects) out.objects.push_back(lin.space(o.size()));
    for (int i = x.lo + 1; i <= x.hi(); ++i) {
        const auto t = x.transition(i);
        FpMatrix up(t.bar.size(), x.object(i).size(), p);
        FpMatrix down(x.object(i - 1).size(), t.bar.size(), p);
        for (std::size_t k = 0; k < t.bar.size(); ++k) {
            up.set(k, t.upper.map[k], 1);
            down.set(t.lower.map[k], k, 1);
        }
        out.transitions.push_back({lin.space(t.bar.size()), lin.epi(std::move(up)), lin.mono(std::move(down))});
    }
    return out;
}

}  // namespace acgw
