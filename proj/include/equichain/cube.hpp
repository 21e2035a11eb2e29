#ifndef EQUICHAIN_CUBE_HPP
#define EQUICHAIN_CUBE_HPP

#include <string>
#include <vector>

#include "equichain/spectral.hpp"

namespace equichain {

/// Cone filtration convention: the shifted factor A[1] enters at
/// F_{p - shift}.  Both conventions give valid filtered complexes; the
/// default (no shift) is pinned by the circle-minus-point additivity
/// instance.
struct ConeOptions {
    int shift = 0;
};

/// Mapping cone of a filtered chain map f : A -> B, the simple filtered
/// complex of the arrow diagram.  cone_n = B_n + A_{n-1} with
/// d(b, a) = (db + f a, da); when both ends carry the same group the
/// result carries the diagonal action.
inline FilteredComplex mapping_cone(const FilteredMap& f, ConeOptions opt = {}) {
    const ChainComplexGF2& A = f.source().complex();
    const ChainComplexGF2& B = f.target().complex();
    const int N = std::max(B.top_degree(), A.top_degree() + 1);
    std::vector<std::size_t> dims;
    std::vector<Gf2Matrix> bnd;
    for (int n = 0; n <= N; ++n) dims.push_back(B.dim(n) + A.dim(n - 1));
    for (int n = 0; n <= N; ++n) {
        Gf2Matrix m(n >= 1 ? dims[std::size_t(n - 1)] : 0, dims[std::size_t(n)]);
        if (n >= 1) {
            const Gf2Matrix db = B.boundary(n);
            const Gf2Matrix fa = f.map(n - 1);
            const Gf2Matrix da = A.boundary(n - 1);
            for (std::size_t j = 0; j < B.dim(n); ++j)
                for (std::size_t i = 0; i < B.dim(n - 1); ++i)
                    if (db.get(i, j)) m.set(i, j, true);
            for (std::size_t j = 0; j < A.dim(n - 1); ++j) {
                for (std::size_t i = 0; i < B.dim(n - 1); ++i)
                    if (fa.get(i, j)) m.set(i, B.dim(n) + j, true);
                for (std::size_t i = 0; n >= 2 && i < A.dim(n - 2); ++i)
                    if (da.get(i, j)) m.set(B.dim(n - 1) + i, B.dim(n) + j, true);
            }
        }
        bnd.push_back(std::move(m));
    }
    ChainComplexGF2 cone(dims, std::move(bnd));

    const int p_min = std::min(f.target().p_min(), f.source().p_min() + opt.shift);
    const int p_max = std::max(f.target().p_max(), f.source().p_max() + opt.shift);
    std::vector<std::vector<Subspace>> levels(std::size_t(N) + 1);
    for (int n = 0; n <= N; ++n)
        for (int p = p_min; p <= p_max; ++p) {
            const Subspace fb = f.target().level(p, n);
            const Subspace fa = f.source().level(p - opt.shift, n - 1);
            std::vector<Gf2Vector> gens;
            for (const auto& v : fb.basis()) {
                Gf2Vector g(cone.dim(n));
                for (std::size_t i : v.support()) g.set(i, true);
                gens.push_back(g);
            }
            for (const auto& v : fa.basis()) {
                Gf2Vector g(cone.dim(n));
                for (std::size_t i : v.support()) g.set(B.dim(n) + i, true);
                gens.push_back(g);
            }
            levels[std::size_t(n)].push_back(Subspace::span(cone.dim(n), gens));
        }
    FilteredComplex out(cone, p_min, p_max, std::move(levels));

    if (f.source().has_actions() && f.target().has_actions() &&
        f.source().group_order() == f.target().group_order()) {
        std::vector<std::vector<Gf2Matrix>> acts(f.source().group_order());
        for (std::size_t g = 0; g < acts.size(); ++g)
            for (int n = 0; n <= N; ++n) {
                Gf2Matrix m(cone.dim(n), cone.dim(n));
                const Gf2Matrix& gb = f.target().action(g, n);
                for (std::size_t j = 0; j < B.dim(n); ++j)
                    for (std::size_t i = 0; i < B.dim(n); ++i)
                        if (gb.get(i, j)) m.set(i, j, true);
                if (n >= 1) {
                    const Gf2Matrix& ga = f.source().action(g, n - 1);
                    for (std::size_t j = 0; j < A.dim(n - 1); ++j)
                        for (std::size_t i = 0; i < A.dim(n - 1); ++i)
                            if (ga.get(i, j)) m.set(B.dim(n) + i, B.dim(n) + j, true);
                }
                acts[g].push_back(std::move(m));
            }
        out.set_actions(std::move(acts));
    }
    return out;
}

/// Commuting square of filtered complexes
///
///     Yt --top--> Xt
///      |           |
///     left       right
///      v           v
///      Y --bot-->  X
///
/// whose simple filtered complex is the cone of the induced map of cones.
struct SquareDiagram {
    FilteredComplex yt, xt, y, x;
    std::vector<Gf2Matrix> top, left, right, bottom;  // degreewise matrices

    std::vector<ValidationIssue> validate() const {
        std::vector<ValidationIssue> issues;
        FilteredMap t(yt, xt, top), l(yt, y, left), r(xt, x, right), b(y, x, bottom);
        for (const auto& m : {&t, &l, &r, &b}) {
            auto is = m->validate();
            issues.insert(issues.end(), is.begin(), is.end());
        }
        const int N = std::max(yt.complex().top_degree(), y.complex().top_degree());
        for (int n = 0; n <= N; ++n)
            if (!(r.map(n) * t.map(n) == b.map(n) * l.map(n))) {
                issues.push_back({"square does not commute in degree " + std::to_string(n)});
                break;
            }
        return issues;
    }
};

inline FilteredComplex simple_complex(const SquareDiagram& sq, ConeOptions opt = {}) {
    FilteredMap top(sq.yt, sq.xt, sq.top);
    FilteredMap bottom(sq.y, sq.x, sq.bottom);
    FilteredComplex cone_top = mapping_cone(top, opt);
    FilteredComplex cone_bottom = mapping_cone(bottom, opt);
    // induced map of cones: (xt, yt) -> (right xt, left yt)
    const int N = cone_top.complex().top_degree();
    std::vector<Gf2Matrix> maps;
    for (int n = 0; n <= std::max(N, cone_bottom.complex().top_degree()); ++n) {
        Gf2Matrix m(cone_bottom.complex().dim(n), cone_top.complex().dim(n));
        const std::size_t bx = sq.x.complex().dim(n);
        const std::size_t bxt = sq.xt.complex().dim(n);
        const Gf2Matrix r = n < int(sq.right.size()) ? sq.right[std::size_t(n)]
                                                     : Gf2Matrix(sq.x.complex().dim(n), bxt);
        const Gf2Matrix l = n >= 1 && n - 1 < int(sq.left.size())
                                ? sq.left[std::size_t(n - 1)]
                                : Gf2Matrix(sq.y.complex().dim(n - 1), sq.yt.complex().dim(n - 1));
        for (std::size_t j = 0; j < bxt; ++j)
            for (std::size_t i = 0; i < sq.x.complex().dim(n); ++i)
                if (r.get(i, j)) m.set(i, j, true);
        for (std::size_t j = 0; j < sq.yt.complex().dim(n - 1); ++j)
            for (std::size_t i = 0; i < sq.y.complex().dim(n - 1); ++i)
                if (l.get(i, j)) m.set(bx + i, bxt + j, true);
        maps.push_back(std::move(m));
    }
    return mapping_cone(FilteredMap(cone_top, cone_bottom, maps), opt);
}

/// Acyclicity in the weight-complex sense: E^1 vanishes in every
/// bidegree, which forces zero homology.
inline bool is_acyclic(const FilteredComplex& fc) {
    return SpectralSequence(fc).e1_is_zero();
}

/// Additivity check: the simple complex of Y -> X must be filtered
/// quasi-isomorphic to the supplied model of X minus Y through the
/// supplied comparison map (from the cone to the candidate).
struct AdditivityReport {
    bool ok = false;
    bool input_ok = true;
    std::string detail;
    QuasiIsoCertificate certificate;
};

inline AdditivityReport check_additivity(const FilteredMap& inclusion,
                                         const FilteredComplex& candidate,
                                         const std::vector<Gf2Matrix>& comparison,
                                         ConeOptions opt = {}) {
    AdditivityReport rep;
    if (comparison.empty()) {
        rep.input_ok = false;
        rep.detail = "missing comparison map";
        return rep;
    }
    FilteredComplex cone = mapping_cone(inclusion, opt);
    FilteredMap cmp(cone, candidate, comparison);
    rep.certificate = is_filtered_quasi_iso(cmp);
    if (!rep.certificate.precondition_ok) {
        rep.input_ok = false;
        rep.detail = rep.certificate.detail;
        return rep;
    }
    rep.ok = rep.certificate.is_quasi_iso;
    return rep;
}

}  // namespace equichain

#endif
