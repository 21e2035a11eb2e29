#ifndef EQUICHAIN_CELLMAP_HPP
#define EQUICHAIN_CELLMAP_HPP

#include <map>
#include <string>
#include <vector>

#include "equichain/action.hpp"
#include "equichain/complex.hpp"

namespace equichain {

/// Simplicial map given by a vertex assignment; the image of every
/// simplex must span a simplex of the target (possibly of lower
/// dimension).  Finiteness makes every such map proper.
class CellularMap {
public:
    CellularMap() = default;
    CellularMap(Complex src, Complex dst, std::vector<int> vmap)
        : src_(std::move(src)), dst_(std::move(dst)), vmap_(std::move(vmap)) {}

    static CellularMap from_names(const Complex& src, const Complex& dst,
                                  const std::map<std::string, std::string>& assignment) {
        std::vector<int> vmap(src.n_vertices(), -1);
        for (std::size_t v = 0; v < src.n_vertices(); ++v) {
            const auto& name = src.vertex_name(int(v));
            auto it = assignment.find(name);
            const std::string& target = it != assignment.end() ? it->second : name;
            const int w = dst.vertex_index(target);
            if (w < 0)
                throw std::invalid_argument("CellularMap: vertex " + name +
                                            " has no image (" + target + " not in target)");
            vmap[v] = w;
        }
        return CellularMap(src, dst, vmap);
    }

    static CellularMap identity(const Complex& x) {
        std::vector<int> vmap(x.n_vertices());
        for (std::size_t v = 0; v < x.n_vertices(); ++v) vmap[v] = int(v);
        return CellularMap(x, x, vmap);
    }

    const Complex& source() const { return src_; }
    const Complex& target() const { return dst_; }
    int apply_vertex(int v) const { return vmap_[std::size_t(v)]; }

    /// Image vertex set of a simplex (duplicates removed).
    Simplex image_simplex(const Simplex& s) const {
        Simplex img;
        for (int v : s) img.push_back(vmap_[std::size_t(v)]);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        return img;
    }

    std::vector<ValidationIssue> validate() const {
        std::vector<ValidationIssue> issues;
        for (int k = 0; k <= src_.dim(); ++k)
            for (std::size_t i = 0; i < src_.n_cells(k); ++i)
                if (!dst_.has(image_simplex(src_.cell(k, i))))
                    issues.push_back({"image of " + src_.cell_name(k, i) +
                                      " is not a simplex of the target"});
        return issues;
    }

    /// Matrix of the degree-k pushforward; degenerate images contribute
    /// nothing, matching the generic-fiber Euler count mod 2.
    Gf2Matrix pushforward_matrix(int k) const {
        Gf2Matrix m(dst_.n_cells(k), src_.n_cells(k));
        if (k < 0 || k > src_.dim()) return m;
        for (std::size_t i = 0; i < src_.n_cells(k); ++i) {
            Simplex img = image_simplex(src_.cell(k, i));
            if (int(img.size()) != k + 1) continue;
            const int j = dst_.index_of(img);
            if (j >= 0) m.set(std::size_t(j), i, true);
        }
        return m;
    }

    Chain pushforward(const Chain& c) const {
        if (!c.parent().same_as(src_))
            throw std::invalid_argument("pushforward: chain not on the source");
        return Chain(dst_, c.k(), pushforward_matrix(c.k()).apply(c.support()));
    }

    friend CellularMap compose(const CellularMap& g, const CellularMap& f) {
        if (!f.target().same_as(g.source()) && !(f.target() == g.source()))
            throw std::invalid_argument("compose: maps not composable");
        std::vector<int> vmap(f.source().n_vertices());
        for (std::size_t v = 0; v < vmap.size(); ++v)
            vmap[v] = g.apply_vertex(f.apply_vertex(int(v)));
        return CellularMap(f.source(), g.target(), vmap);
    }

    /// Equivariance with respect to actions on source and target.
    bool is_equivariant(const GroupAction& a_src, const GroupAction& a_dst) const {
        if (a_src.order() != a_dst.order()) return false;
        for (std::size_t g = 0; g < a_src.order(); ++g)
            for (std::size_t v = 0; v < src_.n_vertices(); ++v)
                if (apply_vertex(a_src.apply_vertex(g, int(v))) !=
                    a_dst.apply_vertex(g, apply_vertex(int(v))))
                    return false;
        return true;
    }

private:
    Complex src_, dst_;
    std::vector<int> vmap_;
};

/// Square pi : Xt -> X with Y closed in X, Yt = pi^{-1}(Y), and pi an
/// isomorphism off Y.  Chains of X pull back through that isomorphism.
class PullbackSquare {
public:
    PullbackSquare(CellularMap pi, ClosedSubcomplex y) : pi_(std::move(pi)), y_(std::move(y)) {
        if (!y_.parent().same_as(pi_.target()))
            throw std::invalid_argument("PullbackSquare: Y must be closed in the target of pi");
        ytilde_ = ClosedSubcomplex::empty(pi_.source());
        const Complex& xt = pi_.source();
        for (int k = 0; k <= xt.dim(); ++k)
            for (std::size_t i = 0; i < xt.n_cells(k); ++i) {
                Simplex img = pi_.image_simplex(xt.cell(k, i));
                const int kk = int(img.size()) - 1;
                const int j = pi_.target().index_of(img);
                if (j >= 0 && y_.contains(kk, std::size_t(j))) ytilde_.add_with_faces(k, i);
            }
    }

    const CellularMap& pi() const { return pi_; }
    const ClosedSubcomplex& y() const { return y_; }
    const ClosedSubcomplex& y_tilde() const { return ytilde_; }

    /// The restriction of pi away from Y must be a simplicial isomorphism.
    std::vector<ValidationIssue> validate() const {
        std::vector<ValidationIssue> issues;
        const Complex& xt = pi_.source();
        const Complex& x = pi_.target();
        for (int k = 0; k <= std::max(xt.dim(), x.dim()); ++k) {
            std::map<int, int> hit;  // target cell -> count
            for (std::size_t i = 0; i < xt.n_cells(k); ++i) {
                if (ytilde_.contains(k, i)) continue;
                Simplex img = pi_.image_simplex(xt.cell(k, i));
                if (int(img.size()) != k + 1) {
                    issues.push_back({"pi degenerates " + xt.cell_name(k, i) + " off Y"});
                    continue;
                }
                const int j = x.index_of(img);
                if (j < 0 || y_.contains(k, std::size_t(j))) {
                    issues.push_back({"pi maps " + xt.cell_name(k, i) + " into Y"});
                    continue;
                }
                ++hit[j];
            }
            std::size_t outside = 0;
            for (std::size_t j = 0; j < x.n_cells(k); ++j)
                if (!y_.contains(k, j)) {
                    ++outside;
                    auto it = hit.find(int(j));
                    const int d = it == hit.end() ? 0 : it->second;
                    if (d != 1)
                        issues.push_back({"cell " + x.cell_name(k, j) + " outside Y has " +
                                          std::to_string(d) + " preimages"});
                }
            (void)outside;
        }
        return issues;
    }

    /// Inverse images of the support members outside Y.
    Chain pullback(const Chain& c) const {
        if (!c.parent().same_as(pi_.target()))
            throw std::invalid_argument("pullback: chain not on the base");
        const Complex& xt = pi_.source();
        const int k = c.k();
        Chain out(xt, k);
        Gf2Vector s(xt.n_cells(k));
        // invert cell by cell through the off-Y bijection
        std::map<int, std::size_t> inverse;
        for (std::size_t i = 0; i < xt.n_cells(k); ++i) {
            if (ytilde_.contains(k, i)) continue;
            Simplex img = pi_.image_simplex(xt.cell(k, i));
            const int j = pi_.target().index_of(img);
            if (j >= 0) inverse[j] = i;
        }
        for (std::size_t j : c.support().support()) {
            if (y_.contains(k, j)) continue;
            auto it = inverse.find(int(j));
            if (it != inverse.end()) s.set(it->second, true);
        }
        return Chain(xt, k, s);
    }

private:
    CellularMap pi_;
    ClosedSubcomplex y_;
    ClosedSubcomplex ytilde_;
};

}  // namespace equichain

#endif
