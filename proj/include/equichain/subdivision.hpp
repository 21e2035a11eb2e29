#ifndef EQUICHAIN_SUBDIVISION_HPP
#define EQUICHAIN_SUBDIVISION_HPP

#include <map>
#include <string>
#include <vector>

#include "equichain/action.hpp"
#include "equichain/complex.hpp"

namespace equichain {

/// Barycentric subdivision: the flag complex of the face poset.  Carries
/// the data needed to transport chains, subcomplexes and actions.
class BarycentricSubdivision {
public:
    explicit BarycentricSubdivision(const Complex& base) : base_(base) {
        // one subdivision vertex per cell of the base
        std::vector<std::vector<std::string>> flags;
        std::vector<std::string> vnames;
        vert_name_.assign(std::size_t(base.dim()) + 1, {});
        for (int k = 0; k <= base.dim(); ++k) {
            vert_name_[std::size_t(k)].resize(base.n_cells(k));
            for (std::size_t i = 0; i < base.n_cells(k); ++i) {
                std::string name;
                const Simplex& s = base.cell(k, i);
                for (std::size_t j = 0; j < s.size(); ++j) {
                    if (j) name.push_back('.');
                    name += base.vertex_name(s[j]);
                }
                vert_name_[std::size_t(k)][i] = name;
                vnames.push_back(name);
            }
        }
        // maximal flags: strictly increasing chains in the face poset
        std::vector<std::string> chain;
        for (int k = 0; k <= base.dim(); ++k)
            for (std::size_t i = 0; i < base.n_cells(k); ++i)
                emit_flags(k, i, chain, flags);
        sd_ = Complex::from_simplices(vnames, flags);
        cell_of_vert_.resize(sd_.n_vertices());
        for (int k = 0; k <= base.dim(); ++k)
            for (std::size_t i = 0; i < base.n_cells(k); ++i)
                cell_of_vert_[std::size_t(vertex_of_cell(k, i))] = {k, i};
    }

    const Complex& base() const { return base_; }
    const Complex& result() const { return sd_; }

    int vertex_of_cell(int k, std::size_t i) const {
        return sd_.vertex_index(vert_name_[std::size_t(k)][i]);
    }

    /// The base cell whose barycenter is subdivision vertex v.
    std::pair<int, std::size_t> cell_of_vertex(int v) const {
        return cell_of_vert_[std::size_t(v)];
    }

    /// Top base cell of a subdivision simplex (the deepest flag entry).
    std::pair<int, std::size_t> top_cell(const Simplex& sd_simplex) const {
        int best_k = -1;
        std::size_t best_i = 0;
        for (int v : sd_simplex) {
            auto [k, i] = cell_of_vertex(v);
            if (k > best_k) { best_k = k; best_i = i; }
        }
        return {best_k, best_i};
    }

    /// Standard subdivision chain map: each k-cell becomes the set of
    /// k-flags topping out at it.  Commutes with the boundary.
    Chain transport(const Chain& c) const {
        const int k = c.k();
        Chain out(sd_, k);
        Gf2Vector s(sd_.n_cells(k));
        for (std::size_t j = 0; j < sd_.n_cells(k); ++j) {
            auto [tk, ti] = top_cell(sd_.cell(k, j));
            if (tk == k && c.support().get(ti)) s.set(j, true);
        }
        return Chain(sd_, k, s);
    }

    ClosedSubcomplex transport(const ClosedSubcomplex& y) const {
        ClosedSubcomplex out = ClosedSubcomplex::empty(sd_);
        for (int k = 0; k <= sd_.dim(); ++k)
            for (std::size_t j = 0; j < sd_.n_cells(k); ++j) {
                auto [tk, ti] = top_cell(sd_.cell(k, j));
                if (y.contains(tk, ti)) out.add_with_faces(k, j);
            }
        return out;
    }

    /// Functorial transport: the barycenter of s goes to the barycenter
    /// of g(s).
    GroupAction transport(const GroupAction& a) const {
        std::vector<std::vector<int>> perms;
        for (std::size_t g = 0; g < a.order(); ++g) {
            std::vector<int> p(sd_.n_vertices());
            for (std::size_t v = 0; v < sd_.n_vertices(); ++v) {
                auto [k, i] = cell_of_vertex(int(v));
                const std::size_t gi = a.apply_cell(g, k, i);
                p[v] = vertex_of_cell(k, gi);
            }
            perms.push_back(std::move(p));
        }
        return GroupAction(sd_, std::move(perms));
    }

private:
    void emit_flags(int k, std::size_t i, std::vector<std::string>& chain,
                    std::vector<std::vector<std::string>>& flags) {
        chain.push_back(vert_name_[std::size_t(k)][i]);
        flags.push_back(chain);
        const Simplex& s = base_.cell(k, i);
        const std::size_t n = s.size();
        for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
            Simplex f;
            for (std::size_t b = 0; b < n; ++b)
                if (mask & (std::size_t(1) << b)) f.push_back(s[b]);
            const int fi = base_.index_of(f);
            if (fi >= 0) emit_flags(int(f.size()) - 1, std::size_t(fi), chain, flags);
        }
        chain.pop_back();
    }

    Complex base_;
    Complex sd_;
    std::vector<std::vector<std::string>> vert_name_;
    std::vector<std::pair<int, std::size_t>> cell_of_vert_;
};

}  // namespace equichain

#endif
