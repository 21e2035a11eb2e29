#ifndef EQUICHAIN_ACTION_HPP
#define EQUICHAIN_ACTION_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "equichain/complex.hpp"

namespace equichain {

/// Finite group acting by simplicial automorphisms, given as an explicit
/// element table of vertex permutations (order at most 24).
class GroupAction {
public:
    GroupAction() = default;

    /// Generic constructor from an explicit table; element 0 must be the
    /// identity permutation.
    GroupAction(Complex x, std::vector<std::vector<int>> perms)
        : x_(std::move(x)), perm_(std::move(perms)) {
        build_cell_perms();
    }

    /// Z/2 action generated by an involution given on vertices by name;
    /// unlisted vertices are fixed.
    static GroupAction involution(const Complex& x,
                                  const std::map<std::string, std::string>& swaps) {
        std::vector<int> sigma(x.n_vertices());
        for (std::size_t v = 0; v < x.n_vertices(); ++v) sigma[v] = int(v);
        for (const auto& [a, b] : swaps) {
            const int ia = x.vertex_index(a), ib = x.vertex_index(b);
            if (ia < 0 || ib < 0)
                throw std::invalid_argument("involution: unknown vertex in mapping");
            sigma[std::size_t(ia)] = ib;
        }
        std::vector<int> id(x.n_vertices());
        for (std::size_t v = 0; v < x.n_vertices(); ++v) id[v] = int(v);
        return GroupAction(x, {id, sigma});
    }

    static GroupAction trivial(const Complex& x) {
        std::vector<int> id(x.n_vertices());
        for (std::size_t v = 0; v < x.n_vertices(); ++v) id[v] = int(v);
        return GroupAction(x, {id});
    }

    const Complex& complex() const { return x_; }
    std::size_t order() const { return perm_.size(); }
    bool is_trivial() const { return perm_.size() <= 1; }

    const std::vector<int>& vertex_perm(std::size_t g) const { return perm_[g]; }

    int apply_vertex(std::size_t g, int v) const { return perm_[g][std::size_t(v)]; }

    /// Image cell index of cell (k, i) under element g.
    std::size_t apply_cell(std::size_t g, int k, std::size_t i) const {
        return cell_perm_[g][std::size_t(k)][i];
    }

    /// g.c has support exactly g(support(c)).
    Chain act(std::size_t g, const Chain& c) const {
        if (!c.parent().same_as(x_))
            throw std::invalid_argument("act: chain lives on a different complex");
        Chain out(x_, c.k());
        Gf2Vector s(x_.n_cells(c.k()));
        for (std::size_t i : c.support().support())
            s.flip(apply_cell(g, c.k(), i));
        return Chain(x_, c.k(), s);
    }

    /// Index of the nontrivial involution generator; requires order 2.
    std::size_t sigma() const {
        if (perm_.size() != 2) throw std::invalid_argument("sigma: group is not Z/2");
        return 1;
    }

    /// Permutation matrix of element g on C_k coordinates.
    Gf2Matrix cell_matrix(std::size_t g, int k) const {
        const std::size_t n = x_.n_cells(k);
        Gf2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(apply_cell(g, k, i), i, true);
        return m;
    }

    /// (1 + sigma) as a matrix on C_k; requires order 2.
    Gf2Matrix one_plus_sigma_matrix(int k) const {
        return Gf2Matrix::identity(x_.n_cells(k)) + cell_matrix(sigma(), k);
    }

    /// Cells fixed pointwise by every group element; closed under faces.
    ClosedSubcomplex fixed_subcomplex() const {
        ClosedSubcomplex s = ClosedSubcomplex::empty(x_);
        for (int k = 0; k <= x_.dim(); ++k) {
            for (std::size_t i = 0; i < x_.n_cells(k); ++i) {
                bool fixed = true;
                for (std::size_t g = 1; g < perm_.size() && fixed; ++g)
                    for (int v : x_.cell(k, i))
                        if (apply_vertex(g, v) != v) { fixed = false; break; }
                if (fixed) s.add_with_faces(k, i);
            }
        }
        return s;
    }

    bool is_invariant(const ClosedSubcomplex& y) const {
        for (std::size_t g = 1; g < perm_.size(); ++g)
            for (int k = 0; k <= x_.dim(); ++k)
                for (std::size_t i : y.mask(k).support())
                    if (!y.contains(k, apply_cell(g, k, i))) return false;
        return true;
    }

    /// Setwise-invariant cells are pointwise fixed; quotients and Smith
    /// splitting arguments need this, and one barycentric subdivision
    /// always restores it.
    bool is_regular() const {
        for (std::size_t g = 1; g < perm_.size(); ++g)
            for (int k = 0; k <= x_.dim(); ++k)
                for (std::size_t i = 0; i < x_.n_cells(k); ++i)
                    if (apply_cell(g, k, i) == i) {
                        for (int v : x_.cell(k, i))
                            if (apply_vertex(g, v) != v) return false;
                    }
        return true;
    }

    std::vector<ValidationIssue> validate() const {
        std::vector<ValidationIssue> issues;
        if (perm_.empty()) {
            issues.push_back({"action has no elements"});
            return issues;
        }
        if (perm_.size() > 24) issues.push_back({"group order exceeds 24"});
        for (std::size_t v = 0; v < x_.n_vertices(); ++v)
            if (perm_[0][v] != int(v)) {
                issues.push_back({"element 0 is not the identity"});
                break;
            }
        // each permutation is an automorphism
        for (std::size_t g = 0; g < perm_.size(); ++g) {
            std::vector<bool> seen(x_.n_vertices(), false);
            for (std::size_t v = 0; v < x_.n_vertices(); ++v) {
                const int w = perm_[g][v];
                if (w < 0 || w >= int(x_.n_vertices()) || seen[std::size_t(w)]) {
                    issues.push_back({"element " + std::to_string(g) +
                                      " is not a vertex permutation"});
                    break;
                }
                seen[std::size_t(w)] = true;
            }
            for (int k = 0; k <= x_.dim(); ++k)
                for (std::size_t i = 0; i < x_.n_cells(k); ++i) {
                    Simplex img = image_simplex(g, x_.cell(k, i));
                    if (int(img.size()) != k + 1 || !x_.has(img)) {
                        issues.push_back({"element " + std::to_string(g) +
                                          " does not map simplex " + x_.cell_name(k, i) +
                                          " to a simplex"});
                    }
                }
        }
        // closure under composition
        for (std::size_t g = 0; g < perm_.size(); ++g)
            for (std::size_t h = 0; h < perm_.size(); ++h) {
                std::vector<int> comp(x_.n_vertices());
                for (std::size_t v = 0; v < x_.n_vertices(); ++v)
                    comp[v] = perm_[g][std::size_t(perm_[h][v])];
                if (std::find(perm_.begin(), perm_.end(), comp) == perm_.end()) {
                    issues.push_back({"composition table not closed"});
                    g = h = perm_.size();
                    break;
                }
            }
        if (perm_.size() == 2) {
            std::vector<int> sq(x_.n_vertices());
            for (std::size_t v = 0; v < x_.n_vertices(); ++v)
                sq[v] = perm_[1][std::size_t(perm_[1][v])];
            for (std::size_t v = 0; v < x_.n_vertices(); ++v)
                if (sq[v] != int(v)) {
                    issues.push_back({"order-2 generator is not an involution"});
                    break;
                }
        }
        return issues;
    }

private:
    Simplex image_simplex(std::size_t g, const Simplex& s) const {
        Simplex img;
        for (int v : s) img.push_back(perm_[g][std::size_t(v)]);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        return img;
    }

    void build_cell_perms() {
        cell_perm_.assign(perm_.size(), {});
        for (std::size_t g = 0; g < perm_.size(); ++g) {
            cell_perm_[g].assign(std::size_t(x_.dim()) + 1, {});
            for (int k = 0; k <= x_.dim(); ++k) {
                cell_perm_[g][std::size_t(k)].resize(x_.n_cells(k));
                for (std::size_t i = 0; i < x_.n_cells(k); ++i) {
                    Simplex img = image_simplex(g, x_.cell(k, i));
                    const int idx = x_.index_of(img);
                    cell_perm_[g][std::size_t(k)][i] =
                        idx >= 0 ? std::size_t(idx) : i;  // validate() reports the defect
                }
            }
        }
    }

    Complex x_;
    std::vector<std::vector<int>> perm_;
    std::vector<std::vector<std::vector<std::size_t>>> cell_perm_;
};

/// A complex together with a group action; the ambient object of the
/// filtration and splitting machinery.
struct GComplex {
    Complex x;
    GroupAction action;
};

}  // namespace equichain

#endif
