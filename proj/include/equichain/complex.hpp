#ifndef EQUICHAIN_COMPLEX_HPP
#define EQUICHAIN_COMPLEX_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "equichain/gf2.hpp"

namespace equichain {

/// A simplex as a sorted list of vertex indices.
using Simplex = std::vector<int>;

struct ValidationIssue {
    std::string what;
};

/// Finite abstract simplicial complex.  Immutable after construction;
/// copies share the underlying data.
class Complex {
public:
    Complex() : d_(std::make_shared<Data>()) {}

    /// Builds the complex generated by the given simplices (faces added).
    static Complex from_simplices(std::vector<std::string> vertex_names,
                                  const std::vector<std::vector<std::string>>& simplices) {
        std::set<std::string> names(vertex_names.begin(), vertex_names.end());
        for (const auto& s : simplices)
            for (const auto& v : s) names.insert(v);
        auto d = std::make_shared<Data>();
        d->vertex_names.assign(names.begin(), names.end());
        std::map<std::string, int> idx;
        for (std::size_t i = 0; i < d->vertex_names.size(); ++i)
            idx[d->vertex_names[i]] = int(i);

        std::set<Simplex> all;
        for (std::size_t i = 0; i < d->vertex_names.size(); ++i) all.insert({int(i)});
        for (const auto& s : simplices) {
            Simplex sx;
            for (const auto& v : s) sx.push_back(idx.at(v));
            std::sort(sx.begin(), sx.end());
            sx.erase(std::unique(sx.begin(), sx.end()), sx.end());
            if (sx.empty()) continue;
            // every nonempty subset is a face
            const std::size_t n = sx.size();
            for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
                Simplex f;
                for (std::size_t b = 0; b < n; ++b)
                    if (mask & (std::size_t(1) << b)) f.push_back(sx[b]);
                all.insert(f);
            }
        }
        fill_cells(*d, all);
        return Complex(std::move(d));
    }

    /// Builds exactly the given cell set, without closing under faces.
    /// Used to exercise validate() on defective inputs.
    static Complex raw(std::vector<std::string> vertex_names,
                       const std::vector<std::vector<std::string>>& simplices) {
        auto d = std::make_shared<Data>();
        std::set<std::string> names(vertex_names.begin(), vertex_names.end());
        for (const auto& s : simplices)
            for (const auto& v : s) names.insert(v);
        d->vertex_names.assign(names.begin(), names.end());
        std::map<std::string, int> idx;
        for (std::size_t i = 0; i < d->vertex_names.size(); ++i)
            idx[d->vertex_names[i]] = int(i);
        std::set<Simplex> all;
        for (const auto& s : simplices) {
            Simplex sx;
            for (const auto& v : s) sx.push_back(idx.at(v));
            std::sort(sx.begin(), sx.end());
            sx.erase(std::unique(sx.begin(), sx.end()), sx.end());
            if (!sx.empty()) all.insert(sx);
        }
        fill_cells(*d, all);
        return Complex(std::move(d));
    }

    int dim() const { return int(d_->cells.size()) - 1; }

    std::size_t n_cells(int k) const {
        if (k < 0 || k > dim()) return 0;
        return d_->cells[std::size_t(k)].size();
    }

    std::size_t n_vertices() const { return d_->vertex_names.size(); }

    const Simplex& cell(int k, std::size_t i) const { return d_->cells[std::size_t(k)][i]; }

    const std::vector<Simplex>& cells(int k) const { return d_->cells[std::size_t(k)]; }

    const std::string& vertex_name(int v) const { return d_->vertex_names[std::size_t(v)]; }

    int vertex_index(const std::string& name) const {
        const auto& vn = d_->vertex_names;
        auto it = std::lower_bound(vn.begin(), vn.end(), name);
        if (it == vn.end() || *it != name) return -1;
        return int(it - vn.begin());
    }

    /// Index of a simplex among cells of its dimension, or -1.
    int index_of(const Simplex& s) const {
        const int k = int(s.size()) - 1;
        if (k < 0 || k > dim()) return -1;
        const auto& row = d_->cells[std::size_t(k)];
        auto it = std::lower_bound(row.begin(), row.end(), s);
        if (it == row.end() || *it != s) return -1;
        return int(it - row.begin());
    }

    bool has(const Simplex& s) const { return index_of(s) >= 0; }

    /// Indices of the (k-1)-faces of cell i in dimension k.
    const std::vector<int>& faces_of(int k, std::size_t i) const {
        return d_->faces[std::size_t(k)][i];
    }

    /// Indices of the (k+1)-cofaces of cell i in dimension k.
    const std::vector<int>& cofaces_of(int k, std::size_t i) const {
        return d_->cofaces[std::size_t(k)][i];
    }

    std::string cell_name(int k, std::size_t i) const {
        const auto& s = cell(k, i);
        std::string out;
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j) out.push_back('-');
            out += vertex_name(s[j]);
        }
        return out;
    }

    /// Face-closure and uniqueness report per the structural contract.
    std::vector<ValidationIssue> validate() const {
        std::vector<ValidationIssue> issues;
        for (int k = 1; k <= dim(); ++k) {
            for (std::size_t i = 0; i < n_cells(k); ++i) {
                const Simplex& s = cell(k, i);
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    Simplex f;
                    for (std::size_t j = 0; j < s.size(); ++j)
                        if (j != drop) f.push_back(s[j]);
                    if (!has(f))
                        issues.push_back({"missing face " + simplex_label(f) +
                                          " of simplex " + cell_name(k, i)});
                }
            }
        }
        return issues;
    }

    /// Boundary matrix from C_k to C_{k-1} by odd incidence.
    Gf2Matrix boundary_matrix(int k) const {
        const std::size_t nk = n_cells(k);
        const std::size_t nk1 = k >= 1 ? n_cells(k - 1) : 0;
        Gf2Matrix m(nk1, nk);
        if (k < 1 || k > dim()) return m;
        for (std::size_t i = 0; i < nk; ++i)
            for (int f : faces_of(k, i)) m.set(std::size_t(f), i, true);
        return m;
    }

    bool same_as(const Complex& o) const { return d_ == o.d_; }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.d_ == b.d_ ||
               (a.d_->vertex_names == b.d_->vertex_names && a.d_->cells == b.d_->cells);
    }

private:
    struct Data {
        std::vector<std::string> vertex_names;            // sorted
        std::vector<std::vector<Simplex>> cells;          // per dim, sorted
        std::vector<std::vector<std::vector<int>>> faces;  // per dim, per cell
        std::vector<std::vector<std::vector<int>>> cofaces;
    };

    explicit Complex(std::shared_ptr<Data> d) : d_(std::move(d)) {}

    std::string simplex_label(const Simplex& s) const {
        std::string out;
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j) out.push_back('-');
            out += vertex_name(s[j]);
        }
        return out;
    }

    static void fill_cells(Data& d, const std::set<Simplex>& all) {
        std::size_t maxdim = 0;
        for (const auto& s : all) maxdim = std::max(maxdim, s.size());
        d.cells.assign(maxdim, {});
        for (const auto& s : all) d.cells[s.size() - 1].push_back(s);
        for (auto& row : d.cells) std::sort(row.begin(), row.end());

        d.faces.assign(d.cells.size(), {});
        d.cofaces.assign(d.cells.size(), {});
        for (std::size_t k = 0; k < d.cells.size(); ++k) {
            d.faces[k].assign(d.cells[k].size(), {});
            d.cofaces[k].assign(d.cells[k].size(), {});
        }
        for (std::size_t k = 1; k < d.cells.size(); ++k) {
            for (std::size_t i = 0; i < d.cells[k].size(); ++i) {
                const Simplex& s = d.cells[k][i];
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    Simplex f;
                    for (std::size_t j = 0; j < s.size(); ++j)
                        if (j != drop) f.push_back(s[j]);
                    const auto& row = d.cells[k - 1];
                    auto it = std::lower_bound(row.begin(), row.end(), f);
                    if (it != row.end() && *it == f) {
                        const int fi = int(it - row.begin());
                        d.faces[k][i].push_back(fi);
                        d.cofaces[k - 1][std::size_t(fi)].push_back(int(i));
                    }
                }
                std::sort(d.faces[k][i].begin(), d.faces[k][i].end());
            }
        }
    }

    std::shared_ptr<Data> d_;
};

/// Subcomplex closed under faces, stored as per-dimension cell masks.
class ClosedSubcomplex {
public:
    ClosedSubcomplex() = default;

    static ClosedSubcomplex empty(const Complex& parent) {
        ClosedSubcomplex s;
        s.parent_ = parent;
        s.mask_.reserve(std::size_t(parent.dim()) + 1);
        for (int k = 0; k <= parent.dim(); ++k) s.mask_.emplace_back(parent.n_cells(k));
        return s;
    }

    static ClosedSubcomplex whole(const Complex& parent) {
        ClosedSubcomplex s = empty(parent);
        for (int k = 0; k <= parent.dim(); ++k)
            for (std::size_t i = 0; i < parent.n_cells(k); ++i) s.mask_[std::size_t(k)].set(i, true);
        return s;
    }

    /// Closure of the listed cells inside the parent.
    static ClosedSubcomplex closure_of(const Complex& parent,
                                       const std::vector<std::pair<int, std::size_t>>& cells) {
        ClosedSubcomplex s = empty(parent);
        for (auto [k, i] : cells) s.add_with_faces(k, i);
        return s;
    }

    const Complex& parent() const { return parent_; }

    bool contains(int k, std::size_t i) const {
        if (k < 0 || k > parent_.dim()) return false;
        return mask_[std::size_t(k)].get(i);
    }

    const Gf2Vector& mask(int k) const { return mask_[std::size_t(k)]; }

    std::size_t n_cells(int k) const {
        if (k < 0 || k > parent_.dim()) return 0;
        return mask_[std::size_t(k)].popcount();
    }

    std::size_t total_cells() const {
        std::size_t n = 0;
        for (const auto& m : mask_) n += m.popcount();
        return n;
    }

    int dim() const {
        for (int k = parent_.dim(); k >= 0; --k)
            if (!mask_[std::size_t(k)].is_zero()) return k;
        return -1;
    }

    bool is_empty() const { return dim() < 0; }

    std::vector<ValidationIssue> validate() const {
        std::vector<ValidationIssue> issues;
        for (int k = 1; k <= parent_.dim(); ++k)
            for (std::size_t i : mask_[std::size_t(k)].support())
                for (int f : parent_.faces_of(k, i))
                    if (!mask_[std::size_t(k - 1)].get(std::size_t(f)))
                        issues.push_back({"subcomplex not closed: face " +
                                          parent_.cell_name(k - 1, std::size_t(f)) +
                                          " of " + parent_.cell_name(k, i) + " missing"});
        return issues;
    }

    friend ClosedSubcomplex operator&(const ClosedSubcomplex& a, const ClosedSubcomplex& b) {
        ClosedSubcomplex s = a;
        for (std::size_t k = 0; k < s.mask_.size(); ++k) s.mask_[k] &= b.mask_[k];
        return s;
    }

    friend bool operator==(const ClosedSubcomplex& a, const ClosedSubcomplex& b) {
        return a.mask_ == b.mask_;
    }
    friend bool operator!=(const ClosedSubcomplex& a, const ClosedSubcomplex& b) {
        return !(a == b);
    }

    void add_with_faces(int k, std::size_t i) {
        if (mask_[std::size_t(k)].get(i)) return;
        mask_[std::size_t(k)].set(i, true);
        if (k > 0)
            for (int f : parent_.faces_of(k, i)) add_with_faces(k - 1, std::size_t(f));
    }

private:
    Complex parent_;
    std::vector<Gf2Vector> mask_;
};

/// Mod-2 chain class with closed supports: a dimension plus a set of
/// k-cells.  The defining relations are already quotiented out, so two
/// chains are equal exactly when the supports agree.
class Chain {
public:
    Chain() = default;
    Chain(Complex parent, int k)
        : parent_(std::move(parent)), k_(k), supp_(parent_.n_cells(k)) {}
    Chain(Complex parent, int k, Gf2Vector supp)
        : parent_(std::move(parent)), k_(k), supp_(std::move(supp)) {}

    static Chain from_cells(const Complex& parent, int k,
                            const std::vector<std::vector<std::string>>& cells) {
        Chain c(parent, k);
        for (const auto& names : cells) {
            Simplex s;
            for (const auto& n : names) {
                const int v = parent.vertex_index(n);
                if (v < 0) throw std::invalid_argument("Chain: unknown vertex " + n);
                s.push_back(v);
            }
            std::sort(s.begin(), s.end());
            const int idx = parent.index_of(s);
            if (idx < 0) throw std::invalid_argument("Chain: not a cell of the complex");
            if (int(s.size()) - 1 != k)
                throw std::invalid_argument("Chain: cell dimension mismatch");
            c.supp_.flip(std::size_t(idx));
        }
        return c;
    }

    const Complex& parent() const { return parent_; }
    int k() const { return k_; }
    const Gf2Vector& support() const { return supp_; }
    bool is_zero() const { return supp_.is_zero(); }
    std::size_t size() const { return supp_.popcount(); }

    friend Chain operator+(const Chain& a, const Chain& b) {
        if (!a.parent_.same_as(b.parent_) || a.k_ != b.k_)
            throw std::invalid_argument("Chain: sum of incompatible chains");
        return Chain(a.parent_, a.k_, a.supp_ ^ b.supp_);
    }

    friend bool operator==(const Chain& a, const Chain& b) {
        return a.k_ == b.k_ && a.supp_ == b.supp_;
    }
    friend bool operator!=(const Chain& a, const Chain& b) { return !(a == b); }

    /// Boundary: the (k-1)-cells lying in an odd number of support members.
    Chain boundary() const {
        if (k_ < 1) return Chain(parent_, -1, Gf2Vector(0));
        Chain out(parent_, k_ - 1);
        for (std::size_t i : supp_.support())
            for (int f : parent_.faces_of(k_, i)) out.supp_.flip(std::size_t(f));
        return out;
    }

    /// Restriction to the closed subcomplex: keeps cells lying in y.
    Chain restrict_to_closed(const ClosedSubcomplex& y) const {
        Gf2Vector s = supp_;
        if (k_ >= 0 && k_ <= parent_.dim()) s &= y.mask(k_);
        return Chain(parent_, k_, s);
    }

    /// Restriction to the open complement X minus y.
    Chain restrict_to_open(const ClosedSubcomplex& y) const {
        Gf2Vector s = supp_;
        if (k_ >= 0 && k_ <= parent_.dim()) {
            Gf2Vector cut = supp_;
            cut &= y.mask(k_);
            s ^= cut;
        }
        return Chain(parent_, k_, s);
    }

    /// Class-level closure of a chain that arose on an open complement:
    /// the same k-support viewed in the ambient complex.
    Chain closure() const { return *this; }

    /// Support intersection with a closed subcomplex; well-defined on
    /// classes since classes record only k-cells.
    Chain intersect(const ClosedSubcomplex& a3) const { return restrict_to_closed(a3); }

    std::vector<std::string> cell_names() const {
        std::vector<std::string> out;
        for (std::size_t i : supp_.support()) out.push_back(parent_.cell_name(k_, i));
        return out;
    }

private:
    Complex parent_;
    int k_ = 0;
    Gf2Vector supp_;
};

}  // namespace equichain

#endif
