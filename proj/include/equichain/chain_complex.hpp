#ifndef EQUICHAIN_CHAIN_COMPLEX_HPP
#define EQUICHAIN_CHAIN_COMPLEX_HPP

#include <string>
#include <vector>

#include "equichain/complex.hpp"

namespace equichain {

/// Bounded chain complex of GF(2) vector spaces in degrees 0..n with
/// boundary matrices bnd[k] : C_k -> C_{k-1}.
class ChainComplexGF2 {
public:
    ChainComplexGF2() = default;

    ChainComplexGF2(std::vector<std::size_t> dims, std::vector<Gf2Matrix> bnd)
        : dims_(std::move(dims)), bnd_(std::move(bnd)) {}

    static ChainComplexGF2 from_complex(const Complex& x) {
        std::vector<std::size_t> dims;
        std::vector<Gf2Matrix> bnd;
        for (int k = 0; k <= x.dim(); ++k) {
            dims.push_back(x.n_cells(k));
            bnd.push_back(x.boundary_matrix(k));
        }
        if (dims.empty()) {
            dims.push_back(0);
            bnd.emplace_back(0, 0);
        }
        return ChainComplexGF2(std::move(dims), std::move(bnd));
    }

    /// Borel-Moore style complex of the open complement X minus Y: the
    /// cells outside Y with incidences restricted to retained cells.
    static ChainComplexGF2 from_open_complement(const Complex& x, const ClosedSubcomplex& y) {
        std::vector<std::vector<std::size_t>> keep(std::size_t(x.dim()) + 1);
        std::vector<std::vector<int>> pos(std::size_t(x.dim()) + 1);
        for (int k = 0; k <= x.dim(); ++k) {
            pos[std::size_t(k)].assign(x.n_cells(k), -1);
            for (std::size_t i = 0; i < x.n_cells(k); ++i)
                if (!y.contains(k, i)) {
                    pos[std::size_t(k)][i] = int(keep[std::size_t(k)].size());
                    keep[std::size_t(k)].push_back(i);
                }
        }
        std::vector<std::size_t> dims;
        std::vector<Gf2Matrix> bnd;
        for (int k = 0; k <= x.dim(); ++k) {
            dims.push_back(keep[std::size_t(k)].size());
            Gf2Matrix m(k >= 1 ? keep[std::size_t(k - 1)].size() : 0, keep[std::size_t(k)].size());
            if (k >= 1)
                for (std::size_t c = 0; c < keep[std::size_t(k)].size(); ++c)
                    for (int f : x.faces_of(k, keep[std::size_t(k)][c])) {
                        const int fp = pos[std::size_t(k - 1)][std::size_t(f)];
                        if (fp >= 0) m.set(std::size_t(fp), c, true);
                    }
            bnd.push_back(std::move(m));
        }
        if (dims.empty()) {
            dims.push_back(0);
            bnd.emplace_back(0, 0);
        }
        return ChainComplexGF2(std::move(dims), std::move(bnd));
    }

    int top_degree() const { return int(dims_.size()) - 1; }

    std::size_t dim(int n) const {
        if (n < 0 || n > top_degree()) return 0;
        return dims_[std::size_t(n)];
    }

    /// Boundary out of degree n; zero matrix outside the support range.
    Gf2Matrix boundary(int n) const {
        if (n < 0 || n > top_degree()) return Gf2Matrix(dim(n - 1), dim(n));
        return bnd_[std::size_t(n)];
    }

    bool is_complex() const {
        for (int n = 1; n <= top_degree(); ++n) {
            const Gf2Matrix p = boundary(n - 1) * boundary(n);
            for (std::size_t i = 0; i < p.rows(); ++i)
                if (!p.row(i).is_zero()) return false;
        }
        return true;
    }

    std::size_t betti(int n) const {
        if (n < 0 || n > top_degree()) return 0;
        const std::size_t rk_n = boundary(n).rank();
        const std::size_t rk_n1 = boundary(n + 1).rank();
        return dim(n) - rk_n - rk_n1;
    }

    std::vector<std::size_t> betti_numbers() const {
        std::vector<std::size_t> b;
        for (int n = 0; n <= top_degree(); ++n) b.push_back(betti(n));
        return b;
    }

    std::size_t total_homology() const {
        std::size_t t = 0;
        for (int n = 0; n <= top_degree(); ++n) t += betti(n);
        return t;
    }

    Subspace cycles(int n) const { return Subspace::kernel(boundary(n)); }

    Subspace boundaries(int n) const {
        return Subspace::image(boundary(n + 1), Subspace::full(dim(n + 1)));
    }

private:
    std::vector<std::size_t> dims_;
    std::vector<Gf2Matrix> bnd_;
};

}  // namespace equichain

#endif
