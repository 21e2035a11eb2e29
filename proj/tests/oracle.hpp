#ifndef EQUICHAIN_TESTS_ORACLE_HPP
#define EQUICHAIN_TESTS_ORACLE_HPP

// Brute-force oracles, kept independent of the bit-packed implementation
// they check: plain int matrices, explicit enumeration of subspace
// members as masks, set arithmetic for spectral sequence terms.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "equichain/filtered.hpp"

namespace oracle {

using IntMatrix = std::vector<std::vector<int>>;

inline std::size_t naive_rank(IntMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (m[i][col] % 2 != 0) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(m[rank], m[sel]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != rank && m[i][col] % 2 != 0)
                for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + m[rank][j]) % 2;
        ++rank;
    }
    return rank;
}

inline IntMatrix to_int_matrix(const equichain::Gf2Matrix& m) {
    IntMatrix out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.get(i, j) ? 1 : 0;
    return out;
}

/// Betti numbers by naive elimination on int matrices.
inline std::vector<std::size_t> naive_betti(const equichain::ChainComplexGF2& cc) {
    std::vector<std::size_t> b;
    for (int n = 0; n <= cc.top_degree(); ++n) {
        const std::size_t rn = naive_rank(to_int_matrix(cc.boundary(n)));
        const std::size_t rn1 = naive_rank(to_int_matrix(cc.boundary(n + 1)));
        b.push_back(cc.dim(n) - rn - rn1);
    }
    return b;
}

/// All members of a subspace as bit masks (ambient dimension <= 20).
inline std::set<std::uint64_t> enumerate_members(const equichain::Subspace& s) {
    std::set<std::uint64_t> out;
    const auto& basis = s.basis();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << basis.size()); ++mask) {
        equichain::Gf2Vector v(s.ambient());
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (mask & (std::uint64_t(1) << i)) v ^= basis[i];
        std::uint64_t bits = 0;
        for (std::size_t j : v.support()) bits |= std::uint64_t(1) << j;
        out.insert(bits);
    }
    return out;
}

inline std::uint64_t apply_mask(const IntMatrix& m, std::uint64_t x, std::size_t rows) {
    std::uint64_t y = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        int acc = 0;
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (x & (std::uint64_t(1) << j)) acc ^= m[i][j] & 1;
        if (acc) y |= std::uint64_t(1) << i;
    }
    return y;
}

inline std::size_t set_dim(const std::set<std::uint64_t>& s) {
    std::size_t d = 0;
    std::size_t n = s.size();
    while (n > 1) { n >>= 1; ++d; }
    return d;
}

/// XOR-closure of a union of sets (both already subgroups).
inline std::set<std::uint64_t> set_sum(const std::set<std::uint64_t>& a,
                                       const std::set<std::uint64_t>& b) {
    std::set<std::uint64_t> out;
    for (auto x : a)
        for (auto y : b) out.insert(x ^ y);
    return out;
}

/// E^r dimension tables of a filtered complex by exhaustive enumeration.
/// Keyed by (p, total degree n).  Usable when every chain space has
/// dimension at most ~14.
inline std::map<std::pair<int, int>, std::size_t> brute_force_page(
    const equichain::FilteredComplex& fc, int r) {
    std::map<std::pair<int, int>, std::size_t> dims;
    const auto& cc = fc.complex();
    std::vector<IntMatrix> bnd;
    for (int n = 0; n <= cc.top_degree() + 1; ++n) bnd.push_back(to_int_matrix(cc.boundary(n)));

    auto members = [&](int p, int n) { return enumerate_members(fc.level(p, n)); };
    auto zset = [&](int s, int p, int n) {
        std::set<std::uint64_t> z;
        for (auto x : members(p, n)) {
            if (s <= 0) { z.insert(x); continue; }
            const std::uint64_t dx = apply_mask(bnd[std::size_t(n)], x, cc.dim(n - 1));
            std::set<std::uint64_t> low = members(p - s, n - 1);
            if (low.count(dx)) z.insert(x);
        }
        return z;
    };

    for (int n = 0; n <= cc.top_degree(); ++n)
        for (int p = fc.p_min(); p <= fc.p_max(); ++p) {
            std::set<std::uint64_t> Z = zset(r, p, n);
            std::set<std::uint64_t> D1 = zset(r - 1, p - 1, n);
            std::set<std::uint64_t> Zup = zset(r - 1, p + r - 1, n + 1);
            std::set<std::uint64_t> D2;
            for (auto x : Zup) D2.insert(apply_mask(bnd[std::size_t(n + 1)], x, cc.dim(n)));
            std::set<std::uint64_t> D = set_sum(D1, D2);
            std::set<std::uint64_t> DinZ;
            for (auto x : D)
                if (Z.count(x)) DinZ.insert(x);
            const std::size_t d = set_dim(Z) - set_dim(DinZ);
            if (d) dims[{p, n}] = d;
        }
    return dims;
}

}  // namespace oracle

#endif
