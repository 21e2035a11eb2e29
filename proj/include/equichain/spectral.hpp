#ifndef EQUICHAIN_SPECTRAL_HPP
#define EQUICHAIN_SPECTRAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "equichain/filtered.hpp"

namespace equichain {

/// One spot E^r_{p,q} held as an explicit quotient Z/D of chain
/// subspaces, so induced maps can be evaluated on representatives.
struct PageSpot {
    Subspace Z, D;
    QuotientSpace E;
    std::size_t dim = 0;
};

/// Spectral sequence of a bounded filtered complex, computed from the
/// standard approximate-cycle subspaces
///   Z^r_{p,q} = F_p C_{p+q}  intersect  d^{-1}(F_{p-r} C_{p+q-1})
///   E^r_{p,q} = Z^r / (Z^{r-1}_{p-1,q+1} + d Z^{r-1}_{p+r-1,q-r+2}).
/// Spots are indexed by (p, n) with n = p + q the total degree.
class SpectralSequence {
public:
    using Key = std::pair<int, int>;  // (p, n)

    struct Page {
        std::map<Key, PageSpot> spot;
        std::map<Key, Gf2Matrix> d;  // differential leaving (p, n)
        bool all_d_zero = true;

        std::size_t dim(int p, int n) const {
            auto it = spot.find({p, n});
            return it == spot.end() ? 0 : it->second.dim;
        }
        std::size_t total() const {
            std::size_t t = 0;
            for (const auto& [k, s] : spot) t += s.dim;
            return t;
        }
    };

    explicit SpectralSequence(const FilteredComplex& fc) : fc_(fc) {
        const int N = fc.complex().top_degree();
        const int width = fc.p_max() - fc.p_min();
        const int r_last = width + 2;
        pages_.reserve(std::size_t(r_last) + 1);
        for (int r = 0; r <= r_last; ++r) pages_.push_back(make_page(r));
        stable_ = 0;
        for (int r = r_last; r >= 0; --r) {
            if (!same_dims(pages_[std::size_t(r)], pages_.back()) ||
                !pages_[std::size_t(r)].all_d_zero) {
                stable_ = std::size_t(r) + 1;
                break;
            }
        }
        (void)N;
    }

    const FilteredComplex& filtered() const { return fc_; }
    std::size_t n_pages() const { return pages_.size(); }
    const Page& page(std::size_t r) const { return pages_[r]; }
    std::size_t stable_page() const { return stable_; }
    const Page& infinity() const { return pages_.back(); }

    /// Sum of E^infinity dimensions in total degree n.
    std::size_t einf_total(int n) const {
        std::size_t t = 0;
        for (const auto& [k, s] : infinity().spot)
            if (k.second == n) t += s.dim;
        return t;
    }

    /// Dimension of the induced filtration step F_p H_n.
    std::size_t homology_filtration_dim(int p, int n) const {
        const auto& cc = fc_.complex();
        const Subspace Zn = cc.cycles(n);
        const Subspace Bn = cc.boundaries(n);
        const Subspace num = intersect(Zn, fc_.level(p, n)) + Bn;
        return num.dim() - Bn.dim();
    }

    /// E^infinity must be the graded of the induced filtration on homology.
    bool converges_to_homology() const {
        const auto& cc = fc_.complex();
        for (int n = 0; n <= cc.top_degree(); ++n) {
            if (einf_total(n) != cc.betti(n)) return false;
            for (int p = fc_.p_min(); p <= fc_.p_max(); ++p) {
                const std::size_t grd =
                    homology_filtration_dim(p, n) - homology_filtration_dim(p - 1, n);
                if (grd != infinity().dim(p, n)) return false;
            }
        }
        return true;
    }

    bool e1_is_zero() const {
        const Page& p1 = pages_.size() > 1 ? pages_[1] : pages_[0];
        return p1.total() == 0;
    }

private:
    /// Z^s with the conventions Z^s = F_p for s <= 0.
    Subspace zspace(int s, int p, int n) const {
        const Subspace Fp = fc_.level(p, n);
        if (s <= 0) return Fp;
        const Subspace pre =
            Subspace::preimage(fc_.complex().boundary(n), fc_.level(p - s, n - 1));
        return intersect(Fp, pre);
    }

    Page make_page(int r) const {
        Page pg;
        const int N = fc_.complex().top_degree();
        for (int n = 0; n <= N; ++n)
            for (int p = fc_.p_min(); p <= fc_.p_max(); ++p) {
                Subspace Z = zspace(r, p, n);
                Subspace D = zspace(r - 1, p - 1, n) +
                             Subspace::image(fc_.complex().boundary(n + 1),
                                             zspace(r - 1, p + r - 1, n + 1));
                D = intersect(D, Z);  // the denominator sits inside Z
                PageSpot spot;
                spot.dim = Z.dim() - D.dim();
                spot.Z = std::move(Z);
                spot.D = std::move(D);
                if (spot.dim > 0) spot.E = QuotientSpace(spot.Z, spot.D);
                if (spot.dim > 0 || r == 0) pg.spot.emplace(Key{p, n}, std::move(spot));
            }
        // differentials d^r : (p, n) -> (p - r, n - 1)
        for (const auto& [key, s] : pg.spot) {
            if (s.dim == 0) continue;
            const auto [p, n] = key;
            auto tgt = pg.spot.find({p - r, n - 1});
            const std::size_t tdim = tgt == pg.spot.end() ? 0 : tgt->second.dim;
            Gf2Matrix m(tdim, s.dim);
            if (tdim > 0) {
                for (std::size_t j = 0; j < s.dim; ++j) {
                    const Gf2Vector img = fc_.complex().boundary(n).apply(s.E.reps()[j]);
                    const Gf2Vector red = tgt->second.D.reduce(img);
                    if (red.is_zero()) continue;
                    const Gf2Vector c = tgt->second.E.coords(img);
                    for (std::size_t i = 0; i < tdim; ++i)
                        if (c.get(i)) m.set(i, j, true);
                }
            } else {
                // image must die in the quotient even when the spot is absent
            }
            bool nonzero = false;
            for (std::size_t i = 0; i < m.rows() && !nonzero; ++i)
                if (!m.row(i).is_zero()) nonzero = true;
            if (nonzero) pg.all_d_zero = false;
            pg.d.emplace(key, std::move(m));
        }
        return pg;
    }

    static bool same_dims(const Page& a, const Page& b) {
        for (const auto& [k, s] : a.spot)
            if (s.dim != b.dim(k.first, k.second)) return false;
        for (const auto& [k, s] : b.spot)
            if (s.dim != a.dim(k.first, k.second)) return false;
        return true;
    }

    FilteredComplex fc_;
    std::vector<Page> pages_;
    std::size_t stable_;
};

/// Certificate for the E^1-isomorphism test behind filtered
/// quasi-isomorphisms; lists a failing bidegree when there is one.
struct QuasiIsoCertificate {
    bool is_quasi_iso = false;
    bool precondition_ok = true;
    std::string detail;
    std::vector<std::pair<int, int>> failures;  // (p, q)
    bool equivariance_checked = false;
    bool equivariant_ok = true;
};

/// True iff the induced maps on every E^1_{p,q} are isomorphisms.  When
/// both sides carry actions and the map is equivariant, the induced
/// E^1 maps are checked to commute with the induced action.
inline QuasiIsoCertificate is_filtered_quasi_iso(const FilteredMap& f) {
    QuasiIsoCertificate cert;
    {
        auto issues = f.validate();
        if (!issues.empty()) {
            cert.precondition_ok = false;
            cert.detail = issues.front().what;
            return cert;
        }
    }
    SpectralSequence ss_src(f.source());
    SpectralSequence ss_tgt(f.target());
    const auto& p1s = ss_src.page(1);
    const auto& p1t = ss_tgt.page(1);

    const bool equiv = f.source().has_actions() && f.target().has_actions() &&
                       f.source().group_order() == f.target().group_order();
    cert.equivariance_checked = equiv;

    std::map<SpectralSequence::Key, bool> keys;
    for (const auto& [k, s] : p1s.spot) if (s.dim) keys[k] = true;
    for (const auto& [k, s] : p1t.spot) if (s.dim) keys[k] = true;

    cert.is_quasi_iso = true;
    for (const auto& [key, unused] : keys) {
        (void)unused;
        const auto [p, n] = key;
        const std::size_t ds = p1s.dim(p, n), dt = p1t.dim(p, n);
        if (ds != dt) {
            cert.is_quasi_iso = false;
            cert.failures.push_back({p, n - p});
            continue;
        }
        auto its = p1s.spot.find(key);
        auto itt = p1t.spot.find(key);
        if (its == p1s.spot.end() || itt == p1t.spot.end()) continue;
        Gf2Matrix m(dt, ds);
        bool ok = true;
        for (std::size_t j = 0; j < ds && ok; ++j) {
            const Gf2Vector img = f.map(n).apply(its->second.E.reps()[j]);
            if (!itt->second.Z.contains(img)) { ok = false; break; }
            const Gf2Vector c = itt->second.E.coords(img);
            for (std::size_t i = 0; i < dt; ++i)
                if (c.get(i)) m.set(i, j, true);
        }
        if (!ok || m.rank() != ds) {
            cert.is_quasi_iso = false;
            cert.failures.push_back({p, n - p});
            continue;
        }
        if (equiv) {
            for (std::size_t g = 0; g < f.source().group_order(); ++g) {
                Gf2Matrix gs(ds, ds), gt(dt, dt);
                bool act_ok = true;
                for (std::size_t j = 0; j < ds && act_ok; ++j) {
                    const Gf2Vector img = f.source().action(g, n).apply(its->second.E.reps()[j]);
                    if (!its->second.Z.contains(img)) { act_ok = false; break; }
                    const Gf2Vector c = its->second.E.coords(img);
                    for (std::size_t i = 0; i < ds; ++i)
                        if (c.get(i)) gs.set(i, j, true);
                }
                for (std::size_t j = 0; j < dt && act_ok; ++j) {
                    const Gf2Vector img = f.target().action(g, n).apply(itt->second.E.reps()[j]);
                    if (!itt->second.Z.contains(img)) { act_ok = false; break; }
                    const Gf2Vector c = itt->second.E.coords(img);
                    for (std::size_t i = 0; i < dt; ++i)
                        if (c.get(i)) gt.set(i, j, true);
                }
                if (!act_ok || !(m * gs == gt * m)) {
                    cert.equivariant_ok = false;
                    cert.failures.push_back({p, n - p});
                }
            }
        }
    }
    if (!cert.equivariant_ok) cert.is_quasi_iso = false;
    return cert;
}

}  // namespace equichain

#endif
