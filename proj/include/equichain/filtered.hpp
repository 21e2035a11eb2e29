#ifndef EQUICHAIN_FILTERED_HPP
#define EQUICHAIN_FILTERED_HPP

#include <string>
#include <vector>

#include "equichain/chain_complex.hpp"

namespace equichain {

/// Chain complex with a bounded increasing filtration F_p by subcomplexes:
/// F_p(n) grows with p, the boundary maps F_p into F_p, everything below
/// p_min is zero and F_{p_max} is the whole space.  May carry a linear
/// group action (one matrix per degree and group element) under which the
/// filtration is stable.
class FilteredComplex {
public:
    FilteredComplex() = default;

    FilteredComplex(ChainComplexGF2 cc, int p_min, int p_max,
                    std::vector<std::vector<Subspace>> levels)
        : cc_(std::move(cc)), p_min_(p_min), p_max_(p_max), levels_(std::move(levels)) {}

    const ChainComplexGF2& complex() const { return cc_; }
    int p_min() const { return p_min_; }
    int p_max() const { return p_max_; }

    /// F_p in degree n, clamped to the bounds.
    Subspace level(int p, int n) const {
        if (n < 0 || n > cc_.top_degree()) return Subspace::zero(cc_.dim(n));
        if (p < p_min_) return Subspace::zero(cc_.dim(n));
        if (p > p_max_) p = p_max_;
        return levels_[std::size_t(n)][std::size_t(p - p_min_)];
    }

    void set_actions(std::vector<std::vector<Gf2Matrix>> actions) { actions_ = std::move(actions); }
    bool has_actions() const { return !actions_.empty(); }
    std::size_t group_order() const { return actions_.size(); }
    const Gf2Matrix& action(std::size_t g, int n) const { return actions_[g][std::size_t(n)]; }

    std::vector<ValidationIssue> validate() const {
        std::vector<ValidationIssue> issues;
        if (!cc_.is_complex()) issues.push_back({"boundary does not square to zero"});
        for (int n = 0; n <= cc_.top_degree(); ++n) {
            for (int p = p_min_; p < p_max_; ++p)
                if (!level(p + 1, n).contains(level(p, n)))
                    issues.push_back({"filtration not increasing at p=" + std::to_string(p) +
                                      " degree " + std::to_string(n)});
            if (!level(p_max_, n).is_full())
                issues.push_back({"top filtration level is not everything in degree " +
                                  std::to_string(n)});
            for (int p = p_min_; p <= p_max_; ++p) {
                const Subspace img = Subspace::image(cc_.boundary(n), level(p, n));
                if (!level(p, n - 1).contains(img))
                    issues.push_back({"boundary leaves F_" + std::to_string(p) +
                                      " in degree " + std::to_string(n)});
            }
        }
        if (has_actions()) {
            bool chain_map_ok = true;
            for (std::size_t g = 0; g < actions_.size(); ++g)
                for (int n = 0; n <= cc_.top_degree(); ++n) {
                    if (n >= 1 && chain_map_ok) {
                        const Gf2Matrix a = cc_.boundary(n) * action(g, n);
                        const Gf2Matrix b = action(g, n - 1) * cc_.boundary(n);
                        if (!(a == b)) {
                            issues.push_back({"action is not a chain map"});
                            chain_map_ok = false;
                        }
                    }
                    for (int p = p_min_; p <= p_max_; ++p) {
                        const Subspace img = Subspace::image(action(g, n), level(p, n));
                        if (!level(p, n).contains(img))
                            issues.push_back({"filtration level not stable under the action"});
                    }
                }
        }
        return issues;
    }

private:
    ChainComplexGF2 cc_;
    int p_min_ = 0, p_max_ = 0;
    std::vector<std::vector<Subspace>> levels_;  // [degree][p - p_min]
    std::vector<std::vector<Gf2Matrix>> actions_;
};

/// Homological truncation filtration: in degree n everything enters at
/// p = -n + shift + 1 and the cycles one step earlier, so E^1 recovers
/// homology.  The shift constant is a pure reindexing.
inline FilteredComplex canonical_filtration(const ChainComplexGF2& cc, int shift = 0) {
    const int N = cc.top_degree();
    const int p_min = -N + shift;
    const int p_max = shift + 1 > p_min ? shift + 1 : p_min;
    std::vector<std::vector<Subspace>> levels(std::size_t(N) + 1);
    for (int n = 0; n <= N; ++n) {
        const int jump = -n + shift;  // F_jump(n) = ker, F_{jump+1}(n) = all
        for (int p = p_min; p <= p_max; ++p) {
            if (p < jump)
                levels[std::size_t(n)].push_back(Subspace::zero(cc.dim(n)));
            else if (p == jump)
                levels[std::size_t(n)].push_back(cc.cycles(n));
            else
                levels[std::size_t(n)].push_back(Subspace::full(cc.dim(n)));
        }
    }
    return FilteredComplex(cc, p_min, p_max, std::move(levels));
}

/// Trivial one-jump filtration (everything at p = 0).
inline FilteredComplex trivial_filtration(const ChainComplexGF2& cc) {
    std::vector<std::vector<Subspace>> levels(std::size_t(cc.top_degree()) + 1);
    for (int n = 0; n <= cc.top_degree(); ++n)
        levels[std::size_t(n)].push_back(Subspace::full(cc.dim(n)));
    return FilteredComplex(cc, 0, 0, std::move(levels));
}

/// Filtration-respecting chain map between filtered complexes.
class FilteredMap {
public:
    FilteredMap() = default;
    FilteredMap(FilteredComplex src, FilteredComplex dst, std::vector<Gf2Matrix> deg_maps)
        : src_(std::move(src)), dst_(std::move(dst)), f_(std::move(deg_maps)) {}

    const FilteredComplex& source() const { return src_; }
    const FilteredComplex& target() const { return dst_; }

    Gf2Matrix map(int n) const {
        if (n < 0 || n >= int(f_.size()))
            return Gf2Matrix(dst_.complex().dim(n), src_.complex().dim(n));
        return f_[std::size_t(n)];
    }

    std::vector<ValidationIssue> validate() const {
        std::vector<ValidationIssue> issues;
        const int N = std::max(src_.complex().top_degree(), dst_.complex().top_degree());
        for (int n = 0; n <= N; ++n) {
            const Gf2Matrix a = dst_.complex().boundary(n) * map(n);
            const Gf2Matrix b = map(n - 1) * src_.complex().boundary(n);
            if (!(a == b)) issues.push_back({"not a chain map in degree " + std::to_string(n)});
            for (int p = std::min(src_.p_min(), dst_.p_min());
                 p <= std::max(src_.p_max(), dst_.p_max()); ++p) {
                const Subspace img = Subspace::image(map(n), src_.level(p, n));
                if (!dst_.level(p, n).contains(img))
                    issues.push_back({"map does not respect F_" + std::to_string(p) +
                                      " in degree " + std::to_string(n)});
            }
        }
        return issues;
    }

private:
    FilteredComplex src_, dst_;
    std::vector<Gf2Matrix> f_;
};

}  // namespace equichain

#endif
