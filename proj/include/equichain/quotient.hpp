#ifndef EQUICHAIN_QUOTIENT_HPP
#define EQUICHAIN_QUOTIENT_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "equichain/action.hpp"
#include "equichain/cellmap.hpp"
#include "equichain/subdivision.hpp"

namespace equichain {

/// Orbit complex of a Z/2 action.  The construction is simplicial only
/// when setwise-invariant cells are pointwise fixed and cells with equal
/// images lie in one orbit; otherwise the input is subdivided (at most
/// twice) and the quotient is taken there.
struct QuotientResult {
    bool ok = false;
    std::string error;
    int subdivisions = 0;
    Complex base;          // the (possibly subdivided) complex actually quotiented
    GroupAction base_action;
    Complex quotient;
    CellularMap pi;        // base -> quotient
};

namespace detail {

inline std::string orbit_vertex_name(const Complex& x, const GroupAction& a, int v) {
    const std::string& n1 = x.vertex_name(v);
    const std::string& n2 = x.vertex_name(a.apply_vertex(a.order() - 1, v));
    return n1 < n2 ? n1 : n2;
}

/// Checks the two conditions that make the orbit map simplicial.
inline bool quotient_conditions_hold(const Complex& x, const GroupAction& a,
                                     std::string* why) {
    if (!a.is_regular()) {
        if (why) *why = "a setwise-invariant simplex is not pointwise fixed";
        return false;
    }
    const std::size_t sig = a.order() - 1;
    for (int k = 0; k <= x.dim(); ++k) {
        std::map<std::vector<std::string>, std::size_t> image_owner;
        for (std::size_t i = 0; i < x.n_cells(k); ++i) {
            std::vector<std::string> img;
            for (int v : x.cell(k, i)) img.push_back(orbit_vertex_name(x, a, v));
            std::sort(img.begin(), img.end());
            if (std::unique(img.begin(), img.end()) != img.end()) {
                if (why) *why = "simplex " + x.cell_name(k, i) + " meets its own orbit";
                return false;
            }
            auto [it, fresh] = image_owner.emplace(img, i);
            if (!fresh) {
                const std::size_t other = it->second;
                if (a.apply_cell(sig, k, other) != i && other != i) {
                    if (why)
                        *why = "cells " + x.cell_name(k, other) + " and " + x.cell_name(k, i) +
                               " have equal image but are not an orbit";
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace detail

/// Orbit map for a Z/2 action, subdividing as needed.  With require_free
/// the fixed subcomplex must be empty and every quotient cell acquires
/// exactly two preimages.
inline QuotientResult build_quotient(const GComplex& gx, bool require_free,
                                     int max_subdivisions = 2) {
    QuotientResult res;
    if (gx.action.order() != 2) {
        res.error = "quotient requires a Z/2 action";
        return res;
    }
    Complex x = gx.x;
    GroupAction act = gx.action;
    std::string why;
    int subs = 0;
    while (!detail::quotient_conditions_hold(x, act, &why)) {
        if (subs >= max_subdivisions) {
            res.error = "quotient not simplicial after " + std::to_string(subs) +
                        " subdivisions: " + why;
            return res;
        }
        BarycentricSubdivision sd(x);
        act = sd.transport(act);
        x = sd.result();
        ++subs;
    }
    if (require_free && !act.fixed_subcomplex().is_empty()) {
        res.error = "action is not free: fixed subcomplex is nonempty";
        return res;
    }

    std::set<std::string> qnames;
    for (std::size_t v = 0; v < x.n_vertices(); ++v)
        qnames.insert(detail::orbit_vertex_name(x, act, int(v)));
    std::vector<std::vector<std::string>> qsimplices;
    for (int k = 0; k <= x.dim(); ++k)
        for (std::size_t i = 0; i < x.n_cells(k); ++i) {
            std::vector<std::string> img;
            for (int v : x.cell(k, i)) img.push_back(detail::orbit_vertex_name(x, act, v));
            qsimplices.push_back(img);
        }
    Complex q = Complex::from_simplices({qnames.begin(), qnames.end()}, qsimplices);

    std::vector<int> vmap(x.n_vertices());
    for (std::size_t v = 0; v < x.n_vertices(); ++v)
        vmap[v] = q.vertex_index(detail::orbit_vertex_name(x, act, int(v)));
    CellularMap pi(x, q, vmap);

    if (require_free) {
        for (int k = 0; k <= q.dim(); ++k) {
            std::vector<int> count(q.n_cells(k), 0);
            for (std::size_t i = 0; i < x.n_cells(k); ++i) {
                Simplex img = pi.image_simplex(x.cell(k, i));
                const int j = q.index_of(img);
                if (j >= 0 && int(img.size()) == k + 1) ++count[std::size_t(j)];
            }
            for (std::size_t j = 0; j < q.n_cells(k); ++j)
                if (count[j] != 2) {
                    res.error = "quotient cell " + q.cell_name(k, j) + " has " +
                                std::to_string(count[j]) + " preimages";
                    return res;
                }
        }
    }

    res.ok = true;
    res.subdivisions = subs;
    res.base = x;
    res.base_action = act;
    res.quotient = q;
    res.pi = pi;
    return res;
}

}  // namespace equichain

#endif
