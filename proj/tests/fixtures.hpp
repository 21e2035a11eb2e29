#ifndef EQUICHAIN_TESTS_FIXTURES_HPP
#define EQUICHAIN_TESTS_FIXTURES_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "equichain/action.hpp"
#include "equichain/cellmap.hpp"
#include "equichain/complex.hpp"

namespace fixtures {

using namespace equichain;

/// Cycle graph on n vertices named "1".."n".
inline Complex polygon(int n) {
    std::vector<std::vector<std::string>> simplices;
    for (int i = 1; i <= n; ++i)
        simplices.push_back({std::to_string(i), std::to_string(i % n + 1)});
    return Complex::from_simplices({}, simplices);
}

inline Complex hexagon() { return polygon(6); }
inline Complex square_cycle() { return polygon(4); }
inline Complex triangle() { return polygon(3); }

/// Antipodal involution i -> i + n/2 on polygon(n).
inline GroupAction polygon_antipodal(const Complex& poly, int n) {
    std::map<std::string, std::string> swaps;
    for (int i = 1; i <= n; ++i)
        swaps[std::to_string(i)] = std::to_string((i - 1 + n / 2) % n + 1);
    return GroupAction::involution(poly, swaps);
}

/// Reflection of the square cycle 1-2-3-4 fixing vertices 2 and 4.
inline GroupAction square_reflection(const Complex& sq) {
    return GroupAction::involution(sq, {{"1", "3"}, {"3", "1"}});
}

/// Octahedron surface: vertices xp/xm, yp/ym, zp/zm; eight faces.
inline Complex octahedron() {
    std::vector<std::vector<std::string>> faces;
    for (const std::string x : {"xp", "xm"})
        for (const std::string y : {"yp", "ym"})
            for (const std::string z : {"zp", "zm"}) faces.push_back({x, y, z});
    return Complex::from_simplices({}, faces);
}

inline GroupAction octahedron_antipodal(const Complex& oct) {
    return GroupAction::involution(
        oct, {{"xp", "xm"}, {"yp", "ym"}, {"zp", "zm"}});
}

/// Grid torus on Z_m x Z_m with the two standard triangle families.
inline Complex grid_torus(int m) {
    auto name = [m](int i, int j) {
        return "t" + std::to_string((i % m + m) % m) + std::to_string((j % m + m) % m);
    };
    std::vector<std::vector<std::string>> faces;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            faces.push_back({name(i, j), name(i + 1, j), name(i + 1, j + 1)});
            faces.push_back({name(i, j), name(i, j + 1), name(i + 1, j + 1)});
        }
    return Complex::from_simplices({}, faces);
}

/// Coordinate swap (i, j) -> (j, i) on the grid torus.
inline GroupAction torus_swap(const Complex& torus, int m) {
    std::map<std::string, std::string> swaps;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            swaps["t" + std::to_string(i) + std::to_string(j)] =
                "t" + std::to_string(j) + std::to_string(i);
    return GroupAction::involution(torus, swaps);
}

/// Two disjoint triangles a1a2a3 and b1b2b3.
inline Complex two_triangles() {
    return Complex::from_simplices({}, {{"a1", "a2"}, {"a2", "a3"}, {"a1", "a3"},
                                        {"b1", "b2"}, {"b2", "b3"}, {"b1", "b3"}});
}

inline GroupAction two_triangles_swap(const Complex& tt) {
    return GroupAction::involution(
        tt, {{"a1", "b1"}, {"a2", "b2"}, {"a3", "b3"},
             {"b1", "a1"}, {"b2", "a2"}, {"b3", "a3"}});
}

/// Random complex with at most max_cells cells, built from random
/// maximal simplices and closed under faces.
inline Complex random_complex(std::mt19937_64& rng, std::size_t max_cells = 40) {
    std::uniform_int_distribution<int> nv(3, 8);
    const int n = nv(rng);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::vector<std::string>> simplices;
    std::uniform_int_distribution<int> sz(1, 4);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int tries = 0; tries < 12; ++tries) {
        std::vector<std::string> s;
        const int k = sz(rng);
        for (int j = 0; j < k; ++j) s.push_back(names[std::size_t(pick(rng))]);
        simplices.push_back(s);
        Complex c = Complex::from_simplices(names, simplices);
        std::size_t cells = 0;
        for (int d = 0; d <= c.dim(); ++d) cells += c.n_cells(d);
        if (cells > max_cells) {
            simplices.pop_back();
            break;
        }
    }
    return Complex::from_simplices(names, simplices);
}

/// Random chain in dimension k.
inline Chain random_chain(std::mt19937_64& rng, const Complex& x, int k) {
    Chain c(x, k);
    Gf2Vector s(x.n_cells(k));
    std::bernoulli_distribution coin(0.4);
    for (std::size_t i = 0; i < x.n_cells(k); ++i)
        if (coin(rng)) s.set(i, true);
    return Chain(x, k, s);
}

/// Random closed subcomplex.
inline ClosedSubcomplex random_subcomplex(std::mt19937_64& rng, const Complex& x) {
    std::vector<std::pair<int, std::size_t>> cells;
    std::bernoulli_distribution coin(0.35);
    for (int k = 0; k <= x.dim(); ++k)
        for (std::size_t i = 0; i < x.n_cells(k); ++i)
            if (coin(rng)) cells.push_back({k, i});
    return ClosedSubcomplex::closure_of(x, cells);
}

/// Random vertex-merge cellular map out of x; the target is the image
/// complex, so the map is always simplicial.
inline std::pair<CellularMap, Complex> random_collapse(std::mt19937_64& rng, const Complex& x) {
    const std::size_t n = x.n_vertices();
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::string> target_name(n);
    for (std::size_t v = 0; v < n; ++v) target_name[v] = x.vertex_name(int(v));
    const std::size_t merges = n >= 2 ? 1 + pick(rng) % 2 : 0;
    for (std::size_t t = 0; t < merges; ++t) {
        const std::size_t a = pick(rng), b = pick(rng);
        const std::string from = target_name[a];
        for (auto& nm : target_name)
            if (nm == from) nm = target_name[b];
    }
    std::vector<std::vector<std::string>> simplices;
    for (int k = 0; k <= x.dim(); ++k)
        for (std::size_t i = 0; i < x.n_cells(k); ++i) {
            std::vector<std::string> img;
            for (int v : x.cell(k, i)) img.push_back(target_name[std::size_t(v)]);
            simplices.push_back(img);
        }
    Complex y = Complex::from_simplices({}, simplices);
    std::map<std::string, std::string> assignment;
    for (std::size_t v = 0; v < n; ++v) assignment[x.vertex_name(int(v))] = target_name[v];
    return {CellularMap::from_names(x, y, assignment), y};
}

/// Random Z/2 complex built from two copies of a base glued along a
/// fixed subcomplex; regular by construction.
struct RandomGComplex {
    Complex x;
    GroupAction action;
};

inline RandomGComplex random_g_complex(std::mt19937_64& rng, std::size_t max_cells = 40) {
    Complex base = random_complex(rng, max_cells / 2);
    std::bernoulli_distribution fixed_coin(0.3);
    std::vector<bool> is_fixed(base.n_vertices());
    for (std::size_t v = 0; v < base.n_vertices(); ++v) is_fixed[v] = fixed_coin(rng);
    auto copy_name = [&](int v, int side) {
        return is_fixed[std::size_t(v)] ? "f" + base.vertex_name(v)
                                        : (side ? "r" : "l") + base.vertex_name(v);
    };
    std::vector<std::vector<std::string>> simplices;
    for (int side = 0; side < 2; ++side)
        for (int k = 0; k <= base.dim(); ++k)
            for (std::size_t i = 0; i < base.n_cells(k); ++i) {
                std::vector<std::string> s;
                for (int v : base.cell(k, i)) s.push_back(copy_name(v, side));
                simplices.push_back(s);
            }
    Complex x = Complex::from_simplices({}, simplices);
    std::map<std::string, std::string> swaps;
    for (std::size_t v = 0; v < base.n_vertices(); ++v)
        if (!is_fixed[v]) {
            swaps[copy_name(int(v), 0)] = copy_name(int(v), 1);
            swaps[copy_name(int(v), 1)] = copy_name(int(v), 0);
        }
    return {x, GroupAction::involution(x, swaps)};
}

}  // namespace fixtures

#endif
