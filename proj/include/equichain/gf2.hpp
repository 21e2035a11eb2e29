#ifndef EQUICHAIN_GF2_HPP
#define EQUICHAIN_GF2_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace equichain {

/// Dense bit-packed vector over GF(2).  Addition is XOR, so v + v = 0.
class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}

    static Gf2Vector unit(std::size_t len, std::size_t i) {
        Gf2Vector v(len);
        v.set(i, true);
        return v;
    }

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool b) {
        if (i >= len_) throw std::out_of_range("Gf2Vector::set");
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (b) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    Gf2Vector& operator^=(const Gf2Vector& o) {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }

    /// Coordinatewise AND; used for support intersection with a cell mask.
    Gf2Vector& operator&=(const Gf2Vector& o) {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    friend Gf2Vector operator&(Gf2Vector a, const Gf2Vector& b) { return a &= b; }

    bool is_zero() const {
        for (auto x : w_) if (x) return false;
        return true;
    }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (auto x : w_) n += std::size_t(std::popcount(x));
        return n;
    }

    /// Parity of the overlap; the GF(2) inner product.
    bool dot(const Gf2Vector& o) const {
        check_same(o);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
        return std::popcount(acc) & 1u;
    }

    /// Index of the first set bit, or size() if none.
    std::size_t leading() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return (i << 6) + std::size_t(std::countr_zero(w_[i]));
        return len_;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t x = w_[i];
            while (x) {
                s.push_back((i << 6) + std::size_t(std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return s;
    }

    friend bool operator==(const Gf2Vector& a, const Gf2Vector& b) {
        return a.len_ == b.len_ && a.w_ == b.w_;
    }
    friend bool operator!=(const Gf2Vector& a, const Gf2Vector& b) { return !(a == b); }

    /// Lexicographic on bit indices; gives subspace bases a canonical order.
    friend bool operator<(const Gf2Vector& a, const Gf2Vector& b) {
        a.check_same(b);
        for (std::size_t i = 0; i < a.w_.size(); ++i)
            if (a.w_[i] != b.w_[i]) {
                const std::uint64_t d = a.w_[i] ^ b.w_[i];
                const std::uint64_t low = d & (~d + 1);
                return (b.w_[i] & low) != 0;  // b has the earliest differing bit
            }
        return false;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(len_);
        for (std::size_t i = 0; i < len_; ++i) s.push_back(get(i) ? '1' : '0');
        return s;
    }

private:
    void check_same(const Gf2Vector& o) const {
        if (len_ != o.len_) throw std::invalid_argument("Gf2Vector: length mismatch");
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Dense GF(2) matrix, stored by rows.  apply(x) computes M·x with
/// (M·x)_i = <row_i, x>, so the matrix is rows(=target) x cols(=source).
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), r_(rows, Gf2Vector(cols)) {}

    static Gf2Matrix identity(std::size_t n) {
        Gf2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.r_[i].set(i, true);
        return m;
    }

    static Gf2Matrix from_rows(std::vector<Gf2Vector> rows, std::size_t cols) {
        Gf2Matrix m;
        m.rows_ = rows.size();
        m.cols_ = cols;
        m.r_ = std::move(rows);
        for (const auto& r : m.r_)
            if (r.size() != cols) throw std::invalid_argument("Gf2Matrix: ragged rows");
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool b) { r_[i].set(j, b); }

    const Gf2Vector& row(std::size_t i) const { return r_[i]; }
    Gf2Vector& row(std::size_t i) { return r_[i]; }

    Gf2Vector apply(const Gf2Vector& x) const {
        if (x.size() != cols_) throw std::invalid_argument("Gf2Matrix::apply: size mismatch");
        Gf2Vector y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            if (r_[i].dot(x)) y.set(i, true);
        return y;
    }

    Gf2Matrix transpose() const {
        Gf2Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j : r_[i].support()) t.r_[j].set(i, true);
        return t;
    }

    friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Gf2Matrix: product mismatch");
        Gf2Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k : a.r_[i].support()) c.r_[i] ^= b.r_[k];
        return c;
    }

    friend Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Gf2Matrix: sum mismatch");
        Gf2Matrix c = a;
        for (std::size_t i = 0; i < a.rows_; ++i) c.r_[i] ^= b.r_[i];
        return c;
    }

    friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.r_ == b.r_;
    }

    /// In-place reduced row echelon form; returns pivot columns in order.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = rows_;
            for (std::size_t i = row; i < rows_; ++i)
                if (r_[i].get(col)) { sel = i; break; }
            if (sel == rows_) continue;
            std::swap(r_[row], r_[sel]);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != row && r_[i].get(col)) r_[i] ^= r_[row];
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Gf2Matrix c = *this;
        return c.rref().size();
    }

    /// Some x with M·x = b, or nullopt if the system is inconsistent.
    std::optional<Gf2Vector> solve(const Gf2Vector& b) const {
        if (b.size() != rows_) throw std::invalid_argument("Gf2Matrix::solve: size mismatch");
        Gf2Matrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j : r_[i].support()) aug.r_[i].set(j, true);
            if (b.get(i)) aug.r_[i].set(cols_, true);
        }
        const auto pivots = aug.rref();
        Gf2Vector x(cols_);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (pivots[i] == cols_) return std::nullopt;  // 0 = 1 row
            x.set(pivots[i], aug.r_[i].get(cols_));
        }
        return x;
    }

    /// Basis of {x : M·x = 0}; dimension is cols - rank.
    std::vector<Gf2Vector> kernel_basis() const {
        Gf2Matrix c = *this;
        const auto pivots = c.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<Gf2Vector> basis;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (is_pivot[j]) continue;
            Gf2Vector v(cols_);
            v.set(j, true);
            for (std::size_t i = 0; i < pivots.size(); ++i)
                if (c.r_[i].get(j)) v.set(pivots[i], true);
            basis.push_back(v);
        }
        return basis;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Gf2Vector> r_;
};

/// Subspace of GF(2)^n held in reduced row echelon basis, which makes
/// equality a plain comparison and membership a reduction.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

    static Subspace full(std::size_t ambient) {
        std::vector<Gf2Vector> b;
        b.reserve(ambient);
        for (std::size_t i = 0; i < ambient; ++i) b.push_back(Gf2Vector::unit(ambient, i));
        return span(ambient, b);
    }

    static Subspace span(std::size_t ambient, const std::vector<Gf2Vector>& gens) {
        Gf2Matrix m = Gf2Matrix::from_rows(gens, ambient);
        const auto pivots = m.rref();
        Subspace s(ambient);
        for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.push_back(m.row(i));
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Gf2Vector>& basis() const { return basis_; }

    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == ambient_; }

    /// Residual of v after reduction against the basis; zero iff v is a member.
    Gf2Vector reduce(Gf2Vector v) const {
        for (const auto& b : basis_) {
            const std::size_t lead = b.leading();
            if (v.get(lead)) v ^= b;
        }
        return v;
    }

    bool contains(const Gf2Vector& v) const { return reduce(v).is_zero(); }

    bool contains(const Subspace& o) const {
        for (const auto& b : o.basis_)
            if (!contains(b)) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        std::vector<Gf2Vector> gens = a.basis_;
        gens.insert(gens.end(), b.basis_.begin(), b.basis_.end());
        return span(a.ambient_, gens);
    }

    /// Intersection via the kernel of the stacked coefficient system.
    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        if (a.is_zero() || b.is_zero()) return zero(a.ambient_);
        const std::size_t ka = a.dim(), kb = b.dim();
        Gf2Matrix m(a.ambient_, ka + kb);  // columns are basis vectors of a then b
        for (std::size_t j = 0; j < ka; ++j)
            for (std::size_t i : a.basis_[j].support()) m.set(i, j, true);
        for (std::size_t j = 0; j < kb; ++j)
            for (std::size_t i : b.basis_[j].support()) m.set(i, ka + j, true);
        std::vector<Gf2Vector> gens;
        for (const auto& k : m.kernel_basis()) {
            Gf2Vector v(a.ambient_);
            for (std::size_t j = 0; j < ka; ++j)
                if (k.get(j)) v ^= a.basis_[j];
            gens.push_back(v);
        }
        return span(a.ambient_, gens);
    }

    /// {x : L(x) in w}, the preimage of w under the linear map L.
    static Subspace preimage(const Gf2Matrix& L, const Subspace& w) {
        if (L.rows() != w.ambient()) throw std::invalid_argument("Subspace::preimage: mismatch");
        const std::size_t n = L.cols(), d = w.dim();
        Gf2Matrix m(L.rows(), n + d);  // L·x + W·c = 0
        for (std::size_t i = 0; i < L.rows(); ++i)
            for (std::size_t j : L.row(i).support()) m.set(i, j, true);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i : w.basis()[j].support()) m.set(i, n + j, true);
        std::vector<Gf2Vector> gens;
        for (const auto& k : m.kernel_basis()) {
            Gf2Vector x(n);
            for (std::size_t j = 0; j < n; ++j)
                if (k.get(j)) x.set(j, true);
            gens.push_back(x);
        }
        return span(n, gens);
    }

    static Subspace image(const Gf2Matrix& L, const Subspace& v) {
        std::vector<Gf2Vector> gens;
        gens.reserve(v.dim());
        for (const auto& b : v.basis()) gens.push_back(L.apply(b));
        return span(L.rows(), gens);
    }

    static Subspace kernel(const Gf2Matrix& L) {
        return span(L.cols(), L.kernel_basis());
    }

    /// dim(a/b); requires b to be contained in a.
    friend std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
        if (!a.contains(b)) throw std::invalid_argument("quotient_dim: b not contained in a");
        return a.dim() - b.dim();
    }

    /// Basis vectors of this space extending a basis of the subspace d.
    std::vector<Gf2Vector> complement_of(const Subspace& d) const {
        if (!contains(d)) throw std::invalid_argument("complement_of: not a subspace");
        Subspace acc = d;
        std::vector<Gf2Vector> comp;
        for (const auto& b : basis_) {
            if (!acc.contains(b)) {
                comp.push_back(b);
                std::vector<Gf2Vector> g = acc.basis_;
                g.push_back(b);
                acc = span(ambient_, g);
            }
        }
        return comp;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Gf2Vector> basis_;
};

/// Quotient Z/D with a chosen complement basis; coords() expresses a
/// member of Z in that basis modulo D.
class QuotientSpace {
public:
    QuotientSpace() = default;
    QuotientSpace(Subspace z, Subspace d) : z_(std::move(z)), d_(std::move(d)) {
        if (!z_.contains(d_)) throw std::invalid_argument("QuotientSpace: D not inside Z");
        reps_ = z_.complement_of(d_);
        std::vector<Gf2Vector> cols = d_.basis();
        cols.insert(cols.end(), reps_.begin(), reps_.end());
        solver_ = Gf2Matrix(z_.ambient(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i : cols[j].support()) solver_.set(i, j, true);
    }

    std::size_t dim() const { return reps_.size(); }
    const std::vector<Gf2Vector>& reps() const { return reps_; }
    const Subspace& numerator() const { return z_; }
    const Subspace& denominator() const { return d_; }

    /// Coordinates of v (which must lie in Z) with respect to the reps.
    Gf2Vector coords(const Gf2Vector& v) const {
        auto sol = solver_.solve(v);
        if (!sol) throw std::invalid_argument("QuotientSpace::coords: vector not in Z");
        Gf2Vector c(reps_.size());
        for (std::size_t j = 0; j < reps_.size(); ++j)
            if (sol->get(d_.dim() + j)) c.set(j, true);
        return c;
    }

    Gf2Vector lift(const Gf2Vector& coords) const {
        Gf2Vector v(z_.ambient());
        for (std::size_t j = 0; j < reps_.size(); ++j)
            if (coords.get(j)) v ^= reps_[j];
        return v;
    }

private:
    Subspace z_, d_;
    std::vector<Gf2Vector> reps_;
    Gf2Matrix solver_;
};

}  // namespace equichain

#endif
