/*
 * linalg.hpp
 *
 * Exact dense linear algebra over Q(zeta_L): matrices, canonical
 * subspaces (reduced row echelon bases, so equality of subspaces is
 * equality of representations), kernels, intersections, invariant
 * subspaces, and simultaneous generalized eigenspace decompositions
 * for commuting families.  Eigenvalues are found in the field by the
 * exact root search of rootfind.hpp; a non-split minimal polynomial
 * is a hard error that names the offending operator.
 */

#pragma once

#include "gghlab/poly.hpp"
#include "gghlab/rootfind.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gghlab {

class Matrix {
public:
    Matrix() : L_(1), rows_(0), cols_(0) {}
    Matrix(unsigned L, unsigned rows, unsigned cols)
        : L_(L), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, Cyclotomic(L)) {}

    static Matrix identity(unsigned L, unsigned n) {
        Matrix m(L, n, n);
        for (unsigned i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(L, Rat(1));
        return m;
    }
    static Matrix scalar(unsigned L, unsigned n, const Cyclotomic& c) {
        Matrix m(L, n, n);
        for (unsigned i = 0; i < n; ++i) m.at(i, i) = c;
        return m;
    }

    unsigned order() const { return L_; }
    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }

    Cyclotomic& at(unsigned i, unsigned j) { return a_[std::size_t(i) * cols_ + j]; }
    const Cyclotomic& at(unsigned i, unsigned j) const { return a_[std::size_t(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_square() const { return rows_ == cols_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_shape(b);
        Matrix out = a;
        for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] += b.a_[k];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_shape(b);
        Matrix out = a;
        for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] -= b.a_[k];
        return out;
    }
    Matrix operator-() const {
        Matrix out = *this;
        for (auto& x : out.a_) x = -x;
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix out(a.L_, a.rows_, b.cols_);
        for (unsigned i = 0; i < a.rows_; ++i)
            for (unsigned k = 0; k < a.cols_; ++k) {
                const Cyclotomic& f = a.at(i, k);
                if (f.is_zero()) continue;
                for (unsigned j = 0; j < b.cols_; ++j) {
                    const Cyclotomic& g = b.at(k, j);
                    if (!g.is_zero()) out.at(i, j) += f * g;
                }
            }
        return out;
    }
    friend Matrix operator*(const Cyclotomic& c, const Matrix& a) {
        Matrix out = a;
        for (auto& x : out.a_) x *= c;
        return out;
    }
    friend Matrix operator*(const Rat& r, const Matrix& a) { return Cyclotomic(a.L_, r) * a; }

    Matrix transpose() const {
        Matrix out(L_, cols_, rows_);
        for (unsigned i = 0; i < rows_; ++i)
            for (unsigned j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    Cyclotomic trace() const {
        Cyclotomic t(L_);
        for (unsigned i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
        return t;
    }

    std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
        std::vector<Cyclotomic> out(rows_, Cyclotomic(L_));
        for (unsigned i = 0; i < rows_; ++i)
            for (unsigned j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
        return out;
    }

    std::vector<Cyclotomic> row(unsigned i) const {
        std::vector<Cyclotomic> out(cols_, Cyclotomic(L_));
        for (unsigned j = 0; j < cols_; ++j) out[j] = at(i, j);
        return out;
    }
    void set_row(unsigned i, const std::vector<Cyclotomic>& v) {
        for (unsigned j = 0; j < cols_; ++j) at(i, j) = v[j];
    }

    Matrix pow(unsigned e) const {
        if (!is_square()) throw std::invalid_argument("matrix power of non-square matrix");
        Matrix acc = identity(L_, rows_), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            if (e >>= 1) base = base * base;
        }
        return acc;
    }

private:
    unsigned L_, rows_, cols_;
    std::vector<Cyclotomic> a_;

    void check_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    }
};

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.order(), a.rows() * b.rows(), a.cols() * b.cols());
    for (unsigned i = 0; i < a.rows(); ++i)
        for (unsigned j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (unsigned k = 0; k < b.rows(); ++k)
                for (unsigned l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return out;
}

/* In-place reduced row echelon form; returns the pivot columns. */
inline std::vector<unsigned> rref(Matrix& m) {
    std::vector<unsigned> pivots;
    unsigned r = 0;
    for (unsigned c = 0; c < m.cols() && r < m.rows(); ++c) {
        unsigned sel = r;
        while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (unsigned j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        Cyclotomic inv = m.at(r, c).inverse();
        for (unsigned j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (unsigned i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Cyclotomic f = m.at(i, c);
            for (unsigned j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/* Row span with a canonical RREF basis; equality of subspaces is basis equality. */
class Subspace {
public:
    Subspace() : L_(1), ambient_(0), basis_(1, 0, 0) {}
    Subspace(unsigned L, unsigned ambient) : L_(L), ambient_(ambient), basis_(L, 0, ambient) {}

    static Subspace zero(unsigned L, unsigned ambient) { return Subspace(L, ambient); }
    static Subspace full(unsigned L, unsigned ambient) {
        return from_span(Matrix::identity(L, ambient));
    }
    static Subspace from_span(Matrix rows) {
        Subspace s(rows.order(), rows.cols());
        std::vector<unsigned> pivots = rref(rows);
        Matrix basis(rows.order(), unsigned(pivots.size()), rows.cols());
        for (unsigned i = 0; i < pivots.size(); ++i) basis.set_row(i, rows.row(i));
        s.basis_ = std::move(basis);
        s.pivots_ = std::move(pivots);
        return s;
    }

    unsigned order() const { return L_; }
    unsigned ambient() const { return ambient_; }
    unsigned dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<unsigned>& pivots() const { return pivots_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    /* Coordinates of v in the RREF basis, or nothing if v is outside. */
    std::optional<std::vector<Cyclotomic>> coordinates(const std::vector<Cyclotomic>& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("subspace coordinates shape mismatch");
        std::vector<Cyclotomic> coords(dim(), Cyclotomic(L_));
        std::vector<Cyclotomic> rem = v;
        for (unsigned i = 0; i < dim(); ++i) {
            coords[i] = rem[pivots_[i]];
            if (coords[i].is_zero()) continue;
            for (unsigned j = 0; j < ambient_; ++j) rem[j] -= coords[i] * basis_.at(i, j);
        }
        for (const auto& x : rem)
            if (!x.is_zero()) return std::nullopt;
        return coords;
    }

    bool contains(const std::vector<Cyclotomic>& v) const { return coordinates(v).has_value(); }
    bool contains(const Subspace& other) const {
        for (unsigned i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

private:
    unsigned L_, ambient_;
    Matrix basis_;
    std::vector<unsigned> pivots_;
};

/* Null space of m (right kernel, canonical basis). */
inline Subspace kernel(const Matrix& m) {
    Matrix r = m;
    std::vector<unsigned> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (unsigned c : pivots) is_pivot[c] = true;
    Matrix span(m.order(), m.cols() - unsigned(pivots.size()), m.cols());
    unsigned row = 0;
    for (unsigned c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        span.at(row, c) = Cyclotomic(m.order(), Rat(1));
        for (unsigned i = 0; i < pivots.size(); ++i) span.at(row, pivots[i]) = -r.at(i, c);
        ++row;
    }
    return Subspace::from_span(std::move(span));
}

inline Subspace row_space(const Matrix& m) { return Subspace::from_span(m); }
inline Subspace column_space(const Matrix& m) { return Subspace::from_span(m.transpose()); }

/* One solution of A x = b, if any. */
inline std::optional<std::vector<Cyclotomic>> solve(const Matrix& A, const std::vector<Cyclotomic>& b) {
    Matrix aug(A.order(), A.rows(), A.cols() + 1);
    for (unsigned i = 0; i < A.rows(); ++i) {
        for (unsigned j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    std::vector<unsigned> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt; // inconsistent
    std::vector<Cyclotomic> x(A.cols(), Cyclotomic(A.order()));
    for (unsigned i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, A.cols());
    return x;
}

/* Rows annihilating S: Q with {v : Q v = 0} = S. */
inline Matrix annihilator(const Subspace& s) {
    return kernel(s.basis()).basis();
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace intersection shape mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.order(), a.ambient());
    // x in both spans: stack the annihilators
    Matrix qa = annihilator(a), qb = annihilator(b);
    Matrix stacked(a.order(), qa.rows() + qb.rows(), a.ambient());
    for (unsigned i = 0; i < qa.rows(); ++i) stacked.set_row(i, qa.row(i));
    for (unsigned i = 0; i < qb.rows(); ++i) stacked.set_row(qa.rows() + i, qb.row(i));
    return kernel(stacked);
}

inline Subspace sum_spaces(const Subspace& a, const Subspace& b) {
    Matrix stacked(a.order(), a.dim() + b.dim(), a.ambient());
    for (unsigned i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis().row(i));
    for (unsigned i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis().row(i));
    return Subspace::from_span(std::move(stacked));
}

/* {v : op v in S}. */
inline Subspace preimage(const Matrix& op, const Subspace& s) {
    if (s.dim() == s.ambient()) return Subspace::full(op.order(), op.cols());
    Matrix q = annihilator(s);
    return kernel(q * op);
}

/*
 * Largest subspace of start invariant under every operator: the
 * decreasing fixpoint of I -> I n (intersection of op-preimages of I).
 */
inline Subspace largest_invariant_subspace(const std::vector<Matrix>& ops, const Subspace& start) {
    Subspace current = start;
    while (true) {
        Subspace next = current;
        for (const Matrix& op : ops) next = intersect(next, preimage(op, current));
        if (next.dim() == current.dim()) return next;
        current = next;
    }
}

/* Matrix of op on the subspace s (which must be op-invariant). */
inline Matrix restrict_to(const Matrix& op, const Subspace& s) {
    Matrix out(op.order(), s.dim(), s.dim());
    for (unsigned i = 0; i < s.dim(); ++i) {
        auto coords = s.coordinates(op.apply(s.basis().row(i)));
        if (!coords) throw std::domain_error("restrict_to: subspace is not invariant under the operator");
        out.set_row(i, *coords);
    }
    return out.transpose(); // rows collected columnwise: out[i] holds coords of op(b_i)
}

/* Lift a subspace given in s-coordinates back to the ambient space. */
inline Subspace lift_from(const Subspace& inner, const Subspace& s) {
    Matrix rows(s.order(), inner.dim(), s.ambient());
    for (unsigned i = 0; i < inner.dim(); ++i) {
        std::vector<Cyclotomic> v(s.ambient(), Cyclotomic(s.order()));
        for (unsigned j = 0; j < s.dim(); ++j) {
            const Cyclotomic& c = inner.basis().at(i, j);
            if (c.is_zero()) continue;
            for (unsigned k = 0; k < s.ambient(); ++k) v[k] += c * s.basis().at(j, k);
        }
        rows.set_row(i, v);
    }
    return Subspace::from_span(std::move(rows));
}

inline Cyclotomic determinant(Matrix m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    Cyclotomic det(m.order(), Rat(1));
    for (unsigned c = 0; c < m.cols(); ++c) {
        unsigned sel = c;
        while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) return Cyclotomic(m.order());
        if (sel != c) {
            for (unsigned j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Cyclotomic inv = m.at(c, c).inverse();
        for (unsigned i = c + 1; i < m.rows(); ++i) {
            if (m.at(i, c).is_zero()) continue;
            Cyclotomic f = m.at(i, c) * inv;
            for (unsigned j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

/* Minimal polynomial via Krylov chains seeded with unit vectors (lcm of local factors). */
inline poly::KPoly min_poly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("min_poly of non-square matrix");
    const unsigned n = m.rows(), L = m.order();
    poly::KPoly mu{Cyclotomic(L, Rat(1))}; // 1
    for (unsigned seed = 0; seed < n; ++seed) {
        if (poly::degree(mu) == int(n)) break;
        std::vector<Cyclotomic> v(n, Cyclotomic(L));
        v[seed] = Cyclotomic(L, Rat(1));
        // check whether mu already kills v (cheap early exit)
        {
            std::vector<Cyclotomic> acc(n, Cyclotomic(L));
            std::vector<Cyclotomic> power = v;
            for (std::size_t j = 0; j < mu.size(); ++j) {
                if (!mu[j].is_zero())
                    for (unsigned i = 0; i < n; ++i) acc[i] += mu[j] * power[i];
                if (j + 1 < mu.size()) power = m.apply(power);
            }
            bool killed = true;
            for (const auto& x : acc)
                if (!x.is_zero()) { killed = false; break; }
            if (killed) continue;
        }
        // grow the Krylov chain of v, tracking combinations
        Matrix reduced(L, n + 1, n);
        std::vector<std::vector<Cyclotomic>> combos;
        std::vector<unsigned> pivot_col;
        std::vector<Cyclotomic> cur = v;
        poly::KPoly local;
        for (unsigned step = 0; step <= n; ++step) {
            std::vector<Cyclotomic> red = cur;
            std::vector<Cyclotomic> combo(step + 1, Cyclotomic(L));
            combo[step] = Cyclotomic(L, Rat(1));
            for (std::size_t rrow = 0; rrow < pivot_col.size(); ++rrow) {
                const Cyclotomic& lead = red[pivot_col[rrow]];
                if (lead.is_zero()) continue;
                Cyclotomic f = lead;
                for (unsigned j = 0; j < n; ++j) red[j] -= f * reduced.at(unsigned(rrow), j);
                for (std::size_t j = 0; j < combos[rrow].size(); ++j) combo[j] -= f * combos[rrow][j];
            }
            unsigned piv = n;
            for (unsigned j = 0; j < n; ++j)
                if (!red[j].is_zero()) { piv = j; break; }
            if (piv == n) { // dependency found: combo gives the local minimal polynomial
                local.assign(combo.begin(), combo.end());
                local = poly::trim(std::move(local));
                break;
            }
            Cyclotomic inv = red[piv].inverse();
            for (unsigned j = 0; j < n; ++j) red[j] *= inv;
            for (auto& c : combo) c *= inv;
            reduced.set_row(unsigned(pivot_col.size()), red);
            pivot_col.push_back(piv);
            combos.push_back(std::move(combo));
            cur = m.apply(cur);
        }
        // mu = lcm(mu, local)
        poly::KPoly g = poly::gcd(mu, local);
        mu = poly::monic(poly::mul(mu, poly::divmod(local, g).first));
    }
    return mu;
}

struct EigenComponent {
    std::vector<Cyclotomic> value; // one entry per operator
    Subspace space;
};

/* Distinct eigenvalues with their multiplicities in the minimal polynomial. */
inline std::vector<std::pair<Cyclotomic, unsigned>> eigenvalues_of(const Matrix& m, const std::string& what) {
    if (m.rows() == 0) return {};
    FieldRoots fr = roots_in_field(min_poly(m));
    if (!fr.split)
        throw std::domain_error("non-split characteristic polynomial for " + what +
                                "; leftover factor " + poly::to_string(fr.leftover));
    return fr.roots;
}

/*
 * Simultaneous decomposition of a commuting family, either into joint
 * generalized eigenspaces or joint true eigenspaces.  In the
 * generalized flavor the components always exhaust the space; in the
 * true flavor exhaustion holds exactly when every operator acts
 * semisimply, and is reported by the `complete` flag on the result.
 */
struct SimultaneousEigen {
    std::vector<EigenComponent> components;
    bool complete = true;
};

inline SimultaneousEigen simultaneous_decomposition(const std::vector<Matrix>& ops, bool generalized,
                                                    const std::string& what) {
    if (ops.empty()) throw std::invalid_argument("simultaneous decomposition of empty family");
    const unsigned L = ops[0].order(), n = ops[0].rows();
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
            if (ops[i] * ops[j] != ops[j] * ops[i])
                throw std::invalid_argument("simultaneous decomposition: operators " + std::to_string(i) +
                                            " and " + std::to_string(j) + " do not commute (" + what + ")");
    SimultaneousEigen result;
    result.components.push_back({{}, Subspace::full(L, n)});
    for (std::size_t oi = 0; oi < ops.size(); ++oi) {
        std::vector<EigenComponent> next;
        for (EigenComponent& comp : result.components) {
            Matrix r = restrict_to(ops[oi], comp.space);
            auto eigs = eigenvalues_of(r, what + " operator " + std::to_string(oi));
            unsigned covered = 0;
            for (const auto& [lambda, mult] : eigs) {
                Matrix shifted = r - Matrix::scalar(L, r.rows(), lambda);
                Subspace inner = kernel(generalized ? shifted.pow(mult) : shifted);
                if (inner.dim() == 0) continue;
                covered += inner.dim();
                EigenComponent c;
                c.value = comp.value;
                c.value.push_back(lambda);
                c.space = lift_from(inner, comp.space);
                next.push_back(std::move(c));
            }
            if (covered != comp.space.dim()) {
                if (generalized)
                    throw std::logic_error("generalized eigenspaces fail to exhaust (" + what + ")");
                result.complete = false;
            }
        }
        result.components = std::move(next);
    }
    return result;
}

inline std::vector<EigenComponent> simultaneous_generalized_eigenspaces(const std::vector<Matrix>& ops,
                                                                        const std::string& what = "operator family") {
    return simultaneous_decomposition(ops, true, what).components;
}

} // namespace gghlab
