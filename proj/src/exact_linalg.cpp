#include "zzmod/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace zzmod {

namespace testhook {
bool corrupt_snf = false;
} // namespace testhook

std::size_t SnfResult::rank() const {
    std::size_t r = 0;
    const std::size_t lim = std::min(s.rows(), s.cols());
    while (r < lim && s.at(r, r) != 0) ++r;
    return r;
}

namespace {

std::string torsion_to_string(const std::vector<Int>& t) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << "]";
    return os.str();
}

// State for the Smith reduction; row ops on s mirror into u (and inversely
// into u_inv), column ops into v / v_inv, so u*a*v == s holds throughout.
struct SnfWork {
    IntMatrix s, u, u_inv, v, v_inv;

    explicit SnfWork(const IntMatrix& a)
        : s(a),
          u(IntMatrix::identity(a.rows())),
          u_inv(IntMatrix::identity(a.rows())),
          v(IntMatrix::identity(a.cols())),
          v_inv(IntMatrix::identity(a.cols())) {}

    void row_add(std::size_t dst, std::size_t src, const Int& c) {
        s.add_row_multiple(dst, src, c);
        u.add_row_multiple(dst, src, c);
        u_inv.add_col_multiple(src, dst, -c);
    }
    void row_swap(std::size_t i, std::size_t j) {
        s.swap_rows(i, j);
        u.swap_rows(i, j);
        u_inv.swap_cols(i, j);
    }
    void row_negate(std::size_t i) {
        s.negate_row(i);
        u.negate_row(i);
        u_inv.negate_col(i);
    }
    void col_add(std::size_t dst, std::size_t src, const Int& c) {
        s.add_col_multiple(dst, src, c);
        v.add_col_multiple(dst, src, c);
        v_inv.add_row_multiple(src, dst, -c);
    }
    void col_swap(std::size_t i, std::size_t j) {
        s.swap_cols(i, j);
        v.swap_cols(i, j);
        v_inv.swap_rows(i, j);
    }
};

} // namespace

SnfResult snf(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SnfWork w(a);
    const std::size_t limit = std::min(m, n);

    std::size_t t = 0;
    while (t < limit) {
        // Pivot: nonzero entry of minimal absolute value in the trailing
        // block, ties broken by (row, col).
        std::size_t pi = m, pj = n;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const Int& e = w.s.at(i, j);
                if (e == 0) continue;
                Int ab = abs(e);
                if (pi == m || ab < best) {
                    best = ab;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == m) break; // trailing block is zero

        w.row_swap(t, pi);
        w.col_swap(t, pj);

        bool dirty = false;
        for (std::size_t i = t + 1; i < m; ++i) {
            if (w.s.at(i, t) == 0) continue;
            Int q = w.s.at(i, t) / w.s.at(t, t); // trunc division
            if (q != 0) w.row_add(i, t, -q);
            if (w.s.at(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (w.s.at(t, j) == 0) continue;
            Int q = w.s.at(t, j) / w.s.at(t, t);
            if (q != 0) w.col_add(j, t, -q);
            if (w.s.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue; // remainders are strictly smaller; re-pick pivot

        // Pivot must divide the whole trailing block to keep the chain.
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i)
            for (std::size_t j = t + 1; j < n && !fixed; ++j)
                if (w.s.at(i, j) % w.s.at(t, t) != 0) {
                    w.row_add(t, i, Int(1));
                    fixed = true;
                }
        if (fixed) continue;

        if (w.s.at(t, t) < 0) w.row_negate(t);
        ++t;
    }

    if (testhook::corrupt_snf && limit > 0) w.s.at(0, 0) += 1;

    return SnfResult{std::move(w.u), std::move(w.s), std::move(w.v),
                     std::move(w.u_inv), std::move(w.v_inv)};
}

IntMatrix hnf_cols(const IntMatrix& a) {
    IntMatrix b = a;
    const std::size_t m = b.rows(), n = b.cols();
    std::size_t r = 0; // next pivot column slot
    for (std::size_t i = 0; i < m && r < n; ++i) {
        // Reduce row i across columns >= r to a single nonzero entry.
        while (true) {
            std::size_t jmin = n;
            Int best;
            for (std::size_t j = r; j < n; ++j) {
                const Int& e = b.at(i, j);
                if (e == 0) continue;
                Int ab = abs(e);
                if (jmin == n || ab < best) {
                    best = ab;
                    jmin = j;
                }
            }
            if (jmin == n) break; // row empty among trailing columns
            b.swap_cols(r, jmin);
            bool clean = true;
            for (std::size_t j = r + 1; j < n; ++j) {
                if (b.at(i, j) == 0) continue;
                Int q = b.at(i, j) / b.at(i, r);
                if (q != 0) b.add_col_multiple(j, r, -q);
                if (b.at(i, j) != 0) clean = false;
            }
            if (clean) {
                if (b.at(i, r) < 0) b.negate_col(r);
                // Entries left of the pivot in its row into [0, pivot).
                for (std::size_t j = 0; j < r; ++j) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), b.at(i, j).get_mpz_t(),
                               b.at(i, r).get_mpz_t());
                    if (q != 0) b.add_col_multiple(j, r, -q);
                }
                ++r;
                break;
            }
        }
    }
    return b.col_range(0, r);
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SnfResult f = snf(a);
    const std::size_t r = f.rank();
    return hnf_cols(f.v.col_range(r, a.cols()));
}

IntMatrix image_basis(const IntMatrix& a) { return hnf_cols(a); }

CokerInvariants cokernel_invariants(const IntMatrix& a) {
    SnfResult f = snf(a);
    CokerInvariants ci;
    const std::size_t r = f.rank();
    ci.free_rank = a.rows() - r;
    for (std::size_t i = 0; i < r; ++i)
        if (f.diag(i) > 1) ci.torsion_factors.push_back(f.diag(i));
    return ci;
}

std::size_t rank(const IntMatrix& a) { return hnf_cols(a).cols(); }

std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b) {
    if (b.rows() != a.rows()) throw DimensionError("solve: rhs row mismatch");
    SnfResult f = snf(a);
    const std::size_t r = f.rank();
    IntMatrix c = f.u * b;
    IntMatrix y(a.cols(), b.cols());
    for (std::size_t k = 0; k < b.cols(); ++k) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i < r) {
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.at(i, k).get_mpz_t(),
                            f.diag(i).get_mpz_t());
                if (rem != 0) return std::nullopt;
                y.at(i, k) = q;
            } else if (c.at(i, k) != 0) {
                return std::nullopt;
            }
        }
    }
    return f.v * y;
}

IntMatrix split_surjection(const IntMatrix& phi) {
    SnfResult f = snf(phi);
    const std::size_t r = f.rank();
    if (r != phi.rows() || (r > 0 && f.diag(r - 1) != 1)) {
        CokerInvariants ci = cokernel_invariants(phi);
        throw NotSurjectiveError("split_surjection: map not surjective (free rank " +
                                 std::to_string(ci.free_rank) + ", torsion " +
                                 torsion_to_string(ci.torsion_factors) + ")");
    }
    // s = [I_m | 0], so psi = v * [I_m ; 0] * u.
    return f.v.col_range(0, phi.rows()) * f.u;
}

IntMatrix complement(const IntMatrix& g, std::size_t ambient_rank) {
    if (g.rows() != ambient_rank)
        throw DimensionError("complement: generator rows must equal ambient rank");
    SnfResult f = snf(g);
    const std::size_t r = f.rank();
    if (r > 0 && f.diag(r - 1) != 1) {
        CokerInvariants ci = cokernel_invariants(g);
        throw NotFreeQuotientError("complement: quotient has torsion " +
                                   torsion_to_string(ci.torsion_factors));
    }
    return f.u_inv.col_range(r, ambient_rank);
}

IntMatrix complement_within(const IntMatrix& inner, const IntMatrix& outer) {
    if (inner.rows() != outer.rows())
        throw DimensionError("complement_within: ambient mismatch");
    auto coords = solve(outer, inner);
    if (!coords)
        throw PreconditionError("complement_within: inner span not inside outer span");
    return hnf_cols(outer * complement(*coords, outer.cols()));
}

IntMatrix intersect(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("intersect: ambient mismatch");
    IntMatrix k = kernel_basis(hconcat(a, b.negated()));
    return hnf_cols(a * k.row_range(0, a.cols()));
}

IntMatrix preimage(const IntMatrix& m, const IntMatrix& b) {
    if (m.rows() != b.rows()) throw DimensionError("preimage: ambient mismatch");
    IntMatrix k = kernel_basis(hconcat(m, b.negated()));
    return hnf_cols(k.row_range(0, m.cols()));
}

bool is_unimodular(const IntMatrix& a) {
    if (a.rows() != a.cols()) return false;
    Int d = det(a);
    return d == 1 || d == -1;
}

Int det(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("det: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix w = a;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t i = k + 1;
            while (i < n && w.at(i, k) == 0) ++i;
            if (i == n) return 0;
            w.swap_rows(k, i);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sign < 0 ? Int(-w.at(n - 1, n - 1)) : w.at(n - 1, n - 1);
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw PreconditionError("inverse_unimodular: matrix not square");
    // A unimodular map is a surjection; its section is the inverse.
    return split_surjection(a);
}

} // namespace zzmod
