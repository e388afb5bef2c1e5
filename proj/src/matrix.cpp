#include <knotcalc/matrix.hpp>

#include <algorithm>
#include <sstream>

namespace knotcalc {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<long>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<long>(rows.begin()->size());
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<long>(r.size()) != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : r) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in +");
    IntMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + (-o); }

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in *");
    IntMatrix m(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const BigInt& v = at(i, k);
            if (v == 0) continue;
            for (long j = 0; j < o.cols_; ++j) m.at(i, j) += v * o.at(k, j);
        }
    return m;
}

IntMatrix IntMatrix::operator*(const BigInt& s) const {
    IntMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& v) const {
    if (static_cast<long>(v.size()) != cols_)
        throw std::invalid_argument("IntMatrix: vector dimension mismatch");
    std::vector<BigInt> r(rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (long i = 0; i < a.rows_; ++i)
        for (long j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
    for (long i = 0; i < b.rows_; ++i)
        for (long j = 0; j < b.cols_; ++j) m.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return m;
}

IntMatrix IntMatrix::kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (long i = 0; i < a.rows_; ++i)
        for (long j = 0; j < a.cols_; ++j) {
            if (a.at(i, j) == 0) continue;
            for (long k = 0; k < b.rows_; ++k)
                for (long l = 0; l < b.cols_; ++l)
                    m.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
        }
    return m;
}

IntMatrix IntMatrix::cycle_permutation(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at((i + 1) % n, i) = 1;
    return m;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < rows_; ++i) {
        os << "[";
        for (long j = 0; j < cols_; ++j) os << at(i, j).get_str() << (j + 1 < cols_ ? "," : "");
        os << "]" << (i + 1 < rows_ ? "," : "");
    }
    os << "]";
    return os.str();
}

BigInt bareiss_determinant(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("bareiss_determinant: non-square matrix");
    const long n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (long k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            long piv = -1;
            for (long i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (long j = k; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        const BigInt pivot = a.at(k, k);
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                BigInt t = a.at(i, j) * pivot - a.at(i, k) * a.at(k, j);
                // divisions in the Bareiss recurrence are exact
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = t;
            }
            a.at(i, k) = 0;
        }
        prev = pivot;
    }
    return sign > 0 ? a.at(n - 1, n - 1) : BigInt(-a.at(n - 1, n - 1));
}

namespace {

struct SmithWork {
    IntMatrix a, u, w;

    void swap_rows(long i, long j) {
        if (i == j) return;
        for (long c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (long c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(long i, long j) {
        if (i == j) return;
        for (long r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (long r = 0; r < w.rows(); ++r) std::swap(w.at(r, i), w.at(r, j));
    }
    void add_row(long dst, long src, const BigInt& f) {  // row dst += f * row src
        for (long c = 0; c < a.cols(); ++c) a.at(dst, c) += f * a.at(src, c);
        for (long c = 0; c < u.cols(); ++c) u.at(dst, c) += f * u.at(src, c);
    }
    void add_col(long dst, long src, const BigInt& f) {
        for (long r = 0; r < a.rows(); ++r) a.at(r, dst) += f * a.at(r, src);
        for (long r = 0; r < w.rows(); ++r) w.at(r, dst) += f * w.at(r, src);
    }
    void negate_row(long i) {
        for (long c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        for (long c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const long rows = m.rows(), cols = m.cols();
    SmithWork s{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    const long rank_bound = std::min(rows, cols);

    for (long k = 0; k < rank_bound; ++k) {
        // smallest nonzero |entry| as pivot limits coefficient blowup
        long pr = -1, pc = -1;
        BigInt best;
        for (long i = k; i < rows; ++i)
            for (long j = k; j < cols; ++j) {
                if (s.a.at(i, j) == 0) continue;
                BigInt v = abs(s.a.at(i, j));
                if (pr < 0 || v < best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;  // remaining block is zero
        s.swap_rows(k, pr);
        s.swap_cols(k, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (long i = k + 1; i < rows; ++i) {
                if (s.a.at(i, k) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), s.a.at(i, k).get_mpz_t(), s.a.at(k, k).get_mpz_t());
                s.add_row(i, k, -q);
                if (s.a.at(i, k) != 0) {
                    s.swap_rows(k, i);  // strictly smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (long j = k + 1; j < cols; ++j) {
                if (s.a.at(k, j) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), s.a.at(k, j).get_mpz_t(), s.a.at(k, k).get_mpz_t());
                s.add_col(j, k, -q);
                if (s.a.at(k, j) != 0) {
                    s.swap_cols(k, j);
                    clean = false;
                }
            }
        }
        if (s.a.at(k, k) < 0) s.negate_row(k);
    }

    // enforce the divisibility chain d_k | d_{k+1}: gcd-combine offending pairs
    auto rediagonalize_pair = [&](long k) {
        s.add_col(k, k + 1, 1);  // puts d_{k+1} into position (k+1, k)
        while (s.a.at(k + 1, k) != 0 || s.a.at(k, k + 1) != 0) {
            if (s.a.at(k + 1, k) != 0) {
                if (s.a.at(k, k) == 0) {
                    s.swap_rows(k, k + 1);
                    continue;
                }
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), s.a.at(k + 1, k).get_mpz_t(), s.a.at(k, k).get_mpz_t());
                s.add_row(k + 1, k, -q);
                if (s.a.at(k + 1, k) != 0) s.swap_rows(k, k + 1);
                continue;
            }
            if (s.a.at(k, k) == 0) {
                s.swap_cols(k, k + 1);
                continue;
            }
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), s.a.at(k, k + 1).get_mpz_t(), s.a.at(k, k).get_mpz_t());
            s.add_col(k + 1, k, -q);
            if (s.a.at(k, k + 1) != 0) s.swap_cols(k, k + 1);
        }
        if (s.a.at(k, k) < 0) s.negate_row(k);
        if (s.a.at(k + 1, k + 1) < 0) s.negate_row(k + 1);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (long k = 0; k + 1 < rank_bound; ++k) {
            const BigInt& d1 = s.a.at(k, k);
            const BigInt& d2 = s.a.at(k + 1, k + 1);
            if (d1 == 0 || d2 % d1 == 0) continue;
            rediagonalize_pair(k);
            changed = true;
        }
    }

    SmithForm out;
    out.factors.resize(rank_bound);
    for (long k = 0; k < rank_bound; ++k) out.factors[k] = s.a.at(k, k);
    out.u = std::move(s.u);
    out.w = std::move(s.w);
    return out;
}

bool in_column_span(const IntMatrix& a, const std::vector<BigInt>& v) {
    // U a W = D; a x = v solvable over Z iff D y = U v is, componentwise.
    SmithForm sf = smith_normal_form(a);
    std::vector<BigInt> uv = sf.u.apply(v);
    const long r = static_cast<long>(sf.factors.size());
    for (long i = 0; i < r; ++i) {
        if (sf.factors[i] == 0) {
            if (uv[i] != 0) return false;
        } else if (uv[i] % sf.factors[i] != 0) {
            return false;
        }
    }
    for (long i = r; i < static_cast<long>(uv.size()); ++i)
        if (uv[i] != 0) return false;
    return true;
}

std::optional<std::vector<BigRat>> solve_rational(const std::vector<std::vector<BigRat>>& m,
                                                  const std::vector<BigRat>& rhs) {
    const long n = static_cast<long>(m.size());
    if (n == 0) return std::vector<BigRat>{};
    std::vector<std::vector<BigRat>> a = m;
    std::vector<BigRat> b = rhs;
    for (long k = 0; k < n; ++k) {
        long piv = -1;
        for (long i = k; i < n; ++i)
            if (a[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (long i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            BigRat f = a[i][k] / a[k][k];
            for (long j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<BigRat> x(n);
    for (long i = n - 1; i >= 0; --i) {
        BigRat s = b[i];
        for (long j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

std::vector<std::vector<BigRat>> rational_inverse(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("rational_inverse: non-square matrix");
    const long n = m.rows();
    std::vector<std::vector<BigRat>> a(n, std::vector<BigRat>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) a[i][j] = BigRat(m.at(i, j));
    std::vector<std::vector<BigRat>> inv(n, std::vector<BigRat>(n));
    for (long c = 0; c < n; ++c) {
        std::vector<BigRat> e(n);
        e[c] = 1;
        auto col = solve_rational(a, e);
        if (!col) throw std::domain_error("rational_inverse: singular matrix");
        for (long r = 0; r < n; ++r) inv[r][c] = (*col)[r];
    }
    return inv;
}

}  // namespace knotcalc
