#pragma once

// Dense exact integer matrices plus the fraction-free (Bareiss) determinant
// and Smith normal form used throughout the homology and determinant scans.

#include <knotcalc/bigint.hpp>

#include <vector>

namespace knotcalc {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    }
    IntMatrix(long rows, long cols, std::vector<BigInt> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != static_cast<size_t>(rows) * cols)
            throw std::invalid_argument("IntMatrix: entry count mismatch");
    }
    // Row-major initializer, e.g. {{-1,1},{0,2}}.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    BigInt& at(long r, long c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const BigInt& at(long r, long c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    static IntMatrix identity(long n);
    IntMatrix transpose() const;
    IntMatrix operator-() const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator*(const BigInt& s) const;
    bool operator==(const IntMatrix& o) const = default;

    std::vector<BigInt> apply(const std::vector<BigInt>& v) const;

    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);
    // Cyclic shift permutation: P e_i = e_{i+1 mod n}.
    static IntMatrix cycle_permutation(long n);

    std::string to_string() const;

private:
    long rows_, cols_;
    std::vector<BigInt> a_;
};

// Exact determinant by fraction-free elimination; throws on non-square input.
BigInt bareiss_determinant(const IntMatrix& m);

struct SmithForm {
    // diagonal of U*M*W, non-negative, each dividing the next
    std::vector<BigInt> factors;
    IntMatrix u;  // unimodular, rows() x rows() of M
    IntMatrix w;  // unimodular, cols() x cols() of M
};

SmithForm smith_normal_form(const IntMatrix& m);

// True iff v lies in the integer column span of A.
bool in_column_span(const IntMatrix& a, const std::vector<BigInt>& v);

// Exact inverse over Q of a nonsingular square integer matrix,
// returned row-major; throws std::domain_error when singular.
std::vector<std::vector<BigRat>> rational_inverse(const IntMatrix& m);

// Solves M x = rhs exactly over Q; nullopt when M (square) is singular.
std::optional<std::vector<BigRat>> solve_rational(const std::vector<std::vector<BigRat>>& m,
                                                  const std::vector<BigRat>& rhs);

}  // namespace knotcalc
