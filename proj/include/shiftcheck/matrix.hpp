#pragma once

#include "shiftcheck/rational.hpp"

#include <iosfwd>
#include <vector>

namespace shiftcheck {

class RealMatrix;

// Dense square matrix over exact rationals, row-major.
class RationalMatrix {
public:
    explicit RationalMatrix(int n);
    RationalMatrix(int n, std::vector<Rational> entries);

    static RationalMatrix identity(int n);
    // Checked constructor: throws when entries are not symmetric.
    static RationalMatrix symmetric(int n, std::vector<Rational> entries);

    int dim() const { return n_; }
    const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }

    bool is_symmetric() const;
    bool is_zero() const;
    Rational trace() const;
    RationalMatrix transpose() const;

    // Row-major vectorization.
    std::vector<Rational> vec() const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;

    RationalMatrix scaled(const Rational& c) const;
    int offdiag_nonzero_count() const;
    int nonzero_count() const;

    RealMatrix to_real() const;

    RationalMatrix& operator+=(const RationalMatrix& o);
    RationalMatrix& operator-=(const RationalMatrix& o);
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { a += b; return a; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { a -= b; return a; }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
    int n_ = 0;
    std::vector<Rational> e_;
};

// Dense square real matrix for the floating-point side.
class RealMatrix {
public:
    RealMatrix() = default;
    explicit RealMatrix(int n);
    RealMatrix(int n, std::vector<double> entries);

    static RealMatrix identity(int n);
    static RealMatrix diagonal(const std::vector<double>& d);

    int dim() const { return n_; }
    double at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    double& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }

    RealMatrix transpose() const;
    RealMatrix scaled(double c) const;
    std::vector<double> apply(const std::vector<double>& x) const;

    double max_abs() const;
    double frobenius() const;
    double max_asymmetry() const;

    RealMatrix& operator+=(const RealMatrix& o);
    RealMatrix& operator-=(const RealMatrix& o);
    friend RealMatrix operator+(RealMatrix a, const RealMatrix& b) { a += b; return a; }
    friend RealMatrix operator-(RealMatrix a, const RealMatrix& b) { a -= b; return a; }
    friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);

private:
    int n_ = 0;
    std::vector<double> e_;
};

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

} // namespace shiftcheck
