#pragma once

#include "shiftcheck/matrix.hpp"
#include "shiftcheck/polynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace shiftcheck {

// Dense rectangular rational matrix used by the elimination routines.
class RationalTable {
public:
    RationalTable(int rows, int cols);

    static RationalTable from_columns(const std::vector<std::vector<Rational>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> e_;
};

struct SolveResult {
    bool consistent = false;
    // Valid when consistent: a particular solution and a basis of the
    // homogeneous solution space.
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> homogeneous_basis;
    // Valid when inconsistent: y with yT*A = 0 and yT*b != 0, scaled to
    // coprime integers with positive first nonzero entry.
    std::vector<Rational> certificate;
};

// Exact Gaussian elimination with deterministic pivoting (first nonzero row
// in column order).
int rank_exact(const RationalTable& a);
int rank_exact(const RationalMatrix& m);
std::vector<std::vector<Rational>> nullspace_exact(const RationalTable& a);
std::vector<std::vector<Rational>> nullspace_exact(const RationalMatrix& m);
SolveResult solve_exact(const RationalTable& a, const std::vector<Rational>& b);

// Monic characteristic polynomial det(xI - M) via the Faddeev-LeVerrier
// trace recursion, computed exactly.
Polynomial char_poly(const RationalMatrix& m);

// Monic minimal polynomial: smallest k with vec(M^k) dependent on the lower
// vectorized powers, solved exactly for the combination.
Polynomial min_poly(const RationalMatrix& m);

// h0*I + h1*M + ... + hd*M^d, Horner form, exact.
RationalMatrix eval_matrix_poly(const Polynomial& h, const RationalMatrix& m);

// Powers M^0 .. M^k inclusive.
std::vector<RationalMatrix> matrix_powers(const RationalMatrix& m, int k);

struct RationalRoots {
    // Roots sorted ascending with multiplicities.
    std::vector<std::pair<Rational, int>> roots;
    Polynomial remainder; // rational-root-free cofactor
    bool fully_split = false;
    bool complete = false; // false when divisor enumeration was skipped as too large
};

// Rational roots of p with multiplicity, by rational root test + deflation.
RationalRoots rational_roots(const Polynomial& p);

} // namespace shiftcheck
