#pragma once

#include "dessin/annihilator.hpp"
#include "dessin/multipoly.hpp"

namespace dessin {

// operator sum coeffs[k-1] * d^k/da_0^k in the coefficient variables
// a_0..a_{n-1} (vars 0..n-1); there is never an order-zero term because the
// root sum is the constant -a_{n-1}
struct UniversalOperator {
    int n = 0;
    std::vector<MPoly> coeffs;  // c_1..c_n
    friend bool operator==(const UniversalOperator&, const UniversalOperator&) = default;
};

// reduced quotient of polynomials in the root variables t_1..t_n (vars 0..n-1)
struct SymbolicRational {
    MPoly num, den;
    friend bool operator==(const SymbolicRational&, const SymbolicRational&) = default;
};

// Q_{m,k} = d^{m-1}/dt^{m-1} prod_{i != k} (t - t_i)^{-m} at t = t_k: the
// m-th derivative of the k-th local inverse of prod (t - t_i), as a function
// on the fibre.  k is 1-based.
SymbolicRational q_mk(int m, int k, int n);

// The degree-n operator annihilating every root of t^n + a_{n-1}t^{n-1} +
// ... + a_0 viewed as a function of a_0.  Coefficients are found by
// undetermined weighted-homogeneous ansatz and exact nullspace, scanning the
// weight offset upward, so the result is primitive; the sign makes the
// top coefficient's graded-reverse-lex leading term positive.  2 <= n <= 5.
UniversalOperator universal_annihilator(int n);

// a_i -> coeff_i(p) for i >= 1, a_0 -> coeff_0(p) - x, d/da_0 -> -d/dx.
// Raw substitution, not content-normalized.  p must be monic of degree n.
LinDiffOp specialize(const UniversalOperator& d, const ExactPoly& p);

// discriminant of the generic monic polynomial of degree n, via the
// resultant of p and p'
MPoly generic_discriminant(int n);

struct LeadingFactorization {
    MPoly discriminant, cofactor;
};

// split the top coefficient as discriminant * cofactor (exact by
// construction), with the cofactor's leading term positive
LeadingFactorization leading_coeff_factorization(const UniversalOperator& d);

}  // namespace dessin
