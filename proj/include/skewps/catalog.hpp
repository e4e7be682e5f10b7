#pragma once

#include <string>
#include <vector>

#include "skewps/presentation.hpp"

namespace skewps {

// Multiparameter quantum n x n matrices: lambda a nonzero rational != 1 and
// p a multiplicatively antisymmetric matrix (p_ii = 1, p_ji = 1/p_ij, all
// entries nonzero).
struct QuantumMatrixParams {
    unsigned n = 0;
    Rational lambda;
    std::vector<std::vector<Rational>> p;  // n x n

    // Fills p from the strict upper triangle, row-major: p_12, ..., p_1n,
    // p_23, ..., p_{n-1,n}.
    static QuantumMatrixParams from_upper(unsigned n, const Rational& lambda,
                                          const std::vector<Rational>& upper);
};

// Horton's K_n family: P, Q in (k^x)^n with p_i != q_i, and Gamma
// multiplicatively antisymmetric.
struct HortonParams {
    unsigned n = 0;
    std::vector<Rational> P, Q;
    std::vector<std::vector<Rational>> Gamma;  // n x n

    static HortonParams from_upper(unsigned n, const std::vector<Rational>& P,
                                   const std::vector<Rational>& Q,
                                   const std::vector<Rational>& gamma_upper);
};

// Generators y11, ..., ynn in row-major adjunction order. For (i,j) before
// (l,m) lexicographically:
//   tau scalar = p_li p_jm        when l >= i and m > j,
//              = lambda p_li p_jm when l >  i and m <= j;
//   delta rule = (lambda - 1) p_li y_im y_lj  when l > i and m > j, else 0.
// Throws InvalidParamsError naming the violated invariant.
PresentationPtr quantum_matrices(const QuantumMatrixParams& params);

// Generators x1, y1, ..., xn, yn in this order. The x_i level carries the
// sigma_i scalars (no derivation); the y_i level carries tau_i and
// delta_i(x_i) = -q_i^{-1} sum_{l<i} (q_l - p_l) y_l x_l, normalized at
// build time.
PresentationPtr horton_kn(const HortonParams& params);

// The default exact parameters used by named algebras and smoke tests.
QuantumMatrixParams default_qmat_params(unsigned n);
HortonParams default_kn_params(unsigned n);

// Resolves an algebra spec string:
//   "qmat1".."qmat3", "k1".."k3"                         named defaults
//   "qmat(n=2, lambda=2, p=[3])"                         p strict upper triangle
//   "kn(n=2, P=[2,5], Q=[3,7], gamma=[1])"               gamma strict upper triangle
// Throws InvalidParamsError / ParseError on malformed specs.
PresentationPtr make_algebra(const std::string& spec);

// Config template for a named preset ("quantum-symplectic",
// "quantum-euclidean"): a K_n skeleton whose P, Q, Gamma values the user
// fills in before loading.
std::string preset_template(const std::string& name, unsigned n);

}  // namespace skewps
