#pragma once

#include <map>
#include <string>
#include <vector>

#include "superalg/algebra.hpp"

namespace salg::catalog {

// Octonions H + vH in characteristic 2, basis e0..e7 with e0 = 1. `graded`
// puts e4..e7 in the odd part; otherwise everything is even.
AlgebraPtr make_octonion(const Scalar& mu, const Scalar& beta, const Scalar& gamma, bool graded);
AlgebraPtr make_octonion_super(const Scalar& mu, const Scalar& beta, const Scalar& gamma);
// k[u] (x) O with the ungraded table and u odd, u^2 = alpha.
AlgebraPtr make_octonion_u(const Scalar& mu, const Scalar& beta, const Scalar& gamma, const Scalar& alpha);

AlgebraPtr make_b12(const Ring* r);
AlgebraPtr make_b42(const Ring* r);
AlgebraPtr make_b_gamma(int trunc_degree, const Scalar& gamma);

// Generalized quaternions (a,b | k): i^2 = a, j^2 = b, k = ij = -ji.
AlgebraPtr make_quaternion(const Scalar& a, const Scalar& b);

struct DivisionParams {
    bool quaternion = false;   // epsilon = (a,b | k) instead of k
    Scalar a, b;               // quaternion parameters
    Scalar lambda;             // cases 2 and 4
    int u_axis = 1;            // case 3: u = i, j or k (1, 2, 3)
};
AlgebraPtr make_division_super(int which, const Ring* r, const DivisionParams& p);

AlgebraPtr make_checkerboard(const Ring* r, size_t n, size_t m);

AlgebraPtr make_jordan_mnm(const Ring* r, size_t n, size_t m);
AlgebraPtr make_jordan_qn(const Ring* r, size_t n);
AlgebraPtr make_jordan_pn(const Ring* r, size_t n);
AlgebraPtr make_jordan_osp(const Ring* r, size_t n, size_t m);
AlgebraPtr make_jordan_dt(const Scalar& t);
AlgebraPtr make_jordan_superform(const Ring* r, const std::vector<Scalar>& alphas, const std::vector<Scalar>& betas);
AlgebraPtr make_jordan_jp3(const Ring* r);
AlgebraPtr make_jordan_h3b42(const Ring* r);

// (a (x) x)(b (x) y) = (-1)^{|x||b|} ab (x) xy
AlgebraPtr graded_tensor(const SuperAlgebra& A, const SuperAlgebra& B);

struct CatalogKey {
    std::string family;
    std::map<std::string, std::string> params; // scalar text
    std::map<std::string, long> sizes;
    long characteristic = -1;                  // -1: family default
};

std::vector<std::string> families();
// Build from a key. Identifiers occurring in parameter texts become ring
// parameters; missing parameters get the family's symbolic default.
AlgebraPtr build(const CatalogKey& key);

} // namespace salg::catalog
