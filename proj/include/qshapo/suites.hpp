#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qshapo/shapovalov.hpp"

namespace qshapo {

// Commutation of e_l with root vectors on M(lambda), lambda symbolic.
Report suite_commutation(int n);
// Per-I identities for e_i f_I H_I v_lambda, lambda symbolic (and on the hyperplane for i = N).
Report suite_index_sums(int n);
// Adjoint calculus for F = f_beta, every beta in [n].
Report suite_calculus(int n, std::uint64_t seed = 1);
// Gaussian binomial recursion for l <= lmax.
Report suite_gauss(int lmax);
// F^{p+1} f_J identities and the determinant shift identity for p in [1, pmax].
Report suite_shift(int n, int pmax);
// Inductive construction against the sum formula and the determinant, m = 1.
Report suite_inductive(int n, int samples, std::uint64_t seed = 1);
// Formal Psi_r shift identity on root vectors avoiding beta.
Report suite_psi(int n);
// Product of m = 1 factors is a highest weight vector and matches the inductive element.
Report suite_powers(int n, int m, const std::vector<Weight>& lambdas);
// Weight-space dimensions against Kostant counts and the overlap audit.
Report suite_pbw(int n, int max_height, int cap);

std::vector<std::string> suite_names();
// Maps accepted alternative names onto suite_names() entries.
std::string canonical_suite(const std::string& name);

}  // namespace qshapo
