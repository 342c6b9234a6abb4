#pragma once

#include <array>
#include <optional>
#include <vector>

#include "exst/perm.hpp"
#include "exst/state.hpp"

namespace exst {

/// Uniform superposition over the H-orbit of the weight-k seed bitstring
/// (default 1^k 0^{N-k}; `seed_positions` overrides the excitation slots).
SparseState dicke_like_state(const PermutationGroup& h, int n, int k,
                             const std::vector<int>& seed_positions = {});

/// Normalized sum over sigma in H of the permuted tensor product of the
/// given single-qubit states. Throws when the sum cancels to zero.
SparseState stellar_construct(const std::vector<std::array<cplx, 2>>& stars,
                              const PermutationGroup& h);

bool is_invariant(const SparseState& s, const Permutation& sigma, double tol = 1e-12);

/// All sigma in S_n with sigma|psi> = |psi| (n <= max_n).
PermutationGroup stabilizer_group(const SparseState& s, int max_n = 8, double tol = 1e-12);

/// Permutations fixing every H-orbit of n-bit strings setwise.
PermutationGroup realizable_closure(const PermutationGroup& h, int n, int max_n = 8);
bool is_realizable(const PermutationGroup& h, int n, int max_n = 8);

/// H-orbit classes of weight-k bitstrings, each as its uniform superposition.
std::vector<SparseState> orbit_basis(const PermutationGroup& h, int n, int k);

/// Local dimension N state: sum over sigma in H of |sigma(0)...sigma(N-1)>.
SparseState proposition1_state(const PermutationGroup& h, int n);

}  // namespace exst
