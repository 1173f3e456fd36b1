// operators.hpp: truncated Hilbert space, ladder operators and H0
//
// Factor ordering is QD (x) field throughout. The QD basis is (|g>, |e>), so
// the global ground state |g,0> is basis index 0 and |e,n> has index
// fock_levels + n.

#pragma once

#include <unsupported/Eigen/KroneckerProduct>

#include "cqed/params.hpp"
#include "cqed/types.hpp"

namespace cqed {

// Photon annihilation operator on fock_levels number states.
Operator annihilation(int fock_levels);

// QD lowering operator |g><e|.
Operator lowering();

template <typename DerivedA, typename DerivedB>
auto tensor(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
    using Scalar = typename DerivedA::Scalar;
    OperatorT<Scalar> out = Eigen::kroneckerProduct(a.eval(), b.eval());
    return out;
}

// Operators embedded in the full space. Every module builds through this
// factory so the ordering convention lives in one place.
struct ModeOperators {
    explicit ModeOperators(const HilbertConfig& config);

    int dim;
    Operator identity;
    Operator a;      // I_2 (x) a
    Operator sigma;  // sigma (x) I_N
    Operator number; // a^dag a
    Operator excited_projector; // sigma^dag sigma
};

// The drive operator Sigma: a for cavity driving, sigma for QD driving.
Operator drive_operator(const ModeOperators& ops, DriveTarget target);

// Rotating-frame Hamiltonian in rad/ns:
//   Dc a^dag a + Dd sigma^dag sigma + g (sigma^dag a + sigma a^dag) + J1 (Sigma + Sigma^dag)
Operator build_h0(const SystemParams& params);

} // namespace cqed
