// liouvillian.hpp: vectorization and superoperator assembly
//
// Column stacking: vec(A rho B) = (B^T (x) A) vec(rho).

#pragma once

#include "cqed/operators.hpp"
#include "cqed/params.hpp"
#include "cqed/types.hpp"

namespace cqed {

template <typename Derived>
VectorT<typename Derived::Scalar> vectorize(const Eigen::MatrixBase<Derived>& rho)
{
    using Scalar = typename Derived::Scalar;
    OperatorT<Scalar> plain = rho;
    return Eigen::Map<const VectorT<Scalar>>(plain.data(), plain.size());
}

// Inverse of vectorize. Throws InvalidDimension unless the length is a square.
Operator unvectorize(const DensityVector& v);

// Row vector t with t * vec(rho) = tr(rho).
Eigen::RowVectorXcd trace_functional(int dim);

// rho -> A rho
Superoperator left_multiply(const Operator& a);
// rho -> rho B
Superoperator right_multiply(const Operator& b);
// rho -> -i [H, rho]
Superoperator commutator_superop(const Operator& h);
// rho -> C rho C^dag - (C^dag C rho + rho C^dag C) / 2
Superoperator dissipator(const Operator& c);

struct Liouvillians {
    Superoperator l0;
    Superoperator l_plus;  // coefficient of e^{+i delta t}
    Superoperator l_minus; // coefficient of e^{-i delta t}

    int dim() const; // Hilbert dimension d (superoperators are d^2 x d^2)
};

// L0 = -i[H0, .] + D(sqrt(2 gamma) sigma) + D(sqrt(2 kappa) a)
//      + D(sqrt(2 gamma_d) sigma^dag sigma) + D(sqrt(2 gamma_r) a^dag sigma)
// L+ = -i J2 [Sigma, .],  L- = -i J2 [Sigma^dag, .]
Liouvillians build_liouvillians(const SystemParams& params);

// Expectation value tr(op rho) for a vectorized rho.
Complex expectation(const Operator& op, const DensityVector& rho);

} // namespace cqed
