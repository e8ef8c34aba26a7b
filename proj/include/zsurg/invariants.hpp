#pragma once

#include "zsurg/bigint.hpp"
#include "zsurg/diagram.hpp"
#include "zsurg/laurent.hpp"

namespace zsurg {

struct ClassicalInvariants {
    LaurentPolynomial alexander;  // normalized
    int signature = 0;
    BigInt determinant = 1;
    int arf = 0;
    bool operator==(const ClassicalInvariants&) const = default;
};

/// Fox-calculus determinant of the Wirtinger presentation, normalized.
LaurentPolynomial alexander(const KnotDiagram& d);

/// Goeritz form of the checkerboard surface with the Gordon-Litherland
/// correction. `shade_color` picks which of the two colorings spans the
/// surface; both give the same answer.
int signature(const KnotDiagram& d, int shade_color = 0);

BigInt determinant(const KnotDiagram& d);
int arf(const KnotDiagram& d);
int arf_from_determinant(const BigInt& det);

ClassicalInvariants classical_invariants(const KnotDiagram& d);

/// Number of positive minus number of negative eigenvalues, exactly.
int symmetric_signature(const IntMatrix& m);

}  // namespace zsurg
