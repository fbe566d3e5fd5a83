#pragma once

// Published reference matrices for the Hamming and Golay transforms. Used as golden
// data by the test suites and the `verify` command.

#include <cstdint>
#include <vector>

#include "matrix.hpp"

namespace perfectntt::reference {

/// Standard binary Hamming transform, null-row inflation, lambda = 1 (7 x 7).
inline FieldMatrix standard_hamming_transform() {
    return FieldMatrix(PrimeModulus(2), {
        {0, 1, 0, 1, 1, 0, 0},
        {1, 0, 1, 0, 0, 1, 0},
        {1, 0, 0, 1, 0, 0, 1},
        {0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 1}
    });
}

/// Generator matrix of Hamming(7,4,3) spanning the eigenspace of the standard transform.
inline FieldMatrix hamming74_generator() {
    return FieldMatrix(PrimeModulus(2), {
        {1, 1, 0, 0, 0, 0, 1},
        {1, 1, 1, 0, 0, 1, 0},
        {1, 0, 1, 0, 1, 0, 0},
        {0, 1, 1, 1, 0, 0, 0}
    });
}

/// Ternary Hamming(13,10,3) parity-check matrix.
inline FieldMatrix ternary_hamming_parity_check() {
    return FieldMatrix(PrimeModulus(3), {
        {0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1},
        {0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 2, 2, 2},
        {1, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2}
    });
}

/// Ternary Hamming transform, null-row inflation, lambda = 1 (13 x 13).
inline FieldMatrix ternary_hamming_transform() {
    return FieldMatrix(PrimeModulus(3), {
        {1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1},
        {0, 2, 1, 1, 0, 0, 0, 1, 1, 1, 2, 2, 2},
        {1, 0, 2, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2},
        {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}
    });
}

/// Parity-check rows of the cyclic Hamming(7,4,3) code, h(x) = x^4+x^2+x+1.
inline FieldMatrix cyclic_hamming_parity_check() {
    return FieldMatrix(PrimeModulus(2), {
        {1, 0, 1, 1, 1, 0, 0},
        {0, 1, 0, 1, 1, 1, 0},
        {0, 0, 1, 0, 1, 1, 1}
    });
}

/// Cyclic shifts of h(x) completing the 7 x 7 matrix, before adding lambda I.
inline FieldMatrix cyclic_hamming_inflated() {
    return FieldMatrix(PrimeModulus(2), {
        {1, 0, 1, 1, 1, 0, 0},
        {0, 1, 0, 1, 1, 1, 0},
        {0, 0, 1, 0, 1, 1, 1},
        {1, 0, 0, 1, 0, 1, 1},
        {1, 1, 0, 0, 1, 0, 1},
        {1, 1, 1, 0, 0, 1, 0},
        {0, 1, 1, 1, 0, 0, 1}
    });
}

/// Circulant binary Hamming transform, lambda = 1.
inline FieldMatrix cyclic_hamming_transform() {
    return FieldMatrix(PrimeModulus(2), {
        {0, 0, 1, 1, 1, 0, 0},
        {0, 0, 0, 1, 1, 1, 0},
        {0, 0, 0, 0, 1, 1, 1},
        {1, 0, 0, 0, 0, 1, 1},
        {1, 1, 0, 0, 0, 0, 1},
        {1, 1, 1, 0, 0, 0, 0},
        {0, 1, 1, 1, 0, 0, 0}
    });
}

/// Circulant binary Golay transform, lambda = 1 (23 x 23).
inline FieldMatrix binary_golay_transform() {
    return FieldMatrix(PrimeModulus(2), {
        {0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1},
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0},
        {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1},
        {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0},
        {0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0},
        {0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1},
        {1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0},
        {0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0},
        {0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1},
        {1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1},
        {1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1},
        {1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
        {1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}
    });
}

/// Circulant ternary Golay transform, lambda = 1 (11 x 11).
inline FieldMatrix ternary_golay_circulant() {
    return FieldMatrix(PrimeModulus(3), {
        {2, 2, 2, 2, 1, 0, 1, 0, 0, 0, 0},
        {0, 2, 2, 2, 2, 1, 0, 1, 0, 0, 0},
        {0, 0, 2, 2, 2, 2, 1, 0, 1, 0, 0},
        {0, 0, 0, 2, 2, 2, 2, 1, 0, 1, 0},
        {0, 0, 0, 0, 2, 2, 2, 2, 1, 0, 1},
        {1, 0, 0, 0, 0, 2, 2, 2, 2, 1, 0},
        {0, 1, 0, 0, 0, 0, 2, 2, 2, 2, 1},
        {1, 0, 1, 0, 0, 0, 0, 2, 2, 2, 2},
        {2, 1, 0, 1, 0, 0, 0, 0, 2, 2, 2},
        {2, 2, 1, 0, 1, 0, 0, 0, 0, 2, 2},
        {2, 2, 2, 1, 0, 1, 0, 0, 0, 0, 2}
    });
}

/// Ternary Golay transform from the systematic parity-check matrix, null rows, lambda = 1.
inline FieldMatrix ternary_golay_systematic_transform() {
    return FieldMatrix(PrimeModulus(3), {
        {2, 1, 1, 2, 2, 0, 1, 0, 0, 0, 0},
        {1, 2, 2, 1, 0, 2, 0, 1, 0, 0, 0},
        {1, 2, 2, 0, 1, 2, 0, 0, 1, 0, 0},
        {1, 2, 0, 2, 2, 1, 0, 0, 0, 1, 0},
        {1, 0, 2, 2, 2, 1, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}
    });
}

/// Extended ternary Golay transform, lambda = 1 (12 x 12). Entries -1 stand for 2.
inline FieldMatrix extended_golay_transform() {
    return FieldMatrix(PrimeModulus(3), {
        { 1, -1, -1, -1, -1, -1,  1,  0,  0,  0,  0,  0},
        {-1,  1, -1,  1,  1, -1,  0,  1,  0,  0,  0,  0},
        {-1, -1,  1, -1,  1,  1,  0,  0,  1,  0,  0,  0},
        {-1,  1, -1,  1, -1,  1,  0,  0,  0,  1,  0,  0},
        {-1,  1,  1, -1,  1,  1,  0,  0,  0,  0,  1,  0},
        {-1, -1,  1,  1, -1,  1,  0,  0,  0,  0,  0,  1},
        {-1, -1,  1,  0,  0,  1, -1,  1,  0,  0,  0,  0},
        {-1,  1, -1,  1,  0,  0,  1,  1,  1,  0,  0,  0},
        {-1,  0,  1, -1,  1,  0,  1,  0,  1,  1,  0,  0},
        {-1,  0,  0,  1, -1,  0,  1,  0,  0,  1,  1,  0},
        {-1,  1,  0,  0,  1, -1,  1,  0,  0,  0,  1,  1},
        { 1, -1, -1,  0, -1,  0,  0,  1,  1,  0,  0,  1}
    });
}

/// Inverse of the extended ternary Golay transform.
inline FieldMatrix extended_golay_inverse() {
    return FieldMatrix(PrimeModulus(3), {
        { 1,  0, -1,  1,  1,  1,  0, -1,  1,  1,  1,  1},
        {-1,  1,  0,  1, -1,  0,  0, -1,  1,  1,  0,  0},
        { 0,  1, -1,  0,  1, -1, -1, -1,  1, -1,  0,  1},
        { 0,  1,  0,  0,  0, -1,  1, -1, -1,  1, -1, -1},
        { 1,  1,  0, -1,  1,  1,  0, -1,  1,  0, -1,  0},
        {-1, -1, -1,  0,  0,  0,  1,  1,  1, -1,  1, -1},
        {-1,  0, -1, -1,  0,  1,  1,  1, -1, -1,  1,  1},
        { 0,  1,  0,  1, -1,  0, -1, -1, -1,  0,  1, -1},
        { 0,  1, -1,  0,  1,  0,  1,  1,  1, -1,  0,  0},
        { 1,  1, -1,  0,  1, -1,  0,  1, -1, -1,  0,  1},
        {-1, -1,  1,  1,  1,  0,  1,  0, -1,  0,  0,  0},
        {-1,  1,  1,  1,  0, -1, -1,  1, -1,  0,  0, -1}
    });
}

} // namespace perfectntt::reference
