#pragma once

#include "nilblob/algebra.hpp"

#include <vector>

namespace nb {

// L_1 = U_0; L_{i+1} = U_i L_i + L_i U_i + c U_i (L_1 + ... + L_{i-1})
// c = -2 as usually written breaks commutativity once n >= 3 (U_i^2 = -2 U_i here); c = 2 is consistent
std::vector<Element> L_elements(int n, Multiplier& mul, long c = 2);
// Y_1 = U_0; Y_{i+1} = (U_i + 1) Y_i (U_i + 1)
std::vector<Element> Y_elements(int n, Multiplier& mul);
// L_1 + ... + L_n
Element J_element(int n, Multiplier& mul);

// results of the identity checks, one flag per family
struct JMReport {
    int n = 0;
    bool L_commute = true;
    bool Y_commute = true;
    bool L_square = true;       // L_i^2 = -2 L_i (L_1 + ... + L_{i-1})
    bool Y_square_zero = true;
    bool J_square_zero = true;
    bool local_central = true;  // [U_i, L_i + L_{i+1} + L_{i+2}] = 0
    bool Y_shift = true;        // Y_{i+1} U_i = U_i Y_i + Y_i - Y_{i+1}
    bool Y_conjugation = true;  // Y_{i+1} = (U_i + 1) Y_i (U_i + 1)
    std::vector<int> J_noncentral;  // indices i with [U_i, J] != 0
    bool all() const {
        return L_commute && Y_commute && L_square && Y_square_zero && J_square_zero && local_central &&
               Y_shift && Y_conjugation;
    }
};

JMReport check_jm(int n, Multiplier& mul);

Element commutator(const Element& a, const Element& b, Multiplier& mul);

}  // namespace nb
