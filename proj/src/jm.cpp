#include "nilblob/jm.hpp"

namespace nb {

Element commutator(const Element& a, const Element& b, Multiplier& mul) {
    return mul.mul(a, b) - mul.mul(b, a);
}

std::vector<Element> L_elements(int n, Multiplier& mul, long c) {
    std::vector<Element> L{generator(n, 0)};
    Element partial(n);  // L_1 + ... + L_{i-1}
    for (int i = 1; i < n; ++i) {
        Element U = generator(n, i);
        Element next = mul.mul(U, L[i - 1]) + mul.mul(L[i - 1], U) + Scalar(c) * mul.mul(U, partial);
        partial += L[i - 1];
        L.push_back(std::move(next));
    }
    return L;
}

std::vector<Element> Y_elements(int n, Multiplier& mul) {
    std::vector<Element> Y{generator(n, 0)};
    for (int i = 1; i < n; ++i) {
        Element S = generator(n, i) + Element::identity(n);
        Y.push_back(mul.mul(mul.mul(S, Y.back()), S));
    }
    return Y;
}

Element J_element(int n, Multiplier& mul) {
    Element J(n);
    for (auto& l : L_elements(n, mul)) J += l;
    return J;
}

JMReport check_jm(int n, Multiplier& mul) {
    JMReport r;
    r.n = n;
    auto L = L_elements(n, mul);
    auto Y = Y_elements(n, mul);
    Element one = Element::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!commutator(L[i], L[j], mul).is_zero()) r.L_commute = false;
            if (!commutator(Y[i], Y[j], mul).is_zero()) r.Y_commute = false;
        }
    Element partial(n);
    for (int i = 0; i < n; ++i) {
        if (i > 0 && !(mul.mul(L[i], L[i]) == Scalar(-2) * mul.mul(L[i], partial))) r.L_square = false;
        partial += L[i];
        if (!mul.mul(Y[i], Y[i]).is_zero()) r.Y_square_zero = false;
    }
    Element J = partial;
    if (!mul.mul(J, J).is_zero()) r.J_square_zero = false;
    for (int i = 1; i < n; ++i) {
        Element U = generator(n, i);
        if (!commutator(U, J, mul).is_zero()) r.J_noncentral.push_back(i);
        // L indices are 1-based in the identity; vector index i-1 holds L_i
        if (i + 1 < n) {
            Element s = L[i - 1] + L[i] + L[i + 1];
            if (!commutator(U, s, mul).is_zero()) r.local_central = false;
        }
        Element lhs = mul.mul(Y[i], U);
        Element rhs = mul.mul(U, Y[i - 1]) + Y[i - 1] - Y[i];
        if (!(lhs == rhs)) r.Y_shift = false;
        Element S = U + one;
        if (!(Y[i] == mul.mul(mul.mul(S, Y[i - 1]), S))) r.Y_conjugation = false;
    }
    return r;
}

}  // namespace nb
