#pragma once

#include "nilblob/algebra.hpp"

#include <string>
#include <vector>

namespace nb {

// Letters 0..n-1 are U_i; kJ is the extra central generator.
constexpr int kJ = -1;

struct Word {
    int n = 0;
    std::vector<int> letters;
    bool has_j() const;
    bool operator==(const Word&) const = default;
};

// "U0 U1 J", case-insensitive; "V<k>" accepted as an alias of "U<k>"
Word parse_word(const std::string& text, int n, bool allow_j = false);
std::string format_word(const Word& w);

int degree(const Word& w);

Element evaluate(const Word& w, Multiplier& mul);
Element evaluate(const Word& w);
// blob algebra images (V_0 rescaled by -[m])
Element evaluate_blob(const Word& w, const Scalar& q, long m);
ExtElement evaluate_ext(const Word& w, Multiplier& mul);
ExtElement evaluate_ext(const Word& w);

struct NormalMonomial {
    std::vector<int> I, J;
    bool operator==(const NormalMonomial&) const = default;
    auto operator<=>(const NormalMonomial&) const = default;
};

// U_{i j} = U_i U_{i-1} ... U_j, concatenated over the pairs
Word monomial_word(const NormalMonomial& nm, int n);
// generators U_0..U_{n-1}; C(2n, n) monomials including 1
std::vector<NormalMonomial> enumerate_normal(int n);

struct NormalForm {
    Scalar coeff;  // 0 means the word vanishes
    NormalMonomial monomial;
};

// Bijection normal monomial -> (scalar, diagram), built once per n.
class NormalFormTable {
public:
    explicit NormalFormTable(int n);
    int n() const { return n_; }
    const std::vector<NormalMonomial>& monomials() const { return monos_; }
    // nullopt when some diagram was hit twice (would contradict the basis claim)
    bool bijective() const { return bijective_; }
    NormalForm normal_form(const Word& w, Multiplier& mul) const;
    NormalForm normal_form(const Element& x) const;

private:
    int n_;
    bool bijective_ = true;
    std::vector<NormalMonomial> monos_;
    std::unordered_map<BlobDiagram, std::pair<std::size_t, Scalar>, DiagramHash> table_;
};

NormalForm normal_form(const Word& w);

struct Factorization {
    Word word;
    Scalar scalar;  // evaluate(word) = scalar * d
};

Factorization factorize_diagram(const BlobDiagram& d);

// the word (U1 U3 .. U_{2i+1}) U0 (U2 U4 .. U_{2i+2}) (U1 U3 .. U_{2i+1}); i = -1 gives U0
Word mark_insertion_word(int n, int i);

}  // namespace nb

namespace nb {

struct RelationReport {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// U_i^2 = -2U_i, braid, far commutation, U1U0U1 = 0, U0^2 = 0 on the diagram images
RelationReport check_nilblob_relations(int n, Multiplier& mul);
// the five blob relations on V_0 = -[m](marked identity), V_i = U_i
RelationReport check_blob_relations(int n, const Scalar& q, long m);

}  // namespace nb
