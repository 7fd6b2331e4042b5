#pragma once

#include "nilblob/algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nb {

struct BlobParams {
    int n = 0, e = 0, m = 0;
    bool operator==(const BlobParams&) const = default;
};

// e >= 4 and 1 < m < e-1 (so m is not 0, 1, -1 mod e)
void check_params(const BlobParams& p);

struct Classification {
    int K = 0, R = 0;
    bool singular = false;
};

// n - (e - m) = K e + R; TooSmallN when n < e - m
Classification classify(const BlobParams& p);

struct Intervals {
    std::pair<int, int> lead;  // the first e - m steps
    std::vector<std::pair<int, int>> full;  // B_1..B_K as [first, last]
    std::optional<std::pair<int, int>> last;
};

// f(j) = j e - m
inline int block_start(const BlobParams& p, int j) { return j * p.e - p.m; }
Intervals path_intervals(const BlobParams& p);

// wall M_j sits at x = (j-1) e + m
inline int wall_x(const BlobParams& p, int j) { return (j - 1) * p.e + p.m; }

// Shape (1^mu1, 1^mu2) of a one-column bipartition.
struct Shape {
    int mu1 = 0, mu2 = 0;
    int endpoint() const { return mu2 - mu1; }
    auto operator<=>(const Shape&) const = default;
};

// A standard tableau of shape (1^a, 1^b) read as a lattice path:
// step k is -1 when k sits in the first column, +1 in the second.
struct PathTableau {
    std::vector<int> steps;

    int n() const { return static_cast<int>(steps.size()); }
    std::vector<int> heights() const;
    Shape shape() const;
    std::pair<std::vector<int>, std::vector<int>> columns() const;
    bool operator==(const PathTableau&) const = default;
    auto operator<=>(const PathTableau&) const = default;

    static PathTableau from_heights(const std::vector<int>& h);
    static PathTableau from_columns(int n, const std::vector<int>& second);
};

// t^mu: entries filled along rows
PathTableau row_reading(const Shape& mu);
// t^lambda for lambda = (1^n, 1^0)
PathTableau lambda_tableau(int n);
// t.s_i: swap the entries i and i+1
PathTableau act(const PathTableau& t, int i);
PathTableau act(const PathTableau& t, const std::vector<int>& word);

std::vector<int> residue_sequence(const PathTableau& t, const BlobParams& p);

using StdMap = std::map<Shape, std::vector<PathTableau>>;
// reflection-orbit closure of P_lambda under partial reflections at wall contacts
StdMap enumerate_std(const BlobParams& p);
// all tableaux filtered by residue, residue-pruned depth first search
StdMap enumerate_std_by_residue(const BlobParams& p);

// Greedy area reduction: smallest admissible i each step. Returns w with t.w = target.
std::vector<int> reduced_expression(const PathTableau& t, const PathTableau& target);
// one-line form of d(t): i -> entry of t in the box holding i in t^mu
std::vector<int> one_line(const PathTableau& t);
long inversion_count(const std::vector<int>& perm);
// one-line form of s_{i1} ... s_{ik} acting on the right
std::vector<int> word_permutation(int n, const std::vector<int>& word);

// Orbit members as walks on walls: j_0 = 0, j_i is the wall reached after B_i.
struct Walk {
    std::vector<int> j;  // K+1 entries
    int last_dir = 0;    // direction on B_last, 0 when singular
    bool operator==(const Walk&) const = default;
};

std::optional<Walk> decode_walk(const PathTableau& t, const BlobParams& p);
PathTableau tableau_from_walk(const Walk& w, const BlobParams& p);

// number of H/U' columns of tableaux of this walk's shape (singular): K - level(j_K)
int shape_rank(const Walk& w, const Classification& c);

struct RegionFactor {
    enum class Kind { H, UPrime, U } kind;
    int index;
    std::vector<int> word;  // simple transpositions filling the region
};

struct RegionFactorization {
    std::vector<RegionFactor> theta;  // H's in index order, then U''s
    std::vector<RegionFactor> u;      // U's in application order
    Walk central_walk;
    int columns = 0;  // k
    bool central() const { return u.empty(); }
    std::vector<int> word() const;
};

// Regular parameters factorize the truncation to the first n - R steps.
RegionFactorization region_factorize(const PathTableau& t, const BlobParams& p);
bool is_central(const PathTableau& t, const BlobParams& p);

struct Symbol {
    enum class Kind { Empty, H, UPrime } kind = Kind::Empty;
    int index = 0;
    bool star = false;
    bool operator==(const Symbol&) const = default;
};

struct CodMatrix {
    std::vector<std::vector<Symbol>> rows;  // 2 or 4 rows
    int cols() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
    bool operator==(const CodMatrix&) const = default;
};

CodMatrix codify(const PathTableau& t, const BlobParams& p);
CodMatrix codify(const PathTableau& s, const PathTableau& t, const BlobParams& p);
// c(t) from column choices directly: true = U' in that column (column 0 must be H)
CodMatrix codification_from_columns(const std::vector<bool>& uprime);
CodMatrix stack(const CodMatrix& cs, const CodMatrix& ct);

struct Token {
    enum class Kind { U, Y, YDiff } kind;  // YDiff = Y_{K+1} - Y_K
    int index = 0;
    bool operator==(const Token&) const = default;
};

struct TruncatedWord {
    std::vector<Token> tokens;
    bool sign_undetermined = true;
    bool operator==(const TruncatedWord&) const = default;
};

std::string format_token(const Token& t);
std::string format_truncated(const TruncatedWord& w);

// the matrix algorithm on a stacked 4-row codification
TruncatedWord matrix_algorithm(const CodMatrix& cst);
// central s, t of the same shape, singular parameters
TruncatedWord generator_word(const PathTableau& s, const PathTableau& t, const BlobParams& p);
// any s, t of the same shape: u-part sandwich around the central word
TruncatedWord basis_word(const PathTableau& s, const PathTableau& t, const BlobParams& p);

enum class Side { Inner, Outer };
Side side_of(const PathTableau& t, const BlobParams& p);  // regular only
TruncatedWord generator_word_regular(const PathTableau& s, const PathTableau& t, const BlobParams& p);

// Images in the nil-blob algebra on K points: U_i -> (-1)^e U_i, Y_j -> Y_j, Y_{K+1} -> J
class NilBlobImage {
public:
    explicit NilBlobImage(const BlobParams& p);
    int K() const { return K_; }
    bool singular() const { return singular_; }
    ExtElement map(const TruncatedWord& w);
    Multiplier& multiplier() { return mul_; }

private:
    ExtElement token_image(const Token& t) const;
    int K_;
    int e_;
    bool singular_;
    Multiplier mul_;
    std::vector<Element> Y_;
};

ExtElement map_to_nilblob(const TruncatedWord& w, const BlobParams& p);

// dimension spanned by the images of the basis words over all same-shape pairs
struct RankReport {
    std::size_t pairs = 0;
    std::size_t rank = 0;
    std::size_t expected = 0;
};
RankReport rank_of_images(const BlobParams& p, bool parallel = true);

}  // namespace nb
