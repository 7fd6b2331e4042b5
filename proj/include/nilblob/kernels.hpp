#pragma once

#include "nilblob/algebra.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nb {

enum class Exec { Serial, Parallel };

// thread count for the parallel kernels; 0 leaves the OpenMP default
void set_jobs(int jobs);
int max_jobs();

// d_i * d_j = coefficient * d_product, coefficient a monomial in the two loop factors
struct TableEntry {
    std::int32_t product = -1;  // -1: zero
    std::int16_t loops = 0;
    std::int16_t marked_loops = 0;
    bool operator==(const TableEntry&) const = default;
};

struct StructureTable {
    int n = 0;
    Rule rule;
    std::vector<BlobDiagram> basis;
    std::vector<TableEntry> entries;  // row-major, size N*N

    std::size_t size() const { return basis.size(); }
    const TableEntry& at(std::size_t i, std::size_t j) const { return entries[i * basis.size() + j]; }
    // factors per unmarked / marked loop under the rule
    Scalar loop_factor() const;
    Scalar marked_loop_factor() const;
    Scalar coefficient(int loops, int marked_loops) const;
};

StructureTable build_table(int n, const Rule& rule, Exec exec);

struct AssocReport {
    std::size_t triples = 0;
    std::size_t failures = 0;
};

// (a b) c == a (b c) over all basis triples
AssocReport check_associativity(const StructureTable& t, Exec exec);

}  // namespace nb
