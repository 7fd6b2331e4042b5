#include "nilblob/kernels.hpp"
#include "nilblob/errors.hpp"

#include <omp.h>

#include <unordered_map>

namespace nb {

void set_jobs(int jobs) {
    if (jobs > 0) omp_set_num_threads(jobs);
}

int max_jobs() { return omp_get_max_threads(); }

Scalar StructureTable::loop_factor() const {
    return rule.kind == Rule::Kind::NilBlob ? Scalar(-2) : Scalar(-gaussian_int(2, rule.q));
}

Scalar StructureTable::marked_loop_factor() const {
    if (rule.kind == Rule::Kind::NilBlob) return 0;
    return -gaussian_int(rule.m - 1, rule.q) / gaussian_int(rule.m, rule.q);
}

Scalar StructureTable::coefficient(int loops, int marked_loops) const {
    return power(loop_factor(), loops) * (marked_loops ? power(marked_loop_factor(), marked_loops) : Scalar(1));
}

namespace {

TableEntry product_entry(const BlobDiagram& a, const BlobDiagram& b, const Rule& rule,
                         const std::unordered_map<BlobDiagram, std::int32_t, DiagramHash>& pos) {
    ConcatResult c = concatenate(a, b);
    auto t = apply_rule(c, rule);
    TableEntry e;
    if (!t) return e;
    for (int l : c.loops) (l > 0 ? e.marked_loops : e.loops)++;
    e.product = pos.at(t->diagram);
    return e;
}

}  // namespace

StructureTable build_table(int n, const Rule& rule, Exec exec) {
    StructureTable t;
    t.n = n;
    t.rule = rule;
    t.basis = enumerate_diagrams(n);
    const long N = static_cast<long>(t.basis.size());
    std::unordered_map<BlobDiagram, std::int32_t, DiagramHash> pos;
    for (long i = 0; i < N; ++i) pos.emplace(t.basis[i], static_cast<std::int32_t>(i));
    t.entries.resize(N * N);

    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (long i = 0; i < N; ++i)
            for (long j = 0; j < N; ++j) t.entries[i * N + j] = product_entry(t.basis[i], t.basis[j], rule, pos);
    } else {
        for (long i = 0; i < N; ++i)
            for (long j = 0; j < N; ++j) t.entries[i * N + j] = product_entry(t.basis[i], t.basis[j], rule, pos);
    }
    return t;
}

namespace {

// failures for all triples with first factor a
std::size_t assoc_row(const StructureTable& t, std::size_t a) {
    const std::size_t N = t.size();
    std::size_t bad = 0;
    for (std::size_t b = 0; b < N; ++b) {
        const TableEntry& ab = t.at(a, b);
        for (std::size_t c = 0; c < N; ++c) {
            const TableEntry& bc = t.at(b, c);
            TableEntry l, r;
            if (ab.product >= 0) {
                l = t.at(ab.product, c);
                if (l.product >= 0) {
                    l.loops += ab.loops;
                    l.marked_loops += ab.marked_loops;
                }
            }
            if (bc.product >= 0) {
                r = t.at(a, bc.product);
                if (r.product >= 0) {
                    r.loops += bc.loops;
                    r.marked_loops += bc.marked_loops;
                }
            }
            if (l.product != r.product) {
                ++bad;
                continue;
            }
            if (l.product < 0 || (l.loops == r.loops && l.marked_loops == r.marked_loops)) continue;
            // same diagram, different loop counts: the scalars may still agree
            if (t.coefficient(l.loops, l.marked_loops) != t.coefficient(r.loops, r.marked_loops)) ++bad;
        }
    }
    return bad;
}

}  // namespace

AssocReport check_associativity(const StructureTable& t, Exec exec) {
    const long N = static_cast<long>(t.size());
    AssocReport r;
    r.triples = static_cast<std::size_t>(N) * N * N;
    std::size_t bad = 0;
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
        for (long a = 0; a < N; ++a) bad += assoc_row(t, a);
    } else {
        for (long a = 0; a < N; ++a) bad += assoc_row(t, a);
    }
    r.failures = bad;
    return r;
}

}  // namespace nb
