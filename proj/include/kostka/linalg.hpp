#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace kostka {

/* Sparse vector over Q: (column, value) pairs sorted by column, no zeros. */
class SparseVec {
public:
    using Entry = std::pair<int, mpq_class>;

    SparseVec() = default;
    static SparseVec unit(int col);
    /* From unsorted entries; duplicate columns are summed. */
    static SparseVec from_entries(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }
    int lead() const { return entries_.front().first; }
    const mpq_class& lead_value() const { return entries_.front().second; }
    mpq_class at(int col) const;

    /* this += c * other. */
    void axpy(const mpq_class& c, const SparseVec& other);
    void scale(const mpq_class& c);

    bool operator==(const SparseVec& o) const { return entries_ == o.entries_; }

private:
    std::vector<Entry> entries_;
};

/*
 * Row-echelon basis of a subspace of Q^columns, exact.  Every stored row has
 * a distinct pivot column (its smallest column) with value 1.  Callers
 * choose the column order; smaller column index = preferred pivot.
 */
class EchelonBasis {
public:
    /* Reduces v against the basis; returns true and stores it when the
     * residue is nonzero. */
    bool insert(SparseVec v);
    /* Reduces v against the stored rows (all pivot columns cleared). */
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }

    /* Back-substitution so that no row has a nonzero entry in another
     * row's pivot column. */
    void fully_reduce();

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, SparseVec>& rows() const { return rows_; }
    bool is_pivot(int col) const { return rows_.count(col) != 0; }

private:
    std::map<int, SparseVec> rows_;
};

}  // namespace kostka
