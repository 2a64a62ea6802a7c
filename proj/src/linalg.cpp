#include "kostka/linalg.hpp"

#include <algorithm>

namespace kostka {

SparseVec SparseVec::unit(int col)
{
    SparseVec v;
    v.entries_.emplace_back(col, 1);
    return v;
}

SparseVec SparseVec::from_entries(std::vector<Entry> entries)
{
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVec v;
    for (auto& e : entries) {
        if (!v.entries_.empty() && v.entries_.back().first == e.first)
            v.entries_.back().second += e.second;
        else
            v.entries_.push_back(std::move(e));
    }
    std::erase_if(v.entries_, [](const Entry& e) { return e.second == 0; });
    return v;
}

mpq_class SparseVec::at(int col) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), col,
                               [](const Entry& e, int c) { return e.first < c; });
    return (it != entries_.end() && it->first == col) ? it->second : mpq_class(0);
}

void SparseVec::axpy(const mpq_class& c, const SparseVec& other)
{
    if (c == 0 || other.entries_.empty())
        return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == entries_.end() || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            mpq_class v = a->second + c * b->second;
            if (v != 0)
                out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
}

void SparseVec::scale(const mpq_class& c)
{
    if (c == 0) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_)
        e.second *= c;
}

bool EchelonBasis::insert(SparseVec v)
{
    v = reduce(std::move(v));
    if (v.is_zero())
        return false;
    const mpq_class inv = 1 / v.lead_value();
    v.scale(inv);
    rows_.emplace(v.lead(), std::move(v));
    return true;
}

SparseVec EchelonBasis::reduce(SparseVec v) const
{
    // Walk the entries in column order; each elimination only touches
    // columns to the right of the pivot, so a single pass clears every pivot.
    std::size_t i = 0;
    while (i < v.entries().size()) {
        const int col = v.entries()[i].first;
        auto it = rows_.find(col);
        if (it == rows_.end()) {
            ++i;
            continue;
        }
        const mpq_class c = -v.entries()[i].second;
        v.axpy(c, it->second);
        // entry i is now gone; entries before i are unaffected
    }
    return v;
}

void EchelonBasis::fully_reduce()
{
    // Rows with larger pivots are finished first; they are the only ones
    // that can appear in the tail of a row with a smaller pivot.
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        SparseVec& row = it->second;
        std::size_t i = 1;
        while (i < row.entries().size()) {
            const int col = row.entries()[i].first;
            auto p = rows_.find(col);
            if (p == rows_.end()) {
                ++i;
                continue;
            }
            const mpq_class c = -row.entries()[i].second;
            row.axpy(c, p->second);
        }
    }
}

}  // namespace kostka
