#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace p2t {

// Disjoint sets with union by size and rollback. No path compression, so
// undo is a constant-time pop per union.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    bool same(int a, int b) const { return find(a) == find(b); }

    // Returns false (and records nothing) if a and b are already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        log_.emplace_back(a, b);
        return true;
    }

    std::size_t checkpoint() const { return log_.size(); }

    void rollback_to(std::size_t mark) {
        while (log_.size() > mark) {
            auto [root, child] = log_.back();
            log_.pop_back();
            parent_[child] = child;
            size_[root] -= size_[child];
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<std::pair<int, int>> log_;  // (surviving root, attached root)
};

}  // namespace p2t
