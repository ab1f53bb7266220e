#ifndef LOCSEP_SETS_HPP
#define LOCSEP_SETS_HPP

#include <algorithm>
#include <iterator>
#include <vector>

namespace locsep {

// Vertex and edge sets are sorted, duplicate-free vectors of ids.
using VertexSet = std::vector<int>;
using EdgeSet = std::vector<int>;

inline std::vector<int> normalized(std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool contains(const std::vector<int>& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}

inline std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return true;
    }
    return false;
}

// Union-find with path halving.
class DisjointSets {
public:
    explicit DisjointSets(int n = 0) : parent_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int add() {
        parent_.push_back(static_cast<int>(parent_.size()));
        return static_cast<int>(parent_.size()) - 1;
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    // Returns true if two classes were merged. The smaller root survives.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }
    int size() const { return static_cast<int>(parent_.size()); }

    // Classes as sorted lists, ordered by smallest member.
    std::vector<std::vector<int>> classes() {
        std::vector<std::vector<int>> by_root(parent_.size());
        for (int i = 0; i < size(); ++i) by_root[find(i)].push_back(i);
        std::vector<std::vector<int>> out;
        for (auto& c : by_root)
            if (!c.empty()) out.push_back(std::move(c));
        return out;
    }

private:
    std::vector<int> parent_;
};

}  // namespace locsep

#endif
