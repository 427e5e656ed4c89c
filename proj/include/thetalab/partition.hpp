#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "thetalab/error.hpp"

namespace thetalab {

class DisjointSets {
public:
    explicit DisjointSets(int count) : parent_(count), rank_(count, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

/// Partition of edge ids 0..m-1 into canonically numbered classes: class ids
/// follow the smallest edge id each class contains, members are sorted.
struct EdgePartition {
    std::vector<int> class_of;
    std::vector<std::vector<int>> classes;

    int ground_size() const { return static_cast<int>(class_of.size()); }
    int class_count() const { return static_cast<int>(classes.size()); }

    bool same_class(int e, int f) const { return class_of[e] == class_of[f]; }
};

// Canonicalizes an arbitrary labelling (same label <=> same class).
inline EdgePartition partition_from_labels(const std::vector<int>& labels) {
    EdgePartition p;
    int m = static_cast<int>(labels.size());
    p.class_of.assign(m, -1);
    std::vector<int> label_to_class;
    std::vector<int> seen_labels;
    for (int e = 0; e < m; ++e) {
        int label = labels[e];
        int cls = -1;
        for (std::size_t i = 0; i < seen_labels.size(); ++i)
            if (seen_labels[i] == label) {
                cls = static_cast<int>(i);
                break;
            }
        if (cls == -1) {
            cls = static_cast<int>(seen_labels.size());
            seen_labels.push_back(label);
            p.classes.emplace_back();
        }
        p.class_of[e] = cls;
        p.classes[cls].push_back(e);
    }
    return p; // first-seen order == smallest-member order, members ascending
}

inline EdgePartition partition_from_dsu(DisjointSets& sets) {
    std::vector<int> labels(sets.size());
    for (int e = 0; e < sets.size(); ++e) labels[e] = sets.find(e);
    return partition_from_labels(labels);
}

enum class PartitionOrder { Equal, P1RefinesP2, P2RefinesP1, Incomparable };

inline const char* to_string(PartitionOrder order) {
    switch (order) {
        case PartitionOrder::Equal: return "Equal";
        case PartitionOrder::P1RefinesP2: return "P1RefinesP2";
        case PartitionOrder::P2RefinesP1: return "P2RefinesP1";
        case PartitionOrder::Incomparable: return "Incomparable";
    }
    return "?";
}

namespace detail {

// p refines q: every p-class lies inside one q-class.
inline bool refines(const EdgePartition& p, const EdgePartition& q) {
    for (const auto& cls : p.classes) {
        int target = q.class_of[cls.front()];
        for (int e : cls)
            if (q.class_of[e] != target) return false;
    }
    return true;
}

} // namespace detail

inline PartitionOrder compare_partitions(const EdgePartition& p1, const EdgePartition& p2) {
    if (p1.ground_size() != p2.ground_size())
        fail(ErrorKind::GroundSetMismatch,
             "partitions cover " + std::to_string(p1.ground_size()) + " vs " +
                 std::to_string(p2.ground_size()) + " edges");
    bool one_in_two = detail::refines(p1, p2);
    bool two_in_one = detail::refines(p2, p1);
    if (one_in_two && two_in_one) return PartitionOrder::Equal;
    if (one_in_two) return PartitionOrder::P1RefinesP2;
    if (two_in_one) return PartitionOrder::P2RefinesP1;
    return PartitionOrder::Incomparable;
}

} // namespace thetalab
