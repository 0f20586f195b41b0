#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace twostruct {

using Vertex = std::size_t;

// Sorted, duplicate-free list of vertex ids.
class VertexSet {
public:
    using const_iterator = std::vector<Vertex>::const_iterator;

    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids);
    explicit VertexSet(std::vector<Vertex> ids);

    static VertexSet range(std::size_t n);
    static VertexSet range(std::size_t first, std::size_t last);

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    Vertex front() const { return ids_.front(); }
    Vertex back() const { return ids_.back(); }
    Vertex operator[](std::size_t i) const { return ids_[i]; }
    const_iterator begin() const noexcept { return ids_.begin(); }
    const_iterator end() const noexcept { return ids_.end(); }
    const std::vector<Vertex>& ids() const noexcept { return ids_; }

    bool contains(Vertex v) const;
    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet unite(const VertexSet& other) const;
    VertexSet intersect(const VertexSet& other) const;
    VertexSet minus(const VertexSet& other) const;

    std::string to_string() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> ids_;
};

// Family order used everywhere: by size, then lexicographically.
bool family_less(const VertexSet& a, const VertexSet& b);

void sort_family(std::vector<VertexSet>& family);

}  // namespace twostruct
