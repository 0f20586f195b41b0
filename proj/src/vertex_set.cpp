#include "twostruct/vertex_set.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

namespace twostruct {

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(std::size_t n) { return range(0, n); }

VertexSet VertexSet::range(std::size_t first, std::size_t last) {
    VertexSet s;
    if (last > first) {
        s.ids_.resize(last - first);
        std::iota(s.ids_.begin(), s.ids_.end(), first);
    }
    return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
        if (*a == *b) return true;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return false;
}

VertexSet VertexSet::unite(const VertexSet& other) const {
    VertexSet out;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out.ids_));
    return out;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
    VertexSet out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(out.ids_));
    return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
    VertexSet out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out.ids_));
    return out;
}

std::string VertexSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(ids_[i]);
    }
    return s + "}";
}

bool family_less(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.ids() < b.ids();
}

void sort_family(std::vector<VertexSet>& family) {
    std::sort(family.begin(), family.end(), family_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace twostruct
