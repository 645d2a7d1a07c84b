#include "fibcube/vertex_set.hpp"

#include <sstream>

#include "fibcube/errors.hpp"

namespace fibcube {

std::uint64_t VertexSet::bit(VertexId v) {
    if (v >= 64)
        throw CapError("bitset encoding supports vertex ids below 64, got " + std::to_string(v));
    return std::uint64_t{1} << v;
}

std::vector<VertexId> VertexSet::members() const {
    std::vector<VertexId> out;
    std::uint64_t b = bits;
    while (b) {
        out.push_back(static_cast<VertexId>(std::countr_zero(b)));
        b &= b - 1;
    }
    return out;
}

std::string format_set(VertexSet s) {
    return format_vertex_list(s.members());
}

}  // namespace fibcube
