#pragma once

#include <algorithm>
#include <vector>

#include "twostruct/core.hpp"

namespace twostruct::detail {

// Steps x to the lexicographically next vector over colors 0..q-1, the first
// position being most significant. Returns false after the last vector.
inline bool next_vector(std::vector<ColorId>& x, std::size_t q) {
    for (std::size_t i = x.size(); i-- > 0;) {
        if (x[i].index + 1u < q) {
            x[i] = ColorId(x[i].index + 1u);
            return true;
        }
        x[i] = ColorId(0);
    }
    return false;
}

inline bool is_constant(const std::vector<ColorId>& x) {
    return std::all_of(x.begin(), x.end(), [&](ColorId c) { return c == x.front(); });
}

}  // namespace twostruct::detail
