#pragma once

#include <initializer_list>
#include <string_view>

#include "epkit/matrix.hpp"

namespace testing_support {

inline epkit::GaussianRational g(std::string_view s) { return epkit::GaussianRational::parse(s); }

// Matrix from scalar strings, e.g. mat({{"1/2", "i"}, {"0", "1"}}).
inline epkit::MatrixQ mat(std::initializer_list<std::initializer_list<const char*>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    epkit::MatrixQ out(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const char* s : row) out(i, j++) = g(s);
        ++i;
    }
    return out;
}

}  // namespace testing_support
