#include "resolvdim/linalg.hpp"

#include <vector>

#include "resolvdim/error.hpp"

namespace resolvdim {

std::size_t rank(const Field& f, std::span<const Vector> vs) {
    if (vs.empty()) return 0;
    const std::size_t cols = vs.front().size();
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(vs.size());
    for (const auto& v : vs) {
        if (v.size() != cols) throw Error(ErrorCode::DimensionMismatch, "vectors differ in length");
        rows.push_back(v.coeffs);
    }

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c].rep == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const FieldElement scale = f.inv(rows[r][c]);
        for (auto& x : rows[r]) x = f.mul(x, scale);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].rep == 0) continue;
            const FieldElement factor = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
        }
        ++r;
    }
    return r;
}

bool linearly_independent(const Field& f, std::span<const Vector> vs) {
    return rank(f, vs) == vs.size();
}

bool contains_v_basis(const Field& f, std::uint32_t n, std::span<const Vector> vs) {
    for (const auto& v : vs)
        if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length differs from n");
    return rank(f, vs) == n;
}

}  // namespace resolvdim
