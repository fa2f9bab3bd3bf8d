#include "cyclone/debug_geometry.hpp"

#include "cyclone/errors.hpp"

namespace cyclone::debug {

std::vector<BigInt> moment_point(int label, int d, int shift) {
    std::vector<BigInt> point(static_cast<std::size_t>(d));
    const BigInt t = label + shift;
    BigInt power = 1;
    for (int k = 0; k < d; ++k) {
        power *= t;
        point[static_cast<std::size_t>(k)] = power;
    }
    return point;
}

BigInt determinant(Matrix m) {
    const std::size_t size = m.size();
    if (size == 0) return 1;
    int sign = 1;
    BigInt previous = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < size && m[swap][k] == 0) ++swap;
            if (swap == size) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
            }
        }
        previous = m[k][k];
    }
    return sign * m[size - 1][size - 1];
}

namespace {

Matrix affine_rows(const PointConfig& cfg, const std::vector<int>& labels, int shift) {
    Matrix m;
    m.reserve(labels.size());
    for (int label : labels) {
        std::vector<BigInt> row{1};
        const auto point = moment_point(label, cfg.d(), shift);
        row.insert(row.end(), point.begin(), point.end());
        m.push_back(std::move(row));
    }
    return m;
}

} // namespace

BigInt simplex_volume(const PointConfig& cfg, Simplex s, int shift) {
    require_simplex(cfg, s);
    BigInt det = determinant(affine_rows(cfg, s.labels(), shift));
    return det < 0 ? BigInt(-det) : det;
}

int orientation(const PointConfig& cfg, const std::vector<int>& labels, int shift) {
    if (labels.size() != static_cast<std::size_t>(cfg.d() + 1)) {
        throw InvalidSimplexError("orientation needs d+1 labels");
    }
    return determinant(affine_rows(cfg, labels, shift)).sign();
}

bool is_hull_facet(const PointConfig& cfg, LabelSet face, int shift) {
    if (face.size() != cfg.d()) throw InvalidFaceError("hull facet test needs d labels");
    std::vector<int> labels = face.labels();
    labels.push_back(0);
    int side = 0;
    for (int p = 1; p <= cfg.n(); ++p) {
        if (face.contains(p)) continue;
        labels.back() = p;
        const int o = orientation(cfg, labels, shift);
        if (o == 0) return false;
        if (side == 0) side = o;
        else if (o != side) return false;
    }
    return true;
}

} // namespace cyclone::debug
