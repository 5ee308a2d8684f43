#include "flagpath/diagram3.hpp"

#include <algorithm>

namespace flagpath {

namespace {

void check_spec_is_3d(const BinSpec& spec) {
    if (spec.k() != 3)
        throw DimensionMismatch("diagram matrices are defined for k = 3");
}

}  // namespace

DiagramMatrix diagram_matrix(const std::array<int, 3>& l, int n) {
    const auto [l1, l2, l3] = l;
    if (l1 < 1 || l2 < 1 || l3 < 1) throw OutOfRange("bin sizes must be positive");
    if (n < 1) throw OutOfRange("n must be positive");

    DiagramMatrix d;
    d.l = l;
    d.n = 1;
    d.entries.assign(static_cast<size_t>(l1) + 1,
                     std::vector<int>(static_cast<size_t>(l2) + 1, 0));
    for (int m = 2; m <= n; ++m) {
        const int rows = m * l1 + 1, cols = m * l2 + 1;
        const int arows = (m - 1) * l1 + 1, acols = (m - 1) * l2 + 1;
        std::vector<std::vector<int>> e(static_cast<size_t>(rows),
                                        std::vector<int>(static_cast<size_t>(cols)));
        // A block: the previous matrix.
        for (int i = 0; i < arows; ++i)
            for (int j = 0; j < acols; ++j)
                e[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    d.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
        // B block: diagonal stripes of width l1+l2.
        for (int i = 1; i <= arows; ++i)
            for (int j = 1; j <= l2; ++j) {
                const int v = i - 1 + j + (m - 1) * l2;
                const int s = m + 1 - (v + l1 + l2 - 1) / (l1 + l2);
                e[static_cast<size_t>(i - 1)][static_cast<size_t>(acols + j - 1)] =
                    (m - s) * l3;
            }
        // C block: last column (m-1)l3, each column one more than the next,
        // stars once past m*l3.
        for (int i = 1; i <= l1; ++i)
            for (int j = 1; j <= acols; ++j) {
                const int v = (m - 1) * l3 + (acols - j);
                e[static_cast<size_t>(arows + i - 1)][static_cast<size_t>(j - 1)] =
                    (v <= m * l3) ? v : kStar;
            }
        // D block: constant (m-1)l3.
        for (int i = 1; i <= l1; ++i)
            for (int j = 1; j <= l2; ++j)
                e[static_cast<size_t>(arows + i - 1)][static_cast<size_t>(acols + j - 1)] =
                    (m - 1) * l3;
        d.entries = std::move(e);
        d.n = m;
    }
    return d;
}

int min_height(const DiagramMatrix& d, int x, int y) {
    if (x < 0 || x > d.n * d.l[0] || y < 0 || y > d.n * d.l[1])
        throw OutOfRange("(x, y) outside the diagram bounding box");
    return d.entries[static_cast<size_t>(x)][static_cast<size_t>(y)];
}

bool contains_point(const DiagramMatrix& d, const Point3& p) {
    if (p.z < 0 || p.z > d.n * d.l[2])
        throw OutOfRange("z outside the diagram bounding box");
    const int h = min_height(d, p.x, p.y);
    return h != kStar && h <= p.z;
}

DiagramMatrix brute_force_matrix(const BinSpec& spec, int limit) {
    check_spec_is_3d(spec);
    if (spec.ground_size() > limit)
        throw GroundTooLarge("nL = " + std::to_string(spec.ground_size()) +
                             " exceeds the brute-force limit " +
                             std::to_string(limit));
    const int n = spec.n;
    const int l1 = spec.l[0], l2 = spec.l[1], l3 = spec.l[2];
    const int L = l1 + l2 + l3;
    const int X = n * l1, Y = n * l2, Z = n * l3;

    auto index = [&](int x, int y, int z) {
        return static_cast<size_t>((x * (Y + 1) + y) * (Z + 1) + z);
    };
    auto point_ok = [&](int x, int y, int z) {
        const int p = x + y + z;
        if (p % L != 0) return true;
        const int t = p / L;
        return x <= t * l1 && x + y <= t * (l1 + l2);
    };

    std::vector<char> forward(index(X, Y, Z) + 1, 0);
    std::vector<char> backward(forward.size(), 0);
    for (int p = 0; p <= n * L; ++p)
        for (int x = 0; x <= std::min(X, p); ++x)
            for (int y = 0; y <= std::min(Y, p - x); ++y) {
                const int z = p - x - y;
                if (z < 0 || z > Z) continue;
                if (!point_ok(x, y, z)) continue;
                bool reach = (p == 0);
                if (x > 0) reach = reach || forward[index(x - 1, y, z)];
                if (y > 0) reach = reach || forward[index(x, y - 1, z)];
                if (z > 0) reach = reach || forward[index(x, y, z - 1)];
                forward[index(x, y, z)] = reach ? 1 : 0;
            }
    for (int p = n * L; p >= 0; --p)
        for (int x = 0; x <= std::min(X, p); ++x)
            for (int y = 0; y <= std::min(Y, p - x); ++y) {
                const int z = p - x - y;
                if (z < 0 || z > Z) continue;
                if (!point_ok(x, y, z)) continue;
                bool reach = (p == n * L);
                if (x < X) reach = reach || backward[index(x + 1, y, z)];
                if (y < Y) reach = reach || backward[index(x, y + 1, z)];
                if (z < Z) reach = reach || backward[index(x, y, z + 1)];
                backward[index(x, y, z)] = reach ? 1 : 0;
            }

    DiagramMatrix d;
    d.l = {l1, l2, l3};
    d.n = n;
    d.entries.assign(static_cast<size_t>(X) + 1,
                     std::vector<int>(static_cast<size_t>(Y) + 1, kStar));
    for (int x = 0; x <= X; ++x)
        for (int y = 0; y <= Y; ++y)
            for (int z = 0; z <= Z; ++z)
                if (forward[index(x, y, z)] && backward[index(x, y, z)]) {
                    d.entries[static_cast<size_t>(x)][static_cast<size_t>(y)] = z;
                    break;
                }
    return d;
}

DiagramVerdict paths_in_diagram_are_configurations(const DiagramMatrix& d,
                                                   const BinSpec& spec,
                                                   int limit) {
    check_spec_is_3d(spec);
    if (spec.ground_size() > limit)
        throw GroundTooLarge("nL = " + std::to_string(spec.ground_size()) +
                             " exceeds the enumeration limit " +
                             std::to_string(limit));
    std::vector<int> word;
    for (int j = 1; j <= 3; ++j)
        word.insert(word.end(),
                    static_cast<size_t>(spec.n * spec.l[static_cast<size_t>(j - 1)]),
                    j);
    do {
        Point3 p{0, 0, 0};
        bool inside = contains_point(d, p);
        for (int a : word) {
            if (!inside) break;
            if (a == 1) ++p.x;
            else if (a == 2) ++p.y;
            else ++p.z;
            inside = contains_point(d, p);
        }
        const StepSequence path(3, word);
        if (inside != is_configuration_path(path, spec))
            return {false, path};
    } while (std::next_permutation(word.begin(), word.end()));
    return {};
}

std::string diagram_to_csv(const DiagramMatrix& d) {
    std::string out;
    for (int y = 0; y < d.cols(); ++y) out += "," + std::to_string(y);
    out += "\n";
    for (int x = 0; x < d.rows(); ++x) {
        out += std::to_string(x);
        for (int y = 0; y < d.cols(); ++y) {
            const int v = d.entries[static_cast<size_t>(x)][static_cast<size_t>(y)];
            out += ",";
            out += (v == kStar) ? "*" : std::to_string(v);
        }
        out += "\n";
    }
    return out;
}

std::string diagram_to_json(const DiagramMatrix& d) {
    std::string out = "{\"l\": [" + std::to_string(d.l[0]) + ", " +
                      std::to_string(d.l[1]) + ", " + std::to_string(d.l[2]) +
                      "], \"n\": " + std::to_string(d.n) + ", \"entries\": [";
    for (int x = 0; x < d.rows(); ++x) {
        out += (x ? ", [" : "[");
        for (int y = 0; y < d.cols(); ++y) {
            const int v = d.entries[static_cast<size_t>(x)][static_cast<size_t>(y)];
            if (y) out += ", ";
            out += (v == kStar) ? "null" : std::to_string(v);
        }
        out += "]";
    }
    out += "]}";
    return out;
}

}  // namespace flagpath
