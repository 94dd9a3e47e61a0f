#include "pp4q/pyramid.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace pp4q {

char kind_letter(VertexKind k) {
    switch (k) {
        case VertexKind::One: return '1';
        case VertexKind::A: return 'A';
        case VertexKind::B: return 'B';
        case VertexKind::C: return 'C';
        case VertexKind::D: return 'D';
        case VertexKind::E: return 'E';
    }
    return '?';
}

namespace {

VertexKind lift_kind(HptKind hk, unsigned m, unsigned k) {
    if (m == 0) return VertexKind::One;  // apex column
    switch (hk) {
        case HptKind::Winger: return k == 0 ? VertexKind::One : VertexKind::C;
        case HptKind::A: return k == 0 ? VertexKind::A : VertexKind::D;
        case HptKind::B: return k == 0 ? VertexKind::B : VertexKind::E;
    }
    return VertexKind::One;
}

}  // namespace

unsigned LevelGraph::hpt_row_of(std::size_t idx) const {
    auto it = std::upper_bound(slice_begin.begin(), slice_begin.end(),
                               static_cast<std::uint32_t>(idx));
    return static_cast<unsigned>(it - slice_begin.begin()) - 1;
}

unsigned LevelGraph::height_of(std::size_t idx) const { return level - hpt_row_of(idx); }

std::uint32_t LevelGraph::index_in_row(std::size_t idx) const {
    return static_cast<std::uint32_t>(idx) - slice_begin[hpt_row_of(idx)];
}

LevelGraph build_level0(int q) {
    validate_q(q);
    LevelGraph g;
    g.q = q;
    g.level = 0;
    g.kinds = {VertexKind::One};
    g.labels = {Nat(1)};
    g.asc_offsets = {0, 0};
    g.slice_begin = {0, 1};
    return g;
}

LevelGraph build_next_level(const LevelGraph& prev, HptFace& face, std::size_t cap_vertices) {
    const unsigned n = prev.level + 1;
    const int q = prev.q;

    const Nat bound = level_size_bound(q, n);
    if (bound > cap_vertices || bound > std::numeric_limits<std::uint32_t>::max())
        throw CapacityError("level " + std::to_string(n) + " needs " + dec(bound) +
                            " vertices, cap is " + std::to_string(cap_vertices));

    face.ensure_rows(n);

    LevelGraph g;
    g.q = q;
    g.level = n;
    const auto total = static_cast<std::size_t>(bound);
    g.kinds.reserve(total);
    g.labels.reserve(total);
    g.asc_offsets.reserve(total + 1);
    g.asc.reserve(3 * total);
    g.slice_begin.reserve(n + 2);

    g.asc_offsets.push_back(0);
    g.slice_begin.push_back(0);
    for (unsigned m = 0; m <= n; ++m) {
        const unsigned k = n - m;
        const HptRow& row = face.row(m);
        for (std::size_t i = 0; i < row.size(); ++i) {
            g.kinds.push_back(lift_kind(row.kinds[i], m, k));
            Nat label = 0;
            if (m >= 1) {
                for (std::uint32_t j : row.ascendants(i)) {
                    const auto p = static_cast<std::uint32_t>(prev.canonical_index(m - 1, j));
                    g.asc.push_back(p);
                    label += prev.labels[p];
                }
            }
            if (k >= 1) {
                const auto p =
                    static_cast<std::uint32_t>(prev.canonical_index(m, static_cast<std::uint32_t>(i)));
                g.asc.push_back(p);
                label += prev.labels[p];
            }
            g.labels.push_back(std::move(label));
            g.asc_offsets.push_back(static_cast<std::uint32_t>(g.asc.size()));
        }
        g.slice_begin.push_back(static_cast<std::uint32_t>(g.kinds.size()));
    }
    return g;
}

LevelGraph build_level(int q, unsigned n, std::size_t cap_vertices) {
    HptFace face(q, cap_vertices);
    LevelGraph g = build_level0(q);
    for (unsigned i = 0; i < n; ++i) g = build_next_level(g, face, cap_vertices);
    return g;
}

Nat oracle_label(HptFace& face, unsigned m, std::uint32_t i, unsigned k) {
    return face.row(m).labels[i] * binomial(m + k, k);
}

CountVector level_census(const LevelGraph& g) {
    CountVector cv;
    cv.n = g.level;
    cv.a = cv.b = cv.c = cv.d = cv.e = 0;
    for (VertexKind k : g.kinds) {
        switch (k) {
            case VertexKind::One: break;
            case VertexKind::A: ++cv.a; break;
            case VertexKind::B: ++cv.b; break;
            case VertexKind::C: ++cv.c; break;
            case VertexKind::D: ++cv.d; break;
            case VertexKind::E: ++cv.e; break;
        }
    }
    cv.s = g.size();
    return cv;
}

SumVector level_value_sums(const LevelGraph& g) {
    SumVector sv;
    sv.n = g.level;
    sv.a = sv.b = sv.c = sv.d = sv.e = sv.v = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Nat& x = g.labels[i];
        switch (g.kinds[i]) {
            case VertexKind::One: sv.v += x; break;
            case VertexKind::A: sv.a += x; break;
            case VertexKind::B: sv.b += x; break;
            case VertexKind::C: sv.c += x; break;
            case VertexKind::D: sv.d += x; break;
            case VertexKind::E: sv.e += x; break;
        }
    }
    sv.s = sv.a + sv.b + sv.c + sv.d + sv.e + sv.v;
    return sv;
}

Nat level_size_bound(int q, unsigned n) {
    validate_q(q);
    // Triangle row sizes: r_0 = 1, r_1 = 2, r_m = a_m + b_m + 2 where the
    // interior counts follow a' = a + b + 1, b' = (q-4)a + (q-3)b.
    Nat total = 1;  // row 0
    Nat a = 0, b = 0;
    for (unsigned m = 1; m <= n; ++m) {
        if (m >= 2) {
            const Nat na = a + b + 1;
            const Nat nb = (q - 4) * a + (q - 3) * b;
            a = na;
            b = nb;
        }
        total += a + b + 2;
    }
    return total;
}

}  // namespace pp4q
