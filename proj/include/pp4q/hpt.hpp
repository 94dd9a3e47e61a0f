#pragma once

#include "pp4q/bigint.hpp"

#include <cstdint>
#include <deque>
#include <span>
#include <utility>
#include <vector>

namespace pp4q {

constexpr std::size_t kDefaultRowCap = 10'000'000;

/// Vertex types of the hyperbolic Pascal triangle on the {4,q} mosaic.
/// Wingers are the two border vertices of each row (label 1). Type A has
/// two ascendants, type B one. q = 4 degenerates to the ordinary Pascal
/// triangle (every interior vertex is type A).
enum class HptKind : std::uint8_t { Winger, A, B };

/// One immutable row of the triangle. Entry i of row n holds its kind, its
/// label (number of shortest mosaic paths from the base vertex), and the
/// indices of its ascendants in row n-1 (CSR layout: one index for wingers
/// and B, two for A).
struct HptRow {
    int q = 0;
    unsigned index = 0;
    std::vector<HptKind> kinds;
    std::vector<Nat> labels;
    std::vector<std::uint32_t> asc_offsets;  // size() + 1 entries
    std::vector<std::uint32_t> asc;

    std::size_t size() const { return kinds.size(); }

    std::span<const std::uint32_t> ascendants(std::size_t i) const {
        return {asc.data() + asc_offsets[i], asc.data() + asc_offsets[i + 1]};
    }

    /// (number of type-A entries, number of type-B entries).
    std::pair<std::uint64_t, std::uint64_t> census() const;

    Nat value_sum() const;
};

/// Row 0: the single base vertex, label 1.
HptRow hpt_base_row(int q);

/// Grows row n+1 from row n. Child layout, left to right: left winger;
/// then for each parent edge (v_{j-1}, v_j) one type-A child labelled
/// label(v_{j-1}) + label(v_j), followed by v_j's own B-children (q-4 of
/// them when v_j is type A, q-3 when type B, each labelled label(v_j));
/// right winger last. Refuses with CapacityError if the new row would
/// exceed row_cap entries.
HptRow hpt_grow_row(const HptRow& prev, std::size_t row_cap = kDefaultRowCap);

/// Grow-on-demand cache of rows 0..n for one mosaic parameter q.
class HptFace {
public:
    explicit HptFace(int q, std::size_t row_cap = kDefaultRowCap);

    int q() const { return q_; }
    std::size_t row_cap() const { return row_cap_; }
    unsigned rows_built() const { return static_cast<unsigned>(rows_.size()); }

    /// Returns row m, growing intermediate rows as needed. References stay
    /// valid while the face lives, even across later growth.
    const HptRow& row(unsigned m);

    void ensure_rows(unsigned m);

private:
    int q_;
    std::size_t row_cap_;
    std::deque<HptRow> rows_;
};

}  // namespace pp4q
