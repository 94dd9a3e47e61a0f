#pragma once

#include "pp4q/bigint.hpp"
#include "pp4q/counts.hpp"
#include "pp4q/hpt.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pp4q {

constexpr std::size_t kDefaultVertexCap = 10'000'000;

/// Vertex types of the Pascal pyramid PP(4,q). One covers the three label-1
/// border rays (two triangle wingers and the apex line). A and B live on the
/// triangle face, C on the two Euclidean faces, D and E inside (three resp.
/// two ascendants).
enum class VertexKind : std::uint8_t { One, A, B, C, D, E };

char kind_letter(VertexKind k);

/// All vertices at one edge-distance n from the base vertex, as a layered
/// digraph slice. A vertex is identified by (m, i, k): entry i of triangle
/// row m, lifted k planes up; its level is m + k. Canonical order is k
/// descending (equivalently m ascending), i ascending within a row, so the
/// k = 0 slice lists triangle row n contiguously at the end.
///
/// Levels are immutable once built and safe to share across threads.
struct LevelGraph {
    int q = 0;
    unsigned level = 0;
    std::vector<VertexKind> kinds;
    std::vector<Nat> labels;  // shortest-path counts from the base vertex
    std::vector<std::uint32_t> asc_offsets;
    std::vector<std::uint32_t> asc;          // canonical indices into level-1
    std::vector<std::uint32_t> slice_begin;  // per m = 0..level, plus end sentinel

    std::size_t size() const { return kinds.size(); }

    unsigned hpt_row_of(std::size_t idx) const;         // m
    unsigned height_of(std::size_t idx) const;          // k = level - m
    std::uint32_t index_in_row(std::size_t idx) const;  // i

    std::size_t canonical_index(unsigned m, std::uint32_t i) const {
        return slice_begin[m] + i;
    }

    std::span<const std::uint32_t> ascendants(std::size_t idx) const {
        return {asc.data() + asc_offsets[idx], asc.data() + asc_offsets[idx + 1]};
    }

    /// True for type-1 vertices lying on the triangle face (height 0),
    /// including the base vertex; distinguishes face wingers from the apexes.
    bool one_is_hpt(std::size_t idx) const {
        return kinds[idx] == VertexKind::One && height_of(idx) == 0;
    }
};

/// Level 0: the base vertex alone.
LevelGraph build_level0(int q);

/// Builds level n+1 from level n. Ascendants of (m, i, k) are the triangle
/// ascendants of (m, i) at the same height plus the vertical one (m, i, k-1)
/// when k >= 1; labels are ascendant sums. Refuses with CapacityError when
/// the level would exceed cap_vertices.
LevelGraph build_next_level(const LevelGraph& prev, HptFace& face,
                            std::size_t cap_vertices = kDefaultVertexCap);

/// Convenience: builds levels 0..n from scratch and returns level n.
LevelGraph build_level(int q, unsigned n, std::size_t cap_vertices = kDefaultVertexCap);

/// Independent label oracle: every shortest path to (m, i, k) projects to a
/// shortest triangle path interleaved with k vertical steps, so the label
/// factors as L_hpt(m, i) * C(m+k, k). Never used by the builder.
Nat oracle_label(HptFace& face, unsigned m, std::uint32_t i, unsigned k);

CountVector level_census(const LevelGraph& g);
SumVector level_value_sums(const LevelGraph& g);

/// Number of vertices level n will have, without building it (exact, cheap).
Nat level_size_bound(int q, unsigned n);

}  // namespace pp4q
