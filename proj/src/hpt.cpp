#include "pp4q/hpt.hpp"

#include <cstdint>
#include <limits>
#include <string>

namespace pp4q {

namespace {

// B-children contributed by one parent: wingers have none, interior vertices
// keep their face fan minus the two shared A-children.
std::uint64_t b_children(HptKind k, int q) {
    switch (k) {
        case HptKind::Winger: return 0;
        case HptKind::A: return static_cast<std::uint64_t>(q - 4);
        case HptKind::B: return static_cast<std::uint64_t>(q - 3);
    }
    return 0;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> HptRow::census() const {
    std::uint64_t na = 0, nb = 0;
    for (HptKind k : kinds) {
        if (k == HptKind::A) ++na;
        else if (k == HptKind::B) ++nb;
    }
    return {na, nb};
}

Nat HptRow::value_sum() const {
    Nat s = 0;
    for (const Nat& v : labels) s += v;
    return s;
}

HptRow hpt_base_row(int q) {
    validate_q(q);
    HptRow r;
    r.q = q;
    r.index = 0;
    r.kinds = {HptKind::Winger};
    r.labels = {Nat(1)};
    r.asc_offsets = {0, 0};
    return r;
}

HptRow hpt_grow_row(const HptRow& prev, std::size_t row_cap) {
    const int q = prev.q;
    const std::size_t psize = prev.size();

    std::uint64_t next_size = 2;  // the two wingers
    for (std::size_t j = 1; j < psize; ++j)
        next_size += 1 + b_children(prev.kinds[j], q);

    if (next_size > row_cap || next_size > std::numeric_limits<std::uint32_t>::max())
        throw CapacityError("triangle row " + std::to_string(prev.index + 1) + " needs " +
                            std::to_string(next_size) + " entries, cap is " +
                            std::to_string(row_cap));

    HptRow r;
    r.q = q;
    r.index = prev.index + 1;
    r.kinds.reserve(next_size);
    r.labels.reserve(next_size);
    r.asc_offsets.reserve(next_size + 1);
    r.asc.reserve(2 * next_size);

    auto push = [&r](HptKind k, Nat label, std::initializer_list<std::uint32_t> parents) {
        r.kinds.push_back(k);
        r.labels.push_back(std::move(label));
        for (std::uint32_t p : parents) r.asc.push_back(p);
        r.asc_offsets.push_back(static_cast<std::uint32_t>(r.asc.size()));
    };

    r.asc_offsets.push_back(0);
    push(HptKind::Winger, 1, {0});
    for (std::size_t j = 1; j < psize; ++j) {
        const auto lo = static_cast<std::uint32_t>(j - 1);
        const auto hi = static_cast<std::uint32_t>(j);
        push(HptKind::A, prev.labels[j - 1] + prev.labels[j], {lo, hi});
        const std::uint64_t nb = b_children(prev.kinds[j], q);
        for (std::uint64_t t = 0; t < nb; ++t) push(HptKind::B, prev.labels[j], {hi});
    }
    push(HptKind::Winger, 1, {static_cast<std::uint32_t>(psize - 1)});

    return r;
}

HptFace::HptFace(int q, std::size_t row_cap) : q_(q), row_cap_(row_cap) {
    rows_.push_back(hpt_base_row(q));
}

const HptRow& HptFace::row(unsigned m) {
    ensure_rows(m);
    return rows_[m];
}

void HptFace::ensure_rows(unsigned m) {
    while (rows_.size() <= m) rows_.push_back(hpt_grow_row(rows_.back(), row_cap_));
}

}  // namespace pp4q
