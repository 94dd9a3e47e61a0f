#include "doctest.h"

#include "pp4q/hpt.hpp"

#include <vector>

using namespace pp4q;

namespace {

std::vector<long long> label_list(const HptRow& r) {
    std::vector<long long> out;
    for (const auto& v : r.labels) out.push_back(v.convert_to<long long>());
    return out;
}

std::vector<char> kind_list(const HptRow& r) {
    std::vector<char> out;
    for (HptKind k : r.kinds)
        out.push_back(k == HptKind::Winger ? 'w' : k == HptKind::A ? 'A' : 'B');
    return out;
}

}  // namespace

TEST_CASE("base row") {
    const HptRow r = hpt_base_row(5);
    CHECK(r.size() == 1);
    CHECK(r.labels[0] == 1);
    CHECK(r.kinds[0] == HptKind::Winger);
    CHECK(r.ascendants(0).empty());
    CHECK_THROWS_AS(hpt_base_row(2), std::invalid_argument);
}

TEST_CASE("first rows of the {4,5} triangle") {
    HptFace f(5);
    CHECK(label_list(f.row(1)) == std::vector<long long>{1, 1});
    CHECK(label_list(f.row(2)) == std::vector<long long>{1, 2, 1});
    CHECK(label_list(f.row(3)) == std::vector<long long>{1, 3, 2, 3, 1});
    CHECK(kind_list(f.row(3)) == std::vector<char>{'w', 'A', 'B', 'A', 'w'});
    CHECK(label_list(f.row(4)) == std::vector<long long>{1, 4, 3, 5, 2, 2, 5, 3, 4, 1});
    CHECK(kind_list(f.row(4)) ==
          std::vector<char>{'w', 'A', 'B', 'A', 'B', 'B', 'A', 'B', 'A', 'w'});
}

TEST_CASE("first rows for q = 6 and q = 7") {
    HptFace f6(6);
    CHECK(label_list(f6.row(3)) == std::vector<long long>{1, 3, 2, 2, 3, 1});
    CHECK(label_list(f6.row(4)) ==
          std::vector<long long>{1, 4, 3, 3, 5, 2, 2, 2, 4, 2, 2, 2, 5, 3, 3, 4, 1});

    HptFace f7(7);
    CHECK(label_list(f7.row(3)) == std::vector<long long>{1, 3, 2, 2, 2, 3, 1});
    CHECK(kind_list(f7.row(3)) == std::vector<char>{'w', 'A', 'B', 'B', 'B', 'A', 'w'});
}

TEST_CASE("q = 4 degenerates to the Pascal triangle") {
    HptFace f(4);
    CHECK(label_list(f.row(5)) == std::vector<long long>{1, 5, 10, 10, 5, 1});
    CHECK(label_list(f.row(6)) == std::vector<long long>{1, 6, 15, 20, 15, 6, 1});
    const auto [na, nb] = f.row(6).census();
    CHECK(na == 5);
    CHECK(nb == 0);
}

TEST_CASE("ascendant wiring") {
    HptFace f(5);
    const HptRow& r1 = f.row(1);
    CHECK(r1.ascendants(0).size() == 1);
    CHECK(r1.ascendants(0)[0] == 0);
    CHECK(r1.ascendants(1)[0] == 0);

    const HptRow& r3 = f.row(3);
    // entry 1 is type A over (0, 1); entry 2 is the B child of entry 1 below
    REQUIRE(r3.ascendants(1).size() == 2);
    CHECK(r3.ascendants(1)[0] == 0);
    CHECK(r3.ascendants(1)[1] == 1);
    REQUIRE(r3.ascendants(2).size() == 1);
    CHECK(r3.ascendants(2)[0] == 1);

    // every label is the sum of its ascendants' labels
    for (unsigned m = 1; m <= 8; ++m) {
        const HptRow& prev = f.row(m - 1);
        const HptRow& row = f.row(m);
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row.kinds[i] == HptKind::Winger) continue;
            Nat s = 0;
            for (auto p : row.ascendants(i)) s += prev.labels[p];
            CHECK(row.labels[i] == s);
        }
    }
}

TEST_CASE("census and value sums") {
    HptFace f(5);
    const auto [na, nb] = f.row(4).census();
    CHECK(na == 4);
    CHECK(nb == 4);
    CHECK(f.row(3).value_sum() == 10);
    CHECK(f.row(4).value_sum() == 30);
}

TEST_CASE("row sizes follow the coupled interior counts") {
    for (int q : {5, 6, 7, 9}) {
        HptFace f(q);
        Nat a = 0, b = 0;
        for (unsigned m = 1; m <= 9; ++m) {
            if (m >= 2) {
                const Nat na2 = a + b + 1;
                const Nat nb2 = (q - 4) * a + (q - 3) * b;
                a = na2;
                b = nb2;
            }
            CHECK(Nat(f.row(m).size()) == a + b + 2);
        }
    }
}

TEST_CASE("rows are palindromic") {
    for (int q : {4, 5, 6, 7}) {
        HptFace f(q);
        for (unsigned m = 0; m <= 8; ++m) {
            const HptRow& r = f.row(m);
            const std::size_t sz = r.size();
            for (std::size_t i = 0; i < sz / 2; ++i) {
                CHECK(r.labels[i] == r.labels[sz - 1 - i]);
                CHECK(r.kinds[i] == r.kinds[sz - 1 - i]);
            }
        }
    }
}

TEST_CASE("row capacity is a refusal") {
    HptFace f(5, 8);
    CHECK_NOTHROW(f.row(3));  // 5 entries
    CHECK_THROWS_AS(f.row(4), CapacityError);  // would need 10
    // the face stays usable for the rows it already has
    CHECK(f.row(3).size() == 5);
    CHECK(f.rows_built() == 4);
}
