#include <doctest.h>

#include <random>

#include "bsf/tuples.hpp"

using namespace bsf;

TEST_CASE("SIP basics") {
    CHECK(satisfies_sip({0, 1, 0}));
    CHECK(!satisfies_sip({0, 0}));
    CHECK(satisfies_sip({2, 0, 1}));  // no repeats
    CHECK(satisfies_sip({}));
    CHECK(satisfies_sip({-3, -2, -3}));
    CHECK(!satisfies_sip({-2, -2}));
    CHECK_THROWS_AS(satisfies_sip({-1, 2}), std::invalid_argument);
}

TEST_CASE("SIP closure properties") {
    // consecutive subtuples and reversals of SIP tuples stay SIP
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> len(1, 7), val(0, 4);
    int checked = 0;
    while (checked < 200) {
        IndexTuple t(size_t(len(rng)));
        for (auto& x : t) x = val(rng);
        if (!satisfies_sip(t)) continue;
        ++checked;
        CHECK(satisfies_sip(tuple_reverse(t)));
        for (size_t a = 0; a < t.size(); ++a)
            for (size_t b = a; b < t.size(); ++b)
                CHECK(satisfies_sip(IndexTuple(t.begin() + long(a), t.begin() + long(b + 1))));
    }
}

TEST_CASE("column standard form") {
    CHECK(csf({0, 1, 0}) == IndexTuple{0, 1, 0});  // (0:1, 0)
    CHECK(tuple_to_string(csf({0, 1, 0})) == "(0:1,0)");

    // worked instance for h = 6: (w_6, c_6) has csf (5:6, 3:5, 1:3, 0:1)
    IndexTuple w6c6 = {5, 6, 3, 4, 1, 2, 0, 5, 3, 1};
    CHECK(csf(w6c6) == IndexTuple{5, 6, 3, 4, 5, 1, 2, 3, 0, 1});
    CHECK(tuple_to_string(csf(w6c6)) == "(5:6,3:5,1:3,0:1)");

    // already-csf input is unchanged
    IndexTuple already = {2, 3, 0, 1};
    CHECK(csf(already) == already);

    // (w_5, c_5): csf (4:5, 2:4, 0:2, 0)
    IndexTuple w5c5 = tuple_concat({admissible_tuple(5), symmetric_complement(5)});
    CHECK(tuple_to_string(csf(w5c5)) == "(4:5,2:4,0:2,0)");

    CHECK_THROWS_AS(csf({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(csf({-1, 0}), std::invalid_argument);
}

TEST_CASE("csf is equivalent to its input and preserves SIP") {
    // one adjacent commuting swap at a time never changes the csf
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> len(1, 8), val(0, 5);
    int checked = 0;
    while (checked < 300) {
        IndexTuple t(size_t(len(rng)));
        for (auto& x : t) x = val(rng);
        if (!satisfies_sip(t)) continue;
        ++checked;
        IndexTuple c = csf(t);
        CHECK(satisfies_sip(c));
        std::multiset<int> a(t.begin(), t.end()), b(c.begin(), c.end());
        CHECK(a == b);
        IndexTuple s = t;
        for (size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] != s[i + 1] && std::abs(s[i] - s[i + 1]) != 1) {
                std::swap(s[i], s[i + 1]);
                CHECK(csf(s) == c);
                std::swap(s[i], s[i + 1]);
            }
        }
    }
}

TEST_CASE("heads") {
    CHECK(heads({2, 3, 0, 1}) == std::set<int>{3, 1});
    CHECK(heads({0}) == std::set<int>{0});
    CHECK(heads({5, 6, 3, 4, 1, 2, 0, 5, 3, 1}) == std::set<int>{6, 5, 3, 1});
    CHECK(head_count({5, 6, 3, 4, 1, 2, 0, 5, 3, 1}) == 4);
}

TEST_CASE("index types") {
    CHECK(index_type({0, 1}, 2) == IndexType::TypeI);
    CHECK(index_type({2, 3, 0, 1}, 0) == IndexType::TypeII);
    CHECK(index_type({5}, 0) == IndexType::TypeII);
    CHECK_THROWS_AS(index_type({0}, 0), std::invalid_argument);

    SUBCASE("x = 0 is always Type II when appendable") {
        std::mt19937_64 rng(47);
        std::uniform_int_distribution<int> len(1, 6), val(0, 5);
        int checked = 0;
        while (checked < 100) {
            IndexTuple t(size_t(len(rng)));
            for (auto& x : t) x = val(rng);
            IndexTuple t0 = t;
            t0.push_back(0);
            try {
                if (!satisfies_sip(t0)) continue;
            } catch (...) {
                continue;
            }
            ++checked;
            CHECK(index_type(t, 0) == IndexType::TypeII);
        }
    }

    SUBCASE("head update rule") {
        std::mt19937_64 rng(53);
        std::uniform_int_distribution<int> len(1, 6), val(0, 5);
        int checked = 0;
        while (checked < 300) {
            IndexTuple t(size_t(len(rng)));
            for (auto& x : t) x = val(rng);
            int x = val(rng);
            IndexTuple tx = t;
            tx.push_back(x);
            if (!satisfies_sip(t) || !satisfies_sip(tx)) continue;
            ++checked;
            std::set<int> h = heads(t), hx = heads(tx);
            if (index_type(t, x) == IndexType::TypeII) {
                std::set<int> expect = h;
                expect.insert(x);
                CHECK(hx == expect);
            } else {
                std::set<int> expect = h;
                expect.erase(x - 1);
                expect.insert(x);
                CHECK(hx == expect);
            }
        }
    }
}

TEST_CASE("type classification routes agree exhaustively on indices 0..5, length <= 6") {
    // index_type internally asserts the head-count and x-1-in-heads routes
    // agree; enumerate every tuple over {0..5} up to length 6 paired with
    // every appendable x.
    long agreements = 0;
    std::vector<IndexTuple> frontier = {{}};
    for (int length = 0; length <= 5; ++length) {
        std::vector<IndexTuple> next;
        for (const auto& t : frontier) {
            for (int x = 0; x <= 5; ++x) {
                IndexTuple tx = t;
                tx.push_back(x);
                if (!satisfies_sip(tx)) continue;
                next.push_back(tx);
                if (!t.empty()) {
                    (void)index_type(t, x);
                    ++agreements;
                }
            }
        }
        frontier = std::move(next);
    }
    CHECK(agreements > 1000);
}

TEST_CASE("admissible tuples and symmetric complements") {
    CHECK(admissible_tuple(0) == IndexTuple{0});
    CHECK(symmetric_complement(0).empty());
    CHECK(admissible_tuple(3) == IndexTuple{2, 3, 0, 1});
    CHECK(symmetric_complement(3) == IndexTuple{2, 0});
    CHECK(admissible_tuple(4) == IndexTuple{3, 4, 1, 2, 0});
    CHECK(symmetric_complement(4) == IndexTuple{3, 1});

    SUBCASE("w_h sorted is 0..h and (w_h, c_h) satisfies the SIP") {
        for (int h = 0; h <= 12; ++h) {
            IndexTuple w = admissible_tuple(h);
            IndexTuple sorted = w;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted == tuple_range(0, h));
            CHECK(satisfies_sip(tuple_concat({w, symmetric_complement(h)})));
        }
    }
}

TEST_CASE("wing position prediction") {
    CHECK(sip_append_positions({}, 7) == std::set<int>{0, 2, 4});   // positions 7, 5, 3
    CHECK(sip_append_positions({}, 6) == std::set<int>{1, 3});      // positions 5, 3
    CHECK(sip_append_positions({}, 3) == std::set<int>{0});         // position 3
}
