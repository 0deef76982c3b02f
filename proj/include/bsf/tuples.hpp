#ifndef BSF_TUPLES_HPP
#define BSF_TUPLES_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsf {

// Ordered sequence of integer indices.
using IndexTuple = std::vector<int>;

enum class IndexType { TypeI, TypeII };

inline IndexTuple tuple_concat(std::initializer_list<IndexTuple> parts) {
    IndexTuple r;
    for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
    return r;
}

inline IndexTuple tuple_reverse(IndexTuple t) {
    std::reverse(t.begin(), t.end());
    return t;
}

inline IndexTuple tuple_shift(IndexTuple t, int a) {
    for (int& x : t) x += a;
    return t;
}

// Contiguous range a..b, empty when a > b.
inline IndexTuple tuple_range(int a, int b) {
    IndexTuple r;
    for (int x = a; x <= b; ++x) r.push_back(x);
    return r;
}

inline bool all_nonnegative(const IndexTuple& t) {
    return std::all_of(t.begin(), t.end(), [](int x) { return x >= 0; });
}
inline bool all_negative(const IndexTuple& t) {
    return std::all_of(t.begin(), t.end(), [](int x) { return x < 0; });
}

// Successor Infix Property: between any two equal indices a strictly larger
// successor (value+1) must occur. Negative tuples are tested through the
// shift by -min, nonnegative ones directly; mixed signs are rejected.
inline bool satisfies_sip(const IndexTuple& t) {
    if (t.empty()) return true;
    IndexTuple s = t;
    if (all_negative(s)) {
        int a = *std::min_element(s.begin(), s.end());
        s = tuple_shift(s, -a);
    } else if (!all_nonnegative(s)) {
        throw std::invalid_argument("SIP is undefined for mixed-sign tuples");
    }
    int m = int(s.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            if (s[size_t(a)] != s[size_t(b)]) continue;
            bool infix = false;
            for (int c = a + 1; c < b && !infix; ++c)
                if (s[size_t(c)] == s[size_t(a)] + 1) infix = true;
            if (!infix) return false;
        }
    return true;
}

// A string a:b of consecutive indices; csf is a list of strings with
// strictly decreasing ends.
struct TupleString {
    int a, b;
};

namespace detail {

// Incremental column-standard-form construction. Appending x to a csf
// either extends the string ending at x-1 or inserts the singleton (x:x)
// at its head-sorted slot; x already a head means the SIP fails.
inline bool csf_append(std::vector<TupleString>& strings, int x) {
    int extend = -1;
    for (int i = 0; i < int(strings.size()); ++i) {
        if (strings[size_t(i)].b == x) return false;
        if (strings[size_t(i)].b == x - 1) extend = i;
    }
    if (extend >= 0) {
        strings[size_t(extend)].b = x;
        return true;
    }
    auto pos = std::find_if(strings.begin(), strings.end(),
                            [&](const TupleString& s) { return s.b < x; });
    strings.insert(pos, TupleString{x, x});
    return true;
}

inline std::vector<TupleString> csf_strings(const IndexTuple& t) {
    if (!all_nonnegative(t))
        throw std::invalid_argument("column standard form requires nonnegative indices");
    std::vector<TupleString> strings;
    for (int x : t)
        if (!csf_append(strings, x))
            throw std::invalid_argument("tuple does not satisfy the SIP");
    return strings;
}

inline IndexTuple flatten(const std::vector<TupleString>& strings) {
    IndexTuple r;
    for (const auto& s : strings)
        for (int x = s.a; x <= s.b; ++x) r.push_back(x);
    return r;
}

}  // namespace detail

// Unique column standard form of a nonnegative SIP tuple.
inline IndexTuple csf(const IndexTuple& t) { return detail::flatten(detail::csf_strings(t)); }

// Right endpoints of the csf strings.
inline std::set<int> heads(const IndexTuple& t) {
    std::set<int> r;
    for (const auto& s : detail::csf_strings(t)) r.insert(s.b);
    return r;
}

inline int head_count(const IndexTuple& t) { return int(detail::csf_strings(t).size()); }

// Type I when appending x keeps the number of csf strings, Type II when it
// grows it. Both the head-count definition and the x-1-in-heads criterion
// are evaluated and must agree.
inline IndexType index_type(const IndexTuple& t, int x) {
    IndexTuple tx = t;
    tx.push_back(x);
    if (!satisfies_sip(tx)) throw std::invalid_argument("(t, x) does not satisfy the SIP");
    bool count_same = head_count(tx) == head_count(t);
    bool criterion = heads(t).count(x - 1) > 0;
    if (count_same != criterion)
        throw std::logic_error("Type I/II classifications disagree");
    return count_same ? IndexType::TypeI : IndexType::TypeII;
}

// (h-1:h, h-3:h-2, ..., p+1:p+2, 0:p) with p = h mod 2; a permutation of 0:h.
inline IndexTuple admissible_tuple(int h) {
    if (h < 0) throw std::invalid_argument("admissible tuple needs h >= 0");
    int p = h % 2;
    IndexTuple r;
    for (int a = h - 1; a > p; a -= 2) {
        r.push_back(a);
        r.push_back(a + 1);
    }
    for (int x = 0; x <= p; ++x) r.push_back(x);
    return r;
}

// (h-1, h-3, ..., 2, 0) for odd h, (h-1, h-3, ..., 1) for positive even h,
// empty for h = 0.
inline IndexTuple symmetric_complement(int h) {
    if (h < 0) throw std::invalid_argument("symmetric complement needs h >= 0");
    IndexTuple r;
    for (int x = h - 1; x >= 0; x -= 2) r.push_back(x);
    return r;
}

// Full symmetric tuple (t_w, w_{k-1}, c_{k-1}, rev(t_w)) governing which
// block rows of a parameter-(k-1) pencil stay plain wing rows.
inline IndexTuple extended_tuple(const IndexTuple& t_w, int k) {
    return tuple_concat({t_w, admissible_tuple(k - 1), symmetric_complement(k - 1),
                         tuple_reverse(t_w)});
}

// The set of j in 0..k-2 whose wing position k-j survives: j not a head of
// the extended tuple. Cross-checked against appending j and re-testing SIP.
inline std::set<int> sip_append_positions(const IndexTuple& t_w, int k) {
    IndexTuple full = extended_tuple(t_w, k);
    if (!satisfies_sip(full))
        throw std::invalid_argument("(t_w, w_{k-1}, c_{k-1}, rev t_w) fails the SIP");
    std::set<int> hs = heads(full);
    std::set<int> r;
    for (int j = 0; j <= k - 2; ++j) {
        bool by_heads = hs.count(j) == 0;
        IndexTuple app = full;
        app.push_back(j);
        bool by_sip = satisfies_sip(app);
        if (by_heads != by_sip)
            throw std::logic_error("head criterion disagrees with appended SIP test");
        if (by_heads) r.insert(j);
    }
    return r;
}

// Prints a tuple with csf-style colon collapsing of consecutive runs.
inline std::string tuple_to_string(const IndexTuple& t) {
    std::string out = "(";
    size_t i = 0;
    while (i < t.size()) {
        size_t j = i;
        while (j + 1 < t.size() && t[j + 1] == t[j] + 1) ++j;
        if (i > 0) out += ",";
        if (j > i)
            out += std::to_string(t[i]) + ":" + std::to_string(t[j]);
        else
            out += std::to_string(t[i]);
        i = j + 1;
    }
    return out + ")";
}

}  // namespace bsf

#endif
