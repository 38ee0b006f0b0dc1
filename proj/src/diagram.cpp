#include "perimal/diagram.hpp"

#include <algorithm>
#include <array>

#include "perimal/error.hpp"

namespace perimal {

namespace {

// Assembles arc structure from a traversal and per-crossing signs.  Checks the
// closed-traversal invariant: every crossing seen exactly once over and once
// under.
Diagram build_from_visits(std::vector<std::pair<int, bool>> visits, const std::vector<int>& signs) {
    int n = static_cast<int>(signs.size());
    if (static_cast<int>(visits.size()) != 2 * n)
        fail(errc::internal, "traversal length mismatch");

    std::vector<int> over_time(static_cast<size_t>(n), -1), under_time(static_cast<size_t>(n), -1);
    for (int t = 0; t < 2 * n; ++t) {
        auto [c, is_over] = visits[static_cast<size_t>(t)];
        if (c < 0 || c >= n) fail(errc::internal, "bad crossing index in traversal");
        int& slot = is_over ? over_time[static_cast<size_t>(c)] : under_time[static_cast<size_t>(c)];
        if (slot != -1) fail(errc::internal, "crossing visited twice on the same strand level");
        slot = t;
    }

    // Arc j ends at the j-th undercrossing time; the basepoint lies on arc 0.
    std::vector<int> under_sorted = under_time;
    std::sort(under_sorted.begin(), under_sorted.end());
    auto arc_of_time = [&](int t) {
        auto it = std::lower_bound(under_sorted.begin(), under_sorted.end(), t);
        int j = static_cast<int>(it - under_sorted.begin());
        return j % n;
    };

    Diagram d;
    d.arcs = n;
    d.visits = std::move(visits);
    d.crossings.resize(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
        Crossing& x = d.crossings[static_cast<size_t>(c)];
        x.over = arc_of_time(over_time[static_cast<size_t>(c)]);
        x.under_in = arc_of_time(under_time[static_cast<size_t>(c)]);
        x.under_out = (x.under_in + 1) % n;
        x.sign = signs[static_cast<size_t>(c)];
    }
    return d;
}

} // namespace

int writhe(const Diagram& d) {
    int w = 0;
    for (const auto& c : d.crossings) w += c.sign;
    return w;
}

namespace {

// Rotation-system embedding check.  Edge t runs from visit t to visit t+1;
// end ids: 2t = tail end (at visit t), 2t+1 = head end (at visit t+1).
// At each crossing the four ends admit exactly two transversal cyclic orders;
// `choice` picks one per crossing.  Faces are traced through sigma(twin(e));
// a sphere embedding has exactly n+2 faces.
struct EmbeddingProblem {
    int n;
    std::vector<int> t_odd, t_even;  // visit times per crossing

    explicit EmbeddingProblem(const std::vector<std::pair<int, bool>>& visits, int crossings)
        : n(crossings), t_odd(static_cast<size_t>(crossings), -1), t_even(static_cast<size_t>(crossings), -1) {
        for (int t = 0; t < 2 * n; ++t) {
            int c = visits[static_cast<size_t>(t)].first;
            (t_odd[static_cast<size_t>(c)] == -1 ? t_odd[static_cast<size_t>(c)]
                                                 : t_even[static_cast<size_t>(c)]) = t;
        }
    }

    int faces(uint32_t choice) const {
        int ends = 4 * n;
        std::vector<int> sigma(static_cast<size_t>(ends));
        for (int c = 0; c < n; ++c) {
            int t1 = t_odd[static_cast<size_t>(c)], t2 = t_even[static_cast<size_t>(c)];
            int in1 = 2 * ((t1 + 2 * n - 1) % (2 * n)) + 1;
            int out1 = 2 * t1;
            int in2 = 2 * ((t2 + 2 * n - 1) % (2 * n)) + 1;
            int out2 = 2 * t2;
            std::array<int, 4> rot = (choice >> c & 1)
                                         ? std::array<int, 4>{in1, out2, out1, in2}
                                         : std::array<int, 4>{in1, in2, out1, out2};
            for (int k = 0; k < 4; ++k)
                sigma[static_cast<size_t>(rot[static_cast<size_t>(k)])] = rot[static_cast<size_t>((k + 1) % 4)];
        }
        std::vector<bool> seen(static_cast<size_t>(ends), false);
        int count = 0;
        for (int e = 0; e < ends; ++e) {
            if (seen[static_cast<size_t>(e)]) continue;
            ++count;
            int cur = e;
            while (!seen[static_cast<size_t>(cur)]) {
                seen[static_cast<size_t>(cur)] = true;
                cur = sigma[cur ^ 1];  // twin flips the low bit
            }
        }
        return count;
    }
};

} // namespace

Diagram dt_to_diagram(const DTCode& code) {
    int n = code.crossings();
    if (n > 16)
        fail(errc::non_realizable, "realizability search capped at 16 crossings");

    // Crossing i is the one met at odd label 2i+1 (time 2i) and at the paired
    // even label (time |pairs[i]|-1).  Positive entry: the odd visit is over.
    std::vector<std::pair<int, bool>> visits(static_cast<size_t>(2 * n), {-1, false});
    for (int i = 0; i < n; ++i) {
        i64 v = code.pairs[static_cast<size_t>(i)];
        bool odd_over = v > 0;
        int t_even = static_cast<int>((v < 0 ? -v : v)) - 1;
        if (visits[static_cast<size_t>(2 * i)].first != -1 || visits[static_cast<size_t>(t_even)].first != -1)
            fail(errc::malformed_dt, "label collision in DT code");
        visits[static_cast<size_t>(2 * i)] = {i, odd_over};
        visits[static_cast<size_t>(t_even)] = {i, !odd_over};
    }
    for (const auto& v : visits)
        if (v.first == -1) fail(errc::malformed_dt, "DT labels do not cover 1..2n");

    EmbeddingProblem problem(visits, n);
    uint32_t found = 0;
    bool ok = false;
    for (uint32_t choice = 0; choice < (1u << n); ++choice) {
        if (problem.faces(choice) == n + 2) {
            found = choice;
            ok = true;
            break;
        }
    }
    if (!ok)
        fail(errc::non_realizable, "DT code admits no planar realization");

    // Crossing sign from the chosen rotation and the over/under roles.  With
    // rotation [in1,in2,out1,out2] strand 1 heads north and strand 2 west;
    // flipping the choice bit reverses strand 2.
    std::vector<int> signs(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
        bool flipped = found >> c & 1;
        bool strand1_over = visits[static_cast<size_t>(problem.t_odd[static_cast<size_t>(c)])].second;
        int s = strand1_over ? 1 : -1;
        if (flipped) s = -s;
        signs[static_cast<size_t>(c)] = s;
    }
    return build_from_visits(std::move(visits), signs);
}

Diagram braid_to_diagram(const BraidWord& b) {
    int n = static_cast<int>(b.letters.size());

    // Walk the closure from the top of position 0.  Crossing j sits at letter
    // j; for a positive letter the strand entering on the left passes over.
    std::vector<std::pair<int, bool>> visits;
    std::vector<int> signs(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) signs[static_cast<size_t>(j)] = b.letters[static_cast<size_t>(j)] > 0 ? 1 : -1;

    int pos = 0;
    do {
        for (int j = 0; j < n; ++j) {
            int letter = b.letters[static_cast<size_t>(j)];
            int left = (letter < 0 ? -letter : letter) - 1;
            if (pos == left || pos == left + 1) {
                bool entering_left = pos == left;
                bool is_over = entering_left == (letter > 0);
                visits.push_back({j, is_over});
                pos = entering_left ? left + 1 : left;
            }
        }
        // Closure: bottom of position p rejoins the top of position p.
    } while (pos != 0);

    if (static_cast<int>(visits.size()) != 2 * n)
        fail(errc::internal, "braid closure traversal did not cover every crossing twice");
    return build_from_visits(std::move(visits), signs);
}

namespace {

DTCode extract_with(const Diagram& d, int t0, int dir) {
    int n = static_cast<int>(d.crossings.size());
    int len = 2 * n;
    std::vector<int> first_label(static_cast<size_t>(n), 0);
    std::vector<bool> first_over(static_cast<size_t>(n), false);
    std::vector<i64> pairs(static_cast<size_t>(n), 0);
    for (int step = 0; step < len; ++step) {
        int t = ((t0 + dir * step) % len + len) % len;
        auto [c, over] = d.visits[static_cast<size_t>(t)];
        int label = step + 1;
        if (first_label[static_cast<size_t>(c)] == 0) {
            first_label[static_cast<size_t>(c)] = label;
            first_over[static_cast<size_t>(c)] = over;
        } else {
            int l1 = first_label[static_cast<size_t>(c)];
            int l2 = label;
            int odd = l1 % 2 ? l1 : l2;
            int even = l1 % 2 ? l2 : l1;
            if (odd % 2 == 0 || even % 2 == 1)
                fail(errc::internal, "crossing labels share parity; traversal corrupt");
            bool over_at_odd = (odd == l1) ? first_over[static_cast<size_t>(c)] : over;
            pairs[static_cast<size_t>((odd - 1) / 2)] = over_at_odd ? even : -even;
        }
    }
    return DTCode{std::move(pairs)};
}

} // namespace

DTCode extract_dt(const Diagram& d) { return extract_with(d, 0, 1); }

std::vector<DTCode> extract_dt_all(const Diagram& d) {
    int len = 2 * static_cast<int>(d.crossings.size());
    std::vector<DTCode> out;
    for (int t0 = 0; t0 < len; ++t0) {
        out.push_back(extract_with(d, t0, 1));
        out.push_back(extract_with(d, t0, -1));
    }
    return out;
}

} // namespace perimal
