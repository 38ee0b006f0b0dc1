#include <doctest.h>

#include <set>

#include "perimal/perm.hpp"

using namespace perimal;

TEST_CASE("composition acts on the left") {
    Perm a = Perm::cycle(3, {0, 1});
    Perm b = Perm::cycle(3, {1, 2});
    CHECK((a * b).apply(1) == a.apply(b.apply(1)));
    CHECK((a * b).apply(2) == a.apply(b.apply(2)));
    CHECK(a * a.inverse() == Perm(3));
}

TEST_CASE("pow matches repeated multiplication, negative exponents invert") {
    Perm c = Perm::cycle(5, {0, 1, 2});
    Perm acc(5);
    for (int k = 0; k <= 6; ++k) {
        CHECK(c.pow(k) == acc);
        acc = acc * c;
    }
    CHECK(c.pow(-1) == c.inverse());
    CHECK(c.pow(-4) == c.inverse().pow(4));
}

TEST_CASE("order is correct when fixed points pad the degree") {
    // regression: order computed over the full degree, not the moved support
    Perm p = Perm::cycle(9, {0, 1, 2});
    CHECK(p.order() == 3);
    CHECK(p.pow(p.order()) == Perm(9));
    Perm q = Perm::cycle(9, {0, 1}) * Perm::cycle(9, {2, 3, 4});
    CHECK(q.order() == 6);
    CHECK(q.pow(6) == Perm(9));
    CHECK(q.pow(3) != Perm(9));
    CHECK(Perm(7).order() == 1);
}

TEST_CASE("cycle_type is a conjugacy invariant") {
    Perm p = Perm::cycle(5, {0, 1, 2});
    for (const Perm& g : all_perms(5))
        CHECK((g * p * g.inverse()).cycle_type() == p.cycle_type());
}

TEST_CASE("pack is injective within a degree") {
    std::set<uint64_t> keys;
    for (const Perm& p : all_perms(4)) keys.insert(p.pack());
    CHECK(keys.size() == 24);
}

TEST_CASE("all_perms sizes follow factorials and are sorted") {
    CHECK(all_perms(2).size() == 2);
    CHECK(all_perms(3).size() == 6);
    CHECK(all_perms(4).size() == 24);
    CHECK(all_perms(5).size() == 120);
    const auto& v = all_perms(4);
    for (size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1] < v[i]);
}

TEST_CASE("class representatives count the partitions of the degree") {
    CHECK(class_representatives(3).size() == 3);
    CHECK(class_representatives(4).size() == 5);
    CHECK(class_representatives(5).size() == 7);
    // least representative of each class is itself listed
    for (const Perm& r : class_representatives(4)) {
        Perm least = r;
        for (const Perm& g : all_perms(4)) {
            Perm c = g * r * g.inverse();
            if (c < least) least = c;
        }
        CHECK(least == r);
    }
}

TEST_CASE("cycle notation renders 1-based cycles") {
    CHECK(Perm(4).to_cycles() == "()");
    CHECK(Perm::cycle(3, {0, 1, 2}).to_cycles() == "(1 2 3)");
    CHECK((Perm::cycle(5, {0, 1}) * Perm::cycle(5, {2, 3, 4})).to_cycles() == "(1 2)(3 4 5)");
}
