#include "perimal/perm.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "perimal/error.hpp"

namespace perimal {

Perm::Perm(int degree) : degree_(degree) {
    if (degree < 1 || degree > MAX_DEGREE)
        fail(errc::internal, "permutation degree out of range");
    for (int i = 0; i < degree; ++i) img_[i] = static_cast<uint8_t>(i);
}

Perm::Perm(int degree, const std::vector<int>& images) : Perm(degree) {
    if (static_cast<int>(images.size()) != degree)
        fail(errc::internal, "image list length mismatch");
    std::array<bool, MAX_DEGREE> seen{};
    for (int i = 0; i < degree; ++i) {
        int v = images[i];
        if (v < 0 || v >= degree || seen[v])
            fail(errc::internal, "not a permutation");
        seen[v] = true;
        img_[i] = static_cast<uint8_t>(v);
    }
}

Perm Perm::cycle(int degree, const std::vector<int>& points) {
    Perm p(degree);
    if (points.empty()) return p;
    for (size_t i = 0; i < points.size(); ++i) {
        int from = points[i];
        int to = points[(i + 1) % points.size()];
        if (from < 0 || from >= degree) fail(errc::internal, "cycle point out of range");
        p.img_[from] = static_cast<uint8_t>(to);
    }
    return p;
}

Perm Perm::operator*(const Perm& other) const {
    Perm r;
    r.degree_ = degree_;
    for (int i = 0; i < degree_; ++i)
        r.img_[i] = img_[other.img_[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.degree_ = degree_;
    for (int i = 0; i < degree_; ++i)
        r.img_[img_[i]] = static_cast<uint8_t>(i);
    return r;
}

Perm Perm::pow(i64 n) const {
    if (n < 0) return inverse().pow(-n);
    n %= order();
    Perm acc(degree_);
    Perm base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree_; ++i)
        if (img_[i] != i) return false;
    return true;
}

int Perm::order() const {
    int ord = 1;
    auto ct = cycle_type();
    // cycle_type right-aligns the lengths; scan the whole array.
    for (int i = 0; i < MAX_DEGREE; ++i)
        if (ct[i] > 1) ord = static_cast<int>(std::lcm(ord, static_cast<int>(ct[i])));
    return ord;
}

std::array<uint8_t, Perm::MAX_DEGREE> Perm::cycle_type() const {
    std::array<uint8_t, MAX_DEGREE> lens{};
    std::array<bool, MAX_DEGREE> seen{};
    int k = 0;
    for (int i = 0; i < degree_; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) { seen[j] = true; j = img_[j]; ++len; }
        lens[k++] = static_cast<uint8_t>(len);
    }
    std::sort(lens.begin(), lens.begin() + k);
    // Left-pad with zeros so the array compares well regardless of cycle count.
    std::rotate(lens.begin(), lens.begin() + k, lens.begin() + MAX_DEGREE);
    return lens;
}

uint64_t Perm::pack() const {
    uint64_t key = 0;
    for (int i = 0; i < degree_; ++i)
        key = key << 4 | img_[i];
    return key;
}

std::string Perm::to_cycles() const {
    std::ostringstream os;
    std::array<bool, MAX_DEGREE> seen{};
    bool any = false;
    for (int i = 0; i < degree_; ++i) {
        if (seen[i] || img_[i] == i) { seen[i] = true; continue; }
        os << '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << ' ';
            os << j + 1;
            first = false;
            j = img_[j];
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : "()";
}

namespace {
std::mutex cache_mutex;
}

const std::vector<Perm>& all_perms(int degree) {
    static std::map<int, std::vector<Perm>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;

    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 0);
    std::vector<Perm> out;
    do {
        out.emplace_back(degree, images);
    } while (std::next_permutation(images.begin(), images.end()));
    return cache.emplace(degree, std::move(out)).first->second;
}

const std::vector<Perm>& class_representatives(int degree) {
    static std::map<int, std::vector<Perm>> cache;
    const std::vector<Perm>& perms = all_perms(degree);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;

    std::vector<Perm> reps;
    std::map<std::array<uint8_t, Perm::MAX_DEGREE>, bool> seen;
    for (const Perm& p : perms) {
        auto ct = p.cycle_type();
        if (!seen.count(ct)) {
            seen[ct] = true;
            reps.push_back(p);
        }
    }
    return cache.emplace(degree, std::move(reps)).first->second;
}

} // namespace perimal
