#include "green/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace green {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

int Partition::multiplicity(int v) const {
    int m = 0;
    for (int p : parts_) m += (p == v);
    return m;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
}

int Partition::n_stat() const {
    int s = 0;
    for (int i = 0; i < num_parts(); ++i) s += i * parts_[i];
    return s;
}

BigInt Partition::z_order() const {
    BigInt z = 1;
    int maxp = parts_.empty() ? 0 : parts_[0];
    for (int v = 1; v <= maxp; ++v) {
        int m = multiplicity(v);
        if (m == 0) continue;
        z *= big_pow(BigInt(v), m) * factorial(m);
    }
    return z;
}

bool Partition::dominates(const Partition& other) const {
    if (size_ != other.size_) return false;
    int n = std::max(num_parts(), other.num_parts());
    long a = 0, b = 0;
    for (int i = 0; i < n; ++i) {
        a += part(i);
        b += other.part(i);
        if (a < b) return false;
    }
    return true;
}

std::string Partition::label() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    // Reverse-lexicographic on the part sequences: (n) < (n-1,1) < ... < (1^n).
    int n = std::max(num_parts(), o.num_parts());
    for (int i = 0; i < n; ++i) {
        if (part(i) != o.part(i)) return o.part(i) <=> part(i);
    }
    return std::strong_ordering::equal;
}

namespace {

void enumerate_rec(int remaining, int maxpart, std::vector<int>& acc,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> Partition::all(int n) {
    if (n < 0) throw std::invalid_argument("Partition::all: n must be nonnegative");

    static std::map<int, std::vector<Partition>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(n, n, acc, out);
    if (n == 0) {
        out.clear();
        out.emplace_back();
    }
    cache[n] = out;
    return out;
}

int Partition::canonical_index() const {
    auto list = all(size_);
    for (size_t i = 0; i < list.size(); ++i)
        if (list[i] == *this) return static_cast<int>(i);
    throw std::logic_error("partition not found in its own enumeration");
}

BigInt partition_count(int n) {
    // p(n, k) = number of partitions of n with parts <= k.
    if (n < 0) return 0;
    std::vector<std::vector<BigInt>> p(n + 1, std::vector<BigInt>(n + 1, 0));
    for (int k = 0; k <= n; ++k) p[0][k] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) {
            p[m][k] = p[m][k - 1];
            if (m >= k) p[m][k] += p[m - k][k];
        }
    return p[n][n];
}

} // namespace green
