#include "symfock/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace symfock {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

int weight(const Partition& p) {
    int w = 0;
    for (int x : p) w += x;
    return w;
}

void validate_partition(const Partition& p) {
    if (!is_partition(p))
        throw std::invalid_argument("not a partition: " + partition_str(p));
}

Multiplicities partition_to_multiplicities(const Partition& p) {
    validate_partition(p);
    Multiplicities m(p.empty() ? 0 : p.front(), 0);
    for (int x : p) ++m[x - 1];
    return m;
}

Partition multiplicities_to_partition(const Multiplicities& m) {
    Partition p;
    for (int j = static_cast<int>(m.size()); j >= 1; --j) {
        if (m[j - 1] < 0) throw std::invalid_argument("negative multiplicity");
        p.insert(p.end(), m[j - 1], j);
    }
    return p;
}

int MayaIndex::at(int j) const {
    return j <= static_cast<int>(head.size()) ? head[j - 1] : -j;
}

int MayaIndex::energy() const {
    int e = 0;
    for (size_t j = 0; j < head.size(); ++j) e += head[j] + static_cast<int>(j) + 1;
    return e;
}

int MayaIndex::charge() const {
    // Count of k_j >= 0 minus count of negatives missing from the sequence,
    // both taken over the head (the tail contributes neither).
    int nonneg = 0, present_neg = 0;
    for (int k : head) (k >= 0 ? nonneg : present_neg) += 1;
    const int s = static_cast<int>(head.size());
    // negatives in [-s, -1] are the only ones the tail does not cover
    return nonneg - (s - present_neg);
}

MayaIndex normalize_maya(std::vector<int> head) {
    for (size_t i = 1; i < head.size(); ++i)
        if (head[i] >= head[i - 1]) throw std::invalid_argument("Maya sequence must be strictly decreasing");
    while (!head.empty() && head.back() == -static_cast<int>(head.size())) head.pop_back();
    if (!head.empty() && head.back() < -static_cast<int>(head.size()))
        throw std::invalid_argument("Maya head does not meet the tail k_j = -j");
    MayaIndex k{std::move(head)};
    if (k.charge() != 0) throw std::invalid_argument("Maya sequence has nonzero charge");
    return k;
}

MayaIndex partition_to_maya(const Partition& p) {
    validate_partition(p);
    std::vector<int> h(p.size());
    for (size_t j = 0; j < p.size(); ++j) h[j] = p[j] - static_cast<int>(j) - 1;
    return normalize_maya(h);
}

Partition maya_to_partition(const MayaIndex& k) {
    Partition p;
    for (size_t j = 0; j < k.head.size(); ++j) {
        int x = k.head[j] + static_cast<int>(j) + 1;
        if (x < 0) throw std::invalid_argument("Maya sequence is not a partition");
        if (x > 0) p.push_back(x);
    }
    validate_partition(p);
    return p;
}

FrobeniusCoords maya_to_frobenius(const MayaIndex& k) {
    FrobeniusCoords f;
    const int s = static_cast<int>(k.head.size());
    std::vector<bool> present(s + 1, false);  // present[-l] for l in [-s,-1]
    for (int x : k.head) {
        if (x >= 0) f.u.push_back(x);
        else if (-x <= s) present[-x] = true;
    }
    for (int l = 1; l <= s; ++l)
        if (!present[l]) f.v.push_back(l);
    std::reverse(f.v.begin(), f.v.end());
    if (f.u.size() != f.v.size()) throw std::invalid_argument("Maya sequence has nonzero charge");
    return f;
}

MayaIndex frobenius_to_maya(const FrobeniusCoords& f) {
    if (f.u.size() != f.v.size()) throw std::invalid_argument("Frobenius coordinates of unequal length");
    for (size_t i = 0; i < f.u.size(); ++i) {
        if (f.u[i] < 0 || (i && f.u[i] >= f.u[i - 1])) throw std::invalid_argument("u must be strictly decreasing and >= 0");
        if (f.v[i] < 1 || (i && f.v[i] >= f.v[i - 1])) throw std::invalid_argument("v must be strictly decreasing and >= 1");
    }
    const int s = f.v.empty() ? 0 : f.v.front();
    std::vector<int> head(f.u.begin(), f.u.end());
    for (int l = 1; l <= s; ++l)
        if (std::find(f.v.begin(), f.v.end(), l) == f.v.end()) head.push_back(-l);
    return normalize_maya(head);
}

namespace {

void gen(int n, int max, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int x = std::min(n, max); x >= 1; --x) {
        cur.push_back(x);
        gen(n - x, x, cur, out);
        cur.pop_back();
    }
}

struct PartitionCache {
    std::mutex mu;
    std::map<int, std::vector<Partition>> lists;
    std::map<int, std::map<Partition, int>> index;
};

PartitionCache& cache() {
    static PartitionCache c;
    return c;
}

}  // namespace

const std::vector<Partition>& enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("negative partition weight");
    auto& c = cache();
    std::lock_guard lock(c.mu);
    auto it = c.lists.find(n);
    if (it != c.lists.end()) return it->second;
    std::vector<Partition> out;
    Partition cur;
    gen(n, n, cur, out);
    auto& idx = c.index[n];
    for (size_t i = 0; i < out.size(); ++i) idx[out[i]] = static_cast<int>(i);
    return c.lists.emplace(n, std::move(out)).first->second;
}

int partition_index(const Partition& p) {
    const int n = weight(p);
    enumerate_partitions(n);
    auto& c = cache();
    std::lock_guard lock(c.mu);
    auto it = c.index[n].find(p);
    if (it == c.index[n].end()) throw std::invalid_argument("not a partition: " + partition_str(p));
    return it->second;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int j = 1; j <= p.front(); ++j) {
        int cnt = 0;
        for (int x : p)
            if (x >= j) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

std::string partition_str(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ')';
    return os.str();
}

Partition parse_partition(const std::string& s) {
    Partition p;
    std::string body = s;
    body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == ' '; }), body.end());
    if (!body.empty() && (body.front() == '(' || body.front() == '[')) {
        if (body.size() < 2 || (body.back() != ')' && body.back() != ']'))
            throw std::invalid_argument("malformed partition: " + s);
        body = body.substr(1, body.size() - 2);
    }
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("malformed partition: " + s);
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition: " + s);
        }
        if (pos != tok.size()) throw std::invalid_argument("malformed partition: " + s);
        p.push_back(v);
    }
    validate_partition(p);
    return p;
}

}  // namespace symfock
