#include "pcl/perm.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pcl {

Perm::Perm(std::vector<int> oneline) : v_(std::move(oneline)) {
    std::vector<char> seen(v_.size(), 0);
    for (int x : v_) {
        if (x < 1 || x > (int)v_.size() || seen[x - 1])
            throw std::invalid_argument("not a permutation");
        seen[x - 1] = 1;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
}

Perm Perm::inverse() const {
    std::vector<int> v(v_.size());
    for (int i = 1; i <= (int)v_.size(); ++i) v[v_[i - 1] - 1] = i;
    return Perm(std::move(v));
}

int Perm::sign() const {
    int inv = 0;
    for (size_t i = 0; i < v_.size(); ++i)
        for (size_t j = i + 1; j < v_.size(); ++j)
            if (v_[i] > v_[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

Perm operator*(const Perm& s, const Perm& t) {
    assert(s.size() == t.size());
    std::vector<int> v(s.size());
    for (int i = 1; i <= s.size(); ++i) v[i - 1] = s(t(i));
    return Perm(std::move(v));
}

std::string Perm::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v_.size(); ++i) os << (i ? " " : "") << v_[i];
    os << "]";
    return os.str();
}

Perm parse_perm(const std::string& text) {
    std::string t;
    for (char c : text)
        t += (c == '[' || c == ']' || c == ',') ? ' ' : c;
    std::istringstream is(t);
    std::vector<int> v;
    int x;
    while (is >> x) v.push_back(x);
    return Perm(std::move(v));
}

int MonotonePerm::dr() const {
    int s = 0;
    for (int p : drops) s += p;
    return s;
}

int MonotonePerm::drop_sign() const { return dr() % 2 ? -1 : 1; }

bool is_monotone(const Perm& p) {
    int lo = p(1), hi = p(1);
    for (int i = 2; i <= p.size(); ++i) {
        if (p(i) > hi)
            hi = p(i);
        else if (p(i) < lo)
            lo = p(i);
        else
            return false;
    }
    return true;
}

static MonotonePerm analyze(Perm p) {
    assert(is_monotone(p));
    MonotonePerm m;
    m.start = p(1);
    int lo = p(1);
    for (int i = 2; i <= p.size(); ++i)
        if (p(i) < lo) {
            lo = p(i);
            m.drops.push_back(i);
        }
    m.perm = std::move(p);
    return m;
}

MonotonePerm monotone_from_drops(int n, int k, const std::vector<int>& drop_set) {
    assert((int)drop_set.size() == k - 1);
    std::vector<int> sorted = drop_set;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> v(n, 0);
    v[0] = k;
    int down = k - 1;
    for (int pos : sorted) {
        assert(2 <= pos && pos <= n);
        v[pos - 1] = down--;
    }
    int up = k + 1;
    for (int i = 1; i < n; ++i)
        if (v[i] == 0) v[i] = up++;
    MonotonePerm m;
    m.perm = Perm(std::move(v));
    m.start = k;
    m.drops = std::move(sorted);
    assert(is_monotone(m.perm));
    return m;
}

std::vector<MonotonePerm> enumerate_monotone(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("start out of range");
    std::vector<MonotonePerm> out;
    // iterate over (k-1)-subsets of {2..n}
    std::vector<int> idx(k - 1);
    std::iota(idx.begin(), idx.end(), 2);
    if (k == 1) {
        out.push_back(monotone_from_drops(n, k, {}));
        return out;
    }
    while (true) {
        out.push_back(monotone_from_drops(n, k, idx));
        int i = k - 2;
        while (i >= 0 && idx[i] == n - (k - 2 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k - 1; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<MonotonePerm> enumerate_monotone_filter(int n, int k) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<MonotonePerm> out;
    do {
        if (v[0] == k) {
            Perm p(v);
            if (is_monotone(p)) out.push_back(analyze(p));
        }
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

MonotonePerm restrict_second(const MonotonePerm& p) {
    int n = p.perm.size(), k = p.start;
    assert(n >= 2);
    int second = p.perm(2);
    if (second != k - 1 && second != k + 1)
        throw std::invalid_argument("second value must be adjacent to the start");
    // delete the first value k and close the gap
    std::vector<int> v(n - 1);
    for (int i = 2; i <= n; ++i) {
        int x = p.perm(i);
        v[i - 2] = x > k ? x - 1 : x;
    }
    return analyze(Perm(std::move(v)));
}

MonotonePerm restrict_last(const MonotonePerm& p) {
    int n = p.perm.size();
    assert(n >= 2);
    int last = p.perm(n);
    if (last != 1 && last != n)
        throw std::invalid_argument("last value must be 1 or n");
    std::vector<int> v(n - 1);
    for (int i = 1; i < n; ++i) v[i - 1] = last == 1 ? p.perm(i) - 1 : p.perm(i);
    return analyze(Perm(std::move(v)));
}

std::vector<Perm> enumerate_shuffles(int m, int n) {
    if (m < 0 || n < 0) return {};
    std::vector<Perm> out;
    // a shuffle is determined by the image set of the first m positions
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 1);
    int total = m + n;
    while (true) {
        std::vector<int> v(total);
        std::vector<char> used(total + 1, 0);
        for (int i = 0; i < m; ++i) {
            v[i] = idx[i];
            used[idx[i]] = 1;
        }
        int pos = m;
        for (int x = 1; x <= total; ++x)
            if (!used[x]) v[pos++] = x;
        out.push_back(Perm(std::move(v)));
        if (m == 0) break;
        int i = m - 1;
        while (i >= 0 && idx[i] == total - (m - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

Perm block_compose(const Perm& sigma, const std::vector<Perm>& taus) {
    int n = sigma.size();
    assert((int)taus.size() == n);
    std::vector<int> off_in(n + 1, 0);
    for (int i = 1; i <= n; ++i) off_in[i] = off_in[i - 1] + taus[i - 1].size();
    // output slot j holds block sigma^{-1}(j)
    Perm si = sigma.inverse();
    std::vector<int> off_out(n + 1, 0);
    for (int j = 1; j <= n; ++j) off_out[j] = off_out[j - 1] + taus[si(j) - 1].size();
    std::vector<int> v(off_in[n]);
    for (int i = 1; i <= n; ++i)
        for (int r = 1; r <= taus[i - 1].size(); ++r)
            v[off_in[i - 1] + r - 1] = off_out[sigma(i) - 1] + taus[i - 1](r);
    return Perm(std::move(v));
}

int koszul_sign(const Perm& sigma, const std::vector<int>& parities) {
    assert((int)parities.size() == sigma.size());
    int s = 1;
    for (int i = 1; i <= sigma.size(); ++i)
        for (int j = i + 1; j <= sigma.size(); ++j)
            if (sigma(i) > sigma(j) && (parities[i - 1] & 1) && (parities[j - 1] & 1)) s = -s;
    return s;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace pcl
