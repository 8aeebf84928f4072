#pragma once

#include "pcl/rat.hpp"

#include <string>
#include <vector>

namespace pcl {

// Permutation of {1..n} in one-line notation; p[i] = pi(i+1).
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> oneline);
    static Perm identity(int n);

    int size() const { return (int)v_.size(); }
    // pi(i) for 1 <= i <= n.
    int operator()(int i) const { return v_[i - 1]; }
    const std::vector<int>& oneline() const { return v_; }

    Perm inverse() const;
    int sign() const;

    // Composition (s*t)(i) = s(t(i)).
    friend Perm operator*(const Perm& s, const Perm& t);
    friend auto operator<=>(const Perm&, const Perm&) = default;

    std::string str() const;

  private:
    std::vector<int> v_;
};

Perm parse_perm(const std::string& text);

// A monotone permutation: every value is either larger than all previous
// values (a rise) or smaller than all previous values (a drop). Stored with
// its start k = pi(1) and the set of drop positions (subset of {2..n}).
struct MonotonePerm {
    Perm perm;
    int start = 1;               // k = pi(1)
    std::vector<int> drops;      // positions i >= 2 with pi(i) < pi(1..i-1)

    // Sum of drop positions.
    int dr() const;
    // (-1)^dr.
    int drop_sign() const;
};

bool is_monotone(const Perm& p);

// Build the monotone permutation with start k determined by its drop set
// (a (k-1)-subset of {2..n}): drop positions receive k-1, k-2, ..., 1 from
// left to right, the rest receive k+1, ..., n increasing.
MonotonePerm monotone_from_drops(int n, int k, const std::vector<int>& drop_set);

// All monotone permutations of {1..n} starting at k, |result| = C(n-1,k-1).
std::vector<MonotonePerm> enumerate_monotone(int n, int k);

// Oracle: filter all of S_n by the definition.
std::vector<MonotonePerm> enumerate_monotone_filter(int n, int k);

// The reduction of Lemma-type "forget the second value": for monotone pi
// with pi(2) = k-1 or k+1, returns the monotone permutation of n-1 letters
// whose first value is k-1 (resp. k) and whose tail is pi(3..n) with values
// above the removed one shifted down.
MonotonePerm restrict_second(const MonotonePerm& p);

// The reduction "forget the last value": pi(n) is 1 (then all values shift
// down) or n (then it is just dropped).
MonotonePerm restrict_last(const MonotonePerm& p);

// All (m,n)-shuffles: sigma increasing on positions 1..m and m+1..m+n.
// Negative argument gives the empty list; S_{0,n} = S_{n,0} = {id}.
std::vector<Perm> enumerate_shuffles(int m, int n);

// The permutation of M = m_1+...+m_n symbols acting as: tau_i permutes
// block i, then sigma permutes the blocks.
Perm block_compose(const Perm& sigma, const std::vector<Perm>& taus);

// sigma applied to a tuple: result[sigma(i)] = input[i] (the object in slot
// i moves to slot sigma(i)).
template <class T>
std::vector<T> act_on_tuple(const Perm& sigma, const std::vector<T>& in) {
    std::vector<T> out(in.size());
    for (int i = 1; i <= (int)in.size(); ++i) out[sigma(i) - 1] = in[i - 1];
    return out;
}

// Koszul sign of sigma acting on a tensor with the given parities
// (parities[i] = parity of slot i+1): product over inverted pairs of
// (-1)^{p_i p_j}.
int koszul_sign(const Perm& sigma, const std::vector<int>& parities);

long long binomial(int n, int k);

} // namespace pcl
