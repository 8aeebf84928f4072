#pragma once

#include "pcl/cochain.hpp"
#include "pcl/hochschild.hpp"

#include <string>
#include <vector>

namespace pcl {

// Evaluation on the standard line: the arity-n Hochschild cochain
// v_1 x ... x v_n -> Y(1>2>...>n, v), a plain V value since the line is
// connected.
HCochain phi(const WElement& Y);

// The inverse on the top grade: the cochain supported on connected lines,
// with value sign(tau) F(v_{tau(1)} x ... x v_{tau(n)}) on the line
// tau(1) > tau(2) > ... > tau(n). Throws if F fails the Harrison condition
// on the given samples, since the symmetry of the result would break.
WElement lift_top(const HCochain& F, const std::vector<Tensor>& samples);

// The step identity behind the symmetry proof: for Y built from F by the
// lifting formula, every sigma and every connected line tau(Lambda_n)
// satisfy (Y^sigma)(Gamma, v) = sign(tau) (L_k F)(v_tau(1) x ...) with
// k = tau^{-1} sigma^{-1}(1). Holds for any d-linear F, Harrison or not.
bool check_symmetry_trace(const HCochain& F, const std::vector<Tensor>& samples);

struct ChainMapReport {
    bool holds = true;
    std::string counterexample;

    bool pass() const { return holds; }
    std::string str() const;
};

// [X,Y] evaluated on the standard (n+1)-line equals (-1)^(n+1) d applied to
// Y's standard-line cochain.
ChainMapReport check_chain_map(const WElement& X, const WElement& Y,
                               const std::vector<Tensor>& samples);

struct DiagramReport {
    bool harrison = false;
    bool round_trip = false;    // phi(lift_top(F)) = F
    bool top_bijective = false; // lift_top(phi(Y)) = Y for the lifted Y
    bool graded = false;        // the lift lives in one graph grade only
    bool chain_map = false;

    bool pass() const { return harrison && round_trip && top_bijective && graded && chain_map; }
    std::string str() const;
};

// The commuting square at arity n: lift the Harrison cochain F, compare both
// ways around, and check the chain-map identity against X.
DiagramReport check_diagram(const WElement& X, const HCochain& F,
                            const std::vector<Tensor>& nsamples,
                            const std::vector<Tensor>& n1samples);

} // namespace pcl
