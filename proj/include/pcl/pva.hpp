#pragma once

#include "pcl/cochain.hpp"

#include <string>
#include <vector>

namespace pcl {

// A lambda-bracket structure on the differential polynomial algebra in
// ngens generators: the table entry table[a][b] is [u_a l u_b] as a
// polynomial in one variable with DiffPoly coefficients. The bracket
// extends to the whole algebra by sesquilinearity and the left Leibniz
// rule (the master formula), so those two laws hold by construction;
// skewsymmetry and Jacobi depend on the table and are checked separately.
struct PVAStructure {
    std::string name;
    int ngens = 1;
    std::vector<std::vector<LamPoly>> table;
};

// Shipped example structures on one generator.
PVAStructure pva_gfz();         // [u l u] = l
PVAStructure pva_affine();      // [u l u] = l + 1
PVAStructure pva_zero();        // [u l u] = 0
PVAStructure pva_virasoro();    // [u l u] = u' + 2lu
PVAStructure pva_broken_skew(); // [u l u] = l^2
PVAStructure pva_broken_jacobi();
PVAStructure pva_by_name(const std::string& name);

// [a_l b] for arbitrary a, b, by the master formula.
LamPoly lambda_bracket(const PVAStructure& P, const DiffPoly& a, const DiffPoly& b);

// All monomials in the generators and their derivatives with total degree
// and derivative order bounded (the constant 1 excluded).
std::vector<DiffPoly> sample_monomials(int ngens, int max_degree, int max_order);

struct AxiomReport {
    bool sesquilinear = true;
    bool skew = true;
    bool leibniz = true;
    bool jacobi = true;
    std::string counterexample; // first failing instance, if any

    bool pass() const { return sesquilinear && skew && leibniz && jacobi; }
    std::string str() const;
};

AxiomReport check_axioms(const PVAStructure& P, const std::vector<DiffPoly>& pool);

// The arity-2 cochain carrying the product on the one-edge line and the
// bracket on the edgeless graph.
WElement build_master(const PVAStructure& P);

struct MasterSquareReport {
    bool symmetric = false;
    // one entry per line-basis graph on three vertices: does X box X vanish
    // there on all samples
    std::vector<std::pair<std::string, bool>> graphs;

    bool pass() const;
    std::string str() const;
};

MasterSquareReport check_master_square(const WElement& X, const std::vector<Tensor>& samples);

} // namespace pcl
