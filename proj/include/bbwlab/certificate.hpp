#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bbwlab/bbw.hpp"
#include "bbwlab/weights.hpp"

namespace bbwlab {

enum class Verdict { Acyclic, Determined, Inconclusive };

std::string verdict_name(Verdict v);

// Tree-structured record backing a verified claim.  A leaf holds one Koszul
// index and one irreducible summand together with its exact outcome; interior
// nodes aggregate (Ext grids, scenario bundles).
//
// Verdict rules: Acyclic iff every leaf vanishes; Determined only when all
// nonzero leaf contributions live at a single Koszul index (so the spectral
// sequence has no room for differentials).  The Euler characteristic is exact
// in every case.
struct Certificate {
    struct Leaf {
        int koszul_index = 0;
        Weight u_weight;  // summand weight (U side for Gr routes, U* side for type-C)
        Weight q_weight;  // Q* side, empty when not applicable
        std::int64_t mult = 1;
        CohomologyOutcome outcome;
    };

    std::string claim;
    Verdict verdict = Verdict::Acyclic;
    std::map<int, std::vector<GradedPiece>> graded;  // total degrees, when Determined
    std::int64_t euler = 0;
    std::vector<Leaf> leaves;
    std::vector<Certificate> children;
    std::vector<std::string> notes;

    std::int64_t dim_at(int degree) const;
    bool single_unit_in_degree_zero() const;  // H = k in degree 0 and nothing else
    std::string summary() const;
};

}  // namespace bbwlab
