#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "gqlab/group.hpp"
#include "gqlab/kantor_family.hpp"
#include "gqlab/quadrangle.hpp"

namespace gqlab {

// Line sizes, point degrees, no digons, and the unique-collinear-point axiom.
AxiomReport verify_gq_axioms(const GeneralizedQuadrangle& gq);

struct TraceSpan {
    std::vector<PointId> trace;  // {x,y}^perp
    std::vector<PointId> span;   // {x,y}^perp perp
};
TraceSpan trace_and_span(const GeneralizedQuadrangle& gq, PointId x, PointId y);

bool is_regular_point(const GeneralizedQuadrangle& gq, PointId x);

struct DerivedQuadrangle {
    GeneralizedQuadrangle gq;
    std::vector<PointId> original_point;  // new id -> id in the input
};
DerivedQuadrangle payne_derive(const GeneralizedQuadrangle& gq, PointId x);

// G acting on a quadrangle from the right: point_perm[g][P] = P^g.
struct AutomorphismAction {
    GeneralizedQuadrangle gq;
    FiniteGroup group;
    std::vector<std::vector<PointId>> point_perm;
    std::vector<std::vector<LineId>> line_perm;
    bool point_regular = false;
    PointId base = 0;
};
// Incidence preservation, the homomorphism property and (when flagged) regularity.
AxiomReport verify_action(const AutomorphismAction& a);

// Elation group on the Payne derivation of the coset geometry at infinity.
// Derived point g is the group element g.
AutomorphismAction right_regular_action(const KantorFamily& f);

std::vector<Element> delta_set(const AutomorphismAction& a, PointId base);

struct FixedStructures {
    Element g = 0;
    std::vector<PointId> P2, P2_prime;
    std::vector<LineId> L1, L2;
};
FixedStructures fixed_structures(const AutomorphismAction& a, Element g);

struct BensonReport {
    Element g = 0;
    std::uint64_t p2 = 0;
    std::uint64_t group_count = 0;  // |C_G(g)| |g^G cap Delta|
    std::uint64_t l1 = 0, l2 = 0;
    std::uint64_t line_count = 0;   // (s+1)|L1| + |L2|
    std::uint64_t residue = 0, residue_target = 0;
    std::uint64_t complement_residue = 0, complement_target = 0;
    bool pass = false;
};
BensonReport benson_check(const AutomorphismAction& a, Element g);

struct L2BoundReport {
    Element g = 0;
    std::uint64_t l2 = 0;
    double bound = 0;
    bool pass = false;
};
// Exact comparison |L2| < (1+st)(2+sqrt(s+t)).
L2BoundReport l2_bound_check(const AutomorphismAction& a, Element g);
bool l2_below_bound(std::uint64_t l2, std::uint64_t s, std::uint64_t t);

struct CycleReport {
    Element g = 0;
    std::uint64_t p2_prime = 0, l2 = 0, edges = 0;
    bool degrees_ok = false, sizes_ok = false, fixed_lines_ok = false;
    bool pass = false;
};
CycleReport cycle_structure_check(const AutomorphismAction& a, Element g);

struct SpectralData {
    std::vector<double> eigenvalues;  // by decreasing magnitude, positive first on ties
    std::vector<std::pair<double, std::size_t>> distinct;  // ascending, with multiplicities
    std::uint32_t a = 0, b = 0;       // point degree t+1, line degree s+1
    std::uint32_t num_points = 0, num_lines = 0;
    double lambda1 = 0, lambda3 = 0;
    bool symmetric = false;
    bool lambda3_ok = false;  // |lambda3| = sqrt(s+t), 1e-9 relative
};
SpectralData incidence_spectrum(const GeneralizedQuadrangle& gq);

struct MixingReport {
    std::uint64_t x = 0, y = 0, edges = 0;
    double deviation = 0, bound = 0;
    bool pass = false;
};
MixingReport mixing_inequality_check(const GeneralizedQuadrangle& gq, const std::vector<PointId>& X,
                                     const std::vector<LineId>& Y, const SpectralData& spec);
MixingReport mixing_inequality_check(const GeneralizedQuadrangle& gq, const std::vector<PointId>& X,
                                     const std::vector<LineId>& Y);
// `trials` random (X, Y) pairs drawn from the seed.
std::vector<MixingReport> mixing_suite(const GeneralizedQuadrangle& gq, std::uint64_t seed, std::size_t trials = 100);

nlohmann::json to_json(const BensonReport& r);
nlohmann::json to_json(const L2BoundReport& r);
nlohmann::json to_json(const CycleReport& r);
nlohmann::json to_json(const MixingReport& r);
nlohmann::json to_json(const SpectralData& d);

}  // namespace gqlab
