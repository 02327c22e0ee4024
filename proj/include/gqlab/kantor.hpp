#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gqlab/group.hpp"
#include "gqlab/kantor_family.hpp"
#include "gqlab/quadrangle.hpp"

namespace gqlab {

// Exhaustive (K1)/(K2). Throws StructureError when sizes or containments are wrong.
AxiomReport verify_kantor_axioms(const KantorFamily& f, unsigned jobs = 1);

// W(q), q odd: Heisenberg group, A(inf) = {(0,y,0)}, A(c) = {(x, cx, c x^2 / 2)}, A* = A Z.
KantorFamily classical_wq_family(std::uint32_t q);

// T2(O), q even, oval {(1, c, c^k)} + (0,1,0), nucleus (0,0,1).
KantorFamily t2_oval_family(std::uint32_t q, std::uint32_t k = 2);

struct StgqStructure {
    Subgroup U0;
    bool normal = false;
    bool order_s = false;
    bool factorizes = false;  // A_i* = A_i U0 for all i
    bool is_stgq = false;
    bool quotient_elem_abelian = false;
};
StgqStructure stgq_structure(const KantorFamily& f);

struct CosetGeometry {
    GeneralizedQuadrangle gq;
    PointId infinity = 0;
    PointId element_offset = 0;  // point id of group element g is element_offset + g
    std::uint32_t member_count = 0;
    // coset_point[i][g] = point id of A_i* g; coset_line[i][g] = line id of A_i g
    std::vector<std::vector<PointId>> coset_point;
    std::vector<std::vector<LineId>> coset_line;

    PointId element_point(Element g) const { return element_offset + g; }
};
CosetGeometry coset_geometry(const KantorFamily& f);

// Permutations of points and lines induced by right multiplication by h.
std::pair<std::vector<PointId>, std::vector<LineId>> coset_right_action(const KantorFamily& f, const CosetGeometry& cg, Element h);

enum class StarCosetStatus { Asserted, Vacuous, NotApplicable };
struct StarCosetReport {
    StarCosetStatus status = StarCosetStatus::NotApplicable;
    bool equality_holds = false;
    std::vector<bool> per_member;
    bool pass = false;
};
std::string to_string(StarCosetStatus s);
StarCosetReport star_coset_equality_check(const KantorFamily& f);

nlohmann::json family_to_json(const KantorFamily& f);
KantorFamily family_from_json(const nlohmann::json& j);

}  // namespace gqlab
