#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gqlab/bitset.hpp"

namespace gqlab {

using PointId = std::uint32_t;
using LineId = std::uint32_t;

struct AxiomReport {
    bool pass = true;
    std::string axiom;                 // first failed axiom, empty on pass
    std::vector<std::int64_t> witness;
    std::string detail;
};
nlohmann::json to_json(const AxiomReport& r);

// Point-line incidence structure with nominal order (s, t). Construction does
// not enforce the axioms; see verify_gq_axioms.
class GeneralizedQuadrangle {
public:
    GeneralizedQuadrangle() = default;
    GeneralizedQuadrangle(std::uint32_t num_points, std::vector<std::vector<PointId>> lines, std::uint32_t s, std::uint32_t t);

    std::uint32_t num_points() const { return num_points_; }
    std::uint32_t num_lines() const { return static_cast<std::uint32_t>(lines_.size()); }
    std::uint32_t s() const { return s_; }
    std::uint32_t t() const { return t_; }

    const std::vector<PointId>& line_points(LineId l) const { return lines_[l]; }
    const std::vector<LineId>& point_lines(PointId p) const { return point_lines_[p]; }
    const Bitset& line_set(LineId l) const { return line_bits_[l]; }
    const Bitset& point_line_set(PointId p) const { return point_line_bits_[p]; }
    // Points sharing a line with p, p included.
    const Bitset& perp(PointId p) const { return collinear_[p]; }

    bool incident(PointId p, LineId l) const { return line_bits_[l].test(p); }
    bool collinear(PointId p, PointId q) const { return collinear_[p].test(q); }
    // A common line of p != q, or num_lines() when there is none.
    LineId join(PointId p, PointId q) const;
    // Line with exactly this point set, or num_lines().
    LineId find_line(std::vector<PointId> pts) const;

private:
    std::uint32_t num_points_ = 0, s_ = 0, t_ = 0;
    std::vector<std::vector<PointId>> lines_;
    std::vector<std::vector<LineId>> point_lines_;
    std::vector<Bitset> line_bits_, point_line_bits_, collinear_;
};

nlohmann::json gq_to_json(const GeneralizedQuadrangle& gq);
GeneralizedQuadrangle gq_from_json(const nlohmann::json& j);

}  // namespace gqlab
