#include "gqlab/quadrangle.hpp"

#include <algorithm>
#include <map>

#include "gqlab/errors.hpp"

namespace gqlab {

nlohmann::json to_json(const AxiomReport& r) {
    nlohmann::json j{{"pass", r.pass}};
    if (!r.pass) {
        j["axiom"] = r.axiom;
        j["witness"] = r.witness;
    }
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

GeneralizedQuadrangle::GeneralizedQuadrangle(std::uint32_t num_points, std::vector<std::vector<PointId>> lines, std::uint32_t s,
                                             std::uint32_t t)
    : num_points_(num_points), s_(s), t_(t), lines_(std::move(lines)) {
    point_lines_.assign(num_points_, {});
    line_bits_.reserve(lines_.size());
    for (LineId l = 0; l < lines_.size(); ++l) {
        auto& pts = lines_[l];
        std::sort(pts.begin(), pts.end());
        if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) throw Error(ErrorCode::SchemaError, "line repeats a point", {l});
        Bitset b(num_points_);
        for (PointId p : pts) {
            if (p >= num_points_) throw Error(ErrorCode::SchemaError, "point id out of range", {l, p});
            b.set(p);
            point_lines_[p].push_back(l);
        }
        line_bits_.push_back(std::move(b));
    }
    point_line_bits_.reserve(num_points_);
    collinear_.reserve(num_points_);
    for (PointId p = 0; p < num_points_; ++p) {
        Bitset b(lines_.size());
        Bitset c(num_points_);
        c.set(p);
        for (LineId l : point_lines_[p]) {
            b.set(l);
            c |= line_bits_[l];
        }
        point_line_bits_.push_back(std::move(b));
        collinear_.push_back(std::move(c));
    }
}

LineId GeneralizedQuadrangle::join(PointId p, PointId q) const {
    for (LineId l : point_lines_[p])
        if (line_bits_[l].test(q)) return l;
    return num_lines();
}

LineId GeneralizedQuadrangle::find_line(std::vector<PointId> pts) const {
    if (pts.empty()) return num_lines();
    std::sort(pts.begin(), pts.end());
    for (LineId l : point_lines_[pts.front()])
        if (lines_[l] == pts) return l;
    return num_lines();
}

nlohmann::json gq_to_json(const GeneralizedQuadrangle& gq) {
    std::vector<std::vector<PointId>> lines;
    for (LineId l = 0; l < gq.num_lines(); ++l) lines.push_back(gq.line_points(l));
    return {{"s", gq.s()}, {"t", gq.t()}, {"points", gq.num_points()}, {"lines", lines}};
}

GeneralizedQuadrangle gq_from_json(const nlohmann::json& j) {
    try {
        auto lines = j.at("lines").get<std::vector<std::vector<PointId>>>();
        std::uint32_t n = 0;
        if (j.contains("points")) {
            n = j["points"].get<std::uint32_t>();
        } else {
            for (auto& l : lines)
                for (auto p : l) n = std::max(n, p + 1);
        }
        return GeneralizedQuadrangle(n, std::move(lines), j.at("s").get<std::uint32_t>(), j.at("t").get<std::uint32_t>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::SchemaError, std::string("bad quadrangle JSON: ") + e.what());
    }
}

}  // namespace gqlab
