#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "gqlab/errors.hpp"
#include "gqlab/geometry.hpp"

namespace gqlab {

constexpr std::uint32_t kSpectrumPointLimit = 20000;

SpectralData incidence_spectrum(const GeneralizedQuadrangle& gq) {
    if (gq.num_points() > kSpectrumPointLimit) throw Error(ErrorCode::TooLarge, "incidence spectrum limited to 20000 points", {gq.num_points()});
    const Eigen::Index P = gq.num_points(), L = gq.num_lines(), n = P + L;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (LineId l = 0; l < gq.num_lines(); ++l)
        for (PointId p : gq.line_points(l)) {
            A(p, P + l) = 1.0;
            A(P + l, p) = 1.0;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw Error(ErrorCode::InvalidArgument, "eigensolver did not converge");
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);  // ascending

    SpectralData d;
    d.num_points = gq.num_points();
    d.num_lines = gq.num_lines();
    d.a = gq.t() + 1;
    d.b = gq.s() + 1;
    const double scale = ev.empty() ? 1.0 : std::max(1.0, std::abs(ev.back()));
    d.symmetric = true;
    for (std::size_t i = 0; i < ev.size(); ++i)
        if (std::abs(ev[i] + ev[ev.size() - 1 - i]) > 1e-9 * scale) d.symmetric = false;

    for (std::size_t i = 0; i < ev.size();) {
        std::size_t j = i;
        while (j < ev.size() && ev[j] - ev[i] <= 1e-6) ++j;
        d.distinct.emplace_back(ev[i], j - i);
        i = j;
    }
    d.eigenvalues = ev;
    std::stable_sort(d.eigenvalues.begin(), d.eigenvalues.end(), [](double x, double y) {
        if (std::abs(std::abs(x) - std::abs(y)) > 1e-9 * std::max(1.0, std::abs(x))) return std::abs(x) > std::abs(y);
        return x > y;
    });
    if (!d.eigenvalues.empty()) d.lambda1 = d.eigenvalues[0];
    if (d.eigenvalues.size() >= 3) d.lambda3 = std::abs(d.eigenvalues[2]);
    const double want = std::sqrt(static_cast<double>(gq.s()) + gq.t());
    d.lambda3_ok = std::abs(d.lambda3 - want) <= 1e-9 * want;
    return d;
}

}  // namespace gqlab
