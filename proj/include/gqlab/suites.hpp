#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gqlab/kantor_family.hpp"
#include "gqlab/search.hpp"

namespace gqlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    nlohmann::json report;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass() const;
};
nlohmann::json to_json(const SuiteReport& r);

struct SuiteOptions {
    std::uint64_t seed = 12345;
    unsigned jobs = 1;
    std::size_t mixing_trials = 100;
};

// Suite names: kantor, algebra, characters, geometry, all.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const KantorFamily& f, const SuiteOptions& opt = {});

SuiteReport kantor_suite(const KantorFamily& f, const SuiteOptions& opt = {});
SuiteReport algebra_suite(const KantorFamily& f, const SuiteOptions& opt = {});
SuiteReport characters_suite(const KantorFamily& f, const SuiteOptions& opt = {});
// Needs s = t and a regular point at infinity (W(q), q odd).
SuiteReport geometry_suite(const KantorFamily& f, const SuiteOptions& opt = {});

struct ScanOverrides {
    std::optional<unsigned> max_e;
    std::optional<std::uint64_t> max_q1;
    std::optional<std::uint64_t> max_pd;
    std::optional<std::uint64_t> max_q;
    unsigned jobs = 1;
};

// Scan names: eleven-pairs, thirtyone, h0-irred, sbound1, imprimitive, gl2, ggd, final, prim-pairs.
const std::vector<std::string>& scan_names();
// Throws InvalidArgument on an unknown name.
SearchCertificate run_scan(const std::string& name, const ScanOverrides& o = {});
// File name used for golden certificates.
std::string certificate_file_name(const std::string& scan);

}  // namespace gqlab
