#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gqlab {

// lhs op rhs, both sides exact: "123", "-4/7", "5^40", "4*13^9".
struct Trace {
    std::string label;
    std::string lhs;
    std::string op;  // < <= > >= == !=
    std::string rhs;
};

struct SearchCertificate {
    std::string scan_name;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<nlohmann::json> witnesses;
    std::vector<Trace> traces;
    bool pass = true;
    std::vector<std::string> notes;
    std::size_t count() const { return witnesses.size(); }
};

nlohmann::json to_json(const SearchCertificate& c);
// Schema-checked; throws SchemaError.
SearchCertificate certificate_from_json(const nlohmann::json& j);
std::string certificate_dump(const SearchCertificate& c);  // canonical text, 1-space indent

mpq_class evaluate_expression(const std::string& expr);
bool verify_trace(const Trace& t);
// Index of the first trace that does not re-evaluate true.
std::optional<std::size_t> first_bad_trace(const SearchCertificate& c);

// |Sp_{2l}(p)| = p^{l^2} prod_{i=1..l} (p^{2i} - 1)
mpz_class symplectic_order(std::uint64_t p, unsigned l);
mpz_class odd_part(mpz_class x);

// Even s in [1, s_max] with p^d | 1+s^2, ascending; with gcd_with set, only s
// where gcd((1+s)(1+s^2), gcd_with) > 1+s. Throws NoSquareRootOfMinusOne
// unless p = 1 mod 4.
std::vector<mpz_class> even_s_candidates(std::uint64_t p, unsigned d, const mpz_class& s_max,
                                         const std::optional<mpz_class>& gcd_with = std::nullopt);
// The unique even s in [0, m) with m | 1+s^2, for m = p^k, p = 1 mod 4.
mpz_class unique_even_root(std::uint64_t p, unsigned k);

struct ScanGrid {
    std::uint64_t max_prime = 10000;
    unsigned max_d = 64;
    mpz_class max_pd = mpz_class("1000000000000000000");
};

SearchCertificate eleven_pairs_scan(std::uint64_t q_floor = 5, std::uint64_t max_p1 = 1000, std::uint64_t max_r = 4000);
SearchCertificate prim_pair_exclusion(std::uint64_t p1, unsigned l1, unsigned jobs = 1);
// All pairs of the eleven-pairs list: (2,1) via gl2_case_check, the rest via prim_pair_exclusion.
SearchCertificate prim_pairs_suite(unsigned jobs = 1);
SearchCertificate sbound_step1_scan(const ScanGrid& grid = {});
SearchCertificate thirtyone_pairs_scan(const ScanGrid& grid = {});
SearchCertificate h0_irred_exclusion(const ScanGrid& grid = {});
SearchCertificate imprimitive_exclusion(std::uint64_t max_t = 99, std::uint64_t max_prime = 10000);
SearchCertificate gl2_case_check(const std::vector<std::uint64_t>& q_list);
std::vector<std::uint64_t> default_gl2_q_list(std::uint64_t max_q = 1000);
SearchCertificate ggd_exclusion_scan(std::uint64_t max_pd = 100000000ULL);
SearchCertificate final_inequality_scan(std::uint64_t max_q1 = 10000, unsigned max_e = 63);

struct CongruenceReport {
    bool congruence = false;        // delta_hits * centralizer = 1 mod 2s
    bool hits_positive = false;     // delta_hits >= 1
    bool class_residue = false;     // delta_hits = class_size (1+s) mod 2s
    bool complement_residue = false;  // class_size - delta_hits = s mod 2s
    bool class_large = false;       // class_size >= 1+s
    bool consistent = false;
    std::vector<std::string> contradictions;
};
CongruenceReport reg_congruence_predicates(std::uint64_t s, std::uint64_t class_size, std::uint64_t centralizer,
                                           std::uint64_t delta_hits);

}  // namespace gqlab
