#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gqlab/cyclotomic.hpp"
#include "gqlab/group.hpp"
#include "gqlab/kantor_family.hpp"

namespace gqlab {

struct CharacterTable {
    FiniteGroup group;
    ClassData classes;
    FieldPtr field;  // conductor = exponent(G)
    std::vector<std::vector<Cyclotomic>> rows;
    std::vector<std::uint64_t> degrees;
    std::uint64_t prime = 0;      // the modular prime used for the nonlinear part
    std::size_t linear_count = 0;  // rows [0, linear_count) are linear, row 0 principal
};

struct TableOptions {
    std::uint64_t prime_cap = 1'000'000'007ULL;
    std::size_t max_classes = 1024;
};

CharacterTable character_table(const FiniteGroup& g, const TableOptions& opt = {});
CharacterTable character_table(const FiniteGroup& g, const ClassData& cd, const TableOptions& opt = {});

struct OrthogonalityReport {
    bool rows_ok = true;
    bool columns_ok = true;
    bool degrees_ok = true;
    bool pass() const { return rows_ok && columns_ok && degrees_ok; }
};
OrthogonalityReport check_orthogonality(const CharacterTable& t);

nlohmann::json table_to_json(const CharacterTable& t);

struct ClassFunction {
    FiniteGroup group;
    std::vector<Cyclotomic> values;  // per class
};

ClassFunction chi_S(const KantorFamily& f, const ClassData& cd);
ClassFunction chi_T(const KantorFamily& f, const ClassData& cd);

struct Certificate {
    std::vector<mpq_class> multiplicities;  // per table row
    bool is_character = true;
    std::optional<std::size_t> offending_row;
};
// (f, chi_i) for every row; rows are independent so `jobs` only changes speed.
Certificate certify_character(const ClassFunction& f, const CharacterTable& t, unsigned jobs = 1);
nlohmann::json to_json(const Certificate& c);

// Value of sum_g x_g chi(g) for a row of the table.
Cyclotomic evaluate(const CharacterTable& t, std::size_t row, const std::vector<std::int64_t>& coeffs);

struct LinearDeltaRecord {
    std::size_t row = 0;
    bool principal = false;
    std::int64_t chi_delta = 0;
    std::int64_t chi_delta_star = 0;
    std::uint32_t u = 0, u_star = 0;
    bool ok = true;
};
// Uses the linear rows of `t` (built from f.group).
std::vector<LinearDeltaRecord> linear_values_on_delta(const KantorFamily& f, const CharacterTable& t);
std::vector<LinearDeltaRecord> linear_values_on_delta(const KantorFamily& f);

struct NonlinearRecord {
    std::size_t row = 0;
    std::uint64_t degree = 0;
    mpq_class chi_S, chi_T;
    std::optional<mpq_class> omega, z;
    // multiplicities of s-1, -t-1, s-t-1 as eigenvalues of the representation on Delta
    std::vector<mpq_class> eigen_multiplicities;
    bool annihilated = false;  // f(Delta) acts as zero
    bool ok = false;
};
struct NonlinearReport {
    bool pass = true;
    std::vector<NonlinearRecord> records;
};
NonlinearReport nonlinear_divisibility_check(const KantorFamily& f, const CharacterTable& t);

struct U0Profile {
    std::vector<std::uint32_t> a_coset, star_coset, a_class, star_class;  // per member
    bool profile_holds = true;
};
U0Profile u0_intersection_profile(const KantorFamily& f, Element g);

enum class U0Status { InU0NotDerived, InDerivedNonIdentity, Identity };
mpq_class skew_chis_closed_form(U0Status status, std::uint64_t s, std::uint64_t g_mod_gprime);

struct OttGap {
    mpq_class value;
    bool is_integer = false;
};
OttGap ott_gap_inner_product(std::uint64_t s, std::uint64_t u, std::uint64_t gprime_order, std::uint64_t m1_order);

}  // namespace gqlab
