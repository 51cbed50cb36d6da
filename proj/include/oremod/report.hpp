#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "oremod/factor.hpp"
#include "oremod/structure.hpp"

namespace oremod {

// Machine-readable result of one command.  Serialization is byte-stable:
// identical inputs and seed give identical bytes, for any worker count.
struct Report {
    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    std::string status; // pass | fail | error | verdict
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    std::uint64_t seed = 0;

    nlohmann::ordered_json to_json() const;
    std::string to_json_text() const { return to_json().dump(2) + "\n"; }
    std::string to_text() const;
    int exit_code() const; // 0 pass/verdict, 1 fail, 2 error
};

Report error_report(const std::string& command, const std::string& message, std::uint64_t seed);

// Shared command runners (used by the CLI and by the determinism suite).
Report run_check_report(const std::string& kind, const DescPtr& desc, long range,
                        int basis_budget, std::uint64_t seed);
Report run_probe_report(const DescPtr& desc, const ModVec& seed_vec,
                        const std::vector<BasisSymbol>& window, long gen_range,
                        long word_length, std::uint64_t seed);
Report run_search_report(const LaurentPoly& f, const SearchOptions& opts, std::uint64_t seed);
Report run_fingerprint_report(const DescPtr& desc, std::uint64_t seed);
Report run_iso_report(const DescPtr& a, const DescPtr& b, std::uint64_t seed);

nlohmann::ordered_json check_to_json(const CheckReport& rep);
nlohmann::ordered_json probe_to_json(const ProbeReport& rep);

} // namespace oremod
