#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilcommute/field.hpp"

namespace nilcommute {

inline constexpr const char* kVersion = "0.1.0";

enum class Verdict { Pass, Fail, Inconclusive };

std::string verdict_name(Verdict v);

// Machine-checkable result of one verification run. Evidence entries are
// labeled exact values (counts as JSON numbers, scalars and matrix entries
// as strings) and are reproducible from (name, field, seed, trials).
struct Certificate {
    std::string name;
    Verdict verdict = Verdict::Inconclusive;
    FieldSpec field = FieldSpec::rationals();
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::vector<std::pair<std::string, nlohmann::json>> evidence;

    void add(const std::string& label, nlohmann::json value) {
        evidence.emplace_back(label, std::move(value));
    }
};

}  // namespace nilcommute
