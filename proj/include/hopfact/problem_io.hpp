#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hopfact/action.hpp"
#include "hopfact/specializations.hpp"

namespace hopfact {

using Json = nlohmann::json;

/// The optional action block. Only the permutations are mandatory; gamma,
/// matrices and sigma may be left out (sigma then defaults to zero).
struct ActionBlock {
    std::vector<Permutation> perms;
    std::optional<std::vector<FieldElement>> gamma;
    std::optional<std::vector<Matrix>> mats;
    std::optional<std::vector<PathElement>> sigma;
};

struct ProblemFile {
    HopfOreDescriptor descriptor;
    QuiverPtr quiver;
    std::optional<ActionBlock> action;
    std::optional<SpecializationParams> specialization;
};

/// Throws SchemaError or ResolutionError with a JSON pointer.
ProblemFile problem_from_json(const Json& j);
/// Throws IoError when the file cannot be read or is not JSON.
ProblemFile load_problem(const std::string& path);
Json problem_to_json(const ProblemFile& p);
/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

/// Full action data; throws SchemaError when the action block, gamma or
/// (with arrows present) the matrices are missing.
ActionData to_action_data(const ProblemFile& p);

Json field_to_json(const Field& f);
Field field_from_json(const Json& j, const std::string& pointer = "/field");
/// Rational string "p/q" (or an integer) in any field; array of power-basis
/// coefficients in Q(zeta_N); {"num": [...], "den": [...]} in Q(q).
Json literal_to_json(const FieldElement& e);
FieldElement literal_from_json(const Field& f, const Json& j, const std::string& pointer);

Json path_element_to_json(const PathElement& u);
Json report_to_json(const Report& r);
Json family_to_json(const AffineFamily& fam);
Json sigma_space_to_json(const SigmaSpace& s, const Quiver& q);
Json certificate_to_json(const FactorCertificate& c, const Quiver& q);
Json reduction_to_json(const ReductionReport& r);

}  // namespace hopfact
