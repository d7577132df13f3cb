#pragma once

#include <json.hpp>

#include "focaljet/polygon.hpp"

namespace focaljet {

using json = nlohmann::json;

/// Malformed input that parsed as JSON but does not match a schema.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const Rational& r);
json to_json(const GaussRational& g);
json to_json(const PiCoeff& c);
json to_json(const Basis& b);
json to_json(const SmoothJet& f);
json to_json(const VPlusJet& g);
json to_json(const Mu& mu);
json to_json(const SingularPart& s);
json to_json(const LogLaurentGerm& g);
json to_json(const CompleteFFLabel& l);
json to_json(const FFLabel& l);
json to_json(const LiftReport& r);
json to_json(const EquivalenceCertificate& c);
json to_json(const Point& p);
json to_json(const IngredientRep& rep);
json to_json(const ExamplePair& e);

Rational rational_from_json(const json& j);
GaussRational gauss_from_json(const json& j);
PiCoeff picoeff_from_json(const json& j);
Basis basis_from_json(const json& j);
SmoothJet jet_from_json(const json& j);
VPlusJet vplus_from_json(const json& j);
Mu mu_from_json(const json& j);
CompleteFFLabel complete_label_from_json(const json& j);
FFLabel ff_label_from_json(const json& j);
Point point_from_json(const json& j);
IngredientRep rep_from_json(const json& j);
std::vector<VPlusJet> vplus_list_from_json(const json& j);

}  // namespace focaljet
