#pragma once

#include <json.hpp>

#include "thetalab/characters.hpp"
#include "thetalab/disk.hpp"
#include "thetalab/domain.hpp"
#include "thetalab/experiments.hpp"
#include "thetalab/models.hpp"
#include "thetalab/poly.hpp"

namespace thetalab::serialize {

using json = nlohmann::ordered_json;

json complex_to_json(groups::cplx z);

json element_to_json(const groups::GroupElement& g);
groups::GroupElement element_from_json(const json& j);

json table_to_json(const characters::CharacterTable& t);

json poly_to_json(const poly::MultiPoly& f);
poly::MultiPoly poly_from_json(const json& j);

// points as arrays of {"re":x,"im":y}; "im" optional on input
json point_to_json(const std::vector<groups::cplx>& z);
std::vector<groups::cplx> point_from_json(const json& j);

json disk_verdict_to_json(const disk::DiskVerdict& v);
json membership_to_json(const domain::MembershipReport& r);
json shilov_to_json(const domain::ShilovReport& r);

json matrix_to_json(const Eigen::MatrixXcd& M);
Eigen::MatrixXcd matrix_from_json(const json& j);
std::string matrix_to_csv(const Eigen::MatrixXcd& M);

json symbols_to_json(const models::SymbolTuple& S);
models::SymbolTuple symbols_from_json(const json& j);

json report_to_json(const experiments::ExperimentReport& r, bool with_timings = false);

}  // namespace thetalab::serialize
