#pragma once

#include <json.hpp>

#include "k3cubic/cubic.hpp"
#include "k3cubic/f3space.hpp"
#include "k3cubic/fqf.hpp"
#include "k3cubic/picard.hpp"
#include "k3cubic/verify.hpp"

namespace k3cubic::json_io {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

json to_json(const Rational& x);
json to_json(const BinaryForm& f);  // ["num/den", ...] in x0-descending order
BinaryForm form_from_json(const json& j);

json to_json(const binforms::RootProfile& p);
json to_json(const binforms::StabilityVerdict& v);
json to_json(const binforms::PairCase& c);
json to_json(const kodaira::FiberConfiguration& c);
json to_json(const lattices::IntegralLattice& l);
json to_json(const lattices::FiniteQuadraticForm& q);
json to_json(const lattices::ShiodaTateReport& r);
json to_json(const lattices::Table2RowCheck& c);
json to_json(const f3::Vec& v);
json to_json(const f3::Tuple& t);
json to_json(const f3::OrbitSummary& s);
json to_json(const cubio::CubicForm& f);
json to_json(const cubio::ProjLine& l);
json to_json(const cubio::AnalysisReport& r);
/// Timings are left out unless asked for, keeping the output reproducible.
json to_json(const verify::SuiteResult& r, bool timing = false);

/// Top-level object carrying the schema version.
json envelope(const std::string& command, json payload);

}  // namespace k3cubic::json_io
