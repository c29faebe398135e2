#pragma once

#include "fraclap/estimates.hpp"
#include "fraclap/fraclap.hpp"
#include "fraclap/phasemap.hpp"
#include "fraclap/recursion.hpp"
#include "fraclap/verifier.hpp"

#include <ostream>
#include <string>

#include <json.hpp>

namespace fraclap {

// Shortest round-trip decimal, locale independent; used for CSV output.
std::string format_double(double x);

nlohmann::json to_json(const FracLapResult& r);
nlohmann::json to_json(const L2sReport& r);
nlohmann::json to_json(const estimates::DecayFit& f);
nlohmann::json to_json(const estimates::LowerBoundReport& r);
nlohmann::json to_json(const estimates::GammaSignTable& t);
nlohmann::json to_json(const verifier::Certificate& c);
nlohmann::json to_json(const verifier::Threshold& t);
nlohmann::json to_json(const verifier::LogSqueezeReport& r);
nlohmann::json to_json(const verifier::Aux4Report& r);
nlohmann::json to_json(const recursion::RecursionTrace& t);
nlohmann::json to_json(const recursion::PointwiseBound& b);
nlohmann::json to_json(const recursion::ExponentCheck& c);
nlohmann::json to_json(const phasemap::Boundaries& b);
nlohmann::json to_json(const phasemap::RegionLabel& l);

void write_grid_csv(std::ostream& os, const std::vector<phasemap::GridRow>& rows);
void write_trace_csv(std::ostream& os, const recursion::RecursionTrace& trace);

nlohmann::json grid_to_json(const std::vector<phasemap::GridRow>& rows,
                            const phasemap::Boundaries& bd);

} // namespace fraclap
