#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "recolor/oracle.hpp"
#include "recolor/penalty.hpp"

namespace recolor {

/// Reads an instance from JSON ({"kind", "vertices", "edges"}) or, when the
/// stream does not start with '{', from the TSV string shorthand
/// "color<TAB>weight" per line ("-" = uncolored). Validation failures carry
/// field/vertex context.
Instance parse_instance(std::istream& in, DomainPolicy policy = DomainPolicy::Keep);

/// Same from a file path; "-" reads standard input.
Instance parse_instance_file(const std::string& path,
                             DomainPolicy policy = DomainPolicy::Keep);

nlohmann::json instance_json(const Instance& inst);
std::string serialize_instance(const Instance& inst);  // round-trips via parse

std::string color_name(const Instance& inst, int color);

nlohmann::json penalty_report_json(const Instance& inst, const PenaltyReport& r);

/// The common result document: algorithm, exact cost, cover, total convex
/// coloring, penalty lower bound, optional exact optimum and trace.
nlohmann::json result_json(const Instance& inst, const std::string& algorithm,
                           const Weight& cost, const Cover& cover,
                           const Coloring& coloring,
                           const PenaltyReport* lb = nullptr,
                           const Weight* opt = nullptr,
                           const nlohmann::json* trace = nullptr);

nlohmann::json trace_json(const ReductionTrace& trace);

nlohmann::json ratio_report_json(const RatioReport& report);
std::string ratio_report_csv(const RatioReport& report);

}  // namespace recolor
