#pragma once

#include "stacky/coxquotient.hpp"
#include "stacky/exactalg.hpp"
#include "stacky/srchow.hpp"
#include "stacky/stackyfan.hpp"

#include <json.hpp>

#include <string>

namespace stacky {

using OrderedJson = nlohmann::ordered_json;

// Fan document: {"dim": d, "rays": [[..], ..], "levels": [..] (optional,
// default all 1), "max_cones": [[..], ..]}.  Unknown keys are ignored.
StackyFan parse_fan(const OrderedJson& document);
StackyFan parse_fan_text(const std::string& text);
StackyFan parse_fan_file(const std::string& path);

// Canonical re-emission; parse_fan(fan_to_json(f)) == f.
OrderedJson fan_to_json(const StackyFan& fan);

// Emits a JSON integer when the value fits 64 bits, a decimal string
// otherwise.
OrderedJson json_int(const Int& value);

OrderedJson matrix_to_json(const IntMatrix& m);              // rows as arrays
OrderedJson invariants_to_json(const AbelianInvariants& g);  // {free_rank, torsion}
OrderedJson piece_to_json(const GradedPiece& piece);  // {degree, basis, free_rank, torsion}

}  // namespace stacky
