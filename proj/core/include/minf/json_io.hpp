/*
 * json_io.hpp
 * -----------
 * Serialization of inputs and reports: support specs from/to JSON, plus
 * text and JSON renderers for every invariant the CLI exposes. All JSON
 * emission is deterministic (insertion-ordered objects, sorted data), so
 * emitted documents round-trip byte-for-byte.
 */
#pragma once

#include <string>

#include "minf/oracle.hpp"

namespace minf {

struct JsonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input schema: {"n": int, "support": [[int,...],...],
//                "coefficients": [[num,den],...] (optional, aligned)}.
SupportSpec support_spec_from_json(const std::string& text);
std::string support_spec_to_json(const SupportSpec& spec);

// "(1-t^2)(1-t^3)(1-t^6)^-1": increasing d, exponent omitted when 1.
std::string zeta_to_text(const ZetaFactorization& z);
std::string zeta_to_json(const ZetaFactorization& z);

// "t^(5/6) + t^(7/6)"; JSON terms as [["num/den", coeff], ...] sorted.
std::string spectrum_to_text(const SpectrumPoly& sp);
std::string spectrum_to_json(const SpectrumPoly& sp);

std::string jordan_to_text(const JordanTable& jt);
std::string jordan_to_json(const JordanTable& jt);

std::string hodge_to_text(const HodgeClass& h);
std::string hodge_to_json(const HodgeClass& h);

// Per-face twisted Ehrhart tables of the Newton polyhedron at infinity.
std::string ehrhart_to_text(const NewtonAtInfinity& newton);
std::string ehrhart_to_json(const NewtonAtInfinity& newton);

std::string reports_to_text(const std::vector<CheckReport>& reports);
std::string reports_to_json(const std::vector<CheckReport>& reports);

}  // namespace minf
