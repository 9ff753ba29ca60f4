#pragma once

#include <json.hpp>

#include "ucalg/macmahon.hpp"
#include "ucalg/phase.hpp"
#include "ucalg/poly.hpp"

namespace ucalg {

// Insertion-ordered JSON so numeric keys come out in numeric order and
// repeated runs are byte-identical.
using OJson = nlohmann::ordered_json;

// {"exp": "coeff"} with exponents ascending; zero coefficients omitted.
OJson series_to_json(const TruncSeries& s);
TruncSeries series_from_json(const OJson& j, const std::string& param, int cap);

// {"cutoffs":[nx,ny], "coeff_domain":..., "terms":[{"x":{...},"y":{...},"c":...}]}
// with terms in the ring's canonical order.
OJson poly_to_json(const PolyQ& p);
OJson poly_to_json(const PolyS& p);
PolyQ poly_q_from_json(const OJson& j);
PolyS poly_s_from_json(const OJson& j);

// Map from occupation-state string to coefficient.
OJson fock_to_json(const FockVec& v);
FockVec fock_from_json(const OJson& j);

// Array of q-coefficients as exact strings.
OJson qseries_to_json(const QSeries& q);

// {check, inputs, pass, residuals:[{input, residual}]}; residuals lists the
// failing cases only.
OJson report_to_json(const Report& r);

}  // namespace ucalg
