#pragma once

#include "json.hpp"

#include "dtgw/coeff.hpp"
#include "dtgw/correspondence.hpp"
#include "dtgw/ratfun.hpp"
#include "dtgw/series.hpp"

namespace dtgw {

using Json = nlohmann::ordered_json;

/// ["re_num","re_den"] when with_im is false, else the four-entry form.
Json coeff_json(const GaussianRational& c, bool with_im);

/// {"var","trunc","coeffs":[...]}; the imaginary pair is omitted when the
/// whole series is real.
Json series_json(const TruncSeries& s);

/// Same, plus "lead"; coefficients run from lead through trunc.
Json series_json(const LaurentSeries& s);

/// {"num":["c0",...],"den":["c0",...]}, ascending decimal strings.
Json ratfun_json(const RatFun& f);

Json report_json(const VerificationReport& r);

}  // namespace dtgw
