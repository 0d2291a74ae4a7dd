#include "dtgw/json_io.hpp"

namespace dtgw {

Json coeff_json(const GaussianRational& c, bool with_im) {
    Json t = Json::array();
    t.push_back(c.re.get_num().get_str());
    t.push_back(c.re.get_den().get_str());
    if (with_im) {
        t.push_back(c.im.get_num().get_str());
        t.push_back(c.im.get_den().get_str());
    }
    return t;
}

Json series_json(const TruncSeries& s) {
    bool with_im = !s.all_real();
    Json j;
    j["var"] = std::string(1, var_name(s.var()));
    j["trunc"] = s.trunc();
    Json coeffs = Json::array();
    for (int k = 0; k <= s.trunc(); ++k) coeffs.push_back(coeff_json(s.coeff(k), with_im));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json series_json(const LaurentSeries& s) {
    bool with_im = !s.all_real();
    Json j;
    j["var"] = "u";
    j["lead"] = s.lead();
    j["trunc"] = s.trunc();
    Json coeffs = Json::array();
    for (int k = s.lead(); k <= s.trunc(); ++k) coeffs.push_back(coeff_json(s.coeff(k), with_im));
    j["coeffs"] = std::move(coeffs);
    return j;
}

namespace {

Json poly_json(const IntPoly& p) {
    Json a = Json::array();
    for (const Int& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

}  // namespace

Json ratfun_json(const RatFun& f) {
    Json j;
    j["num"] = poly_json(f.num());
    j["den"] = poly_json(f.den());
    return j;
}

Json report_json(const VerificationReport& r) {
    Json j;
    j["target"] = r.target;
    Json rows = Json::array();
    for (const ReportRow& row : r.rows) {
        Json jr;
        jr["u_exp"] = row.u_exp;
        jr["dt"] = coeff_json(row.dt, !row.dt.is_real());
        jr["gw"] = coeff_json(row.gw, !row.gw.is_real());
        jr["equal"] = row.equal;
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    j["q_inv_symmetric"] = r.q_inv_symmetric;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["notes"] = r.notes;
    return j;
}

}  // namespace dtgw
