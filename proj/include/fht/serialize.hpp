#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bounds.hpp"
#include "spectral.hpp"
#include "symbols.hpp"

namespace fht {

inline constexpr int schema_version = 1;

// 17 significant digits round-trip a double exactly
inline std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline nlohmann::json to_json(const CoeffTable& t) {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    const char* kind = t.kind == CoeffTable::Kind::phi_hat      ? "phi_hat"
                       : t.kind == CoeffTable::Kind::beta_alpha ? "beta_alpha"
                                                                : "g1_coeffs";
    j["kind"] = kind;
    j["values"] = t.values;
    return j;
}

inline nlohmann::json to_json(const CAlphaEstimate& e) {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["alpha"] = e.alpha;
    j["method"] = e.method;
    nlohmann::json raw = nlohmann::json::array();
    for (const auto& [res, val] : e.raw) raw.push_back({{"resolution", res}, {"value", val}});
    j["raw"] = raw;
    j["extrapolated"] = e.extrapolated;
    j["err_indicator"] = e.err_indicator;
    j["flagged"] = e.flagged;
    return j;
}

inline nlohmann::json to_json(const BoundsReport& r) {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["alpha"] = r.alpha;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["log_lower"] = r.log_lower;
    j["log_upper"] = r.log_upper;
    j["regime"] = to_string(r.regime);
    j["log_space"] = r.log_space;
    return j;
}

inline std::string to_csv(const CoeffTable& t) {
    std::ostringstream os;
    os << "index,value\n";
    for (std::size_t i = 0; i < t.values.size(); ++i)
        os << i << ',' << fmt_double(t.values[i]) << '\n';
    return os.str();
}

inline std::string to_csv(const CAlphaEstimate& e) {
    std::ostringstream os;
    os << "alpha,method,resolution,value,extrapolated,err_indicator,flagged\n";
    for (const auto& [res, val] : e.raw)
        os << fmt_double(e.alpha) << ',' << e.method << ',' << res << ',' << fmt_double(val)
           << ',' << fmt_double(e.extrapolated) << ',' << fmt_double(e.err_indicator) << ','
           << (e.flagged ? 1 : 0) << '\n';
    return os.str();
}

inline std::string to_csv(const BoundsReport& r) {
    std::ostringstream os;
    os << "alpha,lower,upper,log_lower,log_upper,regime,log_space\n";
    os << fmt_double(r.alpha) << ',' << fmt_double(r.lower) << ',' << fmt_double(r.upper) << ','
       << fmt_double(r.log_lower) << ',' << fmt_double(r.log_upper) << ',' << to_string(r.regime)
       << ',' << (r.log_space ? 1 : 0) << '\n';
    return os.str();
}

}  // namespace fht
