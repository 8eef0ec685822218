#include "sumkit/series_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sumkit/errors.hpp"

namespace sumkit {

namespace {

using nlohmann::json;

CoefficientSequence from_json(const json& j) {
    if (!j.is_object()) throw ParseError("series definition must be a JSON object");
    std::string kind = j.value("kind", "explicit");
    std::string name = j.value("name", "series");
    if (kind == "catalog") return catalog_series(name);
    if (kind != "explicit") throw ParseError("unknown series kind: " + kind);

    std::string sign = j.value("sign_convention", "as-is");
    SignConvention sc;
    if (sign == "as-is")
        sc = SignConvention::AsIs;
    else if (sign == "alternating-implied")
        sc = SignConvention::AlternatingImplied;
    else
        throw ParseError("unknown sign_convention: " + sign);

    if (!j.contains("coefficients") || !j["coefficients"].is_array())
        throw ParseError("explicit series needs a coefficients array");
    std::vector<Scalar> terms;
    for (const auto& c : j["coefficients"]) {
        if (!c.is_string())
            throw ParseError("coefficients must be \"p/q\" strings, never floats");
        terms.emplace_back(Rational::from_string(c.get<std::string>()));
    }
    return CoefficientSequence(std::move(terms), sc, name);
}

} // namespace

CoefficientSequence load_series_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in series definition");
    return from_json(j);
}

CoefficientSequence load_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open series file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_series_json(ss.str());
}

std::string series_to_json(const std::string& name, const CoefficientSequence& seq, long count) {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["kind"] = "explicit";
    j["sign_convention"] =
        seq.sign_convention() == SignConvention::AsIs ? "as-is" : "alternating-implied";
    std::vector<std::string> coeffs;
    for (long n = 0; n < count; ++n) {
        Scalar t = seq.term(n);
        if (!t.is_exact())
            throw DomainError("series JSON stores exact rationals only");
        coeffs.push_back(t.rational().str());
    }
    j["coefficients"] = coeffs;
    return j.dump(2);
}

std::vector<Scalar> parse_rational_list(const std::string& text) {
    std::vector<Scalar> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.emplace_back(Rational::from_string(item));
    }
    if (out.empty()) throw ParseError("empty rational list");
    return out;
}

} // namespace sumkit
