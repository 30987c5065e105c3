#include "mfkit/serialize.hpp"

#include <algorithm>

#include <json.hpp>

#include "mfkit/error.hpp"
#include "mfkit/expr.hpp"

namespace mfkit {

namespace {

using nlohmann::json;

json matrix_json(const PolyMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j).to_string());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

[[noreturn]] void malformed(const std::string& why)
{
    throw Error(ErrorCode::Parse, "malformed factorization file: " + why);
}

Polynomial entry(const json& j, const std::string& where)
{
    if (!j.is_string()) {
        malformed(where + " must be a string");
    }
    try {
        return parse_polynomial(j.get<std::string>());
    } catch (const Error& e) {
        malformed(where + ": " + e.what());
    }
}

PolyMatrix matrix(const json& j, const char* name, std::size_t size)
{
    if (!j.is_array() || j.size() != size) {
        malformed(std::string(name) + " must be an array of " + std::to_string(size) + " rows");
    }
    PolyMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != size) {
            malformed(std::string(name) + " row " + std::to_string(i) + " must have " + std::to_string(size) +
                      " entries");
        }
        for (std::size_t c = 0; c < size; ++c) {
            m(i, c) = entry(row[c], std::string(name) + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
        }
    }
    return m;
}

std::string render(const PolyMatrix& m)
{
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            width[j] = std::max(width[j], m(i, j).to_string().size());
        }
    }
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string s = m(i, j).to_string();
            out += j == 0 ? " " : "  ";
            out += std::string(width[j] - s.size(), ' ') + s;
        }
        out += " ]\n";
    }
    return out;
}

}  // namespace

std::string to_json(const MatrixFactorization& x)
{
    json j;
    j["f"] = x.target().to_string();
    j["size"] = x.size();
    j["phi"] = matrix_json(x.phi());
    j["psi"] = matrix_json(x.psi());
    return j.dump();
}

RawFactorization parse_factorization_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(e.what());
    }
    if (!j.is_object()) {
        malformed("top level must be an object");
    }
    for (const char* key : {"f", "size", "phi", "psi"}) {
        if (!j.contains(key)) {
            malformed(std::string("missing \"") + key + "\"");
        }
    }
    if (!j["size"].is_number_unsigned() || j["size"].get<std::size_t>() == 0) {
        malformed("\"size\" must be a positive integer");
    }
    RawFactorization raw;
    raw.size = j["size"].get<std::size_t>();
    raw.f = entry(j["f"], "f");
    raw.phi = matrix(j["phi"], "phi", raw.size);
    raw.psi = matrix(j["psi"], "psi", raw.size);
    return raw;
}

MatrixFactorization to_factorization(RawFactorization raw)
{
    return MatrixFactorization::make(std::move(raw.phi), std::move(raw.psi), std::move(raw.f));
}

std::string to_text(const MatrixFactorization& x)
{
    return "f = " + x.target().to_string() + "\nsize = " + std::to_string(x.size()) + "\nphi =\n" +
           render(x.phi()) + "psi =\n" + render(x.psi());
}

}  // namespace mfkit
