#include "affinelab/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace aflab {

namespace {

std::vector<int> flat_from_rows(const nlohmann::json& rows, const char* what) {
    if (!rows.is_array()) throw std::invalid_argument(std::string(what) + " must be an array of rows");
    std::vector<int> flat;
    size_t width = 0;
    for (const auto& row : rows) {
        if (!row.is_array()) throw std::invalid_argument(std::string(what) + " rows must be arrays");
        if (width == 0) width = row.size();
        if (row.size() != width)
            throw std::invalid_argument(std::string(what) + " rows have uneven length");
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw std::invalid_argument(std::string(what) + " entries must be integers");
            flat.push_back(v.get<int>());
        }
    }
    return flat;
}

nlohmann::json rows_from_flat(const std::vector<int>& flat, int rows, int cols) {
    nlohmann::json out = nlohmann::json::array();
    for (int r = 0; r < rows; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < cols; ++c) row.push_back(flat[static_cast<size_t>(r) * cols + c]);
        out.push_back(std::move(row));
    }
    return out;
}

void expect_schema(const nlohmann::json& j, const char* schema) {
    if (j.contains("schema") && j.at("schema") != schema)
        throw std::invalid_argument(std::string("unexpected schema: expected ") + schema);
}

}  // namespace

nlohmann::json group_to_json(const FiniteGroup& G) {
    return {{"schema", "affinelab/group/v1"},
            {"name", G.name()},
            {"order", G.order()},
            {"table", rows_from_flat(G.table(), G.order(), G.order())}};
}

FiniteGroup group_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("group: expected an object");
    expect_schema(j, "affinelab/group/v1");
    if (!j.contains("order") || !j.contains("table"))
        throw std::invalid_argument("group: missing order or table");
    int n = j.at("order").get<int>();
    std::vector<int> flat = flat_from_rows(j.at("table"), "group table");
    if (flat.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("group: table shape does not match order");
    // axiom failures propagate as domain errors and carry a witness
    return FiniteGroup::from_table(j.value("name", "loaded"), n, std::move(flat));
}

nlohmann::json affine_to_json(const AffineStructure& A) {
    return {{"schema", "affinelab/affine/v1"},
            {"group", group_to_json(A.group)},
            {"sigma", rows_from_flat(A.sigma, A.n(), A.n())}};
}

AffineStructure affine_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("affine: expected an object");
    expect_schema(j, "affinelab/affine/v1");
    if (!j.contains("group") || !j.contains("sigma"))
        throw std::invalid_argument("affine: missing group or sigma");
    FiniteGroup G = j.at("group").is_string() ? parse_group_spec(j.at("group").get<std::string>())
                                              : group_from_json(j.at("group"));
    std::vector<int> sigma = flat_from_rows(j.at("sigma"), "sigma");
    if (sigma.size() != static_cast<size_t>(G.order()) * G.order())
        throw std::invalid_argument("affine: sigma shape does not match the group order");
    return affine_from_table(G, std::move(sigma));
}

nlohmann::json semibrace_to_json(const SemiBrace& S) {
    return {{"schema", "affinelab/semibrace/v1"},
            {"order", S.n()},
            {"mul", rows_from_flat(S.mul.table(), S.n(), S.n())},
            {"add", rows_from_flat(S.add, S.n(), S.n())}};
}

SemiBrace semibrace_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("semibrace: expected an object");
    expect_schema(j, "affinelab/semibrace/v1");
    if (!j.contains("order") || !j.contains("mul") || !j.contains("add"))
        throw std::invalid_argument("semibrace: missing order, mul or add");
    int n = j.at("order").get<int>();
    std::vector<int> mul = flat_from_rows(j.at("mul"), "mul");
    std::vector<int> add = flat_from_rows(j.at("add"), "add");
    if (mul.size() != static_cast<size_t>(n) * n || add.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("semibrace: table shape does not match order");
    // axiom failures (mul not a group, sum axioms) propagate as domain errors
    FiniteGroup G = FiniteGroup::from_table(j.value("name", "loaded"), n, std::move(mul));
    return semibrace_from_tables(std::move(G), std::move(add));
}

nlohmann::json matched_to_json(const MatchedSystem& M) {
    return {{"schema", "affinelab/matched/v1"},
            {"S", group_to_json(M.S)},
            {"T", group_to_json(M.T)},
            {"alpha", rows_from_flat(M.alpha, M.T.order(), M.S.order())},
            {"beta", rows_from_flat(M.beta, M.S.order(), M.T.order())}};
}

MatchedSystem matched_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("matched system: expected an object");
    expect_schema(j, "affinelab/matched/v1");
    for (const char* key : {"S", "T", "alpha", "beta"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("matched system: missing ") + key);
    FiniteGroup S = j.at("S").is_string() ? parse_group_spec(j.at("S").get<std::string>())
                                          : group_from_json(j.at("S"));
    FiniteGroup T = j.at("T").is_string() ? parse_group_spec(j.at("T").get<std::string>())
                                          : group_from_json(j.at("T"));
    std::vector<int> alpha = flat_from_rows(j.at("alpha"), "alpha");
    std::vector<int> beta = flat_from_rows(j.at("beta"), "beta");
    if (alpha.size() != static_cast<size_t>(T.order()) * S.order())
        throw std::invalid_argument("matched system: alpha must be |T| x |S|");
    if (beta.size() != static_cast<size_t>(S.order()) * T.order())
        throw std::invalid_argument("matched system: beta must be |S| x |T|");
    return MatchedSystem{std::move(S), std::move(T), std::move(alpha), std::move(beta)};
}

nlohmann::json zappa_to_json(const ZappaSystem& Z) {
    return {{"schema", "affinelab/zappa/v1"},
            {"S", group_to_json(Z.S)},
            {"T", group_to_json(Z.T)},
            {"eta", rows_from_flat(Z.eta, Z.T.order(), Z.S.order())},
            {"delta", rows_from_flat(Z.delta, Z.S.order(), Z.T.order())}};
}

ZappaSystem zappa_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("zappa system: expected an object");
    expect_schema(j, "affinelab/zappa/v1");
    for (const char* key : {"S", "T", "eta", "delta"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("zappa system: missing ") + key);
    FiniteGroup S = j.at("S").is_string() ? parse_group_spec(j.at("S").get<std::string>())
                                          : group_from_json(j.at("S"));
    FiniteGroup T = j.at("T").is_string() ? parse_group_spec(j.at("T").get<std::string>())
                                          : group_from_json(j.at("T"));
    std::vector<int> eta = flat_from_rows(j.at("eta"), "eta");
    std::vector<int> delta = flat_from_rows(j.at("delta"), "delta");
    if (eta.size() != static_cast<size_t>(T.order()) * S.order())
        throw std::invalid_argument("zappa system: eta must be |T| x |S|");
    if (delta.size() != static_cast<size_t>(S.order()) * T.order())
        throw std::invalid_argument("zappa system: delta must be |S| x |T|");
    return ZappaSystem{std::move(S), std::move(T), std::move(eta), std::move(delta)};
}

nlohmann::json solution_to_json(const SetSolution& r) {
    nlohmann::json pairs = nlohmann::json::array();
    for (int a = 0; a < r.n; ++a)
        for (int b = 0; b < r.n; ++b)
            pairs.push_back(nlohmann::json::array({r.left(a, b), r.right(a, b)}));
    return {{"schema", "affinelab/solution/v1"}, {"size", r.n}, {"r", std::move(pairs)}};
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

namespace {

FiniteGroup parse_atom(const std::string& atom) {
    auto colon = atom.find(':');
    std::string head = colon == std::string::npos ? atom : atom.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : atom.substr(colon + 1);
    auto num = [&]() {
        if (arg.empty()) throw std::invalid_argument("group spec '" + atom + "' needs a parameter");
        try {
            return std::stoi(arg);
        } catch (const std::exception&) {
            throw std::invalid_argument("group spec '" + atom + "': bad parameter");
        }
    };
    if (head == "cyclic") return make_cyclic(num());
    if (head == "dihedral") return make_dihedral(num());
    if (head == "symmetric") return make_symmetric(num());
    if (head == "quaternion") return make_quaternion();
    if (head == "trivial") return make_cyclic(1);
    throw std::invalid_argument("unknown group spec: " + atom);
}

}  // namespace

FiniteGroup parse_group_spec(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("empty group spec");
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t star = spec.find('*', start);
        if (star == std::string::npos) {
            parts.push_back(spec.substr(start));
            break;
        }
        parts.push_back(spec.substr(start, star - start));
        start = star + 1;
    }
    FiniteGroup g = parse_atom(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) g = direct_product(g, parse_atom(parts[i]));
    return g;
}

FiniteGroup load_group_arg(const std::string& arg) {
    if (std::filesystem::exists(arg)) return group_from_json(load_json_file(arg));
    return parse_group_spec(arg);
}

}  // namespace aflab
