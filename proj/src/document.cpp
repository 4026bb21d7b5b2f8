#include "superlie/document.hpp"

#include "superlie/error.hpp"

#include <fstream>
#include <sstream>

namespace superlie {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

Scalar scalar_at(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) bad(where + ": scalar must be a string or an integer");
    return Scalar::parse(j.get<std::string>());
}

std::size_t index_at(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
        bad(where + ": index must be a non-negative integer");
    auto i = j.get<std::size_t>();
    if (i >= dim) bad(where + ": index " + std::to_string(i) + " out of range");
    return i;
}

const json& member(const json& doc, const char* key, const std::string& where) {
    if (!doc.contains(key)) bad(where + ": missing '" + key + "'");
    return doc.at(key);
}

void check_format(const json& doc, const char* want) {
    if (!doc.is_object()) bad("document must be a JSON object");
    const json& f = member(doc, "format", "document");
    if (!f.is_string() || f.get<std::string>() != want)
        bad(std::string("unsupported format (expected ") + want + ")");
}

json matrix_entries(const SparseMatrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) out.push_back({r, c, v.str()});
    return out;
}

SparseMatrix matrix_from(const json& j, std::size_t n, const std::string& where) {
    if (!j.is_array()) bad(where + " must be an array of [row, col, scalar]");
    SparseMatrix m(n, n);
    for (std::size_t k = 0; k < j.size(); ++k) {
        const json& e = j[k];
        const std::string at = where + "[" + std::to_string(k) + "]";
        if (!e.is_array() || e.size() != 3) bad(at + " must be [row, col, scalar]");
        const std::size_t r = index_at(e[0], n, at), c = index_at(e[1], n, at);
        m.set(r, c, m.get(r, c) + scalar_at(e[2], at));
    }
    return m;
}

std::vector<long> lambda_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            bad("bad weight list '" + text + "'");
        }
    }
    if (out.empty()) bad("empty weight list");
    return out;
}

Osp12Module sum_of(const std::vector<long>& lambdas) {
    std::vector<Osp12Module> parts;
    for (long l : lambdas) parts.push_back(irreducible_module(l));
    return direct_sum(parts);
}

}  // namespace

json algebra_to_json(const LieSuperalgebra& L) {
    json doc{{"format", algebra_format}, {"field", to_string(L.field())}};
    json basis = json::array();
    for (std::size_t i = 0; i < L.dim(); ++i) basis.push_back({{"label", L.label(i)}, {"parity", L.parity(i)}});
    doc["basis"] = basis;
    json br = json::array();
    for (const auto& [key, v] : L.structure_table())
        for (const auto& [k, c] : v) br.push_back({key.first, key.second, k, c.str()});
    doc["brackets"] = br;
    if (L.has_gram()) doc["gram"] = matrix_entries(L.gram());
    if (L.has_cartan()) doc["cartan"] = L.cartan();
    if (L.has_weights()) {
        json ws = json::array();
        for (const auto& w : L.weights()) {
            json row = json::array();
            for (const auto& s : w) row.push_back(s.str());
            ws.push_back(row);
        }
        doc["weights"] = ws;
    }
    return doc;
}

LieSuperalgebra algebra_from_json(const json& doc) {
    check_format(doc, algebra_format);
    Field field = Field::rational;
    if (doc.contains("field")) {
        if (!doc["field"].is_string()) bad("field must be \"Q\" or \"Qi\"");
        field = parse_field(doc["field"].get<std::string>());
    }
    const json& basis = member(doc, "basis", "document");
    if (!basis.is_array() || basis.empty()) bad("basis must be a non-empty array");
    std::vector<std::string> labels;
    std::vector<Parity> parity;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const json& b = basis[i];
        const std::string at = "basis[" + std::to_string(i) + "]";
        if (!b.is_object()) bad(at + " must be an object");
        const json& lab = member(b, "label", at);
        const json& par = member(b, "parity", at);
        if (!lab.is_string()) bad(at + ".label must be a string");
        if (!par.is_number_integer() || (par.get<long>() != 0 && par.get<long>() != 1)) bad(at + ".parity must be 0 or 1");
        labels.push_back(lab.get<std::string>());
        parity.push_back(static_cast<Parity>(par.get<long>()));
    }
    const std::size_t n = labels.size();
    LieSuperalgebra L(labels, parity, field);

    const json& br = member(doc, "brackets", "document");
    if (!br.is_array()) bad("brackets must be an array of [i, j, k, scalar]");
    std::map<std::pair<std::size_t, std::size_t>, SparseVector> table;
    for (std::size_t t = 0; t < br.size(); ++t) {
        const json& e = br[t];
        const std::string at = "brackets[" + std::to_string(t) + "]";
        if (!e.is_array() || e.size() != 4) bad(at + " must be [i, j, k, scalar]");
        auto& v = table[{index_at(e[0], n, at), index_at(e[1], n, at)}];
        v.axpy(scalar_at(e[3], at), SparseVector::unit(index_at(e[2], n, at)));
    }
    try {
        for (auto& [key, v] : table) L.set_bracket(key.first, key.second, std::move(v));
        if (doc.contains("gram")) L.set_gram(matrix_from(doc["gram"], n, "gram"));
        if (doc.contains("cartan")) {
            const json& c = doc["cartan"];
            if (!c.is_array()) bad("cartan must be an array of indices");
            std::vector<std::size_t> cartan;
            for (std::size_t k = 0; k < c.size(); ++k) cartan.push_back(index_at(c[k], n, "cartan"));
            L.set_cartan(cartan);
        }
        if (doc.contains("weights")) {
            if (!L.has_cartan()) bad("weights need a cartan list");
            const json& ws = doc["weights"];
            if (!ws.is_array() || ws.size() != n) bad("weights must list one row per basis element");
            std::vector<Weight> weights;
            for (std::size_t i = 0; i < n; ++i) {
                const std::string at = "weights[" + std::to_string(i) + "]";
                if (!ws[i].is_array() || ws[i].size() != L.cartan().size())
                    bad(at + " must have one value per Cartan element");
                Weight w;
                for (const auto& s : ws[i]) w.push_back(scalar_at(s, at));
                weights.push_back(std::move(w));
            }
            L.set_weights(std::move(weights));
        }
    } catch (const PreconditionError& e) {
        bad(e.what());
    } catch (const DimensionError& e) {
        bad(e.what());
    }
    return L;
}

json module_to_json(const Osp12Module& M) {
    return {{"format", module_format},
            {"parity", M.parity},
            {"e", matrix_entries(M.e)},
            {"f", matrix_entries(M.f)},
            {"h", matrix_entries(M.h)}};
}

Osp12Module module_from_json(const json& doc) {
    check_format(doc, module_format);
    const json& par = member(doc, "parity", "document");
    if (!par.is_array() || par.empty()) bad("parity must be a non-empty array");
    Osp12Module M;
    for (const auto& p : par) {
        if (!p.is_number_integer() || (p.get<long>() != 0 && p.get<long>() != 1)) bad("parity entries must be 0 or 1");
        M.parity.push_back(static_cast<Parity>(p.get<long>()));
    }
    const std::size_t n = M.parity.size();
    M.e = matrix_from(member(doc, "e", "document"), n, "e");
    M.f = matrix_from(member(doc, "f", "document"), n, "f");
    M.h = matrix_from(member(doc, "h", "document"), n, "h");
    return M;
}

std::vector<std::string> builtin_algebra_names() {
    return {"osp12", "osp12-corrupted", "sl12", "sl21", "sl13", "sl31", "gl11", "abelian1", "heisenberg"};
}

LieSuperalgebra builtin_algebra(const std::string& name) {
    if (name == "osp12") return osp12_standard();
    if (name == "osp12-corrupted") {
        LieSuperalgebra L = osp12_standard();
        L.set_bracket_super(osp::Fp, osp::Fm, Scalar(2) * L.structure(osp::Fp, osp::Fm));
        return L;
    }
    if (name == "sl12") return sl_matrix_superalgebra(1, 2);
    if (name == "sl21") return sl_matrix_superalgebra(2, 1);
    if (name == "sl13") return sl_matrix_superalgebra(1, 3);
    if (name == "sl31") return sl_matrix_superalgebra(3, 1);
    if (name == "gl11") return general_linear({"1", "1'"}, {0, 1});
    if (name == "abelian1") {
        LieSuperalgebra L({"h"}, {0});
        L.set_gram(SparseMatrix::identity(1));
        assign_weights(L, {0});
        return L;
    }
    if (name == "heisenberg") {
        // [p, q] = z with z central; no invariant form exists.
        LieSuperalgebra L({"p", "q", "z"}, {0, 0, 0});
        L.set_bracket_super(0, 1, SparseVector::unit(2));
        assign_weights(L, {2});
        return L;
    }
    bad("unknown builtin algebra '" + name + "'");
}

Osp12Module builtin_module(const std::string& name) {
    try {
        if (name == "V2plusV0") return sum_of({2, 0});
        if (name.size() > 1 && name[0] == 'V' && name.find_first_not_of("0123456789", 1) == std::string::npos)
            return irreducible_module(std::stol(name.substr(1)));
        if (name.rfind("sum:", 0) == 0) return sum_of(lambda_list(name.substr(4)));
        if (name.rfind("scrambled:", 0) == 0) {
            std::string rest = name.substr(10);
            auto colon = rest.rfind(':');
            if (colon == std::string::npos) bad("scrambled fixture needs ':<seed>'");
            std::uint64_t seed = 0;
            try {
                std::size_t used = 0;
                seed = std::stoull(rest.substr(colon + 1), &used);
                if (used != rest.size() - colon - 1) throw std::invalid_argument(rest);
            } catch (const std::logic_error&) {
                bad("bad seed in '" + name + "'");
            }
            return scramble(sum_of(lambda_list(rest.substr(0, colon))), seed);
        }
    } catch (const PreconditionError& e) {
        bad(e.what());
    }
    bad("unknown builtin module '" + name + "'");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        bad("malformed JSON in '" + path + "': " + e.what());
    }
}

LieSuperalgebra load_algebra(const std::string& source) {
    if (source.rfind("builtin:", 0) == 0) return builtin_algebra(source.substr(8));
    return algebra_from_json(read_json_file(source));
}

Osp12Module load_module(const std::string& source) {
    if (source.rfind("builtin:", 0) == 0) return builtin_module(source.substr(8));
    return module_from_json(read_json_file(source));
}

}  // namespace superlie
