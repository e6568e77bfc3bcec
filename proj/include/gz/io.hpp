#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gz/flows.hpp"
#include "gz/gzmap.hpp"
#include "gz/korbits.hpp"
#include "gz/matrix.hpp"
#include "gz/sreg.hpp"

namespace gz {

using json = nlohmann::ordered_json;

// Complex numbers travel as [re, im] pairs; matrices as {"n", "entries"}
// with row-major nested arrays.

inline json to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

inline cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("expected complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline json to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.n(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.n(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.n()}, {"entries", std::move(rows)}};
}

inline ComplexMatrix matrix_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("entries")) throw ParseError("matrix file: missing 'n' or 'entries'");
    const int n = j["n"].get<int>();
    if (n < 1) throw ParseError("matrix file: n must be >= 1");
    const json& e = j["entries"];
    if (!e.is_array() || static_cast<int>(e.size()) != n) throw ParseError("matrix file: wrong row count");
    ComplexMatrix m(n);
    for (int r = 0; r < n; ++r) {
        if (!e[static_cast<std::size_t>(r)].is_array() || static_cast<int>(e[static_cast<std::size_t>(r)].size()) != n)
            throw ParseError("matrix file: wrong column count in row " + std::to_string(r));
        for (int c = 0; c < n; ++c) m(r, c) = complex_from_json(e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
    if (!m.is_finite()) throw ParseError("matrix file: non-finite entry");
    return m;
}

inline json levels_to_json(const std::vector<std::vector<cplx>>& levels) {
    json out = json::array();
    for (const auto& level : levels) {
        json l = json::array();
        for (const auto& v : level) l.push_back(to_json(v));
        out.push_back(std::move(l));
    }
    return out;
}

inline std::vector<std::vector<cplx>> levels_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected array of levels");
    std::vector<std::vector<cplx>> out;
    for (const auto& l : j) {
        std::vector<cplx> level;
        for (const auto& v : l) level.push_back(complex_from_json(v));
        out.push_back(std::move(level));
    }
    return out;
}

inline json to_json(const KWPoint& p) {
    return json{{"n", p.n},
                {"coords", p.coords == KWCoords::Traces ? "traces" : "charcoeffs"},
                {"levels", levels_to_json(p.levels)}};
}

inline KWPoint kwpoint_from_json(const json& j) {
    KWPoint p;
    if (!j.contains("coords") || !j.contains("levels")) throw ParseError("KW point: missing 'coords' or 'levels'");
    const std::string c = j["coords"].get<std::string>();
    if (c == "traces")
        p.coords = KWCoords::Traces;
    else if (c == "charcoeffs")
        p.coords = KWCoords::CharCoeffs;
    else
        throw ParseError("KW point: coords must be 'traces' or 'charcoeffs'");
    p.levels = levels_from_json(j["levels"]);
    p.n = j.contains("n") ? j["n"].get<int>() : static_cast<int>(p.levels.size());
    try {
        p.validate();
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("KW point: ") + e.what());
    }
    return p;
}

inline json to_json(const RitzData& r) {
    return json{{"n", r.n}, {"sigma", levels_to_json(r.sigma)}};
}

inline RitzData ritz_from_json(const json& j) {
    RitzData r;
    if (!j.contains("sigma")) throw ParseError("Ritz data: missing 'sigma'");
    r.sigma = levels_from_json(j["sigma"]);
    r.n = j.contains("n") ? j["n"].get<int>() : static_cast<int>(r.sigma.size());
    try {
        r.validate();
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("Ritz data: ") + e.what());
    }
    return r;
}

inline json to_json(const FlowTimes& t) {
    return json{{"n", t.n}, {"t", levels_to_json(t.t)}};
}

inline FlowTimes flowtimes_from_json(const json& j) {
    FlowTimes t;
    if (!j.contains("t")) throw ParseError("flow times: missing 't'");
    t.t = levels_from_json(j["t"]);
    t.n = j.contains("n") ? j["n"].get<int>() : static_cast<int>(t.t.size()) + 1;
    try {
        t.validate();
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("flow times: ") + e.what());
    }
    return t;
}

inline json to_json(const SregReport& rep) {
    return json{{"is_sreg", rep.is_sreg},
                {"verdicts_agree", rep.verdicts_agree},
                {"by_differentials", rep.by_differentials},
                {"by_tangent", rep.by_tangent},
                {"by_centralizers", rep.by_centralizers},
                {"diff_rank", rep.diff_rank},
                {"tangent_rank", rep.tangent_rank},
                {"per_level_regular", rep.per_level_regular},
                {"centralizer_intersection_dims", rep.centralizer_intersection_dims}};
}

inline json to_json(const Flag& f) {
    json basis = json::array();
    for (const auto& v : f.basis) {
        json vec = json::array();
        for (const auto& z : v) vec.push_back(to_json(z));
        basis.push_back(std::move(vec));
    }
    return json{{"n", f.n}, {"basis", std::move(basis)}};
}

inline Flag flag_from_json(const json& j) {
    Flag f;
    if (!j.contains("basis")) throw ParseError("flag file: missing 'basis'");
    for (const auto& vec : j["basis"]) {
        std::vector<cplx> v;
        for (const auto& z : vec) v.push_back(complex_from_json(z));
        f.basis.push_back(std::move(v));
    }
    f.n = j.contains("n") ? j["n"].get<int>() : static_cast<int>(f.basis.size());
    try {
        f.validate();
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("flag file: ") + e.what());
    }
    return f;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace gz
