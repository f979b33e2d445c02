#include "thurstonlab/manifold_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace thurstonlab {

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
    throw input_error("schema error at " + where + ": " + what);
}

long long get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) schema_fail(where, "expected an integer");
    return j.get<long long>();
}

VecZ get_vec(const json& j, const std::string& where, int expected_len = -1) {
    if (!j.is_array()) schema_fail(where, "expected an array of integers");
    VecZ v;
    for (const auto& x : j) v.push_back(get_int(x, where));
    if (expected_len >= 0 && static_cast<int>(v.size()) != expected_len)
        schema_fail(where, "expected length " + std::to_string(expected_len));
    return v;
}

} // namespace

json int_to_json(const Int& v) {
    if (v <= std::numeric_limits<std::int64_t>::max() &&
        v >= std::numeric_limits<std::int64_t>::min())
        return json(static_cast<std::int64_t>(v));
    // Out of machine range; keep exactness with a decimal string.
    return json(v.str());
}

Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            schema_fail(where, "malformed integer string");
        }
    }
    schema_fail(where, "expected an integer");
}

Manifold3 parse_manifold(const json& j) {
    if (!j.is_object()) schema_fail("$", "expected an object");
    if (!j.contains("name") || !j.at("name").is_string()) schema_fail("name", "expected a string");
    if (!j.contains("b1")) schema_fail("b1", "missing");
    long long b1 = get_int(j.at("b1"), "b1");
    if (b1 < 1) schema_fail("b1", "must be >= 1");

    Manifold3 m{.name = j.at("name").get<std::string>(),
                .b1 = static_cast<int>(b1),
                .delta = std::nullopt,
                .dual_ball = DualBall::from_vertices({VecZ(b1, 0)}),
                .sw = std::nullopt,
                .fibered_marks = std::nullopt,
                .ball_source = "input"};

    if (j.contains("alexander")) {
        if (!j.at("alexander").is_array()) schema_fail("alexander", "expected an array of terms");
        std::map<VecZ, Int> terms;
        for (const auto& t : j.at("alexander")) {
            if (!t.is_object() || !t.contains("exp") || !t.contains("coeff"))
                schema_fail("alexander", "each term needs exp and coeff");
            VecZ e = get_vec(t.at("exp"), "alexander.exp", m.b1);
            Int c = int_from_json(t.at("coeff"), "alexander.coeff");
            if (terms.count(e)) schema_fail("alexander", "duplicate exponent");
            if (c != 0) terms[e] = c;
        }
        m.delta = LaurentPoly(m.b1, std::move(terms));
    }

    bool have_ball = j.contains("dual_ball_vertices");
    if (!have_ball && !m.delta)
        schema_fail("$", "need dual_ball_vertices or alexander");
    if (have_ball) {
        std::vector<VecZ> verts;
        if (!j.at("dual_ball_vertices").is_array())
            schema_fail("dual_ball_vertices", "expected an array of vectors");
        for (const auto& v : j.at("dual_ball_vertices"))
            verts.push_back(get_vec(v, "dual_ball_vertices", m.b1));
        if (verts.empty()) schema_fail("dual_ball_vertices", "empty vertex list");
        try {
            m.dual_ball = DualBall::from_vertices(verts);
        } catch (const precondition_error& e) {
            schema_fail("dual_ball_vertices", e.what());
        }
        m.ball_source = "input";
    } else {
        if (m.delta->is_zero()) schema_fail("alexander", "zero polynomial cannot define a ball");
        m.dual_ball = DualBall::from_alexander(*m.delta);
        m.ball_source = "alexander-convention";
    }

    if (j.contains("sw_support")) {
        if (!j.at("sw_support").is_array()) schema_fail("sw_support", "expected an array");
        std::map<VecZ, Int> entries;
        for (const auto& t : j.at("sw_support")) {
            if (!t.is_object() || !t.contains("c1") || !t.contains("value"))
                schema_fail("sw_support", "each entry needs c1 and value");
            VecZ c1 = get_vec(t.at("c1"), "sw_support.c1", m.b1);
            Int v = int_from_json(t.at("value"), "sw_support.value");
            if (entries.count(c1)) schema_fail("sw_support", "duplicate c1 class");
            if (v == 0) schema_fail("sw_support", "zero value stored");
            entries[c1] = v;
        }
        m.sw = SWSupport::make(m.b1, std::move(entries));
    }

    if (j.contains("fibered_marks")) {
        VecZ marks = get_vec(j.at("fibered_marks"), "fibered_marks");
        std::vector<int> idx;
        for (long long v : marks) {
            if (v < 0 || v >= static_cast<long long>(m.dual_ball.ball().vertex_count()))
                schema_fail("fibered_marks", "vertex index out of range");
            idx.push_back(static_cast<int>(v));
        }
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        m.fibered_marks = idx;
    }
    return m;
}

Manifold3 parse_manifold_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("json parse error: ") + e.what());
    }
    return parse_manifold(j);
}

Manifold3 load_manifold_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_manifold_text(text);
}

json manifold_to_json(const Manifold3& m) {
    json j;
    j["name"] = m.name;
    j["b1"] = m.b1;
    if (m.delta) {
        json terms = json::array();
        for (const auto& [e, c] : m.delta->terms()) {
            json t;
            t["exp"] = e;
            t["coeff"] = int_to_json(c);
            terms.push_back(t);
        }
        j["alexander"] = terms;
    }
    if (m.ball_source == "input") {
        json verts = json::array();
        for (const auto& v : m.dual_ball.integral_vertices()) verts.push_back(v);
        j["dual_ball_vertices"] = verts;
    }
    if (m.sw) {
        json entries = json::array();
        for (const auto& [c1, v] : m.sw->entries) {
            json t;
            t["c1"] = c1;
            t["value"] = int_to_json(v);
            entries.push_back(t);
        }
        j["sw_support"] = entries;
    }
    if (m.fibered_marks) j["fibered_marks"] = *m.fibered_marks;
    return j;
}

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const std::exception& e) {
        throw input_error(std::string("json parse error in ") + path + ": " + e.what());
    }
}

Manifold3 manifold_inline_or_path(const json& j, const std::string& where) {
    if (j.is_string()) return load_manifold_file(j.get<std::string>());
    if (j.is_object()) return parse_manifold(j);
    schema_fail(where, "expected a manifold object or a path");
}

} // namespace

BundleInput load_input_file(const std::string& path) {
    json j = load_json_file(path);
    if (!j.is_object()) throw input_error("expected a JSON object in " + path);
    if (!j.contains("manifold")) return BundleInput{parse_manifold(j), std::nullopt, false};

    BundleInput b{manifold_inline_or_path(j.at("manifold"), "manifold"), std::nullopt, false};
    if (j.contains("euler"))
        b.euler = get_vec(j.at("euler"), "euler", b.manifold.b1);
    if (j.contains("euler_torsion")) {
        if (!j.at("euler_torsion").is_boolean()) schema_fail("euler_torsion", "expected a bool");
        b.euler_torsion = j.at("euler_torsion").get<bool>();
        if (b.euler_torsion && b.euler && !is_zero(*b.euler))
            schema_fail("euler", "a torsion euler class must be the zero vector");
    }
    return b;
}

CoverInput load_cover_file(const std::string& path) {
    json j = load_json_file(path);
    if (!j.is_object()) throw input_error("expected a JSON object in " + path);
    for (const char* key : {"base", "cover", "deg_N", "q", "pullback", "pushforward"})
        if (!j.contains(key)) schema_fail(key, "missing");

    Manifold3 base = manifold_inline_or_path(j.at("base"), "base");
    Manifold3 cover = manifold_inline_or_path(j.at("cover"), "cover");
    long long deg_n = get_int(j.at("deg_N"), "deg_N");
    long long q = get_int(j.at("q"), "q");
    if (deg_n < 1) schema_fail("deg_N", "must be >= 1");
    if (q < 1) schema_fail("q", "must be >= 1");

    auto get_matrix = [&](const json& mj, const std::string& where, int rows, int cols) {
        if (!mj.is_array() || static_cast<int>(mj.size()) != rows)
            schema_fail(where, "expected " + std::to_string(rows) + " rows");
        MatZ m;
        for (const auto& r : mj) m.push_back(get_vec(r, where, cols));
        return m;
    };
    MatZ pullback = get_matrix(j.at("pullback"), "pullback", cover.b1, base.b1);
    MatZ pushforward = get_matrix(j.at("pushforward"), "pushforward", base.b1, cover.b1);

    CoverInput c{std::move(base),
                 CoverDatum{deg_n, q, std::move(pullback), std::move(pushforward), std::move(cover)},
                 {},
                 std::nullopt};
    if (j.contains("classes")) {
        if (!j.at("classes").is_array()) schema_fail("classes", "expected an array");
        for (const auto& v : j.at("classes"))
            c.classes.push_back(get_vec(v, "classes", c.base.b1));
    }
    if (j.contains("euler")) c.euler = get_vec(j.at("euler"), "euler", c.base.b1);
    return c;
}

std::string canonical_dump(const json& j) {
    return j.dump(2) + "\n";
}

} // namespace thurstonlab
