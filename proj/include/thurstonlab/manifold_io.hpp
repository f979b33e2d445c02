#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "thurstonlab/bundle.hpp"

namespace thurstonlab {

using json = nlohmann::json;

// Manifold file: at least one of "alexander" / "dual_ball_vertices" must be
// present; when the ball is absent it is derived from the polynomial and
// the source is recorded as "alexander-convention".
Manifold3 parse_manifold(const json& j);
Manifold3 parse_manifold_text(const std::string& text);
Manifold3 load_manifold_file(const std::string& path);

json manifold_to_json(const Manifold3& m);

// Bundle file: a manifold (inline or path) plus an euler class.
struct BundleInput {
    Manifold3 manifold;
    std::optional<VecZ> euler;
    bool euler_torsion = false;
};

// Accepts either a plain manifold file or a bundle file.
BundleInput load_input_file(const std::string& path);

struct CoverInput {
    Manifold3 base;
    CoverDatum datum;
    std::vector<VecZ> classes;
    std::optional<VecZ> euler;
};

CoverInput load_cover_file(const std::string& path);

// Canonical dump: sorted keys, no floats, trailing newline.
std::string canonical_dump(const json& j);

json int_to_json(const Int& v);
Int int_from_json(const json& j, const std::string& where);

} // namespace thurstonlab
