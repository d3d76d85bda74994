#pragma once

#include <json.hpp>

#include "cubesense/cube_search.hpp"
#include "cubesense/gl_bridge.hpp"
#include "cubesense/measures.hpp"
#include "cubesense/signed_matrix.hpp"
#include "cubesense/spectral.hpp"
#include "cubesense/vertex_set.hpp"

namespace cubesense {

using json = nlohmann::json;

inline json to_json(const MeasureReport& r) {
    return json{{"n", r.n},
                {"s", r.s},
                {"bs", r.bs},
                {"deg", r.deg},
                {"s_witness", r.s_witness},
                {"bs_witness", r.bs_witness}};
}

inline json to_json(const Spectrum& s) {
    return json{{"values", s.values}, {"tol", s.tol}};
}

inline json to_json(const VertexSet& v) {
    return json{{"n", v.cube_dim()}, {"members", v.to_hex()}, {"size", v.cardinality()}};
}

inline json to_json(const DegreeReport& r) {
    json j{{"delta_h", r.delta_h}, {"delta_complement", r.delta_complement}, {"gamma", r.gamma}};
    j["argmax_h"] = r.argmax_h ? json(*r.argmax_h) : json(nullptr);
    j["argmax_complement"] =
        r.argmax_complement ? json(*r.argmax_complement) : json(nullptr);
    return j;
}

inline json to_json(const SquareIdentityCertificate& c) {
    return json{{"n", c.n},
                {"identity_holds", c.identity_holds},
                {"trace", c.trace},
                {"trace_zero", c.trace_zero},
                {"eigenvalue_magnitude", c.eigenvalue_magnitude},
                {"multiplicity_each", c.multiplicity_each},
                {"certified", c.certified()}};
}

inline json to_json(const MinDegreeScanReport& r) {
    json j{{"theorem", "theorem1"}, {"n", r.n},       {"mode", r.mode},
           {"tested", r.tested},    {"seed", r.seed}, {"trials", r.trials},
           {"min_delta", r.min_delta}, {"failures", r.failures}};
    j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
    return j;
}

inline json to_json(const GLReport& r) {
    return json{{"theorem", r.theorem}, {"n", r.n},       {"mode", r.mode},
                {"tested", r.tested},   {"seed", r.seed}, {"trials", r.trials},
                {"failures", r.failures}};
}

inline json to_json(const SweepReport& r) {
    return json{{"theorem", r.theorem},
                {"n", r.n},
                {"mode", r.mode},
                {"tested", r.tested},
                {"seed", r.seed},
                {"trials", r.trials},
                {"failures", r.failures},
                {"tight_witnesses", r.tight_witnesses},
                {"tight_total", r.tight_total},
                {"extremal_ratio", r.extremal_ratio},
                {"extremal_witness", r.extremal_witness}};
}

inline json to_json(const GBounds& g) {
    json j{{"n", g.n},         {"k", g.k},
           {"lower", g.lower}, {"upper", g.upper},
           {"exact", g.exact}, {"budget_exhausted", g.budget_exhausted},
           {"seed", g.seed}};
    j["witness"] = g.witness ? to_json(*g.witness) : json(nullptr);
    return j;
}

} // namespace cubesense
