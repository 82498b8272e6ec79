#pragma once

#include <string>

#include "json.hpp"
#include "xgrad/errors.hpp"
#include "xgrad/optimizers.hpp"

namespace xgrad {

/// Checkpoint layout: {"kind", "hp": {...}, "t", "m": [...], "v": [...]}.
/// Doubles round-trip exactly (shortest-representation printing).
inline nlohmann::json state_to_json(const OptimizerState& st) {
    nlohmann::json j;
    j["kind"] = to_string(st.kind);
    j["hp"] = {{"lr", st.hp.lr},
               {"momentum", st.hp.momentum},
               {"dampening", st.hp.dampening},
               {"weight_decay", st.hp.weight_decay},
               {"beta1", st.hp.beta1},
               {"beta2", st.hp.beta2},
               {"alpha", st.hp.alpha},
               {"epsilon", st.hp.epsilon}};
    j["t"] = st.t;
    j["m"] = st.m;
    j["v"] = st.v;
    return j;
}

inline OptimizerState state_from_json(const nlohmann::json& j) {
    OptimizerState st;
    const auto kind = optimizer_from_string(j.at("kind").get<std::string>());
    if (!kind) throw ConfigError("unknown optimizer kind in checkpoint");
    st.kind = *kind;
    const auto& h = j.at("hp");
    st.hp.lr = h.at("lr").get<double>();
    st.hp.momentum = h.at("momentum").get<double>();
    st.hp.dampening = h.at("dampening").get<double>();
    st.hp.weight_decay = h.at("weight_decay").get<double>();
    st.hp.beta1 = h.at("beta1").get<double>();
    st.hp.beta2 = h.at("beta2").get<double>();
    st.hp.alpha = h.at("alpha").get<double>();
    st.hp.epsilon = h.at("epsilon").get<double>();
    st.t = j.at("t").get<std::int64_t>();
    st.m = j.at("m").get<ParamVector>();
    st.v = j.at("v").get<ParamVector>();
    if (st.m.size() != st.v.size()) throw ConfigError("checkpoint moment buffers disagree in length");
    return st;
}

}  // namespace xgrad
