#ifndef NPV_COMMANDS_HPP
#define NPV_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "npv/densmod.hpp"
#include "npv/morph.hpp"

namespace npv {

/// Shared state of one CLI invocation.
struct Session {
    FieldSpecPtr spec;
    PointConfigPtr config;
    std::uint64_t seed = 1;
    int iterations = 300;
    int slack = 6;

    static Session from_flags(const std::string& field_text, const std::string& points_text,
                              std::uint64_t seed, int iterations, int slack);
};

nlohmann::json field_element_json(const FieldElement& x);
nlohmann::json ratfunc_json(const RatFunc& f);
nlohmann::json morphism_json(const Morphism& m);

nlohmann::json cmd_aut(const Session& session);
nlohmann::json cmd_iso(const Session& session, const std::string& other_points);
nlohmann::json cmd_bracket(const Session& session, const std::string& e1,
                           const std::string& e2);
nlohmann::json cmd_cocycle(const Session& session, int i, const std::string& e1,
                           const std::string& e2);
nlohmann::json cmd_act(const Session& session, const std::vector<std::string>& alpha,
                       const std::string& beta, const std::string& f, const std::string& g);
nlohmann::json cmd_irreducible(const Session& session, const std::vector<std::string>& alpha,
                               const std::string& beta);
// suite: jacobi | cocycle | cor21 | cor41 | closedform | module-axiom
nlohmann::json cmd_verify(const Session& session, const std::string& suite);

}  // namespace npv

#endif
