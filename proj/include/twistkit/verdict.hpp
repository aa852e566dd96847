#pragma once

#include <cstddef>
#include <string>

namespace twistkit {

enum class Outcome { Equal, NotEqual, Unknown };

// Result of an equality check together with the engine that produced it.
// `exact` is false when the engine only checks a necessary condition.
struct Verdict {
    Outcome outcome = Outcome::Unknown;
    std::string engine;
    bool exact = false;

    bool equal() const { return outcome == Outcome::Equal; }
    bool unknown() const { return outcome == Outcome::Unknown; }
};

std::string to_string(Outcome o);

namespace engine_name {
inline constexpr const char* homology_faithful = "homology(g=1,faithful)";
inline constexpr const char* homology_necessary = "homology(necessary)";
inline constexpr const char* pi1_boundary = "pi1(rel-boundary,faithful)";
inline constexpr const char* pi1_closed = "pi1(closed,dehn)";
}  // namespace engine_name

enum class EngineChoice { Auto, Homology, Pi1, Closed };

inline constexpr std::size_t default_word_cap = 1'000'000;

struct VerifyOptions {
    EngineChoice engine = EngineChoice::Auto;
    std::size_t cap = default_word_cap;
};

}  // namespace twistkit
