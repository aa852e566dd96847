#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "twistkit/surface.hpp"

namespace twistkit::cli {

enum ExitCode : int { ok = 0, verified_false = 1, input_error = 2, resource_cap = 3 };

// Thrown for malformed requests; `field` names the offending JSON path.
class InputError : public std::invalid_argument {
public:
    InputError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

SurfaceSig parse_surface(const nlohmann::json& j, const std::string& path = "surface");
TwistWord parse_word(const nlohmann::json& j, SurfaceSig sig, const std::string& path = "word");
nlohmann::ordered_json word_to_json(const TwistWord& w);

// args excludes the program name. Reads a JSON request from `in` unless
// --input names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace twistkit::cli
