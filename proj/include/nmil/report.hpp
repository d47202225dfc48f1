#pragma once

#include <json.hpp>

#include "nmil/invariants.hpp"

namespace nmil {

using Json = nlohmann::ordered_json;

enum class Command { Faces, Zeta, Rf, Epoly, Jordan, Spectrum, FullSpectrum, Report };

struct JobSpec {
    Support support;
    Command command = Command::Report;
    std::vector<Rat> thetas;  // explicit eigenvalue selectors
    bool all_good = false;
    int threads = 1;
};

Command parse_command(const std::string& name);

// Runs the computation and serializes it with deterministic ordering; the
// same builder backs the CLI and the python bindings.
Json run_job(const JobSpec& job);

// {"n":..., "monomials":[[...]]} used by --json input
Support support_from_json(const Json& j);

}  // namespace nmil
