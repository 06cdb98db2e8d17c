#pragma once

#include <string>
#include <vector>

#include "ccpb/config.hpp"

namespace ccpb {

/// One unit of work inside a preset; the label distinguishes output files of
/// multi-variant presets (figure panels).
struct PresetJob {
    std::string label;
    ExperimentConfig config;
};

struct Preset {
    std::string name;
    std::string command; // solve | limits | sweep | nonneutral
    std::string description;
    std::vector<PresetJob> jobs;
};

/// Named experiment presets reproducing the published tables and figure data,
/// plus the non-electroneutral demo.
const std::vector<Preset>& presets();

const Preset* find_preset(const std::string& name);

} // namespace ccpb
