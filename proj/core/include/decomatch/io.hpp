#pragma once

#include <string>
#include <vector>

#include "decomatch/instance.hpp"

namespace decomatch {

// Shortest text that round-trips the double exactly (17 significant digits).
std::string format_double(double v);

// Instance file format: {"version":1,"speeds":[...],"jobs":[...]} with the
// job order carrying arrival order. Parsing validates the instance.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// Sidecar emitted next to generated deterministic upper-bound instances:
// {"a":...,"r":...,"delta":...,"w":[...]}.
std::string recurrence_sidecar_json(double a, double r, double delta,
                                    const std::vector<double>& w);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace decomatch
